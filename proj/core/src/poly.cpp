#include "slfactor/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace slf {

bool GrevlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da < db;
    // Equal total degree: a < b iff the rightmost differing exponent of a
    // is larger (reverse lexicographic on negated exponents).
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
}

int PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(const Field& field, std::vector<std::string> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw domain_error("duplicate variable name: " + vars[i]);
    return std::make_shared<PolyRing>(PolyRing{field, std::move(vars)});
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = ring->vars;
    for (const auto& v : extra) vars.push_back(v);
    return make_ring(ring->field, std::move(vars));
}

RingPtr drop_vars(const RingPtr& ring, const std::vector<std::string>& names) {
    std::vector<std::string> vars;
    for (const auto& v : ring->vars)
        if (std::find(names.begin(), names.end(), v) == names.end()) vars.push_back(v);
    return make_ring(ring->field, std::move(vars));
}

Poly Poly::constant(const RingPtr& r, const Scalar& c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.emplace(Exponents(r->nvars(), 0), c);
    return p;
}

Poly Poly::variable(const RingPtr& r, std::size_t var) {
    if (var >= r->nvars()) throw domain_error("variable index out of range");
    Exponents e(r->nvars(), 0);
    e[var] = 1;
    Poly p(r);
    p.terms_.emplace(std::move(e), Scalar::one(r->field));
    return p;
}

Poly Poly::variable(const RingPtr& r, const std::string& name) {
    int idx = r->index_of(name);
    if (idx < 0) throw domain_error("unknown variable: " + name);
    return variable(r, static_cast<std::size_t>(idx));
}

Poly Poly::monomial(const RingPtr& r, const Exponents& e, const Scalar& c) {
    if (e.size() != r->nvars()) throw domain_error("exponent vector arity mismatch");
    Poly p(r);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Scalar Poly::constant_value() const {
    Exponents z(ring_ ? ring_->nvars() : 0, 0);
    auto it = terms_.find(z);
    if (it == terms_.end()) return Scalar::zero(ring_->field);
    return it->second;
}

long Poly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0ul)));
    return d;
}

long Poly::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
    return d;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {
void check_ring_compat(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        throw domain_error("polynomial arithmetic across different ring contexts");
}
} // namespace

Poly Poly::operator+(const Poly& o) const {
    check_ring_compat(*this, o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_ring_compat(*this, o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_ring_compat(*this, o);
    Poly r(ring_);
    Exponents e(ring_->nvars());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly r = Poly::one(ring_);
    Poly a = *this;
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (!(*ring_ == *o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

const Exponents& Poly::leading_exponents() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Scalar& Poly::leading_coeff() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

std::vector<Poly> Poly::coeffs_in(std::size_t var) const {
    long d = degree_in(var);
    std::vector<Poly> out(static_cast<std::size_t>(d + 1), Poly::zero(ring_));
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        unsigned k = e2[var];
        e2[var] = 0;
        out[k].add_term(e2, c);
    }
    return out;
}

Poly Poly::from_coeffs_in(const RingPtr& r, std::size_t var, const std::vector<Poly>& coeffs) {
    Poly out(r);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms_) {
            Exponents e2 = e;
            e2[var] += static_cast<unsigned>(k);
            out.add_term(e2, c);
        }
    }
    return out;
}

Poly Poly::leading_coeff_in(std::size_t var) const {
    auto cs = coeffs_in(var);
    if (cs.empty()) return Poly::zero(ring_);
    return cs.back();
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& values, const RingPtr& target) const {
    // Cache powers of each substituted value.
    std::map<std::size_t, std::vector<Poly>> powers;
    for (const auto& [v, val] : values) {
        if (!(*val.ring() == *target)) throw domain_error("substitution value in wrong ring");
        powers[v] = {Poly::one(target)};
    }
    Poly result = Poly::zero(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        Exponents fixed(target->nvars(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            auto it = powers.find(v);
            if (it == powers.end()) {
                int tv = target->index_of(ring_->vars[v]);
                if (tv < 0) throw domain_error("variable lost in substitution target: " + ring_->vars[v]);
                fixed[static_cast<std::size_t>(tv)] += e[v];
            } else {
                auto& pw = it->second;
                while (pw.size() <= e[v]) pw.push_back(pw.back() * values.at(v));
                term = term * pw[e[v]];
            }
        }
        result = result + term * Poly::monomial(target, fixed, Scalar::one(target->field));
    }
    return result;
}

Poly Poly::eval_var(std::size_t var, const Poly& value) const {
    return substitute({{var, value}}, value.ring());
}

Poly Poly::lift_to(const RingPtr& target) const {
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Exponents e2(target->nvars(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            int tv = target->index_of(ring_->vars[v]);
            if (tv < 0) throw domain_error("lift_to: target ring lacks variable " + ring_->vars[v]);
            e2[static_cast<std::size_t>(tv)] = e[v];
        }
        out.add_term(e2, c);
    }
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents e2 = e;
        e2[var] -= 1;
        out.add_term(e2, c * Scalar::from_int(ring_->field, static_cast<long>(e[var])));
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (largest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::vector<std::string> parts;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (e[v] == 1) parts.push_back(ring_->vars[v]);
            else parts.push_back(ring_->vars[v] + "^" + std::to_string(e[v]));
        }
        if (parts.empty()) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            for (std::size_t k = 0; k < parts.size(); ++k) {
                if (k) os << "*";
                os << parts[k];
            }
        }
    }
    return os.str();
}

Poly Substitution::apply(const Poly& p) const {
    if (assignments.empty()) return p;
    return p.substitute(assignments, ring);
}

Poly Substitution::apply_inverse(const Poly& p) const {
    if (!invertible) throw domain_error("substitution is not invertible");
    if (inverse_assignments.empty()) return p;
    return p.substitute(inverse_assignments, ring);
}

std::pair<Poly, Poly> univariate_divide(const Poly& f, const Poly& g, std::size_t var) {
    const RingPtr& R = f.ring();
    long dg = g.degree_in(var);
    if (dg < 0) throw domain_error("univariate_divide: zero divisor");
    if (!g.leading_coeff_in(var).is_one())
        throw domain_error("univariate_divide: divisor is not monic in the given variable");
    Poly q = Poly::zero(R);
    Poly rem = f;
    Poly x = Poly::variable(R, var);
    long dr = rem.degree_in(var);
    while (!rem.is_zero() && dr >= dg) {
        Poly lead = rem.coeffs_in(var)[static_cast<std::size_t>(dr)];
        Poly t = lead * x.pow(static_cast<unsigned long>(dr - dg));
        q = q + t;
        rem = rem - t * g;
        dr = rem.degree_in(var);
    }
    return {q, rem};
}

namespace {

bool monomial_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

std::optional<Poly> try_exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) return std::nullopt;
    const RingPtr& R = f.ring();
    Poly q = Poly::zero(R);
    Poly rem = f;
    const Exponents& ge = g.leading_exponents();
    const Scalar& gc = g.leading_coeff();
    while (!rem.is_zero()) {
        const Exponents& re = rem.leading_exponents();
        if (!monomial_divides(ge, re)) return std::nullopt;
        Exponents qe(re.size());
        for (std::size_t k = 0; k < re.size(); ++k) qe[k] = re[k] - ge[k];
        Poly t = Poly::monomial(R, qe, rem.leading_coeff() / gc);
        q = q + t;
        rem = rem - t * g;
    }
    return q;
}

} // namespace

Poly exact_divide(const Poly& f, const Poly& g) {
    auto q = try_exact_divide(f, g);
    if (!q) throw domain_error("exact_divide: divisor does not divide dividend");
    return *q;
}

bool divides(const Poly& g, const Poly& f) { return try_exact_divide(f, g).has_value(); }

Poly lm_quotient(const Poly& f, const Poly& g) {
    const RingPtr& ring = f.ring();
    const Exponents& ge = g.leading_exponents();
    Poly q = Poly::zero(ring);
    Poly rest = f;
    while (!rest.is_zero()) {
        const Exponents& fe = rest.leading_exponents();
        Exponents diff(fe.size());
        bool div = true;
        for (std::size_t k = 0; k < fe.size(); ++k) {
            if (fe[k] < ge[k]) {
                div = false;
                break;
            }
            diff[k] = fe[k] - ge[k];
        }
        Poly t = Poly::monomial(ring, div ? diff : fe,
                                div ? rest.leading_coeff() * g.leading_coeff().inv()
                                    : rest.leading_coeff());
        if (div) {
            q = q + t;
            rest = rest - t * g;
        } else {
            rest = rest - t; // leading term joins the remainder
        }
    }
    return q;
}

Poly taylor_split(const Poly& f, std::size_t varX, std::size_t varY, std::size_t varZ) {
    const RingPtr& R = f.ring();
    Poly X = Poly::variable(R, varX);
    Poly Y = Poly::variable(R, varY);
    Poly Z = Poly::variable(R, varZ);
    Poly shifted = f.eval_var(varX, X + Y * Z);
    return exact_divide(shifted - f, Y);
}

Substitution monicize(const std::vector<Poly>& polys, std::size_t var) {
    if (polys.empty() || polys[0].is_zero())
        throw domain_error("monicize: first polynomial must be nonzero");
    const Poly& f = polys[0];
    const RingPtr& R = f.ring();

    auto is_quasi_monic = [&](const Poly& p) {
        return !p.is_zero() && p.leading_coeff_in(var).is_constant();
    };
    if (is_quasi_monic(f)) return Substitution::identity(R);

    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < R->nvars(); ++v)
        if (v != var) others.push_back(v);

    Poly X = Poly::variable(R, var);

    if (R->field.kind == FieldKind::rationals) {
        std::mt19937_64 rng(0x5f3c6a1d2e4b7081ull); // fixed seed: deterministic output
        for (int attempt = 0; attempt < 64; ++attempt) {
            int range = 1 + attempt / 4;
            Substitution s;
            s.ring = R;
            s.invertible = true;
            for (std::size_t v : others) {
                long c = static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range;
                if (attempt == 0) c = 1; // first try the all-ones shear
                if (c == 0) continue;
                Poly xv = Poly::variable(R, v);
                Scalar cs = Scalar::from_int(R->field, c);
                s.assignments[v] = xv + X * cs;
                s.inverse_assignments[v] = xv - X * cs;
            }
            if (is_quasi_monic(s.apply(f))) return s;
        }
    } else {
        long D = std::max<long>(f.total_degree(), 1);
        for (int attempt = 0; attempt < 8; ++attempt) {
            Substitution s;
            s.ring = R;
            s.invertible = true;
            unsigned long step = static_cast<unsigned long>(D + 1 + attempt);
            unsigned long d = step;
            for (std::size_t v : others) {
                Poly xv = Poly::variable(R, v);
                s.assignments[v] = xv + X.pow(d);
                s.inverse_assignments[v] = xv - X.pow(d);
                d *= step;
            }
            if (is_quasi_monic(s.apply(f))) return s;
        }
    }
    throw domain_error("monicize: exhausted search budget");
}

Poly univariate_gcd(const Poly& a, const Poly& b, std::size_t var) {
    Poly f = a, g = b;
    auto make_monic = [&](Poly p) {
        if (p.is_zero()) return p;
        Poly lc = p.leading_coeff_in(var);
        if (!lc.is_constant()) throw domain_error("univariate_gcd: nonconstant coefficients");
        return p * lc.constant_value().inv();
    };
    f = make_monic(f);
    g = make_monic(g);
    while (!g.is_zero()) {
        auto [q, r] = univariate_divide(f, g, var);
        f = g;
        g = make_monic(r);
    }
    return f;
}

namespace {

std::vector<std::size_t> vars_used(const Poly& p) {
    std::vector<std::size_t> used;
    for (std::size_t v = 0; v < p.ring()->nvars(); ++v)
        if (p.degree_in(v) > 0) used.push_back(v);
    return used;
}

Poly scalar_normalized(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.leading_coeff().inv();
}

/// Scales p by a nonzero scalar so that, over the rationals, its
/// coefficients become coprime integers. This keeps the coefficients of a
/// pseudo-remainder sequence from blowing up; gcds are only defined up to a
/// scalar anyway. Over a prime field, scales the leading coefficient to 1.
Poly integer_primitive(const Poly& p) {
    if (p.is_zero() || p.ring()->field.kind != FieldKind::rationals)
        return scalar_normalized(p);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [exps, coeff] : p.terms()) {
        const mpq_class& q = coeff.rational();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    Poly out = p * Scalar::from_mpq(p.ring()->field, scale);
    return out.leading_coeff().rational() < 0 ? -out : out;
}

Poly content_in(const Poly& f, std::size_t v) {
    Poly g = Poly::zero(f.ring());
    for (const Poly& c : f.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

/// Pseudo-remainder of f by g with respect to v (deg_v(g) >= 1).
Poly pseudo_rem(Poly f, const Poly& g, std::size_t v) {
    long dg = g.degree_in(v);
    Poly lg = g.leading_coeff_in(v);
    bool lg_const = lg.is_constant();
    Scalar lg_inv = lg_const ? lg.constant_value().inv() : Scalar();
    Poly xv = Poly::variable(f.ring(), v);
    while (!f.is_zero() && f.degree_in(v) >= dg) {
        long df = f.degree_in(v);
        Poly lf = f.leading_coeff_in(v);
        Poly shift = xv.pow(static_cast<unsigned long>(df - dg));
        // With a constant leading coefficient a plain remainder step avoids
        // the multiplicative coefficient growth of the pseudo-remainder.
        if (lg_const)
            f = f - g * (lf * lg_inv) * shift;
        else
            f = integer_primitive(f * lg - g * lf * shift);
    }
    return f;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return scalar_normalized(b);
    if (b.is_zero()) return scalar_normalized(a);
    if (a.is_constant() || b.is_constant()) return Poly::one(a.ring());

    std::vector<std::size_t> ua = vars_used(a), ub = vars_used(b);
    std::size_t v = a.ring()->nvars();
    for (std::size_t x : ua)
        if (std::find(ub.begin(), ub.end(), x) != ub.end()) {
            v = x;
            break;
        }
    if (v == a.ring()->nvars()) // no common variable: recurse into the content
        return poly_gcd(content_in(a, ua.front()), b);

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly f = integer_primitive(exact_divide(a, ca));
    Poly g = integer_primitive(exact_divide(b, cb));
    Poly c = poly_gcd(ca, cb);

    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    while (!g.is_zero()) {
        Poly r = pseudo_rem(f, g, v);
        f = g;
        if (r.is_zero()) {
            g = r;
        } else {
            r = integer_primitive(r);
            Poly cr = content_in(r, v);
            g = integer_primitive(exact_divide(r, cr));
        }
        if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    }
    return scalar_normalized(c * f);
}

Poly subring_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return poly_gcd(f, g);
    if (g.is_zero()) return poly_gcd(f, g);
    const RingPtr& R = f.ring();
    std::size_t nv = R->nvars();
    std::vector<bool> keep(nv, false);
    for (std::size_t v = 0; v < nv; ++v)
        if (g.degree_in(v) > 0) keep[v] = true;

    std::map<Exponents, Poly, GrevlexLess> groups;
    for (const auto& [e, c] : f.terms()) {
        Exponents outer(nv, 0), inner(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) (keep[v] ? inner : outer)[v] = e[v];
        Poly mono = Poly::monomial(R, inner, c);
        auto [it, fresh] = groups.emplace(outer, mono);
        if (!fresh) it->second = it->second + mono;
    }

    Poly acc = g;
    for (const auto& [e, c] : groups) {
        acc = poly_gcd(acc, c);
        if (acc.is_constant()) return Poly::one(R);
    }
    return acc;
}

} // namespace slf
