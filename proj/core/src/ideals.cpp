#include "slfactor/ideals.hpp"

#include "slfactor/trace.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "slfactor/factorize.hpp"

namespace slf {

namespace {

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_sum_equals_lcm(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

struct Tracked {
    Poly p;
    std::vector<Poly> row; // cofactors against the original generators
};

/// Full normal-form reduction of t.p against the basis, updating cofactors.
void reduce_tracked(Tracked& t, const std::vector<Tracked>& basis, const RingPtr& ring,
                    const std::vector<std::size_t>* skip = nullptr) {
    Poly rem = Poly::zero(ring);
    Poly p = t.p;
    while (!p.is_zero()) {
        const Exponents& le = p.leading_exponents();
        const Scalar& lc = p.leading_coeff();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (skip && std::find(skip->begin(), skip->end(), k) != skip->end()) continue;
            const Poly& g = basis[k].p;
            if (g.is_zero()) continue;
            if (!exp_divides(g.leading_exponents(), le)) continue;
            Scalar c = lc / g.leading_coeff();
            Poly mono = Poly::monomial(ring, exp_sub(le, g.leading_exponents()), c);
            p = p - mono * g;
            for (std::size_t j = 0; j < t.row.size(); ++j)
                t.row[j] = t.row[j] - mono * basis[k].row[j];
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly mono = Poly::monomial(ring, le, lc);
            rem = rem + mono;
            p = p - mono;
        }
    }
    t.p = rem;
}

void make_monic_tracked(Tracked& t) {
    if (t.p.is_zero()) return;
    Scalar c = t.p.leading_coeff().inv();
    t.p = t.p * c;
    for (Poly& q : t.row) q = q * c;
}

} // namespace

GroebnerResult groebner_with_cofactors(const std::vector<Poly>& gens, const RingPtr& ring) {
    std::size_t ng = gens.size();
    std::vector<Tracked> basis;
    for (std::size_t j = 0; j < ng; ++j) {
        if (gens[j].is_zero()) continue;
        std::vector<Poly> row(ng, Poly::zero(ring));
        row[j] = Poly::one(ring);
        Tracked t{gens[j], std::move(row)};
        make_monic_tracked(t);
        basis.push_back(std::move(t));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Exponents& li = basis[i].p.leading_exponents();
        const Exponents& lj = basis[j].p.leading_exponents();
        if (exp_sum_equals_lcm(li, lj)) continue; // coprime leading terms
        Exponents l = exp_lcm(li, lj);
        Poly mi = Poly::monomial(ring, exp_sub(l, li), Scalar::one(ring->field));
        Poly mj = Poly::monomial(ring, exp_sub(l, lj), Scalar::one(ring->field));
        Tracked s;
        s.p = mi * basis[i].p - mj * basis[j].p;
        s.row.assign(ng, Poly::zero(ring));
        for (std::size_t k = 0; k < ng; ++k)
            s.row[k] = mi * basis[i].row[k] - mj * basis[j].row[k];
        reduce_tracked(s, basis, ring);
        if (s.p.is_zero()) continue;
        make_monic_tracked(s);
        std::size_t idx = basis.size();
        basis.push_back(std::move(s));
        for (std::size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
    }

    // Minimalize: drop elements whose leading term another element divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Exponents& li = basis[i].p.leading_exponents();
            const Exponents& lj = basis[j].p.leading_exponents();
            if (exp_divides(lj, li) && (li != lj || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Tracked> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Inter-reduce tails for a reduced basis with intact cofactors.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<std::size_t> skip{i};
        reduce_tracked(minimal[i], minimal, ring, &skip);
        make_monic_tracked(minimal[i]);
    }

    std::sort(minimal.begin(), minimal.end(), [](const Tracked& a, const Tracked& b) {
        return GrevlexLess{}(a.p.leading_exponents(), b.p.leading_exponents());
    });

    GroebnerResult out;
    for (Tracked& t : minimal) {
        out.basis.push_back(std::move(t.p));
        out.cofactors.push_back(std::move(t.row));
    }
    return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    const RingPtr& ring = f.ring();
    Poly rem = Poly::zero(ring);
    Poly p = f;
    while (!p.is_zero()) {
        const Exponents& le = p.leading_exponents();
        const Scalar& lc = p.leading_coeff();
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            if (!exp_divides(g.leading_exponents(), le)) continue;
            Scalar c = lc / g.leading_coeff();
            p = p - Poly::monomial(ring, exp_sub(le, g.leading_exponents()), c) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly mono = Poly::monomial(ring, le, lc);
            rem = rem + mono;
            p = p - mono;
        }
    }
    return rem;
}

std::optional<std::vector<Poly>> unit_certificate(const std::vector<Poly>& gens, const RingPtr& ring) {
    GroebnerResult g = groebner_with_cofactors(gens, ring);
    if (g.basis.size() != 1 || !g.basis[0].is_one()) return std::nullopt;
    std::vector<Poly> cert = g.cofactors[0];
    Poly check = Poly::zero(ring);
    for (std::size_t j = 0; j < gens.size(); ++j) check = check + cert[j] * gens[j];
    if (!check.is_one()) throw domain_error("unit_certificate: identity check failed");
    return cert;
}

Poly MaximalIdealRep::reduce(const Poly& f) const {
    if (gb.empty()) return f;
    if (f.ring() == ring || *f.ring() == *ring) return normal_form(f, gb);
    std::vector<Poly> lifted;
    lifted.reserve(gb.size());
    for (const Poly& g : gb) lifted.push_back(g.lift_to(f.ring()));
    return normal_form(f, lifted);
}

namespace {

std::vector<Exponents> standard_monomials(const std::vector<Poly>& gb, const RingPtr& ring) {
    std::size_t nv = ring->nvars();
    std::vector<Exponents> leads;
    for (const Poly& g : gb) leads.push_back(g.leading_exponents());
    auto is_standard = [&](const Exponents& e) {
        for (const Exponents& l : leads)
            if (exp_divides(l, e)) return false;
        return true;
    };
    std::set<Exponents, GrevlexLess> seen;
    std::deque<Exponents> queue;
    Exponents zero(nv, 0);
    if (is_standard(zero)) {
        seen.insert(zero);
        queue.push_back(zero);
    }
    constexpr std::size_t cap = 4096;
    while (!queue.empty()) {
        Exponents e = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < nv; ++v) {
            Exponents f = e;
            ++f[v];
            if (!is_standard(f) || seen.count(f)) continue;
            if (seen.size() >= cap)
                throw domain_error("residue ring is not finite-dimensional (or too large)");
            seen.insert(f);
            queue.push_back(f);
        }
    }
    return std::vector<Exponents>(seen.begin(), seen.end());
}

} // namespace

MaximalIdealPtr make_maximal_ideal(const std::vector<Poly>& gens, const RingPtr& ring) {
    auto rep = std::make_shared<MaximalIdealRep>();
    rep->ring = ring;
    rep->generators = gens;
    GroebnerResult g = groebner_with_cofactors(gens, ring);
    if (g.basis.size() == 1 && g.basis[0].is_one())
        throw domain_error("make_maximal_ideal: generators span the unit ideal");
    rep->gb = g.basis;
    rep->quotient_basis = standard_monomials(rep->gb, ring);
    return rep;
}

ResidueElem::ResidueElem(MaximalIdealPtr M, const Poly& rep) : ideal_(std::move(M)) {
    rep_ = ideal_->reduce(rep);
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
    return ResidueElem(ideal_, rep_ + o.rep_);
}
ResidueElem ResidueElem::operator-(const ResidueElem& o) const {
    return ResidueElem(ideal_, rep_ - o.rep_);
}
ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
    return ResidueElem(ideal_, rep_ * o.rep_);
}
ResidueElem ResidueElem::operator-() const { return ResidueElem(ideal_, -rep_); }

namespace {

/// Solve M x = b over the scalar field by Gaussian elimination.
std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> M, std::vector<Scalar> b,
                                 const Field& field) {
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (!M[r][c].is_zero()) { piv = r; break; }
        if (piv == n) throw domain_error("solve_linear: singular system");
        std::swap(M[c], M[piv]);
        std::swap(b[c], b[piv]);
        Scalar inv = M[c][c].inv();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (M[r][c].is_zero()) continue;
            Scalar f = M[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) M[r][k] = M[r][k] - f * M[c][k];
            b[r] = b[r] - f * b[c];
        }
    }
    std::vector<Scalar> x(n, Scalar::zero(field));
    for (std::size_t c = n; c-- > 0;) {
        Scalar s = b[c];
        for (std::size_t k = c + 1; k < n; ++k) s = s - M[c][k] * x[k];
        x[c] = s / M[c][c];
    }
    return x;
}

} // namespace

ResidueElem ResidueElem::inv() const {
    if (is_zero()) throw domain_error("residue inverse of zero");
    const auto& qb = ideal_->quotient_basis;
    const RingPtr& R = ideal_->ring;
    const Field& field = R->field;
    std::size_t dim = qb.size();
    auto coords = [&](const Poly& p) {
        std::vector<Scalar> v(dim, Scalar::zero(field));
        for (const auto& [e, c] : p.terms()) {
            auto it = std::lower_bound(qb.begin(), qb.end(), e, GrevlexLess{});
            if (it == qb.end() || *it != e)
                throw domain_error("residue element is not in normal form");
            v[static_cast<std::size_t>(it - qb.begin())] = c;
        }
        return v;
    };
    Poly rep_in_R = rep_.ring() == R ? rep_ : rep_.lift_to(R);
    std::vector<std::vector<Scalar>> M(dim, std::vector<Scalar>(dim, Scalar::zero(field)));
    for (std::size_t i = 0; i < dim; ++i) {
        Poly col = ideal_->reduce(rep_in_R * Poly::monomial(R, qb[i], Scalar::one(field)));
        std::vector<Scalar> v = coords(col);
        for (std::size_t r = 0; r < dim; ++r) M[r][i] = v[r];
    }
    std::vector<Scalar> rhs = coords(Poly::one(R));
    std::vector<Scalar> x = solve_linear(std::move(M), std::move(rhs), field);
    Poly out = Poly::zero(R);
    for (std::size_t i = 0; i < dim; ++i)
        if (!x[i].is_zero()) out = out + Poly::monomial(R, qb[i], x[i]);
    return ResidueElem(ideal_, rep_.ring() == R ? out : out.lift_to(rep_.ring()));
}

namespace {

/// Depth-first rational (resp. prime-field) common-zero search by
/// substitution, variable by variable.
bool common_zero_search(std::vector<Poly> polys, const RingPtr& ring, std::size_t var,
                        std::vector<Scalar>& point) {
    std::size_t nv = ring->nvars();
    std::vector<Poly> live;
    for (const Poly& p : polys) {
        if (p.is_zero()) continue;
        if (p.is_constant()) return false;
        live.push_back(p);
    }
    if (var == nv) return live.empty();

    std::vector<Scalar> candidates;
    const Poly* uni = nullptr;
    for (const Poly& p : live) {
        if (p.degree_in(var) <= 0) continue;
        bool pure = true;
        for (std::size_t j = var; j < nv; ++j)
            if (j != var && p.degree_in(j) > 0) { pure = false; break; }
        if (pure) { uni = &p; break; }
    }
    if (uni) {
        candidates = field_roots(*uni, var);
    } else if (ring->field.kind == FieldKind::rationals) {
        for (long v : {0L, 1L, -1L, 2L, -2L}) candidates.push_back(Scalar::from_int(ring->field, v));
    } else {
        std::uint64_t p = ring->field.p;
        std::uint64_t limit = std::min<std::uint64_t>(p, 1024);
        for (std::uint64_t v = 0; v < limit; ++v)
            candidates.push_back(Scalar::from_int(ring->field, static_cast<long>(v)));
    }

    for (const Scalar& c : candidates) {
        std::vector<Poly> next;
        next.reserve(live.size());
        Poly val = Poly::constant(ring, c);
        for (const Poly& p : live) next.push_back(p.eval_var(var, val));
        point.push_back(c);
        if (common_zero_search(std::move(next), ring, var + 1, point)) return true;
        point.pop_back();
    }
    return false;
}

} // namespace

MaximalOrUnit find_maximal_ideal_containing(const std::vector<Poly>& gens, const RingPtr& ring) {
    std::size_t nv = ring->nvars();
    std::vector<Poly> live;
    for (const Poly& g : gens)
        if (!g.is_zero()) live.push_back(g);

    if (!live.empty()) {
        GroebnerResult g = groebner_with_cofactors(gens, ring);
        if (g.basis.size() == 1 && g.basis[0].is_one()) {
            MaximalOrUnit out;
            out.is_unit = true;
            out.certificate = g.cofactors[0];
            Poly check = Poly::zero(ring);
            for (std::size_t j = 0; j < gens.size(); ++j)
                check = check + out.certificate[j] * gens[j];
            if (!check.is_one())
                throw domain_error("find_maximal_ideal_containing: bad certificate");
            return out;
        }
        if (nv == 1) {
            // Principal ideal: pick a deterministic irreducible factor of the
            // single reduced generator.
            const Poly& gen = g.basis.front();
            if (gen.is_constant())
                throw domain_error("find_maximal_ideal_containing: inconsistent basis");
            std::vector<Poly> factors = irreducible_factors(gen, 0);
            const Poly* best = nullptr;
            for (const Poly& f : factors) {
                if (!best || f.total_degree() < best->total_degree() ||
                    (f.total_degree() == best->total_degree() && f.str() < best->str()))
                    best = &f;
            }
            MaximalOrUnit out;
            out.ideal = make_maximal_ideal({*best}, ring);
            return out;
        }
        // Multivariate: rational common-zero search over the reduced basis.
        std::vector<Scalar> point;
        if (!common_zero_search(g.basis, ring, 0, point))
            throw unsupported_zero_search(
                "no rational common zero found for a multivariate ideal");
        std::vector<Poly> pgens;
        for (std::size_t v = 0; v < nv; ++v)
            pgens.push_back(Poly::variable(ring, v) - Poly::constant(ring, point[v]));
        MaximalOrUnit out;
        out.ideal = make_maximal_ideal(pgens, ring);
        for (const Poly& gen : gens)
            if (!out.ideal->contains(gen))
                throw domain_error("find_maximal_ideal_containing: point misses a generator");
        return out;
    }

    // No constraints: take the origin (resp. the zero ideal of a field).
    std::vector<Poly> pgens;
    for (std::size_t v = 0; v < nv; ++v) pgens.push_back(Poly::variable(ring, v));
    MaximalOrUnit out;
    out.ideal = make_maximal_ideal(pgens, ring);
    return out;
}

ResidueGcdResult univar_gcd_in_residue(const std::vector<Poly>& polys, std::size_t var_x,
                                       const MaximalIdealPtr& M) {
    if (polys.empty()) throw domain_error("univar_gcd_in_residue: empty input");
    const RingPtr& RX = polys.front().ring();
    std::vector<Poly> items;
    items.reserve(polys.size());
    for (const Poly& p : polys) items.push_back(M->reduce(p));

    ResidueGcdResult out;
    auto apply = [&](std::size_t dst, std::size_t src, const Poly& coeff) {
        if (coeff.is_zero()) return;
        out.ops.push_back(ResidueRowOp{dst, src, coeff});
        items[dst] = M->reduce(items[dst] + coeff * items[src]);
    };
    auto lead_coeff = [&](const Poly& p) {
        // Leading coefficient as a univariate in var_x; X-free by reduction.
        return p.leading_coeff_in(var_x);
    };
    auto residue_inv = [&](const Poly& c) {
        return ResidueElem(M, c).inv().lift().lift_to(RX);
    };

    bool any = false;
    for (const Poly& p : items) any = any || !p.is_zero();
    if (!any) throw domain_error("univar_gcd_in_residue: all inputs reduce to zero");

    Poly X = Poly::variable(RX, var_x);
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 10000) throw domain_error("univar_gcd_in_residue: no convergence");
        std::size_t pivot = items.size();
        long best = -1;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].is_zero()) continue;
            long d = items[i].degree_in(var_x);
            if (pivot == items.size() || d < best) { pivot = i; best = d; }
        }
        bool others = false;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (i != pivot && !items[i].is_zero()) { others = true; break; }
        if (!others) {
            if (pivot != 0) {
                apply(0, pivot, Poly::one(RX));
                apply(pivot, 0, -Poly::one(RX));
            }
            break;
        }
        Poly pivot_inv = residue_inv(lead_coeff(items[pivot]));
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (j == pivot || items[j].is_zero()) continue;
            for (std::size_t steps = 0;
                 !items[j].is_zero() && items[j].degree_in(var_x) >= best; ++steps) {
                if (steps > 10000) throw domain_error("univar_gcd_in_residue: stuck reduction");
                long d = items[j].degree_in(var_x) - best;
                Poly c = M->reduce(lead_coeff(items[j]) * pivot_inv);
                apply(j, pivot, -(c * X.pow(static_cast<unsigned long>(d))));
            }
        }
    }

    // Monic normalization of slot 0 via a four-factor unit sandwich on a
    // spare row (requires a second row; single-entry inputs are returned
    // monic without recording the final scaling).
    Poly u = lead_coeff(items[0]);
    if (!u.is_one()) {
        Poly w = residue_inv(u);
        if (items.size() >= 2) {
            std::size_t s = 1;
            apply(0, s, M->reduce((Poly::one(RX) - w) * u));
            apply(s, 0, Poly::one(RX));
            apply(0, s, w - Poly::one(RX));
            apply(s, 0, -u);
        } else {
            items[0] = M->reduce(w * items[0]);
        }
    }
    out.gcd = items[0];
    if (!lead_coeff(out.gcd).is_one())
        throw domain_error("univar_gcd_in_residue: normalization failed");
    if (items.size() >= 2) {
        for (std::size_t i = 1; i < items.size(); ++i)
            if (!items[i].is_zero())
                throw domain_error("univar_gcd_in_residue: residual nonzero entry");
    }
    return out;
}

} // namespace slf
