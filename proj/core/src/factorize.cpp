#include "slfactor/factorize.hpp"

#include "slfactor/trace.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>

namespace slf {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate arithmetic over GF(p), coefficients in [0, p), index = power.

using GFP = std::vector<std::uint64_t>;

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t invm(std::uint64_t a, std::uint64_t p) { return powm(a % p, p - 2, p); }

void gfp_trim(GFP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
long gfp_deg(const GFP& f) { return static_cast<long>(f.size()) - 1; }
bool gfp_is_zero(const GFP& f) { return f.empty(); }
bool gfp_is_one(const GFP& f) { return f.size() == 1 && f[0] == 1; }

GFP gfp_mul(const GFP& a, const GFP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    GFP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
    gfp_trim(r);
    return r;
}

GFP gfp_sub(GFP a, const GFP& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
    gfp_trim(a);
    return a;
}

GFP gfp_scale(GFP a, std::uint64_t c, std::uint64_t p) {
    for (auto& x : a) x = mulm(x, c, p);
    gfp_trim(a);
    return a;
}

/// Remainder of a modulo b (b nonzero).
GFP gfp_rem(GFP a, const GFP& b, std::uint64_t p) {
    std::uint64_t lcinv = invm(b.back(), p);
    while (!a.empty() && a.size() >= b.size()) {
        std::uint64_t c = mulm(a.back(), lcinv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = subm(a[shift + i], mulm(c, b[i], p), p);
        gfp_trim(a);
    }
    return a;
}

/// Quotient and remainder.
std::pair<GFP, GFP> gfp_divmod(GFP a, const GFP& b, std::uint64_t p) {
    std::uint64_t lcinv = invm(b.back(), p);
    GFP q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (!a.empty() && a.size() >= b.size()) {
        std::uint64_t c = mulm(a.back(), lcinv, p);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = subm(a[shift + i], mulm(c, b[i], p), p);
        gfp_trim(a);
    }
    gfp_trim(q);
    return {q, a};
}

GFP gfp_monic(GFP f, std::uint64_t p) {
    if (f.empty()) return f;
    return gfp_scale(std::move(f), invm(f.back(), p), p);
}

GFP gfp_gcd(GFP a, GFP b, std::uint64_t p) {
    while (!b.empty()) {
        GFP r = gfp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return gfp_monic(std::move(a), p);
}

GFP gfp_deriv(const GFP& f, std::uint64_t p) {
    GFP r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mulm(f[i], i % p, p));
    gfp_trim(r);
    return r;
}

GFP gfp_powmod(GFP base, mpz_class e, const GFP& mod, std::uint64_t p) {
    GFP r{1};
    base = gfp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = gfp_rem(gfp_mul(r, base, p), mod, p);
        base = gfp_rem(gfp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

/// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
std::tuple<GFP, GFP, GFP> gfp_extgcd(GFP a, GFP b, std::uint64_t p) {
    GFP s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = gfp_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
        GFP s2 = gfp_sub(s0, gfp_mul(q, s1, p), p);
        GFP t2 = gfp_sub(t0, gfp_mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty()) throw domain_error("gfp_extgcd: zero input");
    std::uint64_t c = invm(a.back(), p);
    return {gfp_scale(std::move(a), c, p), gfp_scale(std::move(s0), c, p),
            gfp_scale(std::move(t0), c, p)};
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace splitting for p = 2) of a
/// monic squarefree product of irreducibles all of degree d.
void gfp_edf(const GFP& f, long d, std::uint64_t p, std::mt19937_64& rng, std::vector<GFP>& out) {
    if (gfp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    long n = gfp_deg(f);
    for (;;) {
        GFP r(static_cast<std::size_t>(n), 0);
        for (auto& c : r) c = rng() % p;
        gfp_trim(r);
        if (gfp_deg(r) < 1) continue;
        GFP g;
        if (p == 2) {
            GFP t = r, acc = r;
            for (long i = 1; i < d; ++i) {
                t = gfp_rem(gfp_mul(t, t, p), f, p);
                acc = gfp_sub(acc, gfp_scale(t, p - 1, p), p); // acc += t
            }
            g = gfp_gcd(f, acc, p);
        } else {
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(d));
            mpz_class e = (q - 1) / 2;
            GFP m = gfp_powmod(r, e, f, p);
            m = gfp_sub(m, GFP{1}, p);
            g = gfp_gcd(f, m, p);
        }
        if (gfp_deg(g) > 0 && gfp_deg(g) < n) {
            gfp_edf(g, d, p, rng, out);
            gfp_edf(gfp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial.
std::vector<GFP> gfp_factor_squarefree(GFP f, std::uint64_t p) {
    std::vector<GFP> out;
    std::mt19937_64 rng(0x51f5u ^ (p * 0x9e3779b97f4a7c15ull) ^ f.size());
    GFP h{0, 1}; // x
    long d = 0;
    while (gfp_deg(f) > 0) {
        ++d;
        if (2 * d > gfp_deg(f)) {
            out.push_back(f);
            break;
        }
        mpz_class e(static_cast<unsigned long>(p));
        h = gfp_powmod(h, e, f, p);
        GFP hx = gfp_sub(h, GFP{0, 1}, p);
        GFP g = gfp_gcd(f, hx, p);
        if (gfp_deg(g) > 0) {
            gfp_edf(g, d, p, rng, out);
            f = gfp_divmod(f, g, p).first;
            h = gfp_rem(std::move(h), f, p);
        }
    }
    return out;
}

GFP gfp_pth_root(const GFP& f, std::uint64_t p) {
    // Frobenius: over the prime field a^p = a, so only exponents move.
    GFP r;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p)) r.push_back(f[i]);
    gfp_trim(r);
    return r;
}

/// Distinct monic irreducible factors of any nonconstant polynomial.
std::vector<GFP> gfp_distinct_irreducibles(GFP f, std::uint64_t p) {
    f = gfp_monic(std::move(f), p);
    std::vector<GFP> out;
    while (gfp_deg(f) > 0) {
        GFP fp = gfp_deriv(f, p);
        if (gfp_is_zero(fp)) {
            f = gfp_pth_root(f, p);
            continue;
        }
        GFP w = gfp_divmod(f, gfp_gcd(f, fp, p), p).first; // squarefree part
        for (GFP& q : gfp_factor_squarefree(w, p)) {
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
            // strip all copies of q from f
            for (;;) {
                auto [quo, rem] = gfp_divmod(f, q, p);
                if (!gfp_is_zero(rem)) break;
                f = std::move(quo);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense univariate arithmetic over Q (mpq) and Z (mpz).

using QP = std::vector<mpq_class>;
using ZP = std::vector<mpz_class>;

void qp_trim(QP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
long qp_deg(const QP& f) { return static_cast<long>(f.size()) - 1; }

QP qp_mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

std::pair<QP, QP> qp_divmod(QP a, const QP& b) {
    mpq_class lcinv = 1 / b.back();
    QP q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        mpq_class c = a.back() * lcinv;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qp_trim(a);
    }
    qp_trim(q);
    return {q, a};
}

QP qp_monic(QP f) {
    if (f.empty()) return f;
    mpq_class lcinv = 1 / f.back();
    for (auto& c : f) c *= lcinv;
    return f;
}

QP qp_gcd(QP a, QP b) {
    while (!b.empty()) {
        QP r = qp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(std::move(a));
}

QP qp_deriv(const QP& f) {
    QP r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
    qp_trim(r);
    return r;
}

void zp_trim(ZP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Primitive integer polynomial (positive leading coefficient) from a Q one.
ZP qp_to_primitive(const QP& f) {
    mpz_class den = 1;
    for (const auto& c : f) den = den / gcd(den, c.get_den()) * c.get_den();
    ZP z;
    for (const auto& c : f) z.push_back(mpz_class(c.get_num() * (den / c.get_den())));
    mpz_class content = 0;
    for (const auto& c : z) content = gcd(content, c);
    if (content != 0)
        for (auto& c : z) c /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

QP zp_to_qp(const ZP& f) {
    QP q;
    for (const auto& c : f) q.push_back(mpq_class(c));
    return q;
}

ZP zp_mul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZP zp_mod(ZP f, const mpz_class& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    zp_trim(f);
    return f;
}

ZP zp_mod_balanced(ZP f, const mpz_class& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (2 * c > m) c -= m;
    }
    zp_trim(f);
    return f;
}

ZP zp_sub(ZP a, const ZP& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zp_trim(a);
    return a;
}

ZP zp_add(ZP a, const ZP& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    zp_trim(a);
    return a;
}

/// Division with remainder modulo m; the divisor must be monic.
std::pair<ZP, ZP> zp_divmod_monic_mod(ZP a, const ZP& b, const mpz_class& m) {
    a = zp_mod(std::move(a), m);
    ZP q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpz_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= c * b[i];
            a[shift + i] %= m;
            if (a[shift + i] < 0) a[shift + i] += m;
        }
        zp_trim(a);
    }
    zp_trim(q);
    return {q, a};
}

GFP zp_to_gfp(const ZP& f, std::uint64_t p) {
    GFP g;
    for (const auto& c : f) {
        mpz_class r = c % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        g.push_back(r.get_ui());
    }
    gfp_trim(g);
    return g;
}

ZP gfp_to_zp(const GFP& f) {
    ZP z;
    for (auto c : f) z.push_back(mpz_class(static_cast<unsigned long>(c)));
    return z;
}

/// One quadratic Hensel step: lift f = g*h and s*g + t*h = 1 from mod m to
/// mod m^2. All of f, g, h monic.
void hensel_step(const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZP e = zp_mod(zp_sub(f, zp_mul(g, h)), m2);
    auto [q, r] = zp_divmod_monic_mod(zp_mul(s, e), h, m2);
    ZP g1 = zp_mod(zp_add(zp_add(g, zp_mul(t, e)), zp_mul(q, g)), m2);
    ZP h1 = zp_mod(zp_add(h, r), m2);
    ZP b = zp_mod(zp_sub(zp_add(zp_mul(s, g1), zp_mul(t, h1)), ZP{1}), m2);
    auto [c, d] = zp_divmod_monic_mod(zp_mul(s, b), h1, m2);
    ZP s1 = zp_mod(zp_sub(s, d), m2);
    ZP t1 = zp_mod(zp_sub(zp_sub(t, zp_mul(t, b)), zp_mul(c, g1)), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

/// Lift the modular factorization f = prod(factors) mod p up to mod target
/// (a power of p), by recursive binary splitting. f monic, factors monic.
void hensel_tree(const ZP& f, const std::vector<GFP>& factors, std::size_t lo, std::size_t hi,
                 std::uint64_t p, const mpz_class& target, std::vector<ZP>& out) {
    if (hi - lo == 1) {
        out.push_back(zp_mod(f, target));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    GFP gp{1}, hp{1};
    for (std::size_t i = lo; i < mid; ++i) gp = gfp_mul(gp, factors[i], p);
    for (std::size_t i = mid; i < hi; ++i) hp = gfp_mul(hp, factors[i], p);
    auto [one, sp, tp] = gfp_extgcd(gp, hp, p);
    if (!gfp_is_one(one)) throw domain_error("hensel_tree: factors not coprime");
    ZP g = gfp_to_zp(gp), h = gfp_to_zp(hp), s = gfp_to_zp(sp), t = gfp_to_zp(tp);
    mpz_class m(static_cast<unsigned long>(p));
    while (m < target) {
        hensel_step(zp_mod(f, m * m), g, h, s, t, m);
        m *= m;
    }
    g = zp_mod(std::move(g), target);
    h = zp_mod(std::move(h), target);
    hensel_tree(g, factors, lo, mid, p, target, out);
    hensel_tree(h, factors, mid, hi, p, target, out);
}

/// Exact division of monic integer polynomials; nullopt when not divisible.
std::optional<ZP> zp_divide_exact_monic(ZP a, const ZP& b) {
    ZP q;
    if (a.size() < b.size()) return std::nullopt;
    q.assign(a.size() - b.size() + 1, mpz_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        zp_trim(a);
    }
    if (!a.empty()) return std::nullopt;
    zp_trim(q);
    return q;
}

bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Monic irreducible factors of a monic squarefree integer polynomial.
std::vector<ZP> zassenhaus(const ZP& F) {
    long d = static_cast<long>(F.size()) - 1;
    if (d <= 1) return {F};

    // Try several squarefree primes and keep the one with the fewest modular
    // factors: the recombination step is exponential in that count.
    std::uint64_t p = 0;
    std::vector<GFP> modular;
    int good_primes = 0;
    for (std::uint64_t cand = 3; good_primes < 7; ++cand) {
        if (cand > 10000) {
            if (p != 0) break;
            throw domain_error("zassenhaus: no good prime found");
        }
        if (!is_small_prime(cand)) continue;
        GFP fp = zp_to_gfp(F, cand);
        if (gfp_deg(fp) != d) continue; // cannot happen for monic F, kept for safety
        GFP g = gfp_gcd(fp, gfp_deriv(fp, cand), cand);
        if (!gfp_is_one(g)) continue;
        ++good_primes;
        std::vector<GFP> fac = gfp_factor_squarefree(fp, cand);
        if (p == 0 || fac.size() < modular.size()) {
            p = cand;
            modular = std::move(fac);
        }
        if (modular.size() <= 2) break;
    }
    if (modular.size() == 1) return {F};
    std::sort(modular.begin(), modular.end());

    // Mignotte-style bound for coefficients of monic factors.
    mpz_class maxc = 0;
    for (const auto& c : F) maxc = std::max(maxc, mpz_class(abs(c)));
    mpz_class bound = (maxc + 1) * (d + 1);
    bound <<= static_cast<unsigned long>(d + 1);
    mpz_class target(static_cast<unsigned long>(p));
    while (target <= 2 * bound) target *= static_cast<unsigned long>(p);

    std::vector<ZP> lifted;
    hensel_tree(zp_mod(F, target), modular, 0, modular.size(), p, target, lifted);
    for (const ZP& l : lifted)
        if (l.empty() || l.back() != 1)
            throw domain_error("zassenhaus: hensel lift produced a non-monic factor");

    std::vector<ZP> out;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = i;
    ZP rest = F;

    for (std::size_t card = 1; !remaining.empty() && card <= remaining.size();) {
        bool found = false;
        std::vector<bool> select(remaining.size(), false);
        std::fill(select.begin(), select.begin() + static_cast<long>(card), true);
        // iterate over all subsets of the current cardinality
        do {
            ZP cand{1};
            for (std::size_t i = 0; i < remaining.size(); ++i)
                if (select[i]) cand = zp_mod(zp_mul(cand, lifted[remaining[i]]), target);
            cand = zp_mod_balanced(std::move(cand), target);
            auto quo = zp_divide_exact_monic(rest, cand);
            if (quo) {
                out.push_back(cand);
                rest = std::move(*quo);
                std::vector<std::size_t> next;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (!select[i]) next.push_back(remaining[i]);
                remaining = std::move(next);
                found = true;
                break;
            }
        } while (std::prev_permutation(select.begin(), select.end()));
        if (!found) ++card;
    }
    if (static_cast<long>(rest.size()) - 1 > 0) out.push_back(rest);
    return out;
}

/// Distinct monic irreducible factors over Q.
std::vector<QP> qp_distinct_irreducibles(const QP& f) {
    QP g = qp_gcd(f, qp_deriv(f));
    QP w = qp_monic(qp_divmod(f, g).first); // squarefree part, same irreducibles
    long d = qp_deg(w);
    if (d <= 0) throw domain_error("factorize: degenerate squarefree part");

    ZP wz = qp_to_primitive(w);
    // Monicize: W(x) = b^(d-1) w(x/b) is monic over Z when b = lc(w).
    mpz_class b = wz.back();
    ZP W(wz.size());
    W[static_cast<std::size_t>(d)] = 1;
    mpz_class pw = 1;
    for (long i = d - 1; i >= 0; --i) {
        W[static_cast<std::size_t>(i)] = wz[static_cast<std::size_t>(i)] * pw;
        pw *= b;
    }
    std::vector<ZP> monic_factors = zassenhaus(W);

    std::vector<QP> out;
    for (const ZP& q : monic_factors) {
        // Undo the scaling: roots were multiplied by b.
        QP back;
        mpq_class pw2 = 1;
        for (std::size_t i = 0; i < q.size(); ++i) {
            back.push_back(mpq_class(q[i]) * pw2);
            pw2 *= b;
        }
        out.push_back(qp_monic(std::move(back)));
    }
    std::sort(out.begin(), out.end(), [](const QP& a, const QP& bq) {
        if (a.size() != bq.size()) return a.size() < bq.size();
        return a < bq;
    });
    return out;
}

} // namespace

std::vector<Poly> irreducible_factors(const Poly& f, std::size_t var) {
    const RingPtr& R = f.ring();
    if (f.is_zero() || f.degree_in(var) < 1)
        throw domain_error("irreducible_factors: input must have positive degree");
    std::vector<Poly> coeffs = f.coeffs_in(var);
    for (const Poly& c : coeffs)
        if (!c.is_constant())
            throw domain_error("irreducible_factors: input is not univariate");

    Poly X = Poly::variable(R, var);
    std::vector<Poly> out;
    auto emit = [&](const std::vector<Scalar>& cs) {
        Poly q = Poly::zero(R);
        for (std::size_t i = 0; i < cs.size(); ++i)
            q = q + Poly::constant(R, cs[i]) * X.pow(i);
        out.push_back(q);
    };

    if (R->field.kind == FieldKind::rationals) {
        QP fq;
        for (const Poly& c : coeffs) fq.push_back(c.constant_value().rational());
        qp_trim(fq);
        QP rem = qp_monic(fq);
        for (const QP& q : qp_distinct_irreducibles(fq)) {
            for (;;) {
                auto [quo, r] = qp_divmod(rem, q);
                if (!r.empty()) break;
                rem = std::move(quo);
                std::vector<Scalar> cs;
                for (const auto& c : q) cs.push_back(Scalar::from_mpq(R->field, c));
                emit(cs);
            }
        }
        if (qp_deg(rem) != 0)
            throw domain_error("irreducible_factors: incomplete factorization over Q");
    } else {
        std::uint64_t p = R->field.p;
        GFP fp;
        for (const Poly& c : coeffs) fp.push_back(c.constant_value().residue());
        gfp_trim(fp);
        GFP rem = gfp_monic(fp, p);
        for (const GFP& q : gfp_distinct_irreducibles(fp, p)) {
            for (;;) {
                auto [quo, r] = gfp_divmod(rem, q, p);
                if (!gfp_is_zero(r)) break;
                rem = std::move(quo);
                std::vector<Scalar> cs;
                for (auto c : q) cs.push_back(Scalar::from_int(R->field, static_cast<long>(c)));
                emit(cs);
            }
        }
        if (gfp_deg(rem) != 0)
            throw domain_error("irreducible_factors: incomplete factorization over GF(p)");
    }
    return out;
}

std::vector<Scalar> field_roots(const Poly& f, std::size_t var) {
    std::vector<Scalar> roots;
    for (const Poly& q : irreducible_factors(f, var)) {
        if (q.degree_in(var) != 1) continue;
        // monic: q = X + c, root = -c
        Scalar c = q.coeffs_in(var)[0].constant_value();
        Scalar root = -c;
        bool seen = false;
        for (const Scalar& r : roots) seen = seen || r == root;
        if (!seen) roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
        if (a.field().kind == FieldKind::rationals) return a.rational() < b.rational();
        return a.residue() < b.residue();
    });
    return roots;
}

} // namespace slf
