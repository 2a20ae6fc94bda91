#include "slfactor/local.hpp"

#include "slfactor/resultant.hpp"
#include "slfactor/trace.hpp"

namespace slf {

namespace {

LocalPoly normalized(Poly num, Poly den) {
    if (num.is_zero()) return LocalPoly{num, Poly::one(num.ring())};
    if (!den.is_constant()) {
        Poly g = subring_gcd(num, den);
        if (!g.is_constant()) {
            num = exact_divide(num, g);
            den = exact_divide(den, g);
        }
    }
    if (den.is_constant()) {
        Scalar c = den.constant_value();
        if (c.is_zero()) throw domain_error("local element: zero denominator");
        return LocalPoly{num * c.inv(), Poly::one(num.ring())};
    }
    // Scale the denominator to leading scalar coefficient 1.
    Scalar lc = den.leading_coeff();
    return LocalPoly{num * lc.inv(), den * lc.inv()};
}

} // namespace

LocalPoly LocalPoly::of(const Poly& p) { return LocalPoly{p, Poly::one(p.ring())}; }

LocalPoly LocalPoly::frac(const Poly& num, const Poly& den) { return normalized(num, den); }

LocalPoly LocalPoly::operator+(const LocalPoly& o) const {
    return normalized(num * o.den + o.num * den, den * o.den);
}

LocalPoly LocalPoly::operator-(const LocalPoly& o) const {
    return normalized(num * o.den - o.num * den, den * o.den);
}

LocalPoly LocalPoly::operator*(const LocalPoly& o) const {
    return normalized(num * o.num, den * o.den);
}

LocalPoly LocalPoly::operator-() const { return LocalPoly{-num, den}; }

bool LocalPoly::operator==(const LocalPoly& o) const { return num * o.den == o.num * den; }

LocalPoly LocalPoly::eval_zero(std::size_t var) const {
    Poly zero = Poly::zero(num.ring());
    return normalized(num.eval_var(var, zero), den);
}

LocalMatrix::LocalMatrix(std::size_t n, const RingPtr& ring)
    : n_(n), e_(n * n, LocalPoly::of(Poly::zero(ring))) {}

LocalMatrix LocalMatrix::identity(std::size_t n, const RingPtr& ring) {
    LocalMatrix m(n, ring);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LocalPoly::of(Poly::one(ring));
    return m;
}

LocalMatrix LocalMatrix::operator*(const LocalMatrix& o) const {
    const RingPtr& ring = e_.front().num.ring();
    LocalMatrix out(n_, ring);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) {
            LocalPoly s = LocalPoly::of(Poly::zero(ring));
            for (std::size_t k = 0; k < n_; ++k) s = s + at(r, k) * o.at(k, c);
            out.at(r, c) = s;
        }
    return out;
}

bool LocalMatrix::operator==(const LocalMatrix& o) const {
    for (std::size_t k = 0; k < n_ * n_; ++k)
        if (!(e_[k] == o.e_[k])) return false;
    return true;
}

LocalMatrix product_of_local(const std::vector<LocalFactor>& fs, std::size_t n,
                             const RingPtr& ring) {
    LocalMatrix m = LocalMatrix::identity(n, ring);
    for (const LocalFactor& f : fs) {
        // Right multiplication by E_ij(a): col j += a * col i.
        for (std::size_t r = 0; r < n; ++r)
            m.at(r, f.j - 1) = m.at(r, f.j - 1) + f.a * m.at(r, f.i - 1);
    }
    return m;
}

namespace {

struct Ctx {
    RingPtr ring;
    std::size_t var;
    MaximalIdealPtr M;
    int* max_split = nullptr; // deepest pivot-degree split, when requested

    LocalPoly zero() const { return LocalPoly::of(Poly::zero(ring)); }
    LocalPoly one() const { return LocalPoly::of(Poly::one(ring)); }
    LocalPoly X() const { return LocalPoly::of(Poly::variable(ring, var)); }

    bool is_unit(const LocalPoly& p) const { return !p.is_zero() && !M->contains(p.num); }
    LocalPoly inv(const LocalPoly& p) const {
        if (!is_unit(p) || p.degree_in(var) > 0 || p.den.degree_in(var) > 0)
            throw domain_error("local element is not an invertible constant");
        return LocalPoly::frac(p.den, p.num);
    }
};

struct Mat2 {
    LocalPoly p, q, r, s; // [[p, q], [r, s]]
};

void emit(std::vector<LocalFactor>& out, std::size_t i, std::size_t j, const LocalPoly& a) {
    if (!a.is_zero()) out.push_back(LocalFactor{i, j, a});
}

/// diag(u, 1/u) at rows/columns (1, 2), as four elementary factors.
void emit_scale(std::vector<LocalFactor>& out, const Ctx& cx, const LocalPoly& u) {
    LocalPoly u_inv = cx.inv(u);
    LocalPoly one = cx.one();
    emit(out, 2, 1, -u_inv);
    emit(out, 1, 2, u - one);
    emit(out, 2, 1, one);
    emit(out, 1, 2, (one - u) * u_inv);
}

/// Long division q = f*p + g with deg g < deg p; p must have a unit leading
/// coefficient in var.
std::pair<LocalPoly, LocalPoly> local_divide(const Ctx& cx, const LocalPoly& q,
                                             const LocalPoly& p) {
    long dp = p.degree_in(cx.var);
    LocalPoly lead_inv = cx.inv(LocalPoly::frac(p.num.leading_coeff_in(cx.var), p.den));
    LocalPoly f = cx.zero(), g = q;
    Poly Xp = Poly::variable(cx.ring, cx.var);
    for (long guard = 0; g.degree_in(cx.var) >= dp; ++guard) {
        if (guard > 10000) throw domain_error("local division did not terminate");
        long k = g.degree_in(cx.var) - dp;
        LocalPoly c =
            LocalPoly::frac(g.num.leading_coeff_in(cx.var), g.den) * lead_inv;
        LocalPoly shift = c * LocalPoly::of(Xp.pow(static_cast<unsigned long>(k)));
        f = f + shift;
        g = g - shift * p;
    }
    return {f, g};
}

std::vector<LocalFactor> realize_local(const Ctx& cx, const Mat2& A, int depth, int split);

/// [[p, q], [r, s]] with p a constant unit.
std::vector<LocalFactor> realize_const_pivot(const Ctx& cx, const Mat2& A) {
    LocalPoly u = A.p, u_inv = cx.inv(A.p);
    std::vector<LocalFactor> out;
    emit(out, 2, 1, A.r * u_inv);
    emit_scale(out, cx, u);
    emit(out, 1, 2, A.q * u_inv);
    return out;
}

/// [[X, q], [c, d]] with q a constant unit.
std::vector<LocalFactor> realize_linear_pivot(const Ctx& cx, const Mat2& A) {
    LocalPoly u = A.q, u_inv = cx.inv(A.q);
    LocalPoly one = cx.one();
    LocalPoly t = u_inv * (one - cx.X());
    LocalPoly c2 = A.r + A.s * t;
    std::vector<LocalFactor> out;
    emit(out, 2, 1, c2);
    emit(out, 1, 2, u);
    emit(out, 2, 1, -t);
    return out;
}

/// [[p, q], [c, d]] with p(0) = 0, deg p >= 1, q(0) a unit, deg q < deg p.
std::vector<LocalFactor> realize_zero_const(const Ctx& cx, const Mat2& A, int depth, int split) {
    long d = A.p.degree_in(cx.var);
    TraceScope t_("murthy zero_const deg=" + std::to_string(d));
    LocalPoly p1 = local_divide(cx, A.p, cx.X()).first; // p = X * p1 exactly
    if (!(p1 * cx.X() == A.p))
        throw domain_error("murthy_realize: pivot does not vanish at the origin");

    if (d == 1) {
        // Monic pivot of degree 1 vanishing at the origin is X itself, and q
        // is a constant unit.
        if (!p1.is_one()) throw domain_error("murthy_realize: pivot is not monic");
        return realize_linear_pivot(cx, A);
    }

    Mat2 M1{cx.X(), A.q, A.r, p1 * A.s};

    // Split [[X * p1, q], [c, d]] into M1 * M2 inside a sandwich of
    // elementary factors: c1 = c2 = c, d1 = p1 * d, d2 = X * d.
    LocalPoly c = A.r, dd = A.s;
    LocalPoly d1 = p1 * dd, d2 = cx.X() * dd;
    Mat2 M2{p1, A.q, c, d2};

    std::vector<LocalFactor> out;
    emit(out, 2, 1, c * d1 * d2 - dd * (c + p1 * c * d2));
    emit(out, 2, 3, d2 - cx.one());
    emit(out, 3, 2, cx.one());
    emit(out, 2, 3, -cx.one());
    std::vector<LocalFactor> f1 = realize_local(cx, M1, depth + 1, split + 1);
    out.insert(out.end(), f1.begin(), f1.end());
    emit(out, 2, 3, cx.one());
    emit(out, 3, 2, -cx.one());
    emit(out, 2, 3, cx.one());
    std::vector<LocalFactor> f2 = realize_local(cx, M2, depth + 1, split + 1);
    out.insert(out.end(), f2.begin(), f2.end());
    emit(out, 2, 3, -cx.one());
    emit(out, 3, 2, cx.one());
    emit(out, 2, 3, cx.X() - cx.one());
    emit(out, 3, 1, -(p1 * c));
    emit(out, 3, 2, -d1);
    return out;
}

std::vector<LocalFactor> realize_local(const Ctx& cx, const Mat2& A, int depth, int split) {
    if (depth > 200) throw domain_error("murthy_realize: recursion did not terminate");
    if (cx.max_split && split > *cx.max_split) *cx.max_split = split;
    // The determinant is checked once at the top level; every recursive
    // transformation preserves it, and the final product is verified anyway.
    if (depth == 0 && !(A.p * A.s - A.q * A.r == cx.one()))
        throw domain_error("murthy_realize: determinant is not 1");

    if (A.p.degree_in(cx.var) <= 0) {
        if (!cx.is_unit(A.p)) throw domain_error("murthy_realize: constant pivot is not a unit");
        return realize_const_pivot(cx, A);
    }

    // Reduce the off-diagonal entry below the pivot degree.
    if (A.q.degree_in(cx.var) >= A.p.degree_in(cx.var)) {
        TraceScope t_("murthy q reduction");
        auto [f, g] = local_divide(cx, A.q, A.p);
        Mat2 B{A.p, g, A.r, A.s - f * A.r};
        std::vector<LocalFactor> out = realize_local(cx, B, depth + 1, split);
        emit(out, 1, 2, f);
        return out;
    }

    LocalPoly p0 = A.p.eval_zero(cx.var), q0 = A.q.eval_zero(cx.var);
    if (cx.is_unit(q0)) {
        TraceScope t_("murthy case1 shift");
        LocalPoly t = cx.inv(q0) * p0;
        Mat2 B{A.p - t * A.q, A.q, A.r - t * A.s, A.s};
        std::vector<LocalFactor> out = realize_zero_const(cx, B, depth + 1, split);
        emit(out, 2, 1, t);
        return out;
    }

    // q(0) is not a unit, so p(0) is; pass through the resultant of the pivot
    // row to reach a matrix whose q(0) is a unit.
    Poly P = A.p.num, Q = A.q.num;
    TraceScope t_("murthy case2 resultant");
    BezoutCofactors bez = bezout_cofactors(P, Q, cx.var); // P g1 + Q g2 = res
    if (cx.M->contains(bez.r))
        throw domain_error("murthy_realize: row resultant vanished at the maximal ideal");
    LocalPoly pp = LocalPoly::frac(A.p.den * bez.g1, bez.r);  // pp * p + qq * q = 1
    LocalPoly qq = LocalPoly::frac(A.q.den * bez.g2, bez.r);
    LocalPoly p_new = pp, q_new = -qq; // p_new * p - q_new * q = 1

    Mat2 B{A.p + q_new, A.q + p_new, q_new, p_new};
    std::vector<LocalFactor> out;
    emit(out, 2, 1, A.r * p_new - A.s * q_new);
    emit(out, 1, 2, -cx.one());
    std::vector<LocalFactor> inner = realize_local(cx, B, depth + 1, split);
    out.insert(out.end(), inner.begin(), inner.end());
    return out;
}

} // namespace

std::vector<LocalFactor> murthy_realize(const Poly& p, const Poly& q, const Poly& r,
                                        const Poly& s, std::size_t var,
                                        const MaximalIdealPtr& M, int* split_depth) {
    const RingPtr& ring = p.ring();
    if (p.degree_in(var) > 0 && !p.leading_coeff_in(var).is_one())
        throw domain_error("murthy_realize: pivot is not monic");
    if (split_depth) *split_depth = 0;
    Ctx cx{ring, var, M, split_depth};
    Mat2 A{LocalPoly::of(p), LocalPoly::of(q), LocalPoly::of(r), LocalPoly::of(s)};
    std::vector<LocalFactor> out = realize_local(cx, A, 0, 0);

    LocalMatrix want = LocalMatrix::identity(3, ring);
    want.at(0, 0) = A.p;
    want.at(0, 1) = A.q;
    want.at(1, 0) = A.r;
    want.at(1, 1) = A.s;
    if (!(product_of_local(out, 3, ring) == want))
        throw domain_error("murthy_realize: factor product check failed");
    return out;
}

} // namespace slf
