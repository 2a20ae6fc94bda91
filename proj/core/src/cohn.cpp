#include "slfactor/cohn.hpp"

namespace slf {

PolyMatrix cohn_type_matrix(const std::vector<Poly>& v, const Poly& a, std::size_t i,
                            std::size_t j) {
    std::size_t n = v.size();
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw domain_error("cohn_type_matrix: bad indices");
    const RingPtr& R = a.ring();
    PolyMatrix m = PolyMatrix::identity(n, R);
    for (std::size_t r = 0; r < n; ++r) {
        m.at(r, i - 1) = m.at(r, i - 1) + a * v[r] * v[j - 1];
        m.at(r, j - 1) = m.at(r, j - 1) - a * v[r] * v[i - 1];
    }
    return m;
}

Factorization factor_cohn_type(const std::vector<Poly>& v, const Poly& a, std::size_t i,
                               std::size_t j) {
    std::size_t n = v.size();
    if (n < 3) throw domain_error("factor_cohn_type: need dimension >= 3");
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw domain_error("factor_cohn_type: bad indices");
    const RingPtr& R = a.ring();
    std::size_t t = 1;
    while (t == i || t == j) ++t;

    const Poly& vi = v[i - 1];
    const Poly& vj = v[j - 1];
    Factorization f{n, R, {}};
    f.push(i, t, -vi);
    f.push(j, t, -vj);
    f.push(t, i, -(a * vj));
    f.push(t, j, a * vi);
    f.push(i, t, vi);
    f.push(j, t, vj);
    f.push(t, i, a * vj);
    f.push(t, j, -(a * vi));
    for (std::size_t l = 1; l <= n; ++l) {
        if (l == i || l == j) continue;
        f.push(l, i, a * v[l - 1] * vj);
        f.push(l, j, -(a * v[l - 1] * vi));
    }
    return f;
}

Factorization factor_I_plus_vw(const std::vector<Poly>& v, const std::vector<Poly>& w,
                               const std::vector<Poly>& cert) {
    std::size_t n = v.size();
    if (n < 3) throw domain_error("factor_I_plus_vw: need dimension >= 3");
    if (w.size() != n || cert.size() != n)
        throw domain_error("factor_I_plus_vw: size mismatch");
    const RingPtr& R = v.front().ring();

    Poly dot = Poly::zero(R), one_check = Poly::zero(R);
    for (std::size_t l = 0; l < n; ++l) {
        dot = dot + w[l] * v[l];
        one_check = one_check + cert[l] * v[l];
    }
    if (!dot.is_zero()) throw domain_error("factor_I_plus_vw: w.v != 0");
    if (!one_check.is_one()) throw domain_error("factor_I_plus_vw: bad certificate");

    // Fast paths: when v or w is supported on a single coordinate the matrix
    // is already a product of transvections along one row or column.
    std::size_t v_support = n, w_support = n, v_count = 0, w_count = 0;
    for (std::size_t l = 0; l < n; ++l) {
        if (!v[l].is_zero()) { v_support = l; ++v_count; }
        if (!w[l].is_zero()) { w_support = l; ++w_count; }
    }
    Factorization f{n, R, {}};
    if (w_count == 0) return f;
    if (v_count == 1) {
        // I + e_k (v_k w)^T, with w_k = 0 by orthogonality
        for (std::size_t l = 0; l < n; ++l)
            if (l != v_support) f.push(v_support + 1, l + 1, v[v_support] * w[l]);
        return f;
    }
    if (w_count == 1) {
        // I + (w_k v) e_k^T, with v_k = 0 in all contributing rows
        for (std::size_t l = 0; l < n; ++l)
            if (l != w_support) f.push(l + 1, w_support + 1, v[l] * w[w_support]);
        return f;
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            Poly a = w[i - 1] * cert[j - 1] - w[j - 1] * cert[i - 1];
            if (a.is_zero()) continue;
            f.append(factor_cohn_type(v, a, i, j));
        }
    return f;
}

std::optional<Factorization> detect_cohn_type(const PolyMatrix& A) {
    std::size_t n = A.n();
    const RingPtr& R = A.ring();
    if (n < 3) return std::nullopt;

    PolyMatrix N = A;
    for (std::size_t l = 0; l < n; ++l) N.at(l, l) = N.at(l, l) - Poly::one(R);

    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (!N.at(r, c).is_zero()) {
                cols.push_back(c);
                break;
            }
    if (cols.empty()) return Factorization{n, R, {}};

    // Single nonzero column with zero diagonal: a stack of transvections.
    if (cols.size() == 1) {
        std::size_t c = cols[0];
        if (!N.at(c, c).is_zero()) return std::nullopt;
        Factorization f{n, R, {}};
        for (std::size_t r = 0; r < n; ++r)
            if (!N.at(r, c).is_zero()) f.push(r + 1, c + 1, N.at(r, c));
        return f;
    }
    if (cols.size() != 2) return std::nullopt;
    std::size_t ci = cols[0], cj = cols[1];

    // Try to split N as v * w^T with w supported on {ci, cj}.
    std::size_t t0 = n;
    for (std::size_t r = 0; r < n && t0 == n; ++r)
        if (!N.at(r, ci).is_zero() || !N.at(r, cj).is_zero()) t0 = r;
    Poly d = poly_gcd(N.at(t0, ci), N.at(t0, cj));
    Poly wi = N.at(t0, ci).is_zero() ? Poly::zero(R) : exact_divide(N.at(t0, ci), d);
    Poly wj = N.at(t0, cj).is_zero() ? Poly::zero(R) : exact_divide(N.at(t0, cj), d);

    std::vector<Poly> v(n, Poly::zero(R));
    for (std::size_t r = 0; r < n; ++r) {
        const Poly& pi = N.at(r, ci);
        const Poly& pj = N.at(r, cj);
        if (pi.is_zero() && pj.is_zero()) continue;
        const Poly& num = wi.is_zero() ? pj : pi;
        const Poly& den = wi.is_zero() ? wj : wi;
        if (num.is_zero() || !divides(den, num)) return std::nullopt;
        v[r] = exact_divide(num, den);
        if (v[r] * wi != pi || v[r] * wj != pj) return std::nullopt;
    }
    if (!(v[ci] * wi + v[cj] * wj).is_zero()) return std::nullopt;

    // Recover a with wi = a * v[cj] and wj = -a * v[ci].
    Poly a = Poly::zero(R);
    if (!v[cj].is_zero() && divides(v[cj], wi)) {
        a = exact_divide(wi, v[cj]);
        if (wj != -(a * v[ci])) return std::nullopt;
    } else if (!v[ci].is_zero() && divides(v[ci], wj)) {
        a = -exact_divide(wj, v[ci]);
        if (wi != a * v[cj]) return std::nullopt;
    } else {
        return std::nullopt;
    }

    Factorization f = factor_cohn_type(v, a, ci + 1, cj + 1);
    if (product_of(f) != A) return std::nullopt;
    return f;
}

Factorization conjugate_elementary(const PolyMatrix& B, const PolyMatrix& B_inv,
                                   const ElemFactor& e) {
    std::size_t n = B.n();
    const RingPtr& R = B.ring();
    Factorization single{n, R, {}};

    std::vector<Poly> v = B.column(e.i - 1);
    std::vector<Poly> brow = B_inv.row(e.j - 1);
    std::vector<Poly> cert = B_inv.row(e.i - 1);

    bool trivial = true;
    for (std::size_t l = 0; l < n && trivial; ++l) {
        bool vi = (l == e.i - 1) ? v[l].is_one() : v[l].is_zero();
        bool wj = (l == e.j - 1) ? brow[l].is_one() : brow[l].is_zero();
        trivial = vi && wj;
    }
    if (trivial) {
        single.push(e.i, e.j, e.a);
        return single;
    }

    std::vector<Poly> w;
    w.reserve(n);
    for (const Poly& b : brow) w.push_back(e.a * b);
    return factor_I_plus_vw(v, w, cert);
}

Factorization conjugate_factorization(const Factorization& f, const PolyMatrix& B,
                                      const PolyMatrix& B_inv) {
    Factorization out{f.n, f.ring, {}};
    for (const ElemFactor& e : f.factors) out.append(conjugate_elementary(B, B_inv, e));
    return out;
}

} // namespace slf
