#include "slfactor/basecase.hpp"

namespace slf {

void push_scale_pair(Factorization& f, std::size_t i, std::size_t j, const Poly& u,
                     const Poly& u_inv) {
    const RingPtr& R = u.ring();
    Poly one = Poly::one(R);
    f.push(j, i, -u_inv);
    f.push(i, j, u - one);
    f.push(j, i, one);
    f.push(i, j, (one - u) * u_inv);
}

namespace {

struct OpRecorder {
    PolyMatrix m;
    std::vector<ElemFactor> row_ops; // in application order
    std::vector<ElemFactor> col_ops; // in application order

    void row(std::size_t dst, std::size_t src, const Poly& a) {
        if (a.is_zero()) return;
        m.add_row(dst, src, a);
        row_ops.push_back(ElemFactor{dst + 1, src + 1, a});
    }
    void col(std::size_t dst, std::size_t src, const Poly& a) {
        if (a.is_zero()) return;
        m.add_col(dst, src, a);
        // right multiplication by E_{src,dst}(a)
        col_ops.push_back(ElemFactor{src + 1, dst + 1, a});
    }
};

bool all_constant(const PolyMatrix& A) {
    for (std::size_t r = 0; r < A.n(); ++r)
        for (std::size_t c = 0; c < A.n(); ++c)
            if (!A.at(r, c).is_constant()) return false;
    return true;
}

/// Quotient of f by g as univariates in var; lc(g) must be a nonzero constant.
Poly unit_lead_quotient(const Poly& f, const Poly& g, std::size_t var) {
    Poly lead = g.leading_coeff_in(var);
    if (!lead.is_constant() || lead.is_zero())
        throw domain_error("division needs a unit leading coefficient");
    Scalar c = lead.constant_value().inv();
    auto [q, r] = univariate_divide(f, g * c, var);
    (void)r;
    return q * c;
}

Factorization factor_over_field_rec(const PolyMatrix& A) {
    const RingPtr& R = A.ring();
    std::size_t n = A.n();
    OpRecorder rec{A, {}, {}};
    Poly one = Poly::one(R);

    for (std::size_t c = 0; c < n; ++c) {
        if (rec.m.at(c, c).is_zero()) {
            std::size_t r = n;
            for (std::size_t k = c + 1; k < n; ++k)
                if (!rec.m.at(k, c).is_zero()) { r = k; break; }
            if (r == n) throw not_unimodular_error("factor_over_field: singular matrix");
            rec.row(c, r, one);
        }
        Scalar u = rec.m.at(c, c).constant_value();
        if (!u.is_one()) {
            if (c + 1 == n)
                throw not_unimodular_error("factor_over_field: determinant is not 1");
            std::size_t r = n;
            for (std::size_t k = c + 1; k < n; ++k)
                if (!rec.m.at(k, c).is_zero()) { r = k; break; }
            if (r == n) {
                rec.row(c + 1, c, one);
                r = c + 1;
            }
            Scalar w = rec.m.at(r, c).constant_value();
            rec.row(c, r, Poly::constant(R, (Scalar::one(R->field) - u) / w));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            rec.row(r, c, -rec.m.at(r, c));
        }
    }
    if (!rec.m.is_identity())
        throw not_unimodular_error("factor_over_field: elimination did not reach I");

    Factorization out{n, R, {}};
    for (const ElemFactor& op : rec.row_ops) out.push(op.i, op.j, -op.a);
    return out;
}

Factorization factor_univariate_rec(const PolyMatrix& A, std::size_t var) {
    const RingPtr& R = A.ring();
    std::size_t n = A.n();
    Factorization out{n, R, {}};
    if (n == 1) {
        if (!A.at(0, 0).is_one())
            throw not_unimodular_error("factor_univariate: 1x1 block is not 1");
        return out;
    }
    if (all_constant(A)) return factor_over_field_rec(A);

    OpRecorder rec{A, {}, {}};
    Poly one = Poly::one(R);

    // Euclidean reduction of the first column to a single nonzero entry.
    for (;;) {
        std::vector<std::size_t> nz;
        for (std::size_t r = 0; r < n; ++r)
            if (!rec.m.at(r, 0).is_zero()) nz.push_back(r);
        if (nz.empty()) throw not_unimodular_error("factor_univariate: zero column");
        if (nz.size() == 1) break;
        std::size_t piv = nz[0];
        for (std::size_t r : nz)
            if (rec.m.at(r, 0).degree_in(var) < rec.m.at(piv, 0).degree_in(var)) piv = r;
        for (std::size_t r : nz) {
            if (r == piv) continue;
            Poly q = unit_lead_quotient(rec.m.at(r, 0), rec.m.at(piv, 0), var);
            rec.row(r, piv, -q);
        }
    }
    std::size_t r0 = 0;
    while (rec.m.at(r0, 0).is_zero()) ++r0;
    Poly c = rec.m.at(r0, 0);
    if (!c.is_constant())
        throw not_unimodular_error("factor_univariate: column gcd is not a unit");
    Poly cinv = Poly::constant(R, c.constant_value().inv());

    if (r0 != 0) {
        rec.row(0, r0, cinv);
        rec.row(r0, 0, -c);
    } else if (!c.is_one()) {
        rec.row(1, 0, cinv);
        rec.row(0, 1, one - c);
        rec.row(1, 0, -one);
    }
    for (std::size_t r = 1; r < n; ++r) rec.row(r, 0, -rec.m.at(r, 0));
    for (std::size_t j = 1; j < n; ++j) rec.col(j, 0, -rec.m.at(0, j));

    PolyMatrix minor(n - 1, R);
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j) minor.at(i, j) = rec.m.at(i + 1, j + 1);

    Factorization inner = factor_univariate_rec(minor, var);

    for (const ElemFactor& op : rec.row_ops) out.push(op.i, op.j, -op.a);
    for (const ElemFactor& f : inner.factors) out.push(f.i + 1, f.j + 1, f.a);
    for (auto it = rec.col_ops.rbegin(); it != rec.col_ops.rend(); ++it)
        out.push(it->i, it->j, -it->a);
    return out;
}

} // namespace

Factorization factor_over_field(const PolyMatrix& A) {
    if (!all_constant(A))
        throw domain_error("factor_over_field: entries must be constant");
    if (!mat_det(A).is_one())
        throw not_unimodular_error("factor_over_field: determinant is not 1");
    return factor_over_field_rec(A);
}

Factorization factor_univariate(const PolyMatrix& A) {
    const RingPtr& R = A.ring();
    std::size_t used = R->nvars(), count = 0, var = 0;
    for (std::size_t v = 0; v < R->nvars(); ++v) {
        bool uses = false;
        for (std::size_t r = 0; r < A.n() && !uses; ++r)
            for (std::size_t c = 0; c < A.n() && !uses; ++c)
                if (A.at(r, c).degree_in(v) > 0) uses = true;
        if (uses) {
            ++count;
            var = v;
        }
    }
    (void)used;
    if (count > 1) throw domain_error("factor_univariate: more than one variable used");
    if (!mat_det(A).is_one())
        throw not_unimodular_error("factor_univariate: determinant is not 1");
    if (count == 0) return factor_over_field_rec(A);
    return factor_univariate_rec(A, var);
}

} // namespace slf
