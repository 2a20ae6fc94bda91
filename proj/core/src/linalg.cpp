#include "slfactor/linalg.hpp"

#include <set>

#include "slfactor/ideals.hpp"
#include "slfactor/resultant.hpp"

namespace slf {

PolyMatrix PolyMatrix::identity(std::size_t n, const RingPtr& ring) {
    PolyMatrix m(n, ring);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(ring);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (n_ != o.n_) throw domain_error("matrix product: dimension mismatch");
    PolyMatrix r(n_, ring_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                const Poly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
}

bool PolyMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::vector<Poly> PolyMatrix::column(std::size_t c) const {
    std::vector<Poly> v;
    v.reserve(n_);
    for (std::size_t r = 0; r < n_; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<Poly> PolyMatrix::row(std::size_t r) const {
    std::vector<Poly> v;
    v.reserve(n_);
    for (std::size_t c = 0; c < n_; ++c) v.push_back(at(r, c));
    return v;
}

void PolyMatrix::add_row(std::size_t dst, std::size_t src, const Poly& a) {
    if (a.is_zero()) return;
    for (std::size_t c = 0; c < n_; ++c) at(dst, c) = at(dst, c) + a * at(src, c);
}

void PolyMatrix::add_col(std::size_t dst, std::size_t src, const Poly& a) {
    if (a.is_zero()) return;
    for (std::size_t r = 0; r < n_; ++r) at(r, dst) = at(r, dst) + a * at(r, src);
}

PolyMatrix PolyMatrix::map_entries(const std::function<Poly(const Poly&)>& f,
                                   const RingPtr& target) const {
    PolyMatrix m(n_, target);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = f(at(i, j));
    return m;
}

namespace {

Poly cofactor_det(const PolyMatrix& A, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    const RingPtr& R = A.ring();
    std::size_t n = rows.size();
    if (n == 0) return Poly::one(R);
    if (n == 1) return A.at(rows[0], cols[0]);
    Poly det = Poly::zero(R);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < n; ++c) {
        const Poly& pivot = A.at(rows[0], cols[c]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) sub_cols.push_back(cols[k]);
        Poly minor = cofactor_det(A, sub_rows, sub_cols);
        det = (c % 2 == 0) ? det + pivot * minor : det - pivot * minor;
    }
    return det;
}

std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

Poly mat_det(const PolyMatrix& A) {
    std::size_t n = A.n();
    if (n <= 4) return cofactor_det(A, iota_indices(n), iota_indices(n));
    std::vector<std::vector<Poly>> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = A.row(i);
    return bareiss_det(std::move(m), A.ring());
}

PolyMatrix mat_adjugate(const PolyMatrix& A) {
    std::size_t n = A.n();
    PolyMatrix adj(n, A.ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            Poly minor = cofactor_det(A, rows, cols);
            adj.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return adj;
}

PolyMatrix mat_inverse_sl(const PolyMatrix& A) {
    if (!mat_det(A).is_one())
        throw not_unimodular_error("mat_inverse_sl: determinant is not 1");
    return mat_adjugate(A);
}

PolyMatrix ElemFactor::to_matrix(std::size_t n, const RingPtr& ring) const {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw domain_error("elementary factor: bad indices");
    PolyMatrix m = PolyMatrix::identity(n, ring);
    m.at(i - 1, j - 1) = a;
    return m;
}

void Factorization::push(std::size_t i, std::size_t j, Poly a) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw domain_error("elementary factor: bad indices");
    if (a.is_zero()) return;
    factors.push_back(ElemFactor{i, j, std::move(a)});
}

void Factorization::append(const Factorization& o) {
    if (o.n != n) throw domain_error("factorization append: dimension mismatch");
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
}

PolyMatrix product_of(const Factorization& f) {
    PolyMatrix m = PolyMatrix::identity(f.n, f.ring);
    // Right-multiplying by E_ij(a) adds a * (column i) to column j.
    for (const ElemFactor& e : f.factors) m.add_col(e.j - 1, e.i - 1, e.a);
    return m;
}

bool verify(const Factorization& f, const PolyMatrix& target) {
    if (f.n != target.n()) return false;
    return product_of(f) == target;
}

Factorization inverse_of(const Factorization& f) {
    Factorization r{f.n, f.ring, {}};
    r.factors.reserve(f.factors.size());
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
        r.factors.push_back(ElemFactor{it->i, it->j, -it->a});
    return r;
}

PolyMatrix embed(const PolyMatrix& A, std::size_t n) {
    if (n < A.n()) throw domain_error("embed: target dimension too small");
    PolyMatrix m = PolyMatrix::identity(n, A.ring());
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j) m.at(i, j) = A.at(i, j);
    return m;
}

Factorization embed(const Factorization& f, std::size_t n) {
    if (n < f.n) throw domain_error("embed: target dimension too small");
    Factorization r{n, f.ring, f.factors};
    return r;
}

std::optional<std::vector<Poly>> unimodular_certificate_for_column(const std::vector<Poly>& v,
                                                                   const RingPtr& ring) {
    auto cert = unit_certificate(v, ring);
    if (!cert) return std::nullopt;
    return cert;
}

Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, long max_degree, long coeff_bound) {
    std::size_t nv = ring->nvars();
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<long> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick_var(0, nv ? nv - 1 : 0);
    std::uniform_int_distribution<int> nterms(1, 3);
    Poly p = Poly::zero(ring);
    std::set<Exponents> taken; // distinct monomials keep coefficients in bounds
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nv, 0);
        long budget = deg(rng);
        for (long k = 0; k < budget && nv > 0; ++k) ++e[pick_var(rng)];
        long c = coeff(rng);
        if (c == 0 || !taken.insert(e).second) continue;
        p = p + Poly::monomial(ring, e, Scalar::from_int(ring->field, c));
    }
    return p;
}

Factorization random_elementary_factors(std::mt19937_64& rng, std::size_t n, const RingPtr& ring,
                                        std::size_t count, long max_degree, long coeff_bound) {
    std::uniform_int_distribution<std::size_t> idx(1, n);
    Factorization f{n, ring, {}};
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t i = idx(rng), j = idx(rng);
        while (j == i) j = idx(rng);
        Poly a = random_poly(rng, ring, max_degree, coeff_bound);
        f.push(i, j, a);
    }
    return f;
}

} // namespace slf
