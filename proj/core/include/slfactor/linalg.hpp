#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "slfactor/poly.hpp"

namespace slf {

/// Square matrix over a polynomial ring, row-major storage.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t n, const RingPtr& ring)
        : n_(n), ring_(ring), entries_(n * n, Poly::zero(ring)) {}

    static PolyMatrix identity(std::size_t n, const RingPtr& ring);

    std::size_t n() const { return n_; }
    const RingPtr& ring() const { return ring_; }

    Poly& at(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool is_identity() const;

    std::vector<Poly> column(std::size_t c) const;
    std::vector<Poly> row(std::size_t r) const;

    /// Row operation: row dst += a * row src (left multiplication by E).
    void add_row(std::size_t dst, std::size_t src, const Poly& a);
    /// Column operation: col dst += a * col src (right multiplication by E).
    void add_col(std::size_t dst, std::size_t src, const Poly& a);

    /// Entrywise substitution / lift helpers.
    PolyMatrix map_entries(const std::function<Poly(const Poly&)>& f, const RingPtr& target) const;

private:
    std::size_t n_ = 0;
    RingPtr ring_;
    std::vector<Poly> entries_;
};

Poly mat_det(const PolyMatrix& A);
PolyMatrix mat_adjugate(const PolyMatrix& A);
/// Inverse of a matrix with det = 1, via the adjugate. Throws
/// not_unimodular_error otherwise.
PolyMatrix mat_inverse_sl(const PolyMatrix& A);

/// I + a*e_ij with 1-based indices i != j.
struct ElemFactor {
    std::size_t i = 1, j = 2; // 1-based
    Poly a;

    PolyMatrix to_matrix(std::size_t n, const RingPtr& ring) const;
};

/// Ordered product of elementary factors, applied left to right:
/// product = factors[0] * factors[1] * ... * factors.back().
struct Factorization {
    std::size_t n = 0;
    RingPtr ring;
    std::vector<ElemFactor> factors;

    void push(std::size_t i, std::size_t j, Poly a);
    void append(const Factorization& o);
};

PolyMatrix product_of(const Factorization& f);
bool verify(const Factorization& f, const PolyMatrix& target);
/// Inverse factorization: reversed order with negated coefficients.
Factorization inverse_of(const Factorization& f);

/// Block-diagonal extension diag(A, I) to dimension n >= dim(A).
PolyMatrix embed(const PolyMatrix& A, std::size_t n);
Factorization embed(const Factorization& f, std::size_t n);

/// Bezout certificate for a column: polynomials g with sum g_i v_i = 1, or
/// nullopt when the entries do not generate the unit ideal.
std::optional<std::vector<Poly>> unimodular_certificate_for_column(const std::vector<Poly>& v,
                                                                   const RingPtr& ring);

/// Deterministic random polynomial: total degree <= max_degree, integer
/// coefficients in [-coeff_bound, coeff_bound] (mapped into GF(p) as needed).
Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, long max_degree, long coeff_bound);

/// Deterministic random product of `count` elementary factors.
Factorization random_elementary_factors(std::mt19937_64& rng, std::size_t n, const RingPtr& ring,
                                        std::size_t count, long max_degree, long coeff_bound);

} // namespace slf
