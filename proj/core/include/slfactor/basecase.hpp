#pragma once

#include "slfactor/linalg.hpp"

namespace slf {

/// Append four factors whose product is the diagonal matrix with u at slot i,
/// u_inv at slot j and 1 elsewhere (u * u_inv = 1 required, possibly only
/// modulo an ideal understood by the caller).
void push_scale_pair(Factorization& f, std::size_t i, std::size_t j, const Poly& u,
                     const Poly& u_inv);

/// Gaussian elimination over the coefficient field using transvections only.
/// Requires constant entries and det = 1.
Factorization factor_over_field(const PolyMatrix& A);

/// Euclidean elimination over a univariate polynomial ring. Requires at most
/// one variable actually used and det = 1.
Factorization factor_univariate(const PolyMatrix& A);

} // namespace slf
