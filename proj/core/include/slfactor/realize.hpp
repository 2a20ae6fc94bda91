#pragma once

#include "slfactor/linalg.hpp"

namespace slf {

/// Factors a matrix A in SL_n(k[x_1, ..., x_m]) with n >= 3 into an explicit
/// product of elementary matrices: product_of(result) == A exactly.
///
/// Throws:
///  - not_unimodular_error  when det(A) != 1,
///  - domain_error          when n < 3,
///  - unsupported_zero_search when the required maximal-ideal search over
///    the coefficient field cannot be completed.
Factorization realize(const PolyMatrix& A);

} // namespace slf
