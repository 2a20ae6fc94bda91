#pragma once

#include <functional>

#include "slfactor/linalg.hpp"

namespace slf {

/// Callback realizing a matrix with strictly fewer variables in play (used
/// for the X = 0 fiber of the patching step).
using RealizeFn = std::function<Factorization(const PolyMatrix&)>;

/// Factors a special matrix A = [[p, q, 0], [r, s, 0], [0, 0, 1]] in
/// SL_3(R[X]) with p monic in `var` into elementary matrices over R[X],
/// by realizing A over localizations of R at finitely many maximal ideals
/// and patching the local factorizations together. The X = 0 fiber A(0) is
/// delegated to `realize_base`. Throws unsupported_zero_search when the
/// maximal-ideal search gives out.
Factorization quillen_realize_special(const PolyMatrix& A, std::size_t var,
                                      const RealizeFn& realize_base);

} // namespace slf
