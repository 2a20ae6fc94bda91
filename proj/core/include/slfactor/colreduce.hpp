#pragma once

#include "slfactor/linalg.hpp"
#include "slfactor/resultant.hpp"

namespace slf {

/// The 2x2 transport matrix B in SL_2(R[X]) with
/// B * (f1(b), f2(b))^T = (f1(b + r d), f2(b + r d))^T, where r is the
/// resultant of f1, f2 in `var` and bez holds f1 g1 + f2 g2 = r.
PolyMatrix lemma4_sl2(const Poly& f1, const Poly& f2, std::size_t var, const Poly& b,
                      const Poly& d, const BezoutCofactors& bez);
PolyMatrix lemma4_sl2(const Poly& f1, const Poly& f2, std::size_t var, const Poly& b,
                      const Poly& d);

/// Reduction of a unimodular column v(X) to v(0): after the call,
/// product_of(factors) * S * v(X) = v(0) with S an SL_2 block (top-left)
/// extended by the identity. Requires v[0] monic of positive degree in var
/// and at least 3 entries.
struct Theorem3Result {
    Factorization factors;
    PolyMatrix S, S_inv;
};
Theorem3Result theorem3_reduce(const std::vector<Poly>& v, std::size_t var);

/// Elementary operations sending a unimodular column to e_n:
/// product_of(result) * v = e_n exactly. Requires n >= 3.
Factorization elementary_column_reduce(const std::vector<Poly>& v, const RingPtr& ring);

/// One size-reduction step: product_of(prefix) * A * product_of(suffix) is
/// the block diagonal matrix diag(core, 1).
struct ShrinkResult {
    Factorization prefix, suffix;
    PolyMatrix core;
};
ShrinkResult shrink_once(const PolyMatrix& A);

} // namespace slf
