#pragma once

#include <vector>

#include "slfactor/poly.hpp"

namespace slf {

/// Monic irreducible factors (repeated by multiplicity) of a univariate
/// polynomial of positive degree in `var`; the constant content is dropped.
/// Over the rationals: squarefree split, factorization modulo a good prime,
/// Hensel lifting and subset recombination. Over GF(p): distinct-degree plus
/// equal-degree splitting. Throws domain_error when f is not univariate in
/// var or has degree < 1.
std::vector<Poly> irreducible_factors(const Poly& f, std::size_t var);

/// Roots of f in the coefficient field itself (distinct, sorted canonically).
std::vector<Scalar> field_roots(const Poly& f, std::size_t var);

} // namespace slf
