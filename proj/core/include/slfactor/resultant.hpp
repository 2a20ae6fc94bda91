#pragma once

#include <vector>

#include "slfactor/poly.hpp"

namespace slf {

/// Fraction-free Bareiss determinant over the polynomial ring (exact, no
/// field of fractions needed). Row swaps flip the sign.
Poly bareiss_det(std::vector<std::vector<Poly>> m, const RingPtr& ring);

/// Sylvester matrix of f1, f2 with respect to `var`, ascending column powers
/// and the f1 block first. Entries are polynomials in the remaining variables.
std::vector<std::vector<Poly>> sylvester_matrix(const Poly& f1, const Poly& f2, std::size_t var);

/// Resultant Res_var(f1, f2): determinant of the Sylvester matrix above.
/// Throws domain_error when both inputs are constant in var.
Poly resultant(const Poly& f1, const Poly& f2, std::size_t var);

struct BezoutCofactors {
    Poly g1, g2, r; // f1*g1 + f2*g2 = r, deg_var(g1) < deg_var(f2), deg_var(g2) < deg_var(f1)
};

/// Cofactors for the resultant identity, by solving the Sylvester linear
/// system with undetermined coefficients (Cramer minors, exact).
/// Throws domain_error when the resultant vanishes.
BezoutCofactors bezout_cofactors(const Poly& f1, const Poly& f2, std::size_t var);

} // namespace slf
