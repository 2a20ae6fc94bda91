#pragma once

#include <optional>

#include "slfactor/linalg.hpp"

namespace slf {

/// The Cohn-type matrix I + a * v * (v_j e_i - v_i e_j)^T, 1-based i != j.
/// Always has determinant 1.
PolyMatrix cohn_type_matrix(const std::vector<Poly>& v, const Poly& a, std::size_t i,
                            std::size_t j);

/// Explicit elementary factorization of the Cohn-type matrix: an eight-factor
/// core through an auxiliary index t (the smallest index outside {i, j}) plus
/// two trailing factors per remaining index; zero coefficients are dropped.
/// Requires n >= 3.
Factorization factor_cohn_type(const std::vector<Poly>& v, const Poly& a, std::size_t i,
                               std::size_t j);

/// Recognizes matrices of the Cohn-type shape (or a single transvection
/// column) and returns their short factorization; nullopt when A does not
/// match. Used as a fast path before the general algorithm.
std::optional<Factorization> detect_cohn_type(const PolyMatrix& A);

/// Factorization of I + v*w^T where w^T v = 0 and cert gives sum cert_l v_l = 1:
/// the matrix splits into Cohn-type factors over index pairs. Requires n >= 3.
Factorization factor_I_plus_vw(const std::vector<Poly>& v, const std::vector<Poly>& w,
                               const std::vector<Poly>& cert);

/// Factorization of B * E(e) * B_inv where B_inv is the exact inverse of B.
/// Works because a conjugated transvection is I + (column of B) * (scaled row
/// of B_inv), which the Cohn-type machinery factors. Requires n >= 3.
Factorization conjugate_elementary(const PolyMatrix& B, const PolyMatrix& B_inv,
                                   const ElemFactor& e);

/// Conjugate every factor: result multiplies to B * product_of(f) * B_inv.
Factorization conjugate_factorization(const Factorization& f, const PolyMatrix& B,
                                      const PolyMatrix& B_inv);

} // namespace slf
