#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "slfactor/poly.hpp"

namespace slf {

/// Reduced Groebner basis (grevlex, monic) with exact cofactor tracking:
/// basis[k] = sum_j cofactors[k][j] * gens[j].
struct GroebnerResult {
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> cofactors;
};

GroebnerResult groebner_with_cofactors(const std::vector<Poly>& gens, const RingPtr& ring);

/// Fully reduced normal form: no term of the result is divisible by any
/// leading term of the basis. Canonical for a reduced Groebner basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

/// Certificate g with sum g_i * gens_i = 1, or nullopt when the generators
/// do not span the unit ideal. The identity is re-checked before returning.
std::optional<std::vector<Poly>> unit_certificate(const std::vector<Poly>& gens, const RingPtr& ring);

/// A maximal ideal of R presented by a Groebner basis with a finite monomial
/// basis of the residue field R/M.
struct MaximalIdealRep {
    RingPtr ring;
    std::vector<Poly> generators; // defining generators
    std::vector<Poly> gb;         // reduced basis, monic
    std::vector<Exponents> quotient_basis;

    /// Normal form of f against gb; f may live in an extension of `ring`
    /// (the basis is lifted by variable name).
    Poly reduce(const Poly& f) const;
    bool contains(const Poly& f) const { return reduce(f).is_zero(); }
};

using MaximalIdealPtr = std::shared_ptr<const MaximalIdealRep>;

/// Package generators of a maximal ideal (maximality is the caller's
/// responsibility; zero-dimensionality is checked when the monomial basis is
/// enumerated).
MaximalIdealPtr make_maximal_ideal(const std::vector<Poly>& gens, const RingPtr& ring);

/// Element of the residue field R/M, stored as its canonical normal form.
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(MaximalIdealPtr M, const Poly& rep);

    const MaximalIdealPtr& ideal() const { return ideal_; }
    const Poly& lift() const { return rep_; } // canonical representative in R
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }

    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem operator-() const;
    ResidueElem inv() const; // throws domain_error on zero
    bool operator==(const ResidueElem& o) const { return rep_ == o.rep_; }

private:
    MaximalIdealPtr ideal_;
    Poly rep_;
};

/// Either a maximal ideal containing all generators, or a certificate that
/// they generate the unit ideal.
struct MaximalOrUnit {
    MaximalIdealPtr ideal;          // set iff !is_unit
    std::vector<Poly> certificate;  // set iff is_unit
    bool is_unit = false;
};

/// Search for a maximal ideal containing the generators. Supported natively
/// for rings with at most one variable (univariate factorization); for more
/// variables only rational (resp. GF(p)) common zeros are found, otherwise
/// unsupported_zero_search is thrown.
MaximalOrUnit find_maximal_ideal_containing(const std::vector<Poly>& gens, const RingPtr& ring);

/// One recorded elementary row operation: list[dst] += coeff * list[src],
/// with the coefficient lifted to the ambient polynomial ring.
struct ResidueRowOp {
    std::size_t dst = 0, src = 0;
    Poly coeff;
};

struct ResidueGcdResult {
    Poly gcd;                      // monic in var_x, coefficients in normal form
    std::vector<ResidueRowOp> ops; // applied first-to-last to reach the final state
};

/// Euclidean elimination of a list of univariate polynomials over the residue
/// field R/M. After applying the recorded row operations (over the ambient
/// ring, exactly), entry 0 is congruent mod M to the monic gcd and all other
/// entries are congruent to 0. With a single list entry the recorded
/// operations reach the gcd only up to a unit (no spare row to absorb the
/// scaling). Throws domain_error when all inputs reduce to zero.
ResidueGcdResult univar_gcd_in_residue(const std::vector<Poly>& polys, std::size_t var_x,
                                       const MaximalIdealPtr& M);

} // namespace slf
