#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slfactor/field.hpp"

namespace slf {

using Exponents = std::vector<unsigned>;

/// Graded reverse lexicographic order; ties in term iteration are broken by
/// variable index via the reverse-lex comparison itself.
struct GrevlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

struct PolyRing {
    Field field;
    std::vector<std::string> vars;

    std::size_t nvars() const { return vars.size(); }
    int index_of(const std::string& name) const; // -1 when absent
    bool operator==(const PolyRing&) const = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(const Field& field, std::vector<std::string> vars);
/// Ring with extra variables appended (names must be fresh).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);
/// Ring with the named variables removed.
RingPtr drop_vars(const RingPtr& ring, const std::vector<std::string>& names);

/// Sparse multivariate polynomial with exact field coefficients. Immutable
/// in spirit: all operations return fresh values, no zero terms are stored.
class Poly {
public:
    Poly() = default;

    static Poly zero(const RingPtr& r) { return Poly(r); }
    static Poly one(const RingPtr& r) { return constant(r, Scalar::one(r->field)); }
    static Poly constant(const RingPtr& r, const Scalar& c);
    static Poly from_int(const RingPtr& r, long v) { return constant(r, Scalar::from_int(r->field, v)); }
    static Poly variable(const RingPtr& r, std::size_t var);
    static Poly variable(const RingPtr& r, const std::string& name);
    static Poly monomial(const RingPtr& r, const Exponents& e, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Exponents, Scalar, GrevlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const; // the coefficient of 1 (zero scalar if absent)
    bool is_one() const { return is_constant() && constant_value().is_one(); }

    long total_degree() const;          // -1 for the zero polynomial
    long degree_in(std::size_t var) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Scalar& c) const;
    Poly pow(unsigned long e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Leading term data with respect to the ring's grevlex order.
    const Exponents& leading_exponents() const;
    const Scalar& leading_coeff() const;

    /// Coefficients as a univariate polynomial in `var`; index = power.
    /// Each coefficient lives in the same ring with exponent 0 in `var`.
    std::vector<Poly> coeffs_in(std::size_t var) const;
    static Poly from_coeffs_in(const RingPtr& r, std::size_t var, const std::vector<Poly>& coeffs);
    /// Leading coefficient viewed as univariate in `var`.
    Poly leading_coeff_in(std::size_t var) const;

    /// Simultaneous substitution var -> value for every pair in the map;
    /// unmentioned variables stay fixed. Values must live in `target`.
    Poly substitute(const std::map<std::size_t, Poly>& values, const RingPtr& target) const;
    Poly eval_var(std::size_t var, const Poly& value) const;

    /// Reinterpret in a ring that contains all used variables (matched by name).
    Poly lift_to(const RingPtr& target) const;

    Poly derivative(std::size_t var) const;

    /// Canonical text form: grevlex order, leading term first, explicit '*'.
    std::string str() const;

private:
    explicit Poly(RingPtr r) : ring_(std::move(r)) {}
    void add_term(const Exponents& e, const Scalar& c);

    RingPtr ring_;
    std::map<Exponents, Scalar, GrevlexLess> terms_;
};

/// A variable substitution, optionally invertible (a ring automorphism).
struct Substitution {
    RingPtr ring;
    std::map<std::size_t, Poly> assignments;
    std::map<std::size_t, Poly> inverse_assignments; // meaningful iff invertible
    bool invertible = false;

    bool is_identity() const { return assignments.empty(); }
    Poly apply(const Poly& p) const;
    Poly apply_inverse(const Poly& p) const;
    static Substitution identity(const RingPtr& r) { return Substitution{r, {}, {}, true}; }
};

/// Division of f by a divisor monic in `var`: f = q*g + rem with
/// deg_var(rem) < deg_var(g). Throws domain_error when g is not monic in var.
std::pair<Poly, Poly> univariate_divide(const Poly& f, const Poly& g, std::size_t var);

/// Exact division: returns f/g, throws domain_error when g does not divide f.
Poly exact_divide(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

/// Quotient of dividing f by g on leading monomials (grevlex): f = q*g + rem
/// where no monomial of rem is divisible by the leading monomial of g. Exact
/// divisions are the rem = 0 case.
Poly lm_quotient(const Poly& f, const Poly& g);

/// The polynomial s with f(X + Y*Z) = f(X) + Y*s(X, Y, Z), where f is
/// univariate in varX over the remaining variables.
Poly taylor_split(const Poly& f, std::size_t varX, std::size_t varY, std::size_t varZ);

/// An invertible substitution that makes polys[0] monic in `var` up to a
/// nonzero constant. Over infinite fields random shears x_j -> x_j + c*var;
/// over finite fields power substitutions x_j -> x_j + var^(d^j).
Substitution monicize(const std::vector<Poly>& polys, std::size_t var);

/// gcd for univariate-over-a-field content, used by ideals internals.
Poly univariate_gcd(const Poly& a, const Poly& b, std::size_t var);

/// Multivariate gcd by primitive pseudo-remainder sequences, normalized to
/// leading scalar coefficient 1. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// gcd(f, g) for g supported on a subset of the variables: it divides g, so
/// it equals the gcd of g with the coefficients of f grouped by the monomials
/// in the remaining variables. Much cheaper than a full multivariate gcd when
/// f is large but g is small.
Poly subring_gcd(const Poly& f, const Poly& g);

} // namespace slf
