#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "slfactor/errors.hpp"

namespace slf {

enum class FieldKind { rationals, prime };

/// Coefficient field descriptor: the rationals or GF(p) for a prime p.
struct Field {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0; // modulus, meaningful for FieldKind::prime only

    static Field rationals() { return Field{FieldKind::rationals, 0}; }
    static Field gf(std::uint64_t p);

    bool operator==(const Field&) const = default;
    std::string describe() const;
};

/// An exact field element. Rational values use arbitrary-precision GMP
/// rationals; prime-field values are residues in [0, p).
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long v);
    static Scalar from_mpq(const Field& f, const mpq_class& v);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;            // throws domain_error on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    Scalar pow(long e) const;      // negative e allowed for nonzero values

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text: "-3/2" style for rationals, plain residue for GF(p).
    std::string str() const;

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    Field field_;
    mpq_class q_ = 0;
    std::uint64_t r_ = 0;

    void check_same_field(const Scalar& o) const;
};

} // namespace slf
