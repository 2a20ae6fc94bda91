#include "slfactor/field.hpp"

namespace slf {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

Field Field::gf(std::uint64_t p) {
    if (p >= (1ull << 31))
        throw input_error("GF(p): modulus too large (must be < 2^31)");
    if (!is_prime_u64(p))
        throw input_error("GF(p): " + std::to_string(p) + " is not prime");
    return Field{FieldKind::prime, p};
}

std::string Field::describe() const {
    return kind == FieldKind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::from_int(const Field& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals) {
        s.q_ = v;
        s.q_.canonicalize();
    } else {
        mpz_class num = v.get_num(), den = v.get_den();
        mpz_class p(static_cast<unsigned long>(f.p));
        mpz_class nm = num % p;
        if (nm < 0) nm += p;
        mpz_class dm = den % p;
        if (dm < 0) dm += p;
        std::uint64_t n = dm.get_ui();
        if (n == 0) throw domain_error("GF(p): denominator divisible by p");
        std::uint64_t dinv = powmod(n, f.p - 2, f.p);
        s.r_ = mulmod(nm.get_ui(), dinv, f.p);
    }
    return s;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw domain_error("scalar arithmetic across different coefficient fields");
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1 % field_.p;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals) s.q_ = q_ - o.q_;
    else s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals) s.q_ = q_ * o.q_;
    else s.r_ = mulmod(r_, o.r_, field_.p);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw domain_error("division by zero in coefficient field");
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals) s.q_ = 1 / q_;
    else s.r_ = powmod(r_, field_.p - 2, field_.p);
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r = Scalar::one(field_);
    Scalar a = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) r = r * a;
        a = a * a;
        u >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::rationals) return q_.get_str();
    return std::to_string(r_);
}

} // namespace slf
