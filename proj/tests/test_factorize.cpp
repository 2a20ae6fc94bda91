#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "slfactor/factorize.hpp"

using namespace slf;
using namespace slf::testing;

namespace {

Poly product(const std::vector<Poly>& fs, const RingPtr& R) {
    Poly p = Poly::one(R);
    for (const Poly& f : fs) p = p * f;
    return p;
}

} // namespace

TEST_CASE("rational factorization: split, irreducible, repeated") {
    RingPtr R = qring({"x"});

    std::vector<Poly> fs = irreducible_factors(P(R, "x^2 - 1"), 0);
    REQUIRE(fs.size() == 2);
    CHECK(product(fs, R) == P(R, "x^2 - 1"));

    fs = irreducible_factors(P(R, "x^2 + 1"), 0);
    CHECK(fs.size() == 1);

    fs = irreducible_factors(P(R, "(x - 1)^2 * (x + 1) * (x^3 - x - 1)"), 0);
    CHECK(fs.size() == 4);
    CHECK(product(fs, R) == P(R, "(x - 1)^2 * (x + 1) * (x^3 - x - 1)"));
}

TEST_CASE("non-monic leading coefficients are handled") {
    RingPtr R = qring({"x"});
    // 4x^2 - 1 = 4 (x - 1/2)(x + 1/2); the constant content is dropped.
    std::vector<Poly> fs = irreducible_factors(P(R, "4*x^2 - 1"), 0);
    REQUIRE(fs.size() == 2);
    for (const Poly& f : fs) CHECK(f.leading_coeff_in(0).is_one());
    CHECK(product(fs, R) == P(R, "x^2 - 1/4"));

    fs = irreducible_factors(P(R, "3*x^3 - 3*x"), 0);
    CHECK(fs.size() == 3);
}

TEST_CASE("modular splits that must recombine over the rationals") {
    RingPtr R = qring({"x"});
    // x^4 + 1 is irreducible over Q but reducible modulo every prime.
    std::vector<Poly> fs = irreducible_factors(P(R, "x^4 + 1"), 0);
    CHECK(fs.size() == 1);
    CHECK(fs[0] == P(R, "x^4 + 1"));

    fs = irreducible_factors(P(R, "(x^2 - 2) * (x^2 - 3)"), 0);
    REQUIRE(fs.size() == 2);
    CHECK(product(fs, R) == P(R, "(x^2 - 2) * (x^2 - 3)"));
}

TEST_CASE("factorization over GF(101)") {
    RingPtr F = gfring(101, {"x"});
    // 45^2 = 5 in GF(101), so x^2 - 5 splits; 2 is not a square mod 101.
    std::vector<Poly> fs = irreducible_factors(P(F, "x^2 - 5"), 0);
    REQUIRE(fs.size() == 2);
    CHECK(product(fs, F) == P(F, "x^2 - 5"));
    for (const Poly& f : fs) CHECK(f.degree_in(0) == 1);

    CHECK(irreducible_factors(P(F, "x^2 - 2"), 0).size() == 1);

    fs = irreducible_factors(P(F, "x^5 - x"), 0);
    CHECK(fs.size() == 5); // x(x-1)(x+1)(x^2+1 splits: 10^2 = 100 = -1)
}

TEST_CASE("rational and prime-field roots") {
    RingPtr R = qring({"x"});
    std::vector<Scalar> roots = field_roots(P(R, "x^2 - 4"), 0);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == Scalar::from_int(R->field, -2) &&
            roots[1] == Scalar::from_int(R->field, 2)) ||
           (roots[0] == Scalar::from_int(R->field, 2) &&
            roots[1] == Scalar::from_int(R->field, -2))));
    CHECK(field_roots(P(R, "x^2 + 1"), 0).empty());
}

TEST_CASE("inputs that are not univariate of positive degree are rejected") {
    RingPtr R = qring({"x", "y"});
    CHECK_THROWS_AS(irreducible_factors(P(R, "x*y + 1"), 0), domain_error);
    CHECK_THROWS_AS(irreducible_factors(P(R, "5"), 0), domain_error);
}
