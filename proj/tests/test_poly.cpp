#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/poly.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("canonical grevlex printing") {
    RingPtr R = qring({"x", "y"});
    CHECK(P(R, "y + x^2 - 3/2*x*y").str() == "x^2 - 3/2*x*y + y");
    CHECK(P(R, "(x+y)^2").str() == "x^2 + 2*x*y + y^2");
    CHECK(P(R, "0").str() == "0");
    CHECK(Poly::zero(R).is_zero());
    CHECK(Poly::one(R).is_one());
}

TEST_CASE("nilpotent-style certificate collapses to one") {
    RingPtr R = qring({"x", "y"});
    CHECK(P(R, "(1-x)*(1+x)+x^2").is_one());
}

TEST_CASE("arithmetic basics and degrees") {
    RingPtr R = qring({"x", "y"});
    Poly f = P(R, "x^2*y - 2*x + 1");
    CHECK(f.total_degree() == 3);
    CHECK(f.degree_in(0) == 2);
    CHECK(f.degree_in(1) == 1);
    CHECK(f - f == Poly::zero(R));
    CHECK(f * Poly::one(R) == f);
    CHECK(P(R, "x+1").pow(3) == P(R, "x^3+3*x^2+3*x+1"));
    CHECK(f.derivative(0) == P(R, "2*x*y - 2"));
}

TEST_CASE("coefficients viewed univariately round-trip") {
    RingPtr R = qring({"x", "y"});
    Poly f = P(R, "x^3 + y*x^2 - 2*y^2*x + 7");
    std::vector<Poly> cs = f.coeffs_in(0);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == P(R, "7"));
    CHECK(cs[2] == P(R, "y"));
    CHECK(Poly::from_coeffs_in(R, 0, cs) == f);
    CHECK(f.leading_coeff_in(0).is_one());
}

TEST_CASE("substitution and lifting") {
    RingPtr R = qring({"x", "y"});
    Poly f = P(R, "x^2 + y");
    CHECK(f.eval_var(0, P(R, "y+1")) == P(R, "y^2 + 3*y + 1"));
    RingPtr E = extend_ring(R, {"z"});
    Poly lifted = f.lift_to(E);
    CHECK(lifted.ring() == E);
    CHECK(lifted.str() == f.str());
}

TEST_CASE("monic division with remainder") {
    RingPtr R = qring({"x", "y"});
    Poly g = P(R, "x^2 + y");     // monic in x
    Poly f = P(R, "x^5 - 3*x + y^2");
    auto [q, rem] = univariate_divide(f, g, 0);
    CHECK(f == q * g + rem);
    CHECK(rem.degree_in(0) < 2);
    CHECK_THROWS_AS(univariate_divide(f, P(R, "y*x + 1"), 0), domain_error);
}

TEST_CASE("exact division") {
    RingPtr R = qring({"x", "y"});
    Poly f = P(R, "(x+y)*(x^2-y+3)");
    CHECK(divides(P(R, "x+y"), f));
    CHECK(exact_divide(f, P(R, "x+y")) == P(R, "x^2-y+3"));
    CHECK_FALSE(divides(P(R, "x-y"), f));
    CHECK_THROWS_AS(exact_divide(f, P(R, "x-y")), domain_error);
}

TEST_CASE("taylor split identity") {
    RingPtr R = qring({"X", "Y", "Z", "t"});
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        Poly f = random_poly(rng, R, 4, 3);
        Poly s = taylor_split(f, 0, 1, 2);
        Poly shifted = f.eval_var(0, P(R, "X + Y*Z"));
        CHECK(shifted == f + P(R, "Y") * s);
    }
}

TEST_CASE("gcd by primitive remainder sequences") {
    RingPtr R = qring({"x", "y"});
    CHECK(poly_gcd(P(R, "2*x+2"), P(R, "3*x+3")) == P(R, "x+1"));
    Poly g = poly_gcd(P(R, "(x+y)*(x-y)"), P(R, "(x+y)*x"));
    CHECK(g == P(R, "x+y"));
    CHECK(poly_gcd(Poly::zero(R), Poly::zero(R)).is_zero());
    CHECK(poly_gcd(P(R, "x^2"), Poly::zero(R)) == P(R, "x^2"));
    // coprime inputs give a constant
    CHECK(poly_gcd(P(R, "x+1"), P(R, "x+2")).is_constant());
}

TEST_CASE("gcd against a polynomial in fewer variables") {
    RingPtr R = qring({"x", "y"});
    Poly f = P(R, "(y+1)*(x^2+y) + (y+1)*x");
    Poly g = P(R, "(y+1)^2");
    Poly d = subring_gcd(f, g);
    CHECK(divides(d, f));
    CHECK(divides(d, g));
    CHECK(d.total_degree() == 1);
    CHECK(subring_gcd(P(R, "x^2"), P(R, "y")).is_constant());
}

TEST_CASE("monicizing substitution is invertible") {
    RingPtr R = qring({"x", "y"});
    Poly f = P(R, "x*y + 1"); // leading coefficient in x is y
    Substitution sigma = monicize({f}, 0);
    Poly g = sigma.apply(f);
    Poly lead = g.leading_coeff_in(0);
    CHECK(lead.is_constant());
    CHECK_FALSE(lead.is_zero());
    CHECK(sigma.apply_inverse(g) == f);

    RingPtr F = gfring(101, {"x", "y"});
    Poly h = P(F, "x*y + x + 1");
    Substitution tau = monicize({h}, 0);
    Poly k = tau.apply(h);
    CHECK(k.leading_coeff_in(0).is_constant());
    CHECK(tau.apply_inverse(k) == h);
}

TEST_CASE("GF(p) coefficient arithmetic") {
    Field f = Field::gf(101);
    Scalar a = Scalar::from_int(f, 45);
    CHECK(a * a == Scalar::from_int(f, 5)); // 45^2 = 2025 = 20*101 + 5
    CHECK(a * a.inv() == Scalar::one(f));
    CHECK(Scalar::from_int(f, -1) == Scalar::from_int(f, 100));
    CHECK_THROWS_AS(Scalar::zero(f).inv(), domain_error);
    CHECK_THROWS_AS(Field::gf(91), input_error); // 91 = 7 * 13
}
