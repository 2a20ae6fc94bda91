#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/realize.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("identity and near-identity inputs") {
    RingPtr R = qring({"x", "y"});
    CHECK(realize(PolyMatrix::identity(3, R)).factors.empty());

    PolyMatrix m = PolyMatrix::identity(3, R);
    m.at(0, 2) = P(R, "x^2*y - 1");
    Factorization f = realize(m);
    CHECK(verify(f, m));
    CHECK(f.factors.size() == 1);
}

TEST_CASE("dimension and determinant preconditions") {
    RingPtr R = qring({"x", "y"});
    CHECK_THROWS_AS(realize(PolyMatrix::identity(2, R)), domain_error);
    PolyMatrix m = PolyMatrix::identity(3, R);
    m.at(0, 0) = P(R, "x");
    CHECK_THROWS_AS(realize(m), not_unimodular_error);
}

TEST_CASE("the embedded obstruction matrix factors in eight steps") {
    RingPtr R = qring({"x", "y"});
    PolyMatrix m = PolyMatrix::identity(3, R);
    m.at(0, 0) = P(R, "1 + x*y");
    m.at(0, 1) = P(R, "x^2");
    m.at(1, 0) = P(R, "-y^2");
    m.at(1, 1) = P(R, "1 - x*y");
    Factorization f = realize(m);
    CHECK(verify(f, m));
    CHECK(f.factors.size() == 8);
}

TEST_CASE("random elementary products round-trip over Q") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(61);
    for (std::size_t n : {std::size_t{3}, std::size_t{4}})
        for (int it = 0; it < 10; ++it) {
            Factorization seed = random_elementary_factors(rng, n, R, 8, 2, 2);
            PolyMatrix A = product_of(seed);
            Factorization f = realize(A);
            CHECK(verify(f, A));
        }
}

TEST_CASE("random elementary products round-trip over GF(101)") {
    RingPtr R = gfring(101, {"x", "y"});
    std::mt19937_64 rng(67);
    for (int it = 0; it < 10; ++it) {
        Factorization seed = random_elementary_factors(rng, 3, R, 8, 2, 2);
        PolyMatrix A = product_of(seed);
        Factorization f = realize(A);
        CHECK(verify(f, A));
    }
}

TEST_CASE("three-variable inputs that only need peeling") {
    RingPtr R = qring({"x", "y", "z"});
    std::mt19937_64 rng(71);
    for (int it = 0; it < 5; ++it) {
        Factorization seed = random_elementary_factors(rng, 3, R, 6, 2, 2);
        PolyMatrix A = product_of(seed);
        Factorization f = realize(A);
        CHECK(verify(f, A));
    }
}
