#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/steinberg.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("the five relations hold on random instances") {
    CHECK(check_relations(qring({"x", "y"}), 1, 50).ok);
    CHECK(check_relations(gfring(101, {"x", "y"}), 2, 50).ok);
}

TEST_CASE("injected redundancies are removed and the product is preserved") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(37);
    Factorization base = random_elementary_factors(rng, 3, R, 10, 2, 2);
    PolyMatrix target = product_of(base);

    Factorization noisy{3, R, {}};
    std::size_t injected = 0;
    for (const ElemFactor& e : base.factors) {
        noisy.push(e.i, e.j, e.a);
        if (rng() % 2 == 0) {
            Poly a = random_poly(rng, R, 2, 2);
            if (a.is_zero()) a = Poly::one(R);
            noisy.push(1, 3, a);
            noisy.push(1, 3, -a);
            // push drops zero coefficients, so plant the E(0) directly
            noisy.factors.push_back(ElemFactor{2, 1, Poly::zero(R)});
            injected += 3;
        }
    }
    REQUIRE(injected > 0);
    Factorization slim = simplify(noisy);
    CHECK(product_of(slim) == target);
    CHECK(slim.factors.size() + injected <= noisy.factors.size());
    for (const ElemFactor& e : slim.factors) CHECK_FALSE(e.a.is_zero());
}

TEST_CASE("simplification is idempotent") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(41);
    for (int it = 0; it < 5; ++it) {
        Factorization f = random_elementary_factors(rng, 3, R, 12, 2, 2);
        Factorization once = simplify(f);
        Factorization twice = simplify(once);
        REQUIRE(once.factors.size() == twice.factors.size());
        for (std::size_t k = 0; k < once.factors.size(); ++k) {
            CHECK(once.factors[k].i == twice.factors[k].i);
            CHECK(once.factors[k].j == twice.factors[k].j);
            CHECK(once.factors[k].a == twice.factors[k].a);
        }
    }
}

TEST_CASE("same-position factors merge across commuting gaps") {
    RingPtr R = qring({"x"});
    Factorization f{3, R, {}};
    f.push(1, 2, P(R, "x"));
    f.push(1, 3, P(R, "1")); // commutes with E_12 coefficients? shares row 1 only
    f.push(1, 2, P(R, "-x"));
    Factorization slim = simplify(f);
    CHECK(product_of(slim) == product_of(f));
    CHECK(slim.factors.size() < f.factors.size());
}
