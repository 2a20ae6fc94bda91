#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/basecase.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("scale pair emits four transvections for diag(u, 1/u)") {
    RingPtr R = qring({"x"});
    Factorization f{3, R, {}};
    push_scale_pair(f, 1, 2, P(R, "2"), P(R, "1/2"));
    CHECK(f.factors.size() == 4);
    PolyMatrix want = PolyMatrix::identity(3, R);
    want.at(0, 0) = P(R, "2");
    want.at(1, 1) = P(R, "1/2");
    CHECK(product_of(f) == want);
}

TEST_CASE("rotation by 90 degrees over the field") {
    RingPtr R = qring({"x"});
    PolyMatrix m = PolyMatrix::identity(3, R);
    m.at(0, 0) = Poly::zero(R);
    m.at(0, 1) = Poly::one(R);
    m.at(1, 0) = -Poly::one(R);
    m.at(1, 1) = Poly::zero(R);
    Factorization f = factor_over_field(m);
    CHECK(verify(f, m));
    CHECK(f.factors.size() <= 4);
}

TEST_CASE("constant matrices over Q and GF(101)") {
    for (RingPtr R : {qring({"x"}), gfring(101, {"x"})}) {
        std::mt19937_64 rng(17);
        Factorization seed = random_elementary_factors(rng, 3, R, 6, 0, 3);
        PolyMatrix A = product_of(seed);
        Factorization f = factor_over_field(A);
        CHECK(verify(f, A));
    }
}

TEST_CASE("univariate matrices reduce by euclidean elimination") {
    for (RingPtr R : {qring({"x"}), gfring(101, {"x"})}) {
        std::mt19937_64 rng(23);
        for (int it = 0; it < 5; ++it) {
            Factorization seed = random_elementary_factors(rng, 3, R, 6, 2, 2);
            PolyMatrix A = product_of(seed);
            Factorization f = factor_univariate(A);
            CHECK(verify(f, A));
        }
    }
}
