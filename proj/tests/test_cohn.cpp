#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/cohn.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("the classical 2x2 obstruction embeds as a Cohn-type matrix") {
    RingPtr R = qring({"x", "y"});
    std::vector<Poly> v = {P(R, "x"), P(R, "-y"), Poly::zero(R)};
    PolyMatrix m = cohn_type_matrix(v, P(R, "-1"), 1, 2);
    CHECK(m.at(0, 0) == P(R, "1 + x*y"));
    CHECK(m.at(0, 1) == P(R, "x^2"));
    CHECK(m.at(1, 0) == P(R, "-y^2"));
    CHECK(m.at(1, 1) == P(R, "1 - x*y"));
    CHECK(m.at(2, 2).is_one());
    CHECK(mat_det(m).is_one());
}

TEST_CASE("Cohn-type factorization has an eight-factor core") {
    RingPtr R = qring({"x", "y"});
    std::vector<Poly> v = {P(R, "x"), P(R, "-y"), Poly::zero(R)};
    Factorization f = factor_cohn_type(v, P(R, "-1"), 1, 2);
    CHECK(f.factors.size() == 8);
    // Every core factor routes through the auxiliary index 3.
    for (const ElemFactor& e : f.factors) CHECK((e.i == 3 || e.j == 3));
    CHECK(product_of(f) == cohn_type_matrix(v, P(R, "-1"), 1, 2));
}

TEST_CASE("random Cohn-type matrices in dimensions 3 and 4") {
    for (RingPtr R : {qring({"x", "y"}), gfring(101, {"x", "y"})}) {
        std::mt19937_64 rng(29);
        for (std::size_t n : {std::size_t{3}, std::size_t{4}})
            for (int it = 0; it < 10; ++it) {
                std::vector<Poly> v;
                for (std::size_t k = 0; k < n; ++k) v.push_back(random_poly(rng, R, 2, 2));
                Poly a = random_poly(rng, R, 1, 2);
                std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
                if (i == j) continue;
                Factorization f = factor_cohn_type(v, a, i, j);
                CHECK(product_of(f) == cohn_type_matrix(v, a, i, j));
            }
    }
}

TEST_CASE("detection recovers Cohn-type structure") {
    RingPtr R = qring({"x", "y"});
    std::vector<Poly> v = {P(R, "x"), P(R, "-y"), Poly::zero(R)};
    PolyMatrix m = cohn_type_matrix(v, P(R, "-1"), 1, 2);
    auto f = detect_cohn_type(m);
    REQUIRE(f.has_value());
    CHECK(product_of(*f) == m);

    auto id = detect_cohn_type(PolyMatrix::identity(3, R));
    REQUIRE(id.has_value());
    CHECK(id->factors.empty());

    // A matrix whose off-identity part has full rank is not Cohn-type.
    PolyMatrix other = PolyMatrix::identity(3, R);
    other.at(0, 0) = P(R, "1 + x*y");
    other.at(0, 1) = P(R, "x^3");
    other.at(1, 0) = P(R, "y^3");
    other.at(1, 1) = P(R, "1 - x*y + x^2*y^2");
    REQUIRE(mat_det(other).is_one());
    CHECK_FALSE(detect_cohn_type(other).has_value());
}

TEST_CASE("rank-one updates with a certificate split into Cohn-type factors") {
    RingPtr R = qring({"x", "y"});
    std::vector<Poly> v = {P(R, "x"), P(R, "1 - x"), Poly::zero(R)};
    std::vector<Poly> w = {P(R, "y*(1 - x)"), P(R, "-y*x"), P(R, "5")};
    std::vector<Poly> cert = {Poly::one(R), Poly::one(R), Poly::zero(R)};
    Factorization f = factor_I_plus_vw(v, w, cert);
    PolyMatrix want = PolyMatrix::identity(3, R);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) want.at(r, c) = want.at(r, c) + v[r] * w[c];
    CHECK(product_of(f) == want);
}

TEST_CASE("conjugated factorizations multiply back exactly") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(31);
    Factorization base = random_elementary_factors(rng, 3, R, 4, 1, 2);
    PolyMatrix B = product_of(base);
    PolyMatrix B_inv = mat_inverse_sl(B);
    Factorization inner = random_elementary_factors(rng, 3, R, 3, 1, 2);
    Factorization conj = conjugate_factorization(inner, B, B_inv);
    CHECK(product_of(conj) == B * product_of(inner) * B_inv);
}
