#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/linalg.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("factor product is taken left to right") {
    RingPtr R = qring({"x", "y"});
    Factorization f{3, R, {}};
    f.push(1, 2, P(R, "x"));
    f.push(2, 3, P(R, "y"));
    PolyMatrix m = product_of(f); // E_12(x) * E_23(y)
    CHECK(m.at(0, 1) == P(R, "x"));
    CHECK(m.at(1, 2) == P(R, "y"));
    CHECK(m.at(0, 2) == P(R, "x*y"));
    CHECK(verify(f, m));
    CHECK(verify(inverse_of(f), mat_inverse_sl(m)));
}

TEST_CASE("determinant, adjugate and unimodular inverse") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(3);
    Factorization f = random_elementary_factors(rng, 3, R, 6, 2, 2);
    PolyMatrix A = product_of(f);
    CHECK(mat_det(A).is_one());
    CHECK(A * mat_inverse_sl(A) == PolyMatrix::identity(3, R));
    CHECK(mat_adjugate(A) * A == A * mat_adjugate(A));

    PolyMatrix bad = PolyMatrix::identity(3, R);
    bad.at(0, 0) = P(R, "x");
    CHECK_THROWS_AS(mat_inverse_sl(bad), not_unimodular_error);
}

TEST_CASE("row and column operations match elementary multiplication") {
    RingPtr R = qring({"x"});
    std::mt19937_64 rng(5);
    Factorization f = random_elementary_factors(rng, 4, R, 5, 2, 2);
    PolyMatrix A = product_of(f);
    Poly a = P(R, "x^2 - 1");

    PolyMatrix left = ElemFactor{2, 4, a}.to_matrix(4, R) * A;
    PolyMatrix by_op = A;
    by_op.add_row(1, 3, a); // row 2 += a * row 4, 0-based (dst, src)
    CHECK(left == by_op);

    PolyMatrix right = A * ElemFactor{2, 4, a}.to_matrix(4, R);
    PolyMatrix by_col = A;
    by_col.add_col(3, 1, a); // col 4 += a * col 2
    CHECK(right == by_col);
}

TEST_CASE("embedding extends by an identity block") {
    RingPtr R = qring({"x"});
    std::mt19937_64 rng(9);
    Factorization f = random_elementary_factors(rng, 3, R, 4, 1, 2);
    PolyMatrix A = product_of(f);
    PolyMatrix B = embed(A, 5);
    CHECK(B.n() == 5);
    CHECK(B.at(4, 4).is_one());
    CHECK(B.at(0, 1) == A.at(0, 1));
    CHECK(product_of(embed(f, 5)) == B);
}

TEST_CASE("column certificates") {
    RingPtr R = qring({"x", "y"});
    std::vector<Poly> v = {P(R, "x"), P(R, "1 - x"), P(R, "y")};
    auto cert = unimodular_certificate_for_column(v, R);
    REQUIRE(cert.has_value());
    Poly sum = Poly::zero(R);
    for (std::size_t i = 0; i < 3; ++i) sum = sum + (*cert)[i] * v[i];
    CHECK(sum.is_one());

    std::vector<Poly> w = {P(R, "x"), P(R, "y"), P(R, "x^2")};
    CHECK_FALSE(unimodular_certificate_for_column(w, R).has_value());
}

TEST_CASE("seeded random factors are deterministic and within bounds") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng1(42), rng2(42);
    Factorization f1 = random_elementary_factors(rng1, 3, R, 8, 2, 2);
    Factorization f2 = random_elementary_factors(rng2, 3, R, 8, 2, 2);
    REQUIRE(f1.factors.size() == f2.factors.size());
    for (std::size_t k = 0; k < f1.factors.size(); ++k) {
        CHECK(f1.factors[k].a == f2.factors[k].a);
        CHECK(f1.factors[k].a.total_degree() <= 2);
        for (const auto& [e, c] : f1.factors[k].a.terms()) {
            CHECK(c.rational().get_den() == 1);
            CHECK(abs(c.rational().get_num()) <= 2);
        }
    }
}
