#include <doctest.h>

#include "helpers.hpp"
#include "slfactor/ideals.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("Groebner basis with exact cofactor tracking") {
    RingPtr R = qring({"x", "y"});
    std::vector<Poly> gens = {P(R, "x^2 + y^2 - 1"), P(R, "x*y - 1")};
    GroebnerResult g = groebner_with_cofactors(gens, R);
    REQUIRE(g.basis.size() == g.cofactors.size());
    for (std::size_t k = 0; k < g.basis.size(); ++k) {
        Poly sum = Poly::zero(R);
        for (std::size_t j = 0; j < gens.size(); ++j)
            sum = sum + g.cofactors[k][j] * gens[j];
        CHECK(sum == g.basis[k]);
        CHECK(g.basis[k].leading_coeff().is_one());
    }
    for (const Poly& gen : gens) CHECK(normal_form(gen, g.basis).is_zero());
    CHECK(normal_form(gens[0] * P(R, "x - 7") + gens[1] * P(R, "y^3"), g.basis).is_zero());
}

TEST_CASE("unit ideal certificates") {
    RingPtr R = qring({"x", "y"});
    auto cert = unit_certificate({P(R, "x"), P(R, "1 - x*y")}, R);
    REQUIRE(cert.has_value());
    CHECK(((*cert)[0] * P(R, "x") + (*cert)[1] * P(R, "1 - x*y")).is_one());
    CHECK_FALSE(unit_certificate({P(R, "x"), P(R, "y")}, R).has_value());
}

TEST_CASE("residue field of Q[x]/(x^2 - 2)") {
    RingPtr R = qring({"x"});
    MaximalIdealPtr M = make_maximal_ideal({P(R, "x^2 - 2")}, R);
    ResidueElem a(M, P(R, "x"));
    CHECK(a * a == ResidueElem(M, P(R, "2")));
    CHECK(a.inv() == ResidueElem(M, P(R, "1/2*x"))); // x * x/2 = 1 mod x^2 - 2
    CHECK((a * a.inv()).is_one());
    CHECK_THROWS_AS(ResidueElem(M, P(R, "x^2 - 2")).inv(), domain_error);
}

TEST_CASE("maximal ideal search over one variable") {
    RingPtr R = qring({"x"});
    MaximalOrUnit found = find_maximal_ideal_containing({P(R, "x^2 - 2")}, R);
    REQUIRE_FALSE(found.is_unit);
    CHECK(found.ideal->contains(P(R, "x^2 - 2")));
    CHECK_FALSE(found.ideal->contains(Poly::one(R)));

    found = find_maximal_ideal_containing({P(R, "x"), P(R, "1 - x")}, R);
    REQUIRE(found.is_unit);
    Poly sum = found.certificate[0] * P(R, "x") + found.certificate[1] * P(R, "1 - x");
    CHECK(sum.is_one());
}

TEST_CASE("maximal ideal search over two variables finds rational zeros") {
    RingPtr R = qring({"x", "y"});
    MaximalOrUnit found = find_maximal_ideal_containing({P(R, "x - 1"), P(R, "y - 2")}, R);
    REQUIRE_FALSE(found.is_unit);
    CHECK(found.ideal->contains(P(R, "x - 1")));
    CHECK(found.ideal->contains(P(R, "y - 2")));
}

TEST_CASE("irrational common zeros in several variables are unsupported") {
    RingPtr R = qring({"x", "y"});
    CHECK_THROWS_AS(find_maximal_ideal_containing({P(R, "x^2 - 2"), P(R, "y - x")}, R),
                    unsupported_zero_search);
}

TEST_CASE("euclidean gcd over a residue field with exact row operations") {
    RingPtr R = qring({"x", "t"});
    RingPtr Rx = qring({"x"}); // the ideal lives in the base ring
    MaximalIdealPtr M = make_maximal_ideal({P(Rx, "x - 3")}, Rx);
    std::vector<Poly> polys = {P(R, "t^2 - 1"), P(R, "t - 1")};
    ResidueGcdResult g = univar_gcd_in_residue(polys, 1, M);
    CHECK(g.gcd == P(R, "t - 1"));

    std::vector<Poly> state = polys;
    for (const ResidueRowOp& op : g.ops)
        state[op.dst] = state[op.dst] + op.coeff * state[op.src];
    CHECK(M->contains(state[0] - g.gcd));
    for (std::size_t k = 1; k < state.size(); ++k) CHECK(M->contains(state[k]));
}
