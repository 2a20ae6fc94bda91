#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/json_io.hpp"
#include "slfactor/realize.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("matrix JSON round-trip over Q") {
    RingPtr R = qring({"x", "y"});
    PolyMatrix m = PolyMatrix::identity(3, R);
    m.at(0, 1) = P(R, "x^2 - 3/2*x*y + y");
    m.at(2, 0) = P(R, "-1/7");
    std::string text = matrix_to_json(m);
    PolyMatrix back = matrix_from_json(text, Field::rationals());
    CHECK(back == m);
}

TEST_CASE("matrix JSON round-trip over GF(101)") {
    RingPtr R = gfring(101, {"x", "y"});
    std::mt19937_64 rng(11);
    PolyMatrix m = product_of(random_elementary_factors(rng, 3, R, 5, 2, 2));
    PolyMatrix back = matrix_from_json(matrix_to_json(m), Field::rationals());
    CHECK(back == m); // the embedded "field" key wins over the default
}

TEST_CASE("factorization JSON round-trip") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(13);
    Factorization f = random_elementary_factors(rng, 4, R, 6, 2, 2);
    Factorization back = factorization_from_json(factorization_to_json(f), Field::rationals());
    REQUIRE(back.factors.size() == f.factors.size());
    CHECK(product_of(back) == product_of(f));
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
        CHECK(back.factors[k].i == f.factors[k].i);
        CHECK(back.factors[k].j == f.factors[k].j);
        CHECK(back.factors[k].a == f.factors[k].a);
    }
}

TEST_CASE("malformed documents are rejected") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(matrix_from_json("{not json", q), input_error);
    CHECK_THROWS_AS(matrix_from_json("{\"format_version\":1}", q), input_error);
    CHECK_THROWS_AS(matrix_from_json(
                        R"({"format_version":1,"field":"q","n":2,"vars":["x"],
                            "entries":[["1","0"],["0"]]})",
                        q),
                    input_error);
    CHECK_THROWS_AS(matrix_from_json(
                        R"({"format_version":2,"field":"q","n":1,"vars":["x"],
                            "entries":[["1"]]})",
                        q),
                    input_error);
}

TEST_CASE("bad polynomial strings surface as parse errors") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(matrix_from_json(
                        R"({"format_version":1,"field":"q","n":1,"vars":["x"],
                            "entries":[["x + * 2"]]})",
                        q),
                    parse_error);
    CHECK_THROWS_AS(factorization_from_json(
                        R"({"format_version":1,"field":"q","n":3,"vars":["x"],
                            "factors":[{"i":1,"j":2,"a":"x +"}]})",
                        q),
                    parse_error);
}
