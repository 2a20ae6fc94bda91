#include <doctest.h>

#include "helpers.hpp"
#include "slfactor/parse.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("grammar round-trips through canonical printing") {
    RingPtr R = qring({"x", "y"});
    for (const char* text : {"-3/2*x^2*y + 1", "(x + y)^3 - x", "x^2 - 2", "7",
                             "-x", "1/3", "x*(y - (x + 1))"}) {
        Poly p = P(R, text);
        CHECK(parse_poly(p.str(), R) == p);
    }
}

TEST_CASE("whitespace is insignificant") {
    RingPtr R = qring({"x", "y"});
    CHECK(P(R, " x +y* x ") == P(R, "x+y*x"));
}

TEST_CASE("rational constants") {
    RingPtr R = qring({"x"});
    CHECK(P(R, "-3/2") * P(R, "-2/3") == Poly::one(R));
    CHECK(P(R, "4/2") == P(R, "2"));
}

TEST_CASE("malformed input reports a position") {
    RingPtr R = qring({"x", "y"});
    CHECK_THROWS_AS(parse_poly("x + * y", R), parse_error);
    CHECK_THROWS_AS(parse_poly("(x + y", R), parse_error);
    CHECK_THROWS_AS(parse_poly("", R), parse_error);
    try {
        parse_poly("x + * y", R);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
        CHECK(e.position() == 4);
    }
}

TEST_CASE("unknown identifiers are rejected") {
    RingPtr R = qring({"x", "y"});
    CHECK_THROWS_AS(parse_poly("x + z", R), parse_error);
}
