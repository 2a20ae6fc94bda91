#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/linalg.hpp"
#include "slfactor/resultant.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("resultant of two linear polynomials fixes the sign convention") {
    RingPtr R = qring({"a", "b", "X"});
    // Res_X(X - a, X - b) = b - a
    CHECK(resultant(P(R, "X - a"), P(R, "X - b"), 2) == P(R, "b - a"));
}

TEST_CASE("resultant vanishes exactly on a common factor") {
    RingPtr R = qring({"x", "X"});
    Poly f = P(R, "(X - x) * (X + 1)");
    Poly g = P(R, "(X - x) * (X + 2)");
    CHECK(resultant(f, g, 1).is_zero());
    CHECK_FALSE(resultant(P(R, "X + 1"), P(R, "X + 2"), 1).is_zero());
    CHECK_THROWS_AS(resultant(P(R, "x"), P(R, "x + 1"), 1), domain_error);
}

TEST_CASE("Bezout cofactors re-multiply to the resultant") {
    RingPtr R = qring({"x", "X"});
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 25) {
        Poly f1 = random_poly(rng, R, 3, 2);
        Poly f2 = random_poly(rng, R, 3, 2);
        if (f1.degree_in(1) < 1 || f2.degree_in(1) < 1) continue;
        Poly r = resultant(f1, f2, 1);
        if (r.is_zero()) continue;
        BezoutCofactors bez = bezout_cofactors(f1, f2, 1);
        CHECK(f1 * bez.g1 + f2 * bez.g2 == bez.r);
        CHECK(bez.r == r);
        CHECK(bez.g1.degree_in(1) < f2.degree_in(1));
        CHECK(bez.g2.degree_in(1) < f1.degree_in(1));
        ++done;
    }
}

TEST_CASE("fraction-free determinant agrees with expansion") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(13);
    for (int it = 0; it < 10; ++it) {
        PolyMatrix m(3, R);
        std::vector<std::vector<Poly>> rows(3, std::vector<Poly>(3, Poly::zero(R)));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                m.at(r, c) = random_poly(rng, R, 2, 2);
                rows[r][c] = m.at(r, c);
            }
        CHECK(bareiss_det(rows, R) == mat_det(m));
    }
}
