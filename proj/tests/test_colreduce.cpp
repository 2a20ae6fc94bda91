#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "slfactor/colreduce.hpp"

using namespace slf;
using namespace slf::testing;

TEST_CASE("SL_2 transport matrix moves evaluation points") {
    RingPtr R = qring({"x", "X"});
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 20) {
        Poly f1 = random_poly(rng, R, 3, 2);
        Poly f2 = random_poly(rng, R, 3, 2);
        if (f1.degree_in(1) < 1 && f2.degree_in(1) < 1) continue;
        Poly b = random_poly(rng, R, 2, 2);
        Poly d = random_poly(rng, R, 2, 2);
        PolyMatrix B;
        try {
            B = lemma4_sl2(f1, f2, 1, b, d);
        } catch (const domain_error&) {
            continue; // vanishing resultant: no transport matrix exists
        }
        CHECK(mat_det(B).is_one());
        Poly r = resultant(f1, f2, 1);
        Poly shifted = b + r * d;
        std::vector<Poly> at_b = {f1.eval_var(1, b), f2.eval_var(1, b)};
        std::vector<Poly> at_shifted = {f1.eval_var(1, shifted), f2.eval_var(1, shifted)};
        CHECK(apply_matrix(B, at_b) == at_shifted);
        ++done;
    }
}

TEST_CASE("a monic unimodular column reduces to its constant term") {
    RingPtr R = qring({"x", "X"});
    RingPtr Rx = qring({"x"});
    std::mt19937_64 rng(47);
    for (int done = 0; done < 10; ++done) {
        // Monic in X with coefficients in Q[x]; the third entry certifies
        // unimodularity by construction.
        Poly v0 = P(R, "X^2") + random_poly(rng, Rx, 1, 2).lift_to(R) * P(R, "X") +
                  random_poly(rng, Rx, 1, 2).lift_to(R);
        Poly v1 = random_poly(rng, R, 2, 2);
        Poly v2 = Poly::one(R) - v0 * random_poly(rng, Rx, 1, 1).lift_to(R);
        std::vector<Poly> v = {v0, v1, v2};
        REQUIRE(unimodular_certificate_for_column(v, R).has_value());
        Theorem3Result t = theorem3_reduce(v, 1);
        std::vector<Poly> got = apply_matrix(product_of(t.factors) * t.S, v);
        std::vector<Poly> want;
        for (const Poly& e : v) want.push_back(e.eval_var(1, Poly::zero(R)));
        CHECK(got == want);
        CHECK(t.S * t.S_inv == PolyMatrix::identity(t.S.n(), R));
    }
}

TEST_CASE("unimodular columns built from elementary products reduce to e_n") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(53);
    for (int it = 0; it < 10; ++it) {
        Factorization f = random_elementary_factors(rng, 3, R, 6, 2, 2);
        std::vector<Poly> v = product_of(f).column(2);
        Factorization B = elementary_column_reduce(v, R);
        std::vector<Poly> e3 = {Poly::zero(R), Poly::zero(R), Poly::one(R)};
        CHECK(apply_matrix(product_of(B), v) == e3);
    }
}

TEST_CASE("one shrink step leaves a block-diagonal core") {
    RingPtr R = qring({"x", "y"});
    std::mt19937_64 rng(59);
    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
        Factorization f = random_elementary_factors(rng, n, R, 5, 1, 1);
        PolyMatrix A = product_of(f);
        ShrinkResult s = shrink_once(A);
        CHECK(product_of(s.prefix) * A * product_of(s.suffix) == embed(s.core, n));
        CHECK(s.core.n() == n - 1);
        CHECK(mat_det(s.core).is_one());
    }
}
