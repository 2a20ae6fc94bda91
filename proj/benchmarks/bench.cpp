#include <benchmark/benchmark.h>

#include <random>

#include "slfactor/cohn.hpp"
#include "slfactor/realize.hpp"
#include "slfactor/steinberg.hpp"

namespace {

slf::RingPtr qxy() { return slf::make_ring(slf::Field::rationals(), {"x", "y"}); }

void bm_cohn_factor(benchmark::State& state) {
    slf::RingPtr ring = qxy();
    slf::Poly x = slf::Poly::variable(ring, "x");
    slf::Poly y = slf::Poly::variable(ring, "y");
    std::vector<slf::Poly> v = {x, -y, slf::Poly::zero(ring)};
    slf::Poly a = -slf::Poly::one(ring);
    for (auto _ : state) benchmark::DoNotOptimize(slf::factor_cohn_type(v, a, 1, 2));
}
BENCHMARK(bm_cohn_factor);

void bm_realize_random(benchmark::State& state) {
    slf::RingPtr ring = qxy();
    std::mt19937_64 rng(7);
    slf::Factorization f =
        slf::random_elementary_factors(rng, 3, ring, static_cast<std::size_t>(state.range(0)), 1, 2);
    slf::PolyMatrix m = slf::product_of(f);
    for (auto _ : state) benchmark::DoNotOptimize(slf::realize(m));
}
BENCHMARK(bm_realize_random)->Arg(2)->Arg(4);

void bm_simplify(benchmark::State& state) {
    slf::RingPtr ring = qxy();
    std::mt19937_64 rng(11);
    slf::Factorization f = slf::random_elementary_factors(rng, 4, ring, 64, 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(slf::simplify(f));
}
BENCHMARK(bm_simplify);

} // namespace

BENCHMARK_MAIN();
