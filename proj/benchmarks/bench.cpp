#include <benchmark/benchmark.h>

#include "surfact/actions.hpp"
#include "surfact/classify.hpp"
#include "surfact/extensions.hpp"
#include "surfact/geometry.hpp"
#include "surfact/jacobian.hpp"

using namespace surfact;

static void BM_GroupMultiply(benchmark::State& state) {
    GroupSpec g(61, 6, root_of_order(61, 6), true);
    GroupElement x = g.make(17, 3, 1), y = g.make(40, 5, 0);
    for (auto _ : state) {
        x = g.multiply(x, y);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_GroupMultiply);

static void BM_ElementOrder(benchmark::State& state) {
    GroupSpec g(61, 6, root_of_order(61, 6), true);
    int idx = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.element_order(g.element_at(idx)));
        idx = (idx + 1) % g.order();
    }
}
BENCHMARK(BM_ElementOrder);

static void BM_Enumerate2233(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    GroupSpec g(q, 6, root_of_order(q, 6), false);
    Signature sig = make_signature(0, {2, 2, 3, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(count_generating_vectors(g, sig));
}
BENCHMARK(BM_Enumerate2233)->Arg(7)->Arg(13)->Arg(31);

static void BM_OrbitReduction2233(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    GroupSpec g(q, 6, root_of_order(q, 6), false);
    Signature sig = make_signature(0, {2, 2, 3, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(equivalence_orbits(g, sig).orbit_count());
}
BENCHMARK(BM_OrbitReduction2233)->Arg(7)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

static void BM_QuotientGenus(benchmark::State& state) {
    GroupSpec g12(61, 6, root_of_order(61, 6), true);
    GeneratingVector action = Theta_i_266(g12, 1);
    Subgroup cz = cyclic_subgroup(g12, g12.make(0, 1, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(quotient_genus(action, cz));
}
BENCHMARK(BM_QuotientGenus)->Unit(benchmark::kMicrosecond);

static void BM_FixedSubspaceDim(benchmark::State& state) {
    GroupSpec g(61, 6, root_of_order(61, 6), false);
    auto reps = irreducible_representations(g);
    Subgroup c = cyclic_subgroup(g, g.gen_c());
    const Irrep* induced = nullptr;
    for (const auto& r : reps)
        if (r.kind == Irrep::Kind::Induced) induced = &r;
    for (auto _ : state)
        benchmark::DoNotOptimize(fixed_subspace_dim(g, *induced, c));
}
BENCHMARK(BM_FixedSubspaceDim)->Unit(benchmark::kMicrosecond);

static void BM_ClassifyLambda6(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_genus(q + 1, 6).strata.size());
}
BENCHMARK(BM_ClassifyLambda6)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
