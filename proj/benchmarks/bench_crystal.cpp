#include "crystalcone/affine.hpp"
#include "crystalcone/cone_forms.hpp"
#include "crystalcone/zinf.hpp"

#include <benchmark/benchmark.h>

using namespace crystalcone;

namespace {

CrystalData periodic_data(CartanMatrix cartan) {
    std::vector<int> order(static_cast<size_t>(cartan.rank()));
    for (int i = 0; i < cartan.rank(); ++i) order[static_cast<size_t>(i)] = i + 1;
    return {std::move(cartan), IndexSequence::periodic(std::move(order))};
}

void BM_EnumerateTypeA2(benchmark::State& state) {
    const CrystalData cd = periodic_data(CartanMatrix::type_a(2));
    for (auto _ : state) {
        const CrystalGraph graph = enumerate_image(cd, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(graph.nodes.size());
    }
}
BENCHMARK(BM_EnumerateTypeA2)->Arg(4)->Arg(8)->Arg(12);

void BM_EnumerateAffine3(benchmark::State& state) {
    const CrystalData cd = periodic_data(CartanMatrix::affine_a(3));
    for (auto _ : state) {
        const CrystalGraph graph = enumerate_image(cd, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(graph.nodes.size());
    }
}
BENCHMARK(BM_EnumerateAffine3)->Arg(3)->Arg(5);

void BM_FormClosureTypeA3(benchmark::State& state) {
    const CrystalData cd = periodic_data(CartanMatrix::type_a(3));
    for (auto _ : state) {
        const ClosureResult closure = form_closure(cd, state.range(0));
        benchmark::DoNotOptimize(closure.forms.size());
    }
}
BENCHMARK(BM_FormClosureTypeA3)->Arg(9)->Arg(12)->Arg(15);

void BM_FormClosureAffine3(benchmark::State& state) {
    const CrystalData cd = periodic_data(CartanMatrix::affine_a(3));
    for (auto _ : state) {
        const ClosureResult closure = form_closure(cd, state.range(0));
        benchmark::DoNotOptimize(closure.forms.size());
    }
}
BENCHMARK(BM_FormClosureAffine3)->Arg(9)->Arg(12);

void BM_EnumerateAdmissible(benchmark::State& state) {
    for (auto _ : state) {
        const auto family = enumerate_admissible(3, state.range(0));
        benchmark::DoNotOptimize(family.size());
    }
}
BENCHMARK(BM_EnumerateAdmissible)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
