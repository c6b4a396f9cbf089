#include <benchmark/benchmark.h>

#include "serrecheck/generators.hpp"
#include "serrecheck/homology.hpp"
#include "serrecheck/serre.hpp"
#include "serrecheck/topo_oracle.hpp"

using namespace serrecheck;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);

// Boundary map C_{n-2} -> C_{n-3} of the (n-1)-sphere on n+1 vertices.
void BM_RankBoundaryModP(benchmark::State& state) {
    const auto K = boundary_simplex(static_cast<int>(state.range(0)));
    const auto M = boundary_matrix(K, K.dim() - 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(M, kGF2));
    state.SetLabel(std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}
BENCHMARK(BM_RankBoundaryModP)->DenseRange(6, 12, 2);

void BM_RankBoundaryRational(benchmark::State& state) {
    const auto K = boundary_simplex(static_cast<int>(state.range(0)));
    const auto M = boundary_matrix(K, K.dim() - 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(M, kQ));
    state.SetLabel(std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}
BENCHMARK(BM_RankBoundaryRational)->DenseRange(6, 12, 2);

void BM_HomologyProfileTorus(benchmark::State& state) {
    Complex K;
    for (auto& [name, C] : designed_fixtures())
        if (name == "torus") K = C;
    for (auto _ : state) benchmark::DoNotOptimize(homology_profile(K, kQ));
}
BENCHMARK(BM_HomologyProfileTorus);

void BM_IsSerreRp2(benchmark::State& state) {
    const auto K = rp2_minimal();
    const auto F = state.range(0) == 0 ? kQ : kGF2;
    for (auto _ : state) benchmark::DoNotOptimize(is_serre(K, 3, F));
}
BENCHMARK(BM_IsSerreRp2)->Arg(0)->Arg(2);

void BM_IsCmBoundarySimplex(benchmark::State& state) {
    const auto K = boundary_simplex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_cm(K, kGF2));
}
BENCHMARK(BM_IsCmBoundarySimplex)->DenseRange(3, 7, 1);

void BM_SequentialCheckVsOracles(benchmark::State& state) {
    const auto specs = random_corpus_specs(40, 7);
    std::vector<Complex> corpus;
    for (const auto& s : specs) corpus.push_back(random_complex(s));
    for (auto _ : state) {
        for (const auto& K : corpus) {
            if (K.dim() < 1) continue;
            for (int r = 2; r <= K.dim() + 1; ++r) {
                switch (state.range(0)) {
                    case 0: benchmark::DoNotOptimize(is_sequentially_serre(K, r, kGF2)); break;
                    case 1: benchmark::DoNotOptimize(prop_cs_check(K, r, kGF2)); break;
                    default: benchmark::DoNotOptimize(thm_sstc_check(K, r, kGF2)); break;
                }
            }
        }
    }
}
BENCHMARK(BM_SequentialCheckVsOracles)->DenseRange(0, 2, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
