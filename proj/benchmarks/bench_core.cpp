#include <benchmark/benchmark.h>

#include "toricreg/certificates.hpp"
#include "toricreg/families.hpp"
#include "toricreg/report.hpp"
#include "toricreg/semigroup.hpp"

using namespace toricreg;

// lattice_points is memoized per polytope, so the enumeration benchmarks draw
// a fresh simplex every iteration to keep the cache cold.

static void BM_LatticePoints(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto p = random_hnf_simplex(4, 30, seed++);
    benchmark::DoNotOptimize(lattice_points(p, k).size());
  }
}
BENCHMARK(BM_LatticePoints)->Arg(2)->Arg(4)->Arg(8);

static void BM_Sumset(benchmark::State& state) {
  const auto p = bruns_gubeladze(static_cast<int>(state.range(0)));
  const auto one = lattice_points(p, 1);
  const auto four = lattice_points(p, 4);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(one, four).size());
}
BENCHMARK(BM_Sumset)->Arg(4)->Arg(8);

static void BM_HilbertBasisSimplicial(benchmark::State& state) {
  const auto c = Cone::from_generators({{1, 0, 0}, {0, 1, 0}, {3, 5, static_cast<Coord>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c).size());
}
BENCHMARK(BM_HilbertBasisSimplicial)->Arg(7)->Arg(31)->Arg(97);

static void BM_HilbertBasisVertexCones(benchmark::State& state) {
  const auto p = bruns_gubeladze(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (std::size_t i = 0; i < p.vertices().size(); ++i) benchmark::DoNotOptimize(hilbert_basis(vertex_cone(p, i)).size());
  }
}
BENCHMARK(BM_HilbertBasisVertexCones)->Arg(4)->Arg(8);

static void BM_Analyze(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto p = random_hnf_simplex(static_cast<int>(state.range(0)), 30, seed++);
    benchmark::DoNotOptimize(analyze(p).k_p);
  }
}
BENCHMARK(BM_Analyze)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WeightedDecompose(benchmark::State& state) {
  const auto p = dilate(standard_simplex(3), 2);
  const int k = static_cast<int>(state.range(0));
  const Point x{k, k, 0};
  std::vector<int> a(4, 0);
  a[0] = k - 1;
  for (auto _ : state) benchmark::DoNotOptimize(weighted_decompose(p, x, a, k).nodes);
}
BENCHMARK(BM_WeightedDecompose)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
