#include <benchmark/benchmark.h>

#include <numeric>

#include "hcp/janson.hpp"
#include "hcp/kernels.hpp"
#include "hcp/randmodels.hpp"
#include "hcp/templates.hpp"

using namespace hcp;

namespace {

// C(3000, 2) candidate pairs
constexpr std::uint64_t kPairs = 3000ull * 2999 / 2;

template <auto F>
void BM_rank_bits(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(F(kPairs, 0.5, 1));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * kPairs));
}

template <auto F>
void BM_ranks(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(F(kPairs, 0.01, 1));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * kPairs));
}

template <auto F>
void BM_windows(benchmark::State& st) {
  const auto k = static_cast<int>(st.range(0));
  static const auto G = Hypergraph::complete(2, 3000);
  std::vector<Vertex> order(3000);
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : st) benchmark::DoNotOptimize(F(G, order, k, Mode::power));
}

template <auto F>
void BM_overlap(benchmark::State& st) {
  static const auto fam = [] {
    // triangles of K_14 as host edge-rank lists
    kernels::CopyFamily f;
    f.edges_per_copy = 3;
    LexRanker rk(2, 14);
    for (Vertex a = 0; a < 14; ++a)
      for (Vertex b = a + 1; b < 14; ++b)
        for (Vertex c = b + 1; c < 14; ++c) {
          std::uint64_t e[3] = {rk.rank(std::vector<Vertex>{a, b}), rk.rank(std::vector<Vertex>{a, c}),
                                rk.rank(std::vector<Vertex>{b, c})};
          std::sort(e, e + 3);
          f.edge_ranks.insert(f.edge_ranks.end(), e, e + 3);
          ++f.copies;
        }
    return f;
  }();
  for (auto _ : st) benchmark::DoNotOptimize(F(fam, 0.3));
}

void BM_split(benchmark::State& st) {
  static const auto G = sample_uniform_hypergraph(2, 3000, 0.5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(split_edges_three(G, 3, 0.5));
}

}  // namespace

BENCHMARK(BM_rank_bits<kernels::serial::bernoulli_rank_bits>)->Name("rank_bits/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_bits<kernels::omp::bernoulli_rank_bits>)->Name("rank_bits/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ranks<kernels::serial::bernoulli_ranks>)->Name("ranks/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ranks<kernels::omp::bernoulli_ranks>)->Name("ranks/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_windows<kernels::serial::cyclic_windows_ok>)->Name("windows/serial")->Arg(1)->Arg(3);
BENCHMARK(BM_windows<kernels::omp::cyclic_windows_ok>)->Name("windows/omp")->Arg(1)->Arg(3);
BENCHMARK(BM_overlap<kernels::serial::overlap_delta>)->Name("overlap_delta/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_overlap<kernels::omp::overlap_delta>)->Name("overlap_delta/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_split)->Name("split_edges_three")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
