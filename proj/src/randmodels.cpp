#include "hcp/randmodels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hcp/kernels.hpp"

namespace hcp {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

std::vector<std::uint64_t> geometric_ranks(std::uint64_t count, double p, Seed seed) {
  std::vector<std::uint64_t> out;
  if (p <= 0.0 || count == 0) return out;
  if (p >= 1.0) {
    out.resize(count);
    for (std::uint64_t r = 0; r < count; ++r) out[r] = r;
    return out;
  }
  SplitMix64 rng(seed);
  const double log_q = std::log1p(-p);
  std::uint64_t r = 0;
  while (true) {
    double u = 1.0 - rng.uniform();  // (0, 1]
    double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(count - r)) break;
    r += static_cast<std::uint64_t>(gap);
    out.push_back(r);
    if (++r >= count) break;
  }
  return out;
}

}  // namespace

void BipartiteGraph::add_edge(std::uint32_t l, std::uint32_t r) {
  if (l >= left_ || r >= right_) throw std::out_of_range("bipartite edge out of range");
  adj_[l].push_back(r);
  ++m_;
}

void BipartiteGraph::finalize() {
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw std::invalid_argument("duplicate bipartite edge");
  }
}

bool BipartiteGraph::has_edge(std::uint32_t l, std::uint32_t r) const {
  return l < left_ && std::binary_search(adj_[l].begin(), adj_[l].end(), r);
}

Hypergraph sample_uniform_hypergraph(int k, Vertex n, double p, Seed seed, Sampler sampler) {
  check_probability(p);
  if (n < static_cast<Vertex>(k)) throw std::invalid_argument("need n >= k");
  LexRanker rk(k, n);
  if (p == 1.0) return Hypergraph::complete(k, n);  // every draw succeeds
  if (sampler == Sampler::geometric) return Hypergraph::from_ranks(k, n, geometric_ranks(rk.count(), p, seed));
  if (rk.count() <= Hypergraph::kDenseLimit)
    return Hypergraph::from_rank_bits(k, n, kernels::omp::bernoulli_rank_bits(rk.count(), p, seed));
  return Hypergraph::from_ranks(k, n, kernels::omp::bernoulli_ranks(rk.count(), p, seed));
}

BipartiteGraph sample_bipartite(std::uint32_t s, double p, Seed seed) {
  check_probability(p);
  BipartiteGraph b(s, s);
  for (std::uint32_t l = 0; l < s; ++l)
    for (std::uint32_t r = 0; r < s; ++r)
      if (counter_uniform(seed, static_cast<std::uint64_t>(l) * s + r) < p) b.add_edge(l, r);
  b.finalize();
  return b;
}

double three_round_rate(double p) {
  check_probability(p);
  return 1.0 - std::cbrt(1.0 - p);
}

std::array<Hypergraph, 3> split_edges_three(const Hypergraph& G, Seed seed, std::optional<double> p) {
  double rate = p ? *p : (G.ranker().count() ? static_cast<double>(G.edge_count()) / G.ranker().count() : 0.0);
  const double q = three_round_rate(rate);
  if (q >= 1.0) return {G, G, G};  // every draw succeeds
  auto draw = [&](std::uint64_t r, bool (&in)[3]) {
    // one private stream per edge keeps the split independent of the others
    SplitMix64 rng(mix64(seed ^ mix64(r + kGolden)));
    in[0] = in[1] = in[2] = false;
    if (q > 0.0) {
      do {
        for (bool& b : in) b = rng.uniform() < q;
      } while (!(in[0] || in[1] || in[2]));
    } else {
      in[rng.below(3)] = true;  // q = 0 only when p = 0; any edge then goes somewhere
    }
  };
  if (G.dense()) {
    const auto src = G.rank_bits();
    std::array<std::vector<std::uint64_t>, 3> words;
    for (auto& w : words) w.assign(src.size(), 0);
    const auto count = static_cast<std::int64_t>(src.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < count; ++w) {
      const auto i = static_cast<std::size_t>(w);
      for (auto bits = src[i]; bits; bits &= bits - 1) {
        const int b = std::countr_zero(bits);
        bool in[3];
        draw(i * 64 + static_cast<std::uint64_t>(b), in);
        for (int j = 0; j < 3; ++j)
          if (in[j]) words[j][i] |= std::uint64_t{1} << b;
      }
    }
    return {Hypergraph::from_rank_bits(G.uniformity(), G.vertex_count(), std::move(words[0])),
            Hypergraph::from_rank_bits(G.uniformity(), G.vertex_count(), std::move(words[1])),
            Hypergraph::from_rank_bits(G.uniformity(), G.vertex_count(), std::move(words[2]))};
  }
  std::array<std::vector<std::uint64_t>, 3> parts;
  for (auto r : G.ranks()) {
    bool in[3];
    draw(r, in);
    for (int i = 0; i < 3; ++i)
      if (in[i]) parts[i].push_back(r);
  }
  return {Hypergraph::from_ranks(G.uniformity(), G.vertex_count(), std::move(parts[0])),
          Hypergraph::from_ranks(G.uniformity(), G.vertex_count(), std::move(parts[1])),
          Hypergraph::from_ranks(G.uniformity(), G.vertex_count(), std::move(parts[2]))};
}

}  // namespace hcp
