#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcp/hypergraph.hpp"
#include "hcp/rng.hpp"

namespace hcp {

/// Bipartite graph between left vertices 0..left-1 and right vertices 0..right-1.
class BipartiteGraph {
 public:
  BipartiteGraph(std::uint32_t left, std::uint32_t right) : left_(left), right_(right), adj_(left) {}

  std::uint32_t left_size() const { return left_; }
  std::uint32_t right_size() const { return right_; }
  std::uint64_t edge_count() const { return m_; }
  /// Edges must be added in any order but not repeated.
  void add_edge(std::uint32_t l, std::uint32_t r);
  /// Sorts adjacency lists; call once after the last add_edge.
  void finalize();
  std::span<const std::uint32_t> neighbors(std::uint32_t l) const { return adj_[l]; }
  bool has_edge(std::uint32_t l, std::uint32_t r) const;

 private:
  std::uint32_t left_, right_;
  std::uint64_t m_ = 0;
  std::vector<std::vector<std::uint32_t>> adj_;
};

enum class Sampler {
  canonical,  // one counter-based uniform per candidate edge, lex order
  geometric,  // skips via geometric gaps; same law, different bits
};

/// G^(k)(n, p). The canonical sampler is bit-identical for any thread count.
Hypergraph sample_uniform_hypergraph(int k, Vertex n, double p, Seed seed, Sampler sampler = Sampler::canonical);

/// G(s, s, p): pair (l, r) is drawn with counter l*s + r.
BipartiteGraph sample_bipartite(std::uint32_t s, double p, Seed seed);

/// q with 1 - (1 - q)^3 = p.
double three_round_rate(double p);

/// Puts each edge into a random nonempty subset of three parts: three
/// Bernoulli(q) draws, redrawn until one succeeds, with q = three_round_rate(p).
/// p defaults to the edge density of G. The union of the parts is G.
std::array<Hypergraph, 3> split_edges_three(const Hypergraph& G, Seed seed, std::optional<double> p = std::nullopt);

}  // namespace hcp
