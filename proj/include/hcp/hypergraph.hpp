#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_set>
#include <vector>

#include "hcp/combinatorics.hpp"
#include "hcp/types.hpp"

namespace hcp {

/// k-uniform hypergraph on vertices 0..n-1. Graphs are the k = 2 case.
///
/// Edges are kept as lexicographic ranks: a rank bitset when C(n,k) is
/// small enough, a sorted rank vector otherwise. Graphs additionally keep an
/// adjacency bit matrix and neighbour lists. A complete hypergraph too large
/// for the bitset is kept implicitly. Immutable once built.
class Hypergraph {
 public:
  /// Rank bitsets are used up to this many candidate edges (64 MiB).
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 29;

  Hypergraph() : Hypergraph(2, 0) {}
  Hypergraph(int uniformity, Vertex n);

  /// Validates every edge; edges may be given unsorted but must not repeat.
  static Hypergraph from_edges(int uniformity, Vertex n, const std::vector<std::vector<Vertex>>& edges);
  /// Ranks must be strictly increasing and < C(n,k).
  static Hypergraph from_ranks(int uniformity, Vertex n, std::vector<std::uint64_t> ranks);
  /// Bit r set iff edge of rank r is present; requires C(n,k) <= kDenseLimit.
  static Hypergraph from_rank_bits(int uniformity, Vertex n, std::vector<std::uint64_t> bits);
  static Hypergraph complete(int uniformity, Vertex n);

  int uniformity() const { return k_; }
  Vertex vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }
  bool dense() const { return dense_; }
  /// Rank bitset; empty unless dense().
  std::span<const std::uint64_t> rank_bits() const { return bits_; }
  bool implicit_complete() const { return implicit_; }
  const LexRanker& ranker() const { return ranker_; }

  /// Membership for a sorted k-subset.
  bool has_sorted_edge(std::span<const Vertex> sorted) const;
  /// Membership for an arbitrary-order k-tuple of distinct vertices.
  bool has_edge(std::span<const Vertex> vs) const;
  bool has_rank(std::uint64_t rank) const;
  bool adjacent(Vertex u, Vertex v) const {  // graphs only
    return ((adj_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] >> (v & 63)) & 1u) != 0;
  }

  /// Graphs only: bit row of u's neighbourhood, row_words() words long.
  std::span<const std::uint64_t> adjacency_row(Vertex u) const {
    return {adj_.data() + static_cast<std::size_t>(u) * row_words_, row_words_};
  }
  std::size_t row_words() const { return row_words_; }
  /// Graphs only: ascending neighbours of u.
  std::span<const Vertex> neighbors(Vertex u) const {
    return {nbr_.data() + nbr_off_[u], nbr_off_[u + 1] - nbr_off_[u]};
  }
  std::size_t degree(Vertex u) const;

  /// Calls f(sorted edge) for every edge in lexicographic order.
  void for_each_edge(const std::function<void(std::span<const Vertex>)>& f) const;
  std::vector<std::vector<Vertex>> edges() const;
  /// Ranks of all edges in increasing order.
  std::vector<std::uint64_t> ranks() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  void finish();  // builds graph adjacency, counts edges

  int k_ = 2;
  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  LexRanker ranker_;
  bool dense_ = true;
  bool implicit_ = false;
  std::vector<std::uint64_t> bits_;   // dense storage
  std::vector<std::uint64_t> sorted_; // sparse storage
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> nbr_off_;
  std::vector<Vertex> nbr_;
};

/// Accumulates edges for a fixed (k, n); duplicates collapse (set union).
class HypergraphBuilder {
 public:
  HypergraphBuilder(int uniformity, Vertex n);
  HypergraphBuilder& add_edge(std::vector<Vertex> vs);
  HypergraphBuilder& add_edge(std::initializer_list<Vertex> vs) { return add_edge(std::vector<Vertex>(vs)); }
  /// Returns false if the edge was already present.
  bool insert(std::vector<Vertex> vs);
  Hypergraph build() const;

 private:
  int k_;
  Vertex n_;
  LexRanker ranker_;
  std::vector<std::uint64_t> ranks_;
  std::unordered_set<std::uint64_t> seen_;
};

/// Edge-set union of hypergraphs with equal (k, n).
Hypergraph hypergraph_union(std::span<const Hypergraph* const> parts);

/// Copy of G with the listed edges added.
Hypergraph with_extra_edges(const Hypergraph& g, const std::vector<std::vector<Vertex>>& extra);
/// Copy of G without the listed edges (absent ones ignored).
Hypergraph without_edges(const Hypergraph& g, const std::vector<std::vector<Vertex>>& drop);

}  // namespace hcp
