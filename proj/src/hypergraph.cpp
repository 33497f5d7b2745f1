#include "hcp/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hcp {
namespace {

std::vector<Vertex> checked_sorted(int k, Vertex n, std::span<const Vertex> vs) {
  if (vs.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("edge has " + std::to_string(vs.size()) + " vertices, expected " +
                                std::to_string(k));
  std::vector<Vertex> s(vs.begin(), vs.end());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) throw std::invalid_argument("edge vertex " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("edge repeats a vertex");
  }
  return s;
}

int checked_k(int k) {
  if (k < 2) throw std::invalid_argument("uniformity must be >= 2");
  return k;
}

}  // namespace

Hypergraph::Hypergraph(int uniformity, Vertex n) : k_(uniformity), n_(n), ranker_(checked_k(uniformity), n) {
  dense_ = ranker_.count() <= kDenseLimit;
  if (dense_) bits_.assign((ranker_.count() + 63) / 64, 0);
  finish();
}

Hypergraph Hypergraph::from_edges(int uniformity, Vertex n, const std::vector<std::vector<Vertex>>& edges) {
  HypergraphBuilder b(uniformity, n);
  for (const auto& e : edges)
    if (!b.insert(e)) throw std::invalid_argument("duplicate edge");
  return b.build();
}

Hypergraph Hypergraph::from_ranks(int uniformity, Vertex n, std::vector<std::uint64_t> ranks) {
  Hypergraph g(uniformity, n);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] >= g.ranker_.count()) throw std::invalid_argument("edge rank out of range");
    if (i > 0 && ranks[i] <= ranks[i - 1]) throw std::invalid_argument("edge ranks not strictly increasing");
  }
  if (g.dense_) {
    for (auto r : ranks) g.bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
  } else {
    g.sorted_ = std::move(ranks);
  }
  g.finish();
  return g;
}

Hypergraph Hypergraph::from_rank_bits(int uniformity, Vertex n, std::vector<std::uint64_t> bits) {
  Hypergraph g(uniformity, n);
  if (!g.dense_) throw std::invalid_argument("rank bitset requested for a sparse-size hypergraph");
  if (bits.size() != g.bits_.size()) throw std::invalid_argument("rank bitset has wrong length");
  if (auto tail = g.ranker_.count() & 63; tail && !bits.empty())
    bits.back() &= (std::uint64_t{1} << tail) - 1;
  g.bits_ = std::move(bits);
  g.finish();
  return g;
}

Hypergraph Hypergraph::complete(int uniformity, Vertex n) {
  Hypergraph g(uniformity, n);
  const std::uint64_t total = g.ranker_.count();
  if (g.dense_) {
    std::fill(g.bits_.begin(), g.bits_.end(), ~std::uint64_t{0});
    if (auto tail = total & 63; tail) g.bits_.back() = (std::uint64_t{1} << tail) - 1;
  } else if (uniformity == 2) {
    g.sorted_.resize(total);
    for (std::uint64_t r = 0; r < total; ++r) g.sorted_[r] = r;
  } else {
    g.implicit_ = true;
  }
  g.finish();
  return g;
}

void Hypergraph::finish() {
  if (implicit_) {
    m_ = ranker_.count();
  } else if (dense_) {
    m_ = 0;
    for (auto w : bits_) m_ += static_cast<std::uint64_t>(std::popcount(w));
  } else {
    m_ = sorted_.size();
  }
  if (k_ != 2) return;
  row_words_ = (n_ + 63) / 64;
  adj_.assign(static_cast<std::size_t>(n_) * row_words_, 0);
  std::vector<std::size_t> deg(n_, 0);
  for_each_edge([&](std::span<const Vertex> e) {
    adj_[static_cast<std::size_t>(e[0]) * row_words_ + (e[1] >> 6)] |= std::uint64_t{1} << (e[1] & 63);
    adj_[static_cast<std::size_t>(e[1]) * row_words_ + (e[0] >> 6)] |= std::uint64_t{1} << (e[0] & 63);
    ++deg[e[0]];
    ++deg[e[1]];
  });
  nbr_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex v = 0; v < n_; ++v) nbr_off_[v + 1] = nbr_off_[v] + deg[v];
  nbr_.resize(nbr_off_[n_]);
  for (Vertex v = 0; v < n_; ++v) {
    std::size_t pos = nbr_off_[v];
    auto row = adjacency_row(v);
    for (std::size_t w = 0; w < row.size(); ++w)
      for (auto bits = row[w]; bits; bits &= bits - 1)
        nbr_[pos++] = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
  }
}

bool Hypergraph::has_rank(std::uint64_t r) const {
  if (r >= ranker_.count()) return false;
  if (implicit_) return true;
  if (dense_) return (bits_[r >> 6] >> (r & 63)) & 1u;
  return std::binary_search(sorted_.begin(), sorted_.end(), r);
}

bool Hypergraph::has_sorted_edge(std::span<const Vertex> s) const {
  if (k_ == 2) return adjacent(s[0], s[1]);
  return has_rank(ranker_.rank(s));
}

bool Hypergraph::has_edge(std::span<const Vertex> vs) const {
  if (vs.size() != static_cast<std::size_t>(k_)) return false;
  if (k_ == 2) return vs[0] != vs[1] && vs[0] < n_ && vs[1] < n_ && adjacent(vs[0], vs[1]);
  Vertex buf[16];
  std::vector<Vertex> heap;
  Vertex* s = buf;
  if (vs.size() > 16) {
    heap.resize(vs.size());
    s = heap.data();
  }
  std::copy(vs.begin(), vs.end(), s);
  std::sort(s, s + vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (s[i] >= n_ || (i > 0 && s[i] == s[i - 1])) return false;
  return has_rank(ranker_.rank({s, vs.size()}));
}

std::size_t Hypergraph::degree(Vertex u) const {
  if (k_ == 2) return nbr_off_[u + 1] - nbr_off_[u];
  std::size_t d = 0;
  for_each_edge([&](std::span<const Vertex> e) { d += std::find(e.begin(), e.end(), u) != e.end(); });
  return d;
}

void Hypergraph::for_each_edge(const std::function<void(std::span<const Vertex>)>& f) const {
  std::vector<Vertex> e(static_cast<std::size_t>(k_));
  if (implicit_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Vertex>(i);
    do f(e);
    while (next_combination(e, n_));
    return;
  }
  // ranks come in increasing order: step through short gaps, unrank long ones
  std::uint64_t cur = 0;
  bool have = false;
  auto visit = [&](std::uint64_t r) {
    if (have && r - cur <= 16) {
      for (; cur < r; ++cur) next_combination(e, n_);
    } else {
      ranker_.unrank(r, e);
      cur = r;
      have = true;
    }
    f(e);
  };
  if (dense_) {
    for (std::size_t w = 0; w < bits_.size(); ++w)
      for (auto bits = bits_[w]; bits; bits &= bits - 1) visit(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
  } else {
    for (auto r : sorted_) visit(r);
  }
}

std::vector<std::vector<Vertex>> Hypergraph::edges() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(m_);
  for_each_edge([&](std::span<const Vertex> e) { out.emplace_back(e.begin(), e.end()); });
  return out;
}

std::vector<std::uint64_t> Hypergraph::ranks() const {
  if (implicit_) {
    std::vector<std::uint64_t> all(m_);
    for (std::uint64_t r = 0; r < m_; ++r) all[r] = r;
    return all;
  }
  if (!dense_) return sorted_;
  std::vector<std::uint64_t> out;
  out.reserve(m_);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    for (auto bits = bits_[w]; bits; bits &= bits - 1)
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
  return out;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.k_ != b.k_ || a.n_ != b.n_ || a.m_ != b.m_) return false;
  if (a.implicit_ || b.implicit_) return true;  // equal counts: both complete
  if (a.dense_) return a.bits_ == b.bits_;
  return a.sorted_ == b.sorted_;
}

HypergraphBuilder::HypergraphBuilder(int uniformity, Vertex n)
    : k_(checked_k(uniformity)), n_(n), ranker_(uniformity, n) {}

bool HypergraphBuilder::insert(std::vector<Vertex> vs) {
  auto s = checked_sorted(k_, n_, vs);
  auto r = ranker_.rank(s);
  if (!seen_.insert(r).second) return false;
  ranks_.push_back(r);
  return true;
}

HypergraphBuilder& HypergraphBuilder::add_edge(std::vector<Vertex> vs) {
  insert(std::move(vs));
  return *this;
}

Hypergraph HypergraphBuilder::build() const {
  auto r = ranks_;
  std::sort(r.begin(), r.end());
  return Hypergraph::from_ranks(k_, n_, std::move(r));
}

Hypergraph hypergraph_union(std::span<const Hypergraph* const> parts) {
  if (parts.empty()) throw std::invalid_argument("union of zero hypergraphs");
  const int k = parts[0]->uniformity();
  const Vertex n = parts[0]->vertex_count();
  for (auto* p : parts)
    if (p->uniformity() != k || p->vertex_count() != n)
      throw std::invalid_argument("union of hypergraphs with different shapes");
  std::vector<std::uint64_t> merged;
  for (auto* p : parts) {
    auto r = p->ranks();
    std::vector<std::uint64_t> out;
    out.reserve(merged.size() + r.size());
    std::set_union(merged.begin(), merged.end(), r.begin(), r.end(), std::back_inserter(out));
    merged.swap(out);
  }
  return Hypergraph::from_ranks(k, n, std::move(merged));
}

Hypergraph with_extra_edges(const Hypergraph& g, const std::vector<std::vector<Vertex>>& extra) {
  auto ranks = g.ranks();
  for (const auto& e : extra) ranks.push_back(g.ranker().rank(checked_sorted(g.uniformity(), g.vertex_count(), e)));
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return Hypergraph::from_ranks(g.uniformity(), g.vertex_count(), std::move(ranks));
}

Hypergraph without_edges(const Hypergraph& g, const std::vector<std::vector<Vertex>>& drop) {
  std::vector<std::uint64_t> gone;
  for (const auto& e : drop) gone.push_back(g.ranker().rank(checked_sorted(g.uniformity(), g.vertex_count(), e)));
  std::sort(gone.begin(), gone.end());
  auto ranks = g.ranks();
  std::vector<std::uint64_t> keep;
  std::set_difference(ranks.begin(), ranks.end(), gone.begin(), gone.end(), std::back_inserter(keep));
  return Hypergraph::from_ranks(g.uniformity(), g.vertex_count(), std::move(keep));
}

}  // namespace hcp
