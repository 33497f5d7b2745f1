#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hcp {

using Vertex = std::uint32_t;

/// Which Hamilton structure is being built: the k-th power of a cycle in a
/// graph, or a tight cycle in a (k+1)-uniform hypergraph.
enum class Mode { power, tight };

inline std::string_view to_string(Mode mode) {
  return mode == Mode::power ? "power" : "tight";
}

inline Mode parse_mode(std::string_view text) {
  if (text == "power") return Mode::power;
  if (text == "tight") return Mode::tight;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected power|tight)");
}

/// Uniformity of the host for a given mode and path parameter k.
inline int host_uniformity(Mode mode, int k) { return mode == Mode::power ? 2 : k + 1; }

/// Ordered tuple of pairwise distinct vertices.
class VertexTuple {
 public:
  VertexTuple() = default;
  VertexTuple(std::initializer_list<Vertex> vs) : VertexTuple(std::vector<Vertex>(vs)) {}
  explicit VertexTuple(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    std::vector<Vertex> sorted = vs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("vertex tuple contains a repeated vertex");
  }

  std::size_t size() const { return vs_.size(); }
  bool empty() const { return vs_.empty(); }
  Vertex operator[](std::size_t i) const { return vs_[i]; }
  auto begin() const { return vs_.begin(); }
  auto end() const { return vs_.end(); }
  std::span<const Vertex> span() const { return vs_; }
  const std::vector<Vertex>& vertices() const { return vs_; }

  bool contains(Vertex v) const { return std::find(vs_.begin(), vs_.end(), v) != vs_.end(); }

  VertexTuple reversed() const {
    VertexTuple out;
    out.vs_.assign(vs_.rbegin(), vs_.rend());
    return out;
  }

  /// Concatenation; throws if the result repeats a vertex.
  friend VertexTuple operator+(const VertexTuple& a, const VertexTuple& b) {
    std::vector<Vertex> vs = a.vs_;
    vs.insert(vs.end(), b.vs_.begin(), b.vs_.end());
    return VertexTuple(std::move(vs));
  }

  friend bool operator==(const VertexTuple&, const VertexTuple&) = default;

 private:
  std::vector<Vertex> vs_;
};

/// Fixed-size set of host vertices backed by 64-bit words.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(Vertex universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexMask from(Vertex universe, std::span<const Vertex> members) {
    VertexMask m(universe);
    for (Vertex v : members) m.insert(v);
    return m;
  }

  Vertex universe() const { return n_; }
  bool contains(Vertex v) const { return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1u); }
  void insert(Vertex v) {
    if (v >= n_) throw std::out_of_range("vertex outside mask universe");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    if (v < n_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (auto bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    return out;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hcp
