#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hcp/types.hpp"

namespace hcp {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, r), saturating at kSaturated on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// log C(n, r) via lgamma; -inf when r > n.
double log_binomial(double n, double r);

/// Ranks k-subsets of {0..n-1} in lexicographic order.
/// rank(sorted) is the number of k-subsets lexicographically smaller.
class LexRanker {
 public:
  LexRanker() = default;
  LexRanker(int k, Vertex n);

  int k() const { return k_; }
  Vertex n() const { return n_; }
  /// C(n, k); kSaturated if it does not fit.
  std::uint64_t count() const { return count_; }

  std::uint64_t rank(std::span<const Vertex> sorted) const;
  void unrank(std::uint64_t r, std::span<Vertex> out) const;

  /// C(a, b) for a <= n, b <= k (table lookup).
  std::uint64_t c(std::int64_t a, int b) const {
    if (a < b || b < 0 || a < 0) return 0;
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(k_ + 1) + b];
  }

 private:
  int k_ = 0;
  Vertex n_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> table_;
};

/// Advance a sorted k-subset of {0..n-1} to its lexicographic successor.
/// Returns false after the last subset.
bool next_combination(std::span<Vertex> comb, Vertex n);

}  // namespace hcp
