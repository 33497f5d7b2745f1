#include "hcp/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace hcp {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;  // exact: acc is C(n-r+i, i)
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

double log_binomial(double n, double r) {
  if (r < 0 || r > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1);
}

LexRanker::LexRanker(int k, Vertex n) : k_(k), n_(n) {
  if (k < 1) throw std::invalid_argument("uniformity must be >= 1");
  count_ = binomial(n, static_cast<std::uint64_t>(k));
  if (count_ == kSaturated) throw std::invalid_argument("C(n,k) does not fit in 64 bits");
  table_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(k + 1), 0);
  for (std::size_t a = 0; a <= n; ++a) {
    table_[a * (k + 1)] = 1;
    for (int b = 1; b <= k && static_cast<std::size_t>(b) <= a; ++b)
      table_[a * (k + 1) + b] = table_[(a - 1) * (k + 1) + b - 1] +
                                (static_cast<std::size_t>(b) <= a - 1 ? table_[(a - 1) * (k + 1) + b] : 0);
  }
}

// subsets whose i-th element is < a_i (given the prefix) number
// C(n-prev-1, k-i+1) - C(n-a_i, k-i+1), summed over positions.
std::uint64_t LexRanker::rank(std::span<const Vertex> s) const {
  std::uint64_t r = 0;
  std::int64_t prev = -1;
  for (int i = 0; i < k_; ++i) {
    int rem = k_ - i;
    r += c(static_cast<std::int64_t>(n_) - prev - 1, rem) - c(static_cast<std::int64_t>(n_) - s[i], rem);
    prev = s[i];
  }
  return r;
}

void LexRanker::unrank(std::uint64_t r, std::span<Vertex> out) const {
  std::int64_t prev = -1;
  for (int i = 0; i < k_; ++i) {
    int rem = k_ - i;
    std::uint64_t top = c(static_cast<std::int64_t>(n_) - prev - 1, rem);
    // largest v with top - C(n-v, rem) <= r
    std::int64_t lo = prev + 1, hi = static_cast<std::int64_t>(n_) - rem;
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (top - c(static_cast<std::int64_t>(n_) - mid, rem) <= r)
        lo = mid;
      else
        hi = mid - 1;
    }
    r -= top - c(static_cast<std::int64_t>(n_) - lo, rem);
    out[i] = static_cast<Vertex>(lo);
    prev = lo;
  }
}

bool next_combination(std::span<Vertex> comb, Vertex n) {
  const std::size_t k = comb.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace hcp
