#include "hcp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace hcp::kernels {

double compensated_sum(std::span<const double> xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

namespace {

bool window_ok(const Hypergraph& G, std::span<const Vertex> order, std::size_t i, int k, Mode mode) {
  const std::size_t n = order.size();
  if (mode == Mode::power) {
    const std::size_t reach = std::min<std::size_t>(static_cast<std::size_t>(k), n - 1);
    for (std::size_t d = 1; d <= reach; ++d)
      if (!G.adjacent(order[i], order[(i + d) % n])) return false;
    return true;
  }
  Vertex buf[64];
  std::vector<Vertex> heap;
  Vertex* w = buf;
  const auto width = static_cast<std::size_t>(k) + 1;
  if (width > 64) {
    heap.resize(width);
    w = heap.data();
  }
  for (std::size_t j = 0; j < width; ++j) w[j] = order[(i + j) % n];
  return G.has_edge({w, width});
}

std::uint64_t word_bits(std::uint64_t w, std::uint64_t count, double p, Seed seed) {
  std::uint64_t bits = 0;
  const std::uint64_t base = w * 64;
  const std::uint64_t top = std::min<std::uint64_t>(64, count - base);
  for (std::uint64_t b = 0; b < top; ++b)
    if (counter_uniform(seed, base + b) < p) bits |= std::uint64_t{1} << b;
  return bits;
}

void append_block(std::vector<std::uint64_t>& out, std::uint64_t lo, std::uint64_t hi, double p, Seed seed) {
  for (std::uint64_t r = lo; r < hi; ++r)
    if (counter_uniform(seed, r) < p) out.push_back(r);
}

constexpr std::uint64_t kBlock = std::uint64_t{1} << 16;

// host edge -> copies using it, in CSR form over compacted edge ids
struct EdgeIndex {
  std::vector<std::uint32_t> edge_id;  // per (copy, slot)
  std::vector<std::size_t> off;
  std::vector<std::uint32_t> copies;
};

EdgeIndex build_index(const CopyFamily& fam) {
  EdgeIndex ix;
  std::vector<std::uint64_t> uniq = fam.edge_ranks;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  ix.edge_id.resize(fam.edge_ranks.size());
  for (std::size_t i = 0; i < fam.edge_ranks.size(); ++i)
    ix.edge_id[i] = static_cast<std::uint32_t>(std::lower_bound(uniq.begin(), uniq.end(), fam.edge_ranks[i]) - uniq.begin());
  ix.off.assign(uniq.size() + 1, 0);
  for (auto id : ix.edge_id) ++ix.off[id + 1];
  for (std::size_t i = 0; i < uniq.size(); ++i) ix.off[i + 1] += ix.off[i];
  ix.copies.resize(ix.edge_id.size());
  std::vector<std::size_t> fill(ix.off.begin(), ix.off.end() - 1);
  for (std::size_t c = 0; c < fam.copies; ++c)
    for (std::size_t s = 0; s < fam.edges_per_copy; ++s)
      ix.copies[fill[ix.edge_id[c * fam.edges_per_copy + s]]++] = static_cast<std::uint32_t>(c);
  return ix;
}

// contribution of copy i; shared[] must be all-zero on entry and is left so
double copy_term(const CopyFamily& fam, const EdgeIndex& ix, std::size_t i, std::span<const double> powers,
                 std::vector<std::uint32_t>& shared, std::vector<std::uint32_t>& touched) {
  touched.clear();
  for (std::size_t s = 0; s < fam.edges_per_copy; ++s) {
    auto id = ix.edge_id[i * fam.edges_per_copy + s];
    for (std::size_t q = ix.off[id]; q < ix.off[id + 1]; ++q) {
      auto j = ix.copies[q];
      if (j == i) continue;
      if (shared[j]++ == 0) touched.push_back(j);
    }
  }
  std::sort(touched.begin(), touched.end());
  std::vector<double> terms;
  terms.reserve(touched.size());
  for (auto j : touched) {
    terms.push_back(powers[shared[j]]);
    shared[j] = 0;
  }
  return compensated_sum(terms);
}

std::vector<double> overlap_powers(const CopyFamily& fam, double p) {
  // powers[s] = p^(2e - s)
  std::vector<double> pw(fam.edges_per_copy + 1);
  for (std::size_t s = 0; s <= fam.edges_per_copy; ++s)
    pw[s] = std::pow(p, static_cast<double>(2 * fam.edges_per_copy - s));
  return pw;
}

}  // namespace

namespace serial {

bool cyclic_windows_ok(const Hypergraph& G, std::span<const Vertex> order, int k, Mode mode) {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!window_ok(G, order, i, k, mode)) return false;
  return true;
}

std::vector<std::uint64_t> bernoulli_rank_bits(std::uint64_t count, double p, Seed seed) {
  std::vector<std::uint64_t> bits((count + 63) / 64);
  for (std::uint64_t w = 0; w < bits.size(); ++w) bits[w] = word_bits(w, count, p, seed);
  return bits;
}

std::vector<std::uint64_t> bernoulli_ranks(std::uint64_t count, double p, Seed seed) {
  std::vector<std::uint64_t> out;
  append_block(out, 0, count, p, seed);
  return out;
}

double overlap_delta(const CopyFamily& fam, double p) {
  if (fam.copies == 0) return 0.0;
  auto ix = build_index(fam);
  auto pw = overlap_powers(fam, p);
  std::vector<double> part(fam.copies);
  std::vector<std::uint32_t> shared(fam.copies, 0), touched;
  for (std::size_t i = 0; i < fam.copies; ++i) part[i] = copy_term(fam, ix, i, pw, shared, touched);
  return compensated_sum(part);
}

}  // namespace serial

namespace omp {

bool cyclic_windows_ok(const Hypergraph& G, std::span<const Vertex> order, int k, Mode mode) {
  const auto n = static_cast<std::int64_t>(order.size());
  int bad = 0;
#pragma omp parallel for schedule(static) reduction(| : bad)
  for (std::int64_t i = 0; i < n; ++i)
    if (!window_ok(G, order, static_cast<std::size_t>(i), k, mode)) bad = 1;
  return bad == 0;
}

std::vector<std::uint64_t> bernoulli_rank_bits(std::uint64_t count, double p, Seed seed) {
  std::vector<std::uint64_t> bits((count + 63) / 64);
  const auto words = static_cast<std::int64_t>(bits.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < words; ++w) bits[w] = word_bits(static_cast<std::uint64_t>(w), count, p, seed);
  return bits;
}

std::vector<std::uint64_t> bernoulli_ranks(std::uint64_t count, double p, Seed seed) {
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> parts(blocks);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    auto lo = static_cast<std::uint64_t>(b) * kBlock;
    append_block(parts[b], lo, std::min(count, lo + kBlock), p, seed);
  }
  std::vector<std::uint64_t> out;
  std::size_t total = 0;
  for (auto& v : parts) total += v.size();
  out.reserve(total);
  for (auto& v : parts) out.insert(out.end(), v.begin(), v.end());
  return out;
}

double overlap_delta(const CopyFamily& fam, double p) {
  if (fam.copies == 0) return 0.0;
  auto ix = build_index(fam);
  auto pw = overlap_powers(fam, p);
  std::vector<double> part(fam.copies);
  const auto copies = static_cast<std::int64_t>(fam.copies);
#pragma omp parallel
  {
    std::vector<std::uint32_t> shared(fam.copies, 0), touched;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < copies; ++i)
      part[i] = copy_term(fam, ix, static_cast<std::size_t>(i), pw, shared, touched);
  }
  return compensated_sum(part);
}

}  // namespace omp

}  // namespace hcp::kernels
