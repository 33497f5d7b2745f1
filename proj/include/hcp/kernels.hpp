#pragma once

// Data-parallel kernels. Each kernel has a plain serial reference and an
// OpenMP version that must return bit-identical results for any thread count.

#include <cstdint>
#include <span>
#include <vector>

#include "hcp/hypergraph.hpp"
#include "hcp/rng.hpp"
#include "hcp/types.hpp"

namespace hcp::kernels {

/// Lexicographic copies of a template: copy c uses host edge ranks
/// edge_ranks[c*edges_per_copy .. (c+1)*edges_per_copy), each list sorted.
struct CopyFamily {
  std::size_t copies = 0;
  std::size_t edges_per_copy = 0;
  std::vector<std::uint64_t> edge_ranks;
};

/// Neumaier-compensated sum in index order.
double compensated_sum(std::span<const double> xs);

namespace serial {

/// Window check of a cyclic order (assumed to be a permutation).
bool cyclic_windows_ok(const Hypergraph& G, std::span<const Vertex> order, int k, Mode mode);

/// Bit r is set iff counter_uniform(seed, r) < p, for r < count.
std::vector<std::uint64_t> bernoulli_rank_bits(std::uint64_t count, double p, Seed seed);

/// The set bits of bernoulli_rank_bits as an ascending rank list.
std::vector<std::uint64_t> bernoulli_ranks(std::uint64_t count, double p, Seed seed);

/// Sum over ordered pairs i != j of copies sharing at least one edge of
/// p^(2e - shared(i,j)).
double overlap_delta(const CopyFamily& fam, double p);

}  // namespace serial

namespace omp {

bool cyclic_windows_ok(const Hypergraph& G, std::span<const Vertex> order, int k, Mode mode);
std::vector<std::uint64_t> bernoulli_rank_bits(std::uint64_t count, double p, Seed seed);
std::vector<std::uint64_t> bernoulli_ranks(std::uint64_t count, double p, Seed seed);
double overlap_delta(const CopyFamily& fam, double p);

}  // namespace omp

}  // namespace hcp::kernels
