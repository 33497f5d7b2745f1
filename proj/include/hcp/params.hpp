#pragma once

#include <cstdint>

#include "hcp/rng.hpp"
#include "hcp/types.hpp"

namespace hcp {

inline constexpr Seed kDefaultSeed = 20240601;

/// Configuration shared by the absorber and pipeline. Zero means "derive".
struct Parameters {
  int k = 2;
  Mode mode = Mode::power;
  int ell = 5;               // backbone length (odd, >= 5); 0: smallest odd >= max(5, ceil(log2 n))
  int connector_length = 0;  // 0: 3k in power mode, 2k+1 in tight mode
  int rounds = 0;            // reservoir rounds; 0: ceil(log2 n)
  int absorb_size = 0;       // |X|; 0: planner (pipeline) or floor(n / (16 log2^2 n)) (absorber)
  int t_cover = 0;           // parts in the cover; 0: planner
  double C = 1.0;            // threshold constants, only used for reporting
  double C_prime = 1.0;
  bool enforce_hypotheses = false;  // size hypotheses of the connecting steps
  std::uint64_t node_budget = 2'000'000;  // per copy search
  int retries = 0;
  Seed seed = kDefaultSeed;
};

/// Smallest odd integer >= max(5, ceil(log2 n)).
int log_backbone_length(std::uint64_t n);

/// floor(n / (16 log2^2 n)).
int formula_absorber_size(std::uint64_t n);

/// Connector length actually used for `cfg` (resolves 0).
int resolved_connector_length(const Parameters& cfg);

/// Backbone length actually used for `cfg` on n vertices (resolves 0).
int resolved_backbone_length(const Parameters& cfg, std::uint64_t n);

}  // namespace hcp
