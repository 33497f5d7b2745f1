#pragma once

#include <span>
#include <vector>

#include "hcp/hypergraph.hpp"
#include "hcp/types.hpp"

namespace hcp {

/// Template vertex i maps to host vertex f[i].
using Embedding = std::vector<Vertex>;

/// True iff f is injective into G and sends every edge of F to an edge of G.
/// Throws on mismatched uniformity.
bool is_embedding(const Hypergraph& F, const Hypergraph& G, const Embedding& f);

/// Cyclic ordering claimed to be a Hamilton k-th power (power mode, graph
/// host) or a tight Hamilton cycle (tight mode, (k+1)-uniform host).
struct CycleCertificate {
  Mode mode = Mode::power;
  int k = 1;
  std::vector<Vertex> order;

  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

/// Throws if the ordering is not a permutation of G's vertices or the mode
/// does not match G's uniformity.
bool verify_certificate(const Hypergraph& G, const CycleCertificate& cert);

/// Open-path check: power mode needs every pair at distance <= k adjacent,
/// tight mode every k+1 consecutive vertices to be an edge. Returns false on
/// repeated or out-of-range vertices.
bool verify_path(const Hypergraph& G, std::span<const Vertex> order, int k, Mode mode);

}  // namespace hcp
