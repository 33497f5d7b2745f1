#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hcp/certificate.hpp"
#include "hcp/density.hpp"
#include "hcp/hypergraph.hpp"
#include "hcp/types.hpp"

namespace hcp {

struct SearchLimits {
  std::uint64_t node_budget = 0;  // candidate placements per search; 0 = unlimited
};

struct CopySearch {
  std::optional<Embedding> embedding;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Precomputed backtracking plan for one rooted template. Free template
/// vertices are placed in a fixed order: the one closing the most template
/// edges with already placed vertices first, ties to the lowest index.
/// Host candidates are tried in ascending order, so the answer is the
/// lexicographically first assignment along that order.
///
/// Template edges inside the root are checked against the host up front.
class CopyPlan {
 public:
  explicit CopyPlan(RootedTemplate rt);

  const RootedTemplate& rooted() const { return rt_; }
  const std::vector<Vertex>& search_order() const { return order_; }

  /// Copy of the template with root x mapped onto y and every other vertex
  /// mapped into `allowed`.
  CopySearch find(const Hypergraph& G, const VertexTuple& y, const VertexMask& allowed, SearchLimits limits = {}) const;

 private:
  struct Step {
    Vertex tv;                               // template vertex placed at this step
    std::vector<Vertex> back;                // k = 2: placed neighbours
    std::vector<std::vector<Vertex>> close;  // edges completed by this step
  };
  RootedTemplate rt_;
  std::vector<Vertex> order_;
  std::vector<Step> steps_;
  std::vector<std::vector<Vertex>> root_edges_;
};

/// One-shot form of CopyPlan::find. Throws if |y| != |x|, y meets `allowed`,
/// or uniformities differ.
CopySearch find_rooted_copy(const Hypergraph& G, const RootedTemplate& rt, const VertexTuple& y,
                            const VertexMask& allowed, SearchLimits limits = {});

/// Splits W (taken in ascending order) into `rounds` consecutive disjoint
/// pieces of size max(floor(|W| / 2^(i+1)), floor(|W| / (2 rounds))).
std::vector<std::vector<Vertex>> partition_reservoir(std::vector<Vertex> W, int rounds);

/// Piece sizes partition_reservoir would produce for |W| = size.
std::vector<std::size_t> reservoir_sizes(std::size_t size, int rounds);

struct ConnectionRequest {
  RootedTemplate rt;
  std::vector<VertexTuple> family;  // y_1..y_t
  std::vector<Vertex> reservoir;    // W
};

struct ConnectOptions {
  int rounds = 0;                 // 0: ceil(log2 n), at least 1
  bool enforce_hypothesis = true; // t (v(F) - r) <= |W| / 4; otherwise only <= |W|
  SearchLimits limits;
};

struct RootedMatching {
  std::vector<Embedding> copies;  // copies[i] is the copy for y_i
};

struct ConnectReport {
  std::vector<std::vector<Vertex>> reservoirs;  // W_1..W_rounds
  std::vector<std::size_t> residuals;           // |R_j| after round j
  std::vector<std::size_t> unmatched;           // indices left after the last round
  bool budget_hit = false;                      // some search gave up on its budget
};

struct ConnectResult {
  std::optional<RootedMatching> matching;
  ConnectReport report;
  bool ok() const { return matching.has_value(); }
};

/// Checks every matching property: each copy embeds F, roots land on y_i,
/// internal images lie in W, copies are pairwise vertex-disjoint.
bool is_rooted_matching(const Hypergraph& G, const ConnectionRequest& req, const RootedMatching& m);

/// Round-based greedy matching: in round j every still unmatched request,
/// in ascending index order, looks for a copy inside the unused part of W_j.
ConnectResult connect_family(const Hypergraph& G, const ConnectionRequest& req, const ConnectOptions& opts = {});

struct PathsResult {
  std::optional<std::vector<std::vector<Vertex>>> paths;  // a_i, internal vertices, b_i
  ConnectReport report;
  bool ok() const { return paths.has_value(); }
};

/// Vertex-disjoint connecting paths (CP^k_l in power mode, tight paths H^k_l
/// in tight mode) from a_i to b_i with internal vertices in W. With
/// enforcement on, t <= |W| / (4l) is required.
PathsResult connect_paths(const Hypergraph& G, const std::vector<std::pair<VertexTuple, VertexTuple>>& pairs,
                          const std::vector<Vertex>& W, int k, int l, Mode mode, const ConnectOptions& opts = {});

/// The template used by connect_paths.
Hypergraph connector_template(int k, int l, Mode mode);

/// ceil(log2 n), at least 1.
int default_rounds(Vertex n);

}  // namespace hcp
