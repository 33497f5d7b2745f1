#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcp/certificate.hpp"
#include "hcp/hypergraph.hpp"
#include "hcp/matcher.hpp"

namespace hcp {

struct FactorResult {
  std::vector<Embedding> copies;
  std::size_t leftover = 0;                  // vertices not covered (window: unused part of W)
  std::optional<std::size_t> failed_window;  // index of the step that found nothing
  bool budget_hit = false;
  bool ok() const { return !failed_window.has_value(); }
};

/// Greedy (H, eps)-factor: while at least eps n vertices are unused, look for
/// a copy of H among the ceil(eps n) lowest unused vertices and remove it.
FactorResult almost_factor(const Hypergraph& G, const Hypergraph& H, double epsilon, SearchLimits limits = {});

/// At least floor(|W| / (4 v(F))) disjoint copies of F inside W.
FactorResult factor_in_window(const Hypergraph& G, const Hypergraph& F, const std::vector<Vertex>& W,
                              SearchLimits limits = {});

/// Same with an explicit quota; requires quota * v(F) <= |W|.
FactorResult factor_in_window(const Hypergraph& G, const Hypergraph& F, const std::vector<Vertex>& W,
                              std::size_t quota, SearchLimits limits = {});

/// Pairwise disjoint embeddings of F, all inside `inside` when given.
bool disjoint_copies(const Hypergraph& G, const Hypergraph& F, const std::vector<Embedding>& copies,
                     const std::vector<Vertex>* inside = nullptr);

}  // namespace hcp
