#include "hcp/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hcp {

namespace {

void check_pair(const Hypergraph& G, const Hypergraph& H) {
  if (G.uniformity() != H.uniformity()) throw std::invalid_argument("template and host uniformity differ");
  if (H.vertex_count() == 0) throw std::invalid_argument("empty template");
}

}  // namespace

FactorResult almost_factor(const Hypergraph& G, const Hypergraph& H, double epsilon, SearchLimits limits) {
  check_pair(G, H);
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const Vertex n = G.vertex_count();
  const double floor_size = epsilon * n;
  const auto window = static_cast<std::size_t>(std::ceil(floor_size));
  if (H.vertex_count() > window)
    throw std::invalid_argument("v(H) = " + std::to_string(H.vertex_count()) + " exceeds the window size " +
                                std::to_string(window));
  CopyPlan plan(RootedTemplate(H, VertexTuple{}));
  FactorResult res;
  std::vector<char> used(n, 0);
  std::size_t remaining = n;
  Vertex cursor = 0;  // every vertex below is used
  for (std::size_t step = 0; static_cast<double>(remaining) >= floor_size; ++step) {
    VertexMask W(n);
    std::size_t taken = 0;
    for (Vertex v = cursor; v < n && taken < window; ++v)
      if (!used[v]) W.insert(v), ++taken;
    auto found = plan.find(G, VertexTuple{}, W, limits);
    res.budget_hit |= found.budget_exhausted;
    if (!found.embedding) {
      res.failed_window = step;
      break;
    }
    for (Vertex u : *found.embedding) used[u] = 1;
    remaining -= H.vertex_count();
    while (cursor < n && used[cursor]) ++cursor;
    res.copies.push_back(std::move(*found.embedding));
  }
  res.leftover = remaining;
  return res;
}

FactorResult factor_in_window(const Hypergraph& G, const Hypergraph& F, const std::vector<Vertex>& W,
                              std::size_t quota, SearchLimits limits) {
  check_pair(G, F);
  if (quota * F.vertex_count() > W.size())
    throw std::invalid_argument("quota of " + std::to_string(quota) + " copies does not fit in |W| = " +
                                std::to_string(W.size()));
  VertexMask free_mask(G.vertex_count());
  for (Vertex w : W) {
    if (w >= G.vertex_count()) throw std::invalid_argument("window vertex outside the host");
    free_mask.insert(w);
  }
  if (free_mask.count() != W.size()) throw std::invalid_argument("window repeats a vertex");
  CopyPlan plan(RootedTemplate(F, VertexTuple{}));
  FactorResult res;
  while (res.copies.size() < quota) {
    auto found = plan.find(G, VertexTuple{}, free_mask, limits);
    res.budget_hit |= found.budget_exhausted;
    if (!found.embedding) {
      res.failed_window = res.copies.size();
      break;
    }
    for (Vertex u : *found.embedding) free_mask.erase(u);
    res.copies.push_back(std::move(*found.embedding));
  }
  res.leftover = free_mask.count();
  return res;
}

FactorResult factor_in_window(const Hypergraph& G, const Hypergraph& F, const std::vector<Vertex>& W,
                              SearchLimits limits) {
  if (W.size() < 4 * static_cast<std::size_t>(F.vertex_count()))
    throw std::invalid_argument("|W| < 4 v(F): quota impossible");
  return factor_in_window(G, F, W, W.size() / (4 * F.vertex_count()), limits);
}

bool disjoint_copies(const Hypergraph& G, const Hypergraph& F, const std::vector<Embedding>& copies,
                     const std::vector<Vertex>* inside) {
  std::vector<char> seen(G.vertex_count(), 0), ok(G.vertex_count(), inside ? 0 : 1);
  if (inside)
    for (Vertex w : *inside)
      if (w < G.vertex_count()) ok[w] = 1;
  for (const auto& f : copies) {
    if (!is_embedding(F, G, f)) return false;
    for (Vertex u : f) {
      if (seen[u] || !ok[u]) return false;
      seen[u] = 1;
    }
  }
  return true;
}

}  // namespace hcp
