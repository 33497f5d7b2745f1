#pragma once
// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <optional>
#include <vector>

#include "hcp/certificate.hpp"
#include "hcp/combinatorics.hpp"
#include "hcp/density.hpp"
#include "hcp/hypergraph.hpp"

namespace oracle {

using hcp::Hypergraph;
using hcp::Rational;
using hcp::Vertex;

inline std::int64_t induced(const std::vector<std::vector<Vertex>>& edges, unsigned mask) {
  std::int64_t e = 0;
  for (const auto& ed : edges) {
    bool in = true;
    for (Vertex v : ed) in = in && ((mask >> v) & 1u);
    e += in;
  }
  return e;
}

// every vertex subset; v(F) <= ~20
inline Rational m1(const Hypergraph& F) {
  auto edges = F.edges();
  std::optional<Rational> best;
  const unsigned n = F.vertex_count();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    auto e = induced(edges, mask);
    int size = __builtin_popcount(mask);
    if (e == 0) continue;
    Rational r(e, size - 1);
    if (!best || r > *best) best = r;
  }
  return *best;
}

inline Rational m_rooted(const Hypergraph& F, const std::vector<Vertex>& root) {
  auto edges = F.edges();
  unsigned X = 0;
  for (Vertex v : root) X |= 1u << v;
  std::optional<Rational> best;
  const unsigned n = F.vertex_count();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if ((mask & X) != X && (mask & X) != 0) continue;
    auto e = induced(edges, mask);
    if (e == 0) continue;
    int denom = __builtin_popcount(mask) - std::max(1, __builtin_popcount(mask & X));
    Rational r(e, denom);
    if (!best || r > *best) best = r;
  }
  return *best;
}

inline bool power_of_cycle_in(const Hypergraph& G, const std::vector<Vertex>& order, int k) {
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t d = std::min(j - i, n - (j - i));
      if (d <= static_cast<std::size_t>(k) && !G.adjacent(order[i], order[j])) return false;
    }
  return true;
}

// all injective maps of the free vertices (listed in `order`) into `allowed`,
// in lexicographic order of the image tuple; first one that embeds
inline std::optional<std::vector<Vertex>> first_rooted_copy(const Hypergraph& F, const Hypergraph& G,
                                                            const std::vector<Vertex>& root,
                                                            const std::vector<Vertex>& y,
                                                            const std::vector<Vertex>& order,
                                                            const std::vector<Vertex>& allowed) {
  std::vector<Vertex> f(F.vertex_count(), 0);
  for (std::size_t i = 0; i < root.size(); ++i) f[root[i]] = y[i];
  std::vector<Vertex> pick(order.size());
  std::optional<std::vector<Vertex>> found;
  auto rec = [&](auto&& self, std::size_t d) -> bool {
    if (d == order.size()) {
      for (std::size_t i = 0; i < order.size(); ++i) f[order[i]] = pick[i];
      return hcp::is_embedding(F, G, f);
    }
    for (Vertex a : allowed) {
      if (std::find(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), a) != pick.begin() + static_cast<std::ptrdiff_t>(d))
        continue;
      pick[d] = a;
      if (self(self, d + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0)) found = f;
  return found;
}

// naive: build every lexicographic copy as an edge set, compare all pairs
inline std::pair<double, double> naive_mu_delta(Vertex n, const Hypergraph& H, double p) {
  std::vector<std::vector<std::vector<Vertex>>> copies;
  const Vertex v = H.vertex_count();
  std::vector<Vertex> s(v);
  std::iota(s.begin(), s.end(), 0);
  auto te = H.edges();
  do {
    std::vector<std::vector<Vertex>> c;
    for (const auto& e : te) {
      std::vector<Vertex> img;
      for (Vertex u : e) img.push_back(s[u]);
      c.push_back(img);
    }
    std::sort(c.begin(), c.end());
    copies.push_back(c);
  } while (hcp::next_combination(s, n));
  const double e = static_cast<double>(te.size());
  double mu = 0, delta = 0;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    mu += std::pow(p, e);
    for (std::size_t j = 0; j < copies.size(); ++j) {
      if (i == j) continue;
      std::vector<std::vector<Vertex>> common;
      std::set_intersection(copies[i].begin(), copies[i].end(), copies[j].begin(), copies[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) delta += std::pow(p, 2 * e - static_cast<double>(common.size()));
    }
  }
  return {mu, delta};
}


}  // namespace oracle
