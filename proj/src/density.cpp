#include "hcp/density.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>

#include "hcp/templates.hpp"

namespace hcp {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  auto g = std::gcd(a.den_, b.den_);
  return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  auto g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
  auto g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

RootedTemplate::RootedTemplate(Hypergraph t, VertexTuple r) : tmpl(std::move(t)), root(std::move(r)) {
  for (Vertex v : root)
    if (v >= tmpl.vertex_count()) throw std::invalid_argument("root vertex outside the template");
}

bool RootedTemplate::root_independent() const {
  auto in_root = VertexMask::from(tmpl.vertex_count(), root.span());
  bool indep = true;
  tmpl.for_each_edge([&](std::span<const Vertex> e) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in_root.contains(v); })) indep = false;
  });
  return indep;
}

namespace {

// Dinic max flow on int64 capacities
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}
  void add(int u, int v, std::int64_t cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }
  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (auto f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }
  // nodes reachable from s in the residual graph after run()
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };
  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }
  std::int64_t dfs(int u, int t, std::int64_t f) {
    if (u == t) return f;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (auto got = dfs(arc.to, t, std::min(f, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_, level_, it_;
  std::vector<Arc> arcs_;
};

struct EdgeList {
  Vertex n = 0;
  std::vector<std::vector<Vertex>> edges;
};

// Max over vertex sets S (restricted to `allowed`, always containing
// `forced`) of lam.den * e(S) - lam.num * |S \ free|, where `free` vertices
// are not charged. Returns the maximiser (as a vertex mask) and its value.
struct Closure {
  std::vector<char> in;
  std::int64_t value;
};

Closure max_closure(const EdgeList& g, const std::vector<char>& allowed, const std::vector<char>& free,
                    const Rational& lam) {
  const int n = static_cast<int>(g.n);
  const int m = static_cast<int>(g.edges.size());
  const int src = n + m, sink = n + m + 1;
  MaxFlow mf(n + m + 2);
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t total = 0;
  for (int e = 0; e < m; ++e) {
    const auto& ed = g.edges[e];
    if (!std::all_of(ed.begin(), ed.end(), [&](Vertex v) { return allowed[v]; })) continue;
    mf.add(src, n + e, lam.den());
    total += lam.den();
    for (Vertex v : ed) mf.add(n + e, static_cast<int>(v), inf);
  }
  for (int v = 0; v < n; ++v)
    if (allowed[v] && !free[v]) mf.add(v, sink, lam.num());
  auto cut = mf.run(src, sink);
  auto side = mf.source_side(src);
  Closure c{std::vector<char>(g.n, 0), total - cut};
  for (int v = 0; v < n; ++v) c.in[v] = allowed[v] && side[v];
  return c;
}

std::int64_t induced_edges(const EdgeList& g, const std::vector<char>& in) {
  std::int64_t e = 0;
  for (const auto& ed : g.edges) e += std::all_of(ed.begin(), ed.end(), [&](Vertex v) { return in[v] != 0; });
  return e;
}

EdgeList edge_list(const Hypergraph& F) { return {F.vertex_count(), F.edges()}; }

// max e(S)/(|S|-1) over S inside `allowed` with e(S) >= 1; nullopt if no edge
std::optional<Rational> m1_restricted(const EdgeList& g, const std::vector<char>& allowed) {
  std::vector<char> all_in(g.n, 0);
  for (Vertex v = 0; v < g.n; ++v) all_in[v] = allowed[v];
  if (induced_edges(g, all_in) == 0) return std::nullopt;
  Rational lam(0);
  while (true) {
    std::optional<Rational> best;
    for (Vertex v = 0; v < g.n; ++v) {
      if (!allowed[v]) continue;
      std::vector<char> free(g.n, 0);
      free[v] = 1;  // the "-1" in the denominator
      auto c = max_closure(g, allowed, free, lam);
      if (c.value <= 0) continue;
      auto e = induced_edges(g, c.in);
      auto size = std::count(c.in.begin(), c.in.end(), 1);
      if (e == 0 || size < 2) continue;
      Rational r(e, size - 1);
      if (!best || r > *best) best = r;
    }
    if (!best || *best <= lam) return lam;
    lam = *best;
  }
}

// max e(S)/|S \ X| over S ⊋ X
Rational rooted_pass(const EdgeList& g, const std::vector<char>& root) {
  std::vector<char> allowed(g.n, 1);
  Rational lam(0);
  while (true) {
    auto c = max_closure(g, allowed, root, lam);
    if (c.value <= 0) return lam;
    for (Vertex v = 0; v < g.n; ++v)
      if (root[v]) c.in[v] = 1;
    auto e = induced_edges(g, c.in);
    std::int64_t charged = 0;
    for (Vertex v = 0; v < g.n; ++v) charged += c.in[v] && !root[v];
    if (charged == 0 || e == 0) return lam;
    Rational r(e, charged);
    if (r <= lam) return lam;
    lam = r;
  }
}

}  // namespace

Rational m1_density(const Hypergraph& F) {
  if (F.edge_count() == 0) throw std::invalid_argument("m1 density of an edgeless hypergraph");
  auto g = edge_list(F);
  return *m1_restricted(g, std::vector<char>(g.n, 1));
}

Rational m_density(const RootedTemplate& rt) {
  const auto& F = rt.tmpl;
  if (F.edge_count() == 0) throw std::invalid_argument("rooted density of an edgeless template");
  if (F.vertex_count() < rt.root.size() + 1) throw std::invalid_argument("template needs a vertex outside the root");
  if (!rt.root_independent()) throw std::invalid_argument("root is not independent in the template");
  if (rt.root.empty()) return m1_density(F);
  auto g = edge_list(F);
  std::vector<char> root(g.n, 0);
  for (Vertex v : rt.root) root[v] = 1;
  std::vector<char> outside(g.n, 0);
  for (Vertex v = 0; v < g.n; ++v) outside[v] = !root[v];
  auto avoid = m1_restricted(g, outside);
  Rational contain = rooted_pass(g, root);
  // with a single root vertex the two denominators coincide; |X| >= 1 here
  if (avoid && *avoid > contain) return *avoid;
  return contain;
}

bool is_degenerate_ordering(const Hypergraph& F, const VertexTuple& ordering, int k) {
  const Vertex n = F.vertex_count();
  if (ordering.size() != n) throw std::invalid_argument("ordering is not a permutation of the template vertices");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (ordering[i] >= n) throw std::invalid_argument("ordering is not a permutation of the template vertices");
    pos[ordering[i]] = i;
  }
  std::vector<int> closes(n, 0);
  F.for_each_edge([&](std::span<const Vertex> e) {
    Vertex last = *std::max_element(e.begin(), e.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    ++closes[last];
  });
  return std::all_of(closes.begin(), closes.end(), [&](int c) { return c <= k; });
}

VertexTuple backbone_degeneracy_ordering(int k, int l) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("backbone ordering needs odd l >= 3");
  if (k < 1) throw std::invalid_argument("backbone ordering needs k >= 1");
  BackboneLabels L{k, l};
  VertexTuple o = VertexTuple{L.x()} + L.wa(1).reversed();
  for (int i = 2; i <= l - 1; i += 2) o = o + L.wa(i).reversed() + L.wb(i);
  o = o + L.wb(l) + L.wa(l).reversed();
  for (int i = l - 2; i >= 3; i -= 2) o = o + L.wb(i) + L.wa(i).reversed();
  return o + L.wb(1);
}

}  // namespace hcp
