#include "hcp/matcher.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hcp/templates.hpp"

namespace hcp {

int default_rounds(Vertex n) {
  int r = 0;
  while (r < 31 && (std::uint64_t{1} << r) < n) ++r;
  return std::max(r, 1);
}

CopyPlan::CopyPlan(RootedTemplate rt) : rt_(std::move(rt)) {
  const auto& F = rt_.tmpl;
  const Vertex v = F.vertex_count();
  auto edges = F.edges();
  std::vector<char> placed(v, 0);
  for (Vertex x : rt_.root) placed[x] = 1;
  for (const auto& e : edges)
    if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return placed[u]; })) root_edges_.push_back(e);

  for (std::size_t step = rt_.root.size(); step < v; ++step) {
    // count edges each unplaced vertex would complete
    Vertex best = v;
    int best_close = -1;
    for (Vertex u = 0; u < v; ++u) {
      if (placed[u]) continue;
      int close = 0;
      for (const auto& e : edges) {
        if (std::find(e.begin(), e.end(), u) == e.end()) continue;
        close += std::all_of(e.begin(), e.end(), [&](Vertex w) { return w == u || placed[w]; });
      }
      if (close > best_close) best_close = close, best = u;
    }
    Step s;
    s.tv = best;
    for (const auto& e : edges) {
      if (std::find(e.begin(), e.end(), best) == e.end()) continue;
      if (!std::all_of(e.begin(), e.end(), [&](Vertex w) { return w == best || placed[w]; })) continue;
      s.close.push_back(e);
      if (F.uniformity() == 2) s.back.push_back(e[0] == best ? e[1] : e[0]);
    }
    placed[best] = 1;
    order_.push_back(best);
    steps_.push_back(std::move(s));
  }
}

namespace {

struct SearchState {
  const Hypergraph& G;
  const VertexMask& allowed;
  std::vector<Vertex> f;
  std::vector<char> used;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool exhausted = false;
  std::vector<std::uint64_t> cand;  // k = 2: per-depth candidate words
  std::vector<Vertex> allowed_list; // k >= 3
  std::vector<Vertex> img;
};

}  // namespace

CopySearch CopyPlan::find(const Hypergraph& G, const VertexTuple& y, const VertexMask& allowed,
                          SearchLimits limits) const {
  const auto& F = rt_.tmpl;
  if (F.uniformity() != G.uniformity()) throw std::invalid_argument("template and host uniformity differ");
  if (y.size() != rt_.root.size()) throw std::invalid_argument("root image has the wrong length");
  if (allowed.universe() != G.vertex_count()) throw std::invalid_argument("allowed set has the wrong universe");
  for (Vertex u : y) {
    if (u >= G.vertex_count()) throw std::invalid_argument("root image outside the host");
    if (allowed.contains(u)) throw std::invalid_argument("root image meets the allowed set");
  }

  CopySearch out;
  SearchState st{G, allowed, std::vector<Vertex>(F.vertex_count(), 0), std::vector<char>(G.vertex_count(), 0), 0, 0,
                 false, {}, {}, {}};
  st.budget = limits.node_budget;
  for (std::size_t i = 0; i < y.size(); ++i) {
    st.f[rt_.root[i]] = y[i];
    st.used[y[i]] = 1;
  }
  st.img.resize(static_cast<std::size_t>(F.uniformity()));
  for (const auto& e : root_edges_) {
    for (std::size_t i = 0; i < e.size(); ++i) st.img[i] = st.f[e[i]];
    if (!G.has_edge(st.img)) return out;
  }
  if (steps_.empty()) {
    out.embedding = st.f;
    return out;
  }

  const bool graph = G.uniformity() == 2;
  const std::size_t words = graph ? G.row_words() : 0;
  if (graph)
    st.cand.assign(steps_.size() * words, 0);
  else
    st.allowed_list = allowed.members();

  // depth-first search; returns true once every step is placed
  auto place = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == steps_.size()) return true;
    const Step& s = steps_[depth];
    auto try_vertex = [&](Vertex h) -> int {  // 1 found, 0 continue, -1 abort
      if (st.budget && ++st.nodes > st.budget) {
        st.exhausted = true;
        return -1;
      }
      if (!st.budget) ++st.nodes;
      st.f[s.tv] = h;
      st.used[h] = 1;
      if (self(self, depth + 1)) return 1;
      st.used[h] = 0;
      return st.exhausted ? -1 : 0;
    };
    if (graph) {
      std::uint64_t* c = st.cand.data() + depth * words;
      auto base = allowed.words();
      std::copy(base.begin(), base.end(), c);
      for (Vertex b : s.back) {
        auto row = G.adjacency_row(st.f[b]);
        for (std::size_t w = 0; w < words; ++w) c[w] &= row[w];
      }
      for (std::size_t w = 0; w < words; ++w)
        for (auto bits = c[w]; bits; bits &= bits - 1) {
          auto h = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
          if (st.used[h]) continue;
          int r = try_vertex(h);
          if (r != 0) return r > 0;
        }
      return false;
    }
    for (Vertex h : st.allowed_list) {
      if (st.used[h]) continue;
      st.f[s.tv] = h;
      bool ok = true;
      for (const auto& e : s.close) {
        for (std::size_t i = 0; i < e.size(); ++i) st.img[i] = st.f[e[i]];
        if (!G.has_edge(st.img)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      int r = try_vertex(h);
      if (r != 0) return r > 0;
    }
    return false;
  };

  if (place(place, 0)) out.embedding = st.f;
  out.budget_exhausted = st.exhausted;
  out.nodes = st.nodes;
  return out;
}

CopySearch find_rooted_copy(const Hypergraph& G, const RootedTemplate& rt, const VertexTuple& y,
                            const VertexMask& allowed, SearchLimits limits) {
  return CopyPlan(rt).find(G, y, allowed, limits);
}

std::vector<std::size_t> reservoir_sizes(std::size_t w, int rounds) {
  if (rounds < 1) throw std::invalid_argument("need at least one round");
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (int i = 1; i <= rounds; ++i) {
    std::size_t halving = i + 1 < 64 ? w >> (i + 1) : 0;
    std::size_t floor_part = w / (2 * static_cast<std::size_t>(rounds));
    sizes.push_back(std::max(halving, floor_part));
    total += sizes.back();
  }
  if (total > w) throw std::invalid_argument("reservoir pieces exceed |W|");
  return sizes;
}

std::vector<std::vector<Vertex>> partition_reservoir(std::vector<Vertex> W, int rounds) {
  if (W.empty()) throw std::invalid_argument("empty reservoir");
  std::sort(W.begin(), W.end());
  if (std::adjacent_find(W.begin(), W.end()) != W.end()) throw std::invalid_argument("reservoir repeats a vertex");
  std::vector<std::vector<Vertex>> out;
  std::size_t pos = 0;
  for (auto s : reservoir_sizes(W.size(), rounds)) {
    out.emplace_back(W.begin() + static_cast<std::ptrdiff_t>(pos), W.begin() + static_cast<std::ptrdiff_t>(pos + s));
    pos += s;
  }
  return out;
}

namespace {

void validate_request(const Hypergraph& G, const ConnectionRequest& req) {
  const Vertex n = G.vertex_count();
  std::vector<char> mark(n, 0);
  for (Vertex w : req.reservoir) {
    if (w >= n) throw std::invalid_argument("reservoir vertex outside the host");
    if (mark[w]) throw std::invalid_argument("reservoir repeats a vertex");
    mark[w] = 1;
  }
  for (const auto& y : req.family) {
    if (y.size() != req.rt.root.size()) throw std::invalid_argument("root tuple has the wrong length");
    for (Vertex u : y) {
      if (u >= n) throw std::invalid_argument("root tuple vertex outside the host");
      if (mark[u] == 1) throw std::invalid_argument("root tuple meets the reservoir");
      if (mark[u] == 2) throw std::invalid_argument("root tuples are not disjoint");
      mark[u] = 2;
    }
  }
}

}  // namespace

bool is_rooted_matching(const Hypergraph& G, const ConnectionRequest& req, const RootedMatching& m) {
  if (m.copies.size() != req.family.size()) return false;
  const Vertex n = G.vertex_count();
  std::vector<char> inW(n, 0), seen(n, 0);
  for (Vertex w : req.reservoir)
    if (w < n) inW[w] = 1;
  const auto& F = req.rt.tmpl;
  for (std::size_t i = 0; i < m.copies.size(); ++i) {
    const auto& f = m.copies[i];
    if (f.size() != F.vertex_count() || !is_embedding(F, G, f)) return false;
    for (std::size_t j = 0; j < req.rt.root.size(); ++j)
      if (f[req.rt.root[j]] != req.family[i][j]) return false;
    for (Vertex u = 0; u < F.vertex_count(); ++u) {
      if (!req.rt.root.contains(u) && !inW[f[u]]) return false;
      if (seen[f[u]]) return false;
      seen[f[u]] = 1;
    }
  }
  return true;
}

ConnectResult connect_family(const Hypergraph& G, const ConnectionRequest& req, const ConnectOptions& opts) {
  validate_request(G, req);
  ConnectResult res;
  const std::size_t t = req.family.size();
  const std::size_t need = t * req.rt.free_count();
  if (opts.enforce_hypothesis ? 4 * need > req.reservoir.size() : need > req.reservoir.size())
    throw std::invalid_argument("t (v(F) - r) = " + std::to_string(need) + " too large for |W| = " +
                                std::to_string(req.reservoir.size()));
  if (t == 0) {
    res.matching = RootedMatching{};
    return res;
  }
  const int rounds = opts.rounds > 0 ? opts.rounds : default_rounds(G.vertex_count());
  res.report.reservoirs = partition_reservoir(req.reservoir, rounds);
  CopyPlan plan(req.rt);
  std::vector<Embedding> copies(t);
  std::vector<std::size_t> pending(t);
  for (std::size_t i = 0; i < t; ++i) pending[i] = i;
  for (const auto& Wj : res.report.reservoirs) {
    VertexMask free_mask = VertexMask::from(G.vertex_count(), Wj);
    std::vector<std::size_t> still;
    for (auto i : pending) {
      if (free_mask.empty()) {
        still.push_back(i);
        continue;
      }
      auto found = plan.find(G, req.family[i], free_mask, opts.limits);
      res.report.budget_hit |= found.budget_exhausted;
      if (!found.embedding) {
        still.push_back(i);
        continue;
      }
      for (Vertex u = 0; u < req.rt.tmpl.vertex_count(); ++u)
        if (!req.rt.root.contains(u)) free_mask.erase((*found.embedding)[u]);
      copies[i] = std::move(*found.embedding);
    }
    pending.swap(still);
    res.report.residuals.push_back(pending.size());
  }
  res.report.unmatched = pending;
  if (pending.empty()) res.matching = RootedMatching{std::move(copies)};
  return res;
}

Hypergraph connector_template(int k, int l, Mode mode) {
  return mode == Mode::power ? connecting_path_template(k, l) : tight_path_template(k, l);
}

PathsResult connect_paths(const Hypergraph& G, const std::vector<std::pair<VertexTuple, VertexTuple>>& pairs,
                          const std::vector<Vertex>& W, int k, int l, Mode mode, const ConnectOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (G.uniformity() != host_uniformity(mode, k)) throw std::invalid_argument("mode does not match host uniformity");
  if (l <= 2 * k) throw std::invalid_argument("connector length must exceed 2k");
  for (const auto& [a, b] : pairs)
    if (a.size() != static_cast<std::size_t>(k) || b.size() != static_cast<std::size_t>(k))
      throw std::invalid_argument("connector endpoints must be k-tuples");
  if (opts.enforce_hypothesis && 4 * static_cast<std::size_t>(l) * pairs.size() > W.size())
    throw std::invalid_argument("t <= |W| / (4l) violated");
  ConnectionRequest req{RootedTemplate(connector_template(k, l, mode), path_root(k, l)), {}, W};
  for (const auto& [a, b] : pairs) req.family.push_back(a + b);
  ConnectOptions inner = opts;
  inner.enforce_hypothesis = false;  // the path form is the stronger condition
  auto r = connect_family(G, req, inner);
  PathsResult out;
  out.report = std::move(r.report);
  if (r.matching) out.paths = std::move(r.matching->copies);  // embedding of u_1..u_l is the path order
  return out;
}

}  // namespace hcp
