#include "hcp/absorber.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hcp/certificate.hpp"
#include "hcp/factor.hpp"
#include "hcp/rng.hpp"

namespace hcp {

Backbone backbone_template(int k, int l, Mode mode) {
  if (k < 1) throw std::invalid_argument("backbone needs k >= 1");
  if (l < 5 || l % 2 == 0) throw std::invalid_argument("backbone length must be odd and >= 5, got " + std::to_string(l));
  return Backbone{backbone_graph(k, l, mode), BackboneLabels{k, l}, mode};
}

VertexTuple SingleVertexAbsorber::image(const VertexTuple& t) const {
  std::vector<Vertex> out;
  for (Vertex v : t) out.push_back(backbone.at(v));
  return VertexTuple(out);
}

VertexTuple SingleVertexAbsorber::a() const { return image(BackboneLabels{k, l}.wa(1)); }
VertexTuple SingleVertexAbsorber::b() const { return image(BackboneLabels{k, l}.wb(l)); }

std::vector<Vertex> SingleVertexAbsorber::vertices() const {
  std::vector<Vertex> out = backbone;
  for (const auto& U : connectors) out.insert(out.end(), U.begin(), U.end());
  return out;
}

std::size_t SingleVertexAbsorber::vertex_count() const {
  std::size_t c = backbone.size();
  for (const auto& U : connectors) c += U.size();
  return c;
}

namespace {

void check_structure(const SingleVertexAbsorber& A) {
  if (A.k < 1 || A.l < 3) throw std::invalid_argument("invalid absorber parameters");
  if (A.backbone.size() != BackboneLabels{A.k, A.l}.vertex_count())
    throw std::invalid_argument("absorber backbone has the wrong size");
  if (A.connectors.size() != static_cast<std::size_t>(A.l - 1))
    throw std::invalid_argument("absorber needs l - 1 connectors");
  auto vs = A.vertices();
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("absorber pieces overlap");
}

void append(std::vector<Vertex>& out, std::span<const Vertex> s, bool rev) {
  if (rev)
    out.insert(out.end(), s.rbegin(), s.rend());
  else
    out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

std::vector<Vertex> absorb_single(const SingleVertexAbsorber& A, bool include_x) {
  check_structure(A);
  const int l = A.l;
  auto wa = [&](int i) { return A.image(BackboneLabels{A.k, l}.wa(i)); };
  auto wb = [&](int i) { return A.image(BackboneLabels{A.k, l}.wb(i)); };
  auto U = [&](int i) -> std::span<const Vertex> { return A.connectors[static_cast<std::size_t>(i - 1)]; };
  std::vector<Vertex> out;
  if (include_x) {
    append(out, wa(1).span(), false);
    out.push_back(A.x());
    append(out, wb(1).span(), false);
    for (int i = 1; i < l; ++i) {
      append(out, U(i), false);
      append(out, wa(i + 1).span(), false);
      append(out, wb(i + 1).span(), false);
    }
    return out;
  }
  append(out, wa(1).span(), false);
  append(out, wa(2).span(), true);
  append(out, U(1), true);
  append(out, wb(1).span(), true);
  for (int i = 2; i < l; ++i) {
    append(out, wa(i + 1).span(), true);
    append(out, U(i), true);
    append(out, wb(i).span(), true);
  }
  append(out, wb(l).span(), false);
  return out;
}

std::vector<Vertex> ChainAbsorber::absorbable() const {
  std::vector<Vertex> X;
  for (const auto& p : parts) X.push_back(p.x());
  return X;
}

std::vector<Vertex> ChainAbsorber::vertices() const {
  std::vector<Vertex> out;
  for (const auto& p : parts) {
    auto v = p.vertices();
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const auto& q : chain) out.insert(out.end(), q.begin(), q.end());
  return out;
}

std::size_t ChainAbsorber::vertex_count() const {
  std::size_t c = 0;
  for (const auto& p : parts) c += p.vertex_count();
  for (const auto& q : chain) c += q.size();
  return c;
}

std::vector<Vertex> absorb(const ChainAbsorber& A, const std::vector<Vertex>& X_prime) {
  if (A.parts.empty() || A.chain.size() + 1 != A.parts.size()) throw std::invalid_argument("malformed chain absorber");
  auto X = A.absorbable();
  std::vector<char> drop(A.parts.size(), 0);
  for (Vertex v : X_prime) {
    auto it = std::find(X.begin(), X.end(), v);
    if (it == X.end()) throw std::invalid_argument("vertex " + std::to_string(v) + " is not absorbable");
    drop[static_cast<std::size_t>(it - X.begin())] = 1;
  }
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < A.parts.size(); ++i) {
    auto seg = absorb_single(A.parts[i], !drop[i]);
    out.insert(out.end(), seg.begin(), seg.end());
    if (i < A.chain.size()) out.insert(out.end(), A.chain[i].begin(), A.chain[i].end());
  }
  return out;
}

namespace {

bool connector_ok(const Hypergraph& G, int k, Mode mode, const VertexTuple& from, std::span<const Vertex> internal,
                  const VertexTuple& to) {
  std::vector<Vertex> path(from.begin(), from.end());
  path.insert(path.end(), internal.begin(), internal.end());
  path.insert(path.end(), to.begin(), to.end());
  return is_embedding(connector_template(k, static_cast<int>(path.size()), mode), G, path);
}

bool components_ok(const Hypergraph& G, const SingleVertexAbsorber& A) {
  if (G.uniformity() != host_uniformity(A.mode, A.k)) return false;
  if (!is_embedding(backbone_graph(A.k, A.l, A.mode), G, A.backbone)) return false;
  BackboneLabels L{A.k, A.l};
  for (int i = 1; i < A.l; ++i)
    if (!connector_ok(G, A.k, A.mode, A.image(L.wb(i)), A.connectors[static_cast<std::size_t>(i - 1)],
                      A.image(L.wa(i + 1))))
      return false;
  return true;
}

}  // namespace

bool is_valid_absorber(const Hypergraph& G, const SingleVertexAbsorber& A) {
  try {
    check_structure(A);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (Vertex v : A.vertices())
    if (v >= G.vertex_count()) return false;
  return components_ok(G, A);
}

bool is_valid_absorber(const Hypergraph& G, const ChainAbsorber& A) {
  if (A.parts.empty() || A.chain.size() + 1 != A.parts.size()) return false;
  for (const auto& p : A.parts)
    if (p.k != A.k || p.mode != A.mode || !is_valid_absorber(G, p)) return false;
  for (std::size_t i = 0; i < A.chain.size(); ++i)
    if (!connector_ok(G, A.k, A.mode, A.parts[i].b(), A.chain[i], A.parts[i + 1].a())) return false;
  auto vs = A.vertices();
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

std::size_t chain_absorber_size(int k, int l, int L, std::size_t t) {
  if (t == 0) return 0;
  const std::size_t c = static_cast<std::size_t>(L - 2 * k);
  return t * (1 + 2 * static_cast<std::size_t>(k) * static_cast<std::size_t>(l)) +
         (t * static_cast<std::size_t>(l - 1) + t - 1) * c;
}

namespace {

std::vector<std::vector<Vertex>> internals(const std::vector<std::vector<Vertex>>& paths, int k) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : paths) out.emplace_back(p.begin() + k, p.end() - k);
  return out;
}

}  // namespace

AbsorberBuild build_chain_absorber(const Hypergraph& G1, const Parameters& cfg) {
  const int k = cfg.k;
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (G1.uniformity() != host_uniformity(cfg.mode, k)) throw std::invalid_argument("mode does not match host uniformity");
  const Vertex n = G1.vertex_count();
  const int l = resolved_backbone_length(cfg, n);
  const int L = resolved_connector_length(cfg);
  if (L <= 2 * k) throw std::invalid_argument("connector length must exceed 2k");
  const int t = cfg.absorb_size > 0 ? cfg.absorb_size : formula_absorber_size(n);
  if (t < 1) throw std::invalid_argument("n = " + std::to_string(n) + " too small: |X| = floor(n / (16 log^2 n)) is 0");
  if (2 * chain_absorber_size(k, l, L, static_cast<std::size_t>(t)) > n)
    throw std::invalid_argument("absorber with |X| = " + std::to_string(t) + " exceeds n / 2");
  const Backbone B = backbone_template(k, l, cfg.mode);

  std::vector<Vertex> W[3];
  for (Vertex v = 0; v < n; ++v) W[v % 3].push_back(v);

  AbsorberBuild out;
  SearchLimits limits{cfg.node_budget};
  const auto quota = static_cast<std::size_t>(t);
  if (quota * B.graph.vertex_count() > W[0].size()) {
    out.failed_phase = "factor";
    return out;
  }
  auto copies = factor_in_window(G1, B.graph, W[0], quota, limits);
  if (!copies.ok()) {
    out.failed_phase = "factor";
    return out;
  }

  ConnectOptions opts;
  opts.rounds = cfg.rounds;
  opts.enforce_hypothesis = cfg.enforce_hypotheses;
  opts.limits = limits;

  std::vector<SingleVertexAbsorber> parts;
  std::vector<std::pair<VertexTuple, VertexTuple>> pairs;
  for (auto& f : copies.copies) {
    SingleVertexAbsorber A{k, l, cfg.mode, std::move(f), {}};
    for (int i = 1; i < l; ++i) pairs.emplace_back(A.image(B.labels.wb(i)), A.image(B.labels.wa(i + 1)));
    parts.push_back(std::move(A));
  }
  PathsResult intra;
  try {
    intra = connect_paths(G1, pairs, W[1], k, L, cfg.mode, opts);
  } catch (const std::invalid_argument&) {
    out.failed_phase = "intra-connect";
    return out;
  }
  if (!intra.ok()) {
    out.failed_phase = "intra-connect";
    out.report = std::move(intra.report);
    return out;
  }
  auto U = internals(*intra.paths, k);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < l - 1; ++j) parts[i].connectors.push_back(std::move(U[i * static_cast<std::size_t>(l - 1) + static_cast<std::size_t>(j)]));

  std::vector<std::pair<VertexTuple, VertexTuple>> links;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) links.emplace_back(parts[i].b(), parts[i + 1].a());
  PathsResult chain;
  try {
    chain = connect_paths(G1, links, W[2], k, L, cfg.mode, opts);
  } catch (const std::invalid_argument&) {
    out.failed_phase = "chain-connect";
    return out;
  }
  if (!chain.ok()) {
    out.failed_phase = "chain-connect";
    out.report = std::move(chain.report);
    return out;
  }
  out.absorber = ChainAbsorber{k, cfg.mode, std::move(parts), internals(*chain.paths, k)};
  return out;
}

std::pair<Hypergraph, SingleVertexAbsorber> complete_host_absorber(int k, int l, Mode mode) {
  const Backbone B = backbone_template(k, l, mode);
  const Vertex v = B.labels.vertex_count();
  const Vertex n = v + static_cast<Vertex>(l - 1);
  auto G = Hypergraph::complete(host_uniformity(mode, k), n);
  SingleVertexAbsorber A{k, l, mode, {}, {}};
  for (Vertex u = 0; u < v; ++u) A.backbone.push_back(u);
  for (int i = 0; i < l - 1; ++i) A.connectors.push_back({v + static_cast<Vertex>(i)});
  return {std::move(G), std::move(A)};
}

bool absorbs_correctly(const Hypergraph& G, const ChainAbsorber& A, const std::vector<Vertex>& X_prime) {
  std::vector<Vertex> P;
  try {
    P = absorb(A, X_prime);
  } catch (const std::invalid_argument&) {
    return false;
  }
  auto want = A.vertices();
  std::sort(want.begin(), want.end());
  std::vector<Vertex> gone(X_prime);
  std::sort(gone.begin(), gone.end());
  std::vector<Vertex> rest;
  std::set_difference(want.begin(), want.end(), gone.begin(), gone.end(), std::back_inserter(rest));
  std::vector<Vertex> got(P);
  std::sort(got.begin(), got.end());
  const auto k = static_cast<std::size_t>(A.k);
  return got == rest && P.size() >= k && VertexTuple(std::vector<Vertex>(P.begin(), P.begin() + A.k)) == A.a() &&
         VertexTuple(std::vector<Vertex>(P.end() - A.k, P.end())) == A.b() && verify_path(G, P, A.k, A.mode);
}

int validate_absorber(const Hypergraph& G, const ChainAbsorber& A, int samples, Seed seed) {
  const auto X = A.absorbable();
  int passed = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : passed)
  for (int s = 0; s < samples; ++s) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    std::vector<Vertex> Xp;
    for (Vertex x : X)
      if (rng.bernoulli(0.5)) Xp.push_back(x);
    passed += absorbs_correctly(G, A, Xp);
  }
  return passed;
}

}  // namespace hcp
