#include "hcp/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "hcp/matcher.hpp"

namespace hcp {

namespace {

constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

// Hopcroft-Karp; returns mate of each left vertex (kFree if unmatched)
std::vector<std::uint32_t> hopcroft_karp(const BipartiteGraph& B) {
  const std::uint32_t L = B.left_size(), R = B.right_size();
  std::vector<std::uint32_t> mate_l(L, kFree), mate_r(R, kFree), dist(L);
  auto bfs = [&] {
    std::queue<std::uint32_t> q;
    bool found = false;
    for (std::uint32_t l = 0; l < L; ++l) {
      if (mate_l[l] == kFree) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kFree;
      }
    }
    while (!q.empty()) {
      auto l = q.front();
      q.pop();
      for (auto r : B.neighbors(l)) {
        auto m = mate_r[r];
        if (m == kFree) {
          found = true;
        } else if (dist[m] == kFree) {
          dist[m] = dist[l] + 1;
          q.push(m);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, std::uint32_t l) -> bool {
    for (auto r : B.neighbors(l)) {
      auto m = mate_r[r];
      if (m == kFree || (dist[m] == dist[l] + 1 && self(self, m))) {
        mate_l[l] = r;
        mate_r[r] = l;
        return true;
      }
    }
    dist[l] = kFree;
    return false;
  };
  while (bfs())
    for (std::uint32_t l = 0; l < L; ++l)
      if (mate_l[l] == kFree) dfs(dfs, l);
  return mate_l;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> perfect_matching(const BipartiteGraph& B) {
  if (B.left_size() != B.right_size()) throw std::invalid_argument("perfect matching needs balanced sides");
  auto mate = hopcroft_karp(B);
  if (std::find(mate.begin(), mate.end(), kFree) != mate.end()) return std::nullopt;
  return mate;
}

std::size_t maximum_matching_size(const BipartiteGraph& B) {
  auto mate = hopcroft_karp(B);
  return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](auto m) { return m != kFree; }));
}

VertexTuple CoverFamily::a(std::size_t i) const {
  const auto& q = paths.at(i);
  return VertexTuple(std::vector<Vertex>(q.begin(), q.begin() + k));
}

VertexTuple CoverFamily::b(std::size_t i) const {
  const auto& q = paths.at(i);
  return VertexTuple(std::vector<Vertex>(q.end() - k, q.end()));
}

CoverResult cover_with_paths(const Hypergraph& G2, const std::vector<Vertex>& U, const std::vector<Vertex>& U_X, int t,
                             int k, Mode mode) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (G2.uniformity() != host_uniformity(mode, k)) throw std::invalid_argument("mode does not match host uniformity");
  if (t < 1) throw std::invalid_argument("need at least one part");
  std::vector<Vertex> all(U);
  all.insert(all.end(), U_X.begin(), U_X.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw std::invalid_argument("U and U_X overlap");
  if (!all.empty() && all.back() >= G2.vertex_count()) throw std::invalid_argument("cover vertex outside the host");
  if (all.empty() || all.size() % static_cast<std::size_t>(t) != 0)
    throw std::invalid_argument("|U u U_X| = " + std::to_string(all.size()) + " not divisible by t = " +
                                std::to_string(t));
  const std::size_t s = all.size() / static_cast<std::size_t>(t);
  CoverFamily fam{k, mode, {}, {}};
  for (int j = 0; j < t; ++j)
    fam.parts.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(j * s),
                           all.begin() + static_cast<std::ptrdiff_t>((j + 1) * s));
  for (Vertex u : fam.parts[0]) fam.paths.push_back({u});

  std::vector<Vertex> window(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j < t; ++j) {
    const auto& part = fam.parts[static_cast<std::size_t>(j)];
    BipartiteGraph B(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s));
    for (std::size_t i = 0; i < s; ++i) {
      const auto& Q = fam.paths[i];
      for (std::size_t r = 0; r < s; ++r) {
        const Vertex u = part[r];
        bool ok = true;
        if (mode == Mode::power) {
          const std::size_t back = std::min<std::size_t>(static_cast<std::size_t>(k), Q.size());
          for (std::size_t d = 1; d <= back && ok; ++d) ok = G2.adjacent(Q[Q.size() - d], u);
        } else if (Q.size() >= static_cast<std::size_t>(k)) {
          std::copy(Q.end() - k, Q.end(), window.begin());
          window.back() = u;
          ok = G2.has_edge(window);
        }
        if (ok) B.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(r));
      }
    }
    B.finalize();
    auto mate = perfect_matching(B);
    if (!mate) return CoverResult{std::nullopt, j + 1};
    for (std::size_t i = 0; i < s; ++i) fam.paths[i].push_back(part[(*mate)[i]]);
  }
  return CoverResult{std::move(fam), 0};
}

bool is_cover_family(const Hypergraph& G, const CoverFamily& f) {
  std::vector<char> seen(G.vertex_count(), 0);
  for (const auto& Q : f.paths) {
    if (Q.size() != f.parts.size()) return false;
    for (std::size_t j = 0; j < Q.size(); ++j) {
      if (Q[j] >= G.vertex_count() || seen[Q[j]]) return false;
      seen[Q[j]] = 1;
      const auto& part = f.parts[j];
      if (std::find(part.begin(), part.end(), Q[j]) == part.end()) return false;
    }
    if (!verify_path(G, Q, f.k, f.mode)) return false;
  }
  return true;
}

int clamped_rounds(Vertex n, std::size_t w, int c) {
  const int r = default_rounds(n);
  const auto fit = static_cast<int>(std::min<std::size_t>(w / (2 * static_cast<std::size_t>(c)), 1u << 30));
  return std::max(1, std::min(r, fit));
}

namespace {

// connectors of c internal vertices that fit the round pieces of |W| = w
std::size_t connector_capacity(std::size_t w, int rounds, int c) {
  if (w == 0) return 0;
  std::size_t cap = 0;
  for (auto s : reservoir_sizes(w, rounds)) cap += s / static_cast<std::size_t>(c);
  return cap;
}

constexpr double kAbsorberShare = 0.4;  // auto |X|: v(A) <= 0.4 n
constexpr double kSlack = 0.8;          // auto |X|: fill at most 80% of a third

}  // namespace

Plan plan_pipeline(Vertex n, const Parameters& cfg) {
  const int k = cfg.k;
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Plan plan;
  plan.n = n;
  plan.k = k;
  plan.mode = cfg.mode;
  plan.ell = resolved_backbone_length(cfg, n);
  if (plan.ell < 5 || plan.ell % 2 == 0) throw std::invalid_argument("backbone length must be odd and >= 5");
  plan.connector_length = resolved_connector_length(cfg);
  const int c = plan.connector_length - 2 * k;
  if (c < 1) throw std::invalid_argument("connector length must exceed 2k");
  const int R = cfg.rounds > 0 ? cfg.rounds : default_rounds(n);
  const std::size_t vb = 1 + 2 * static_cast<std::size_t>(k) * static_cast<std::size_t>(plan.ell);
  const std::size_t w1 = (n + 2) / 3, w2 = (n + 1) / 3, w3 = n / 3;

  auto absorber_fits = [&](std::size_t t, bool strict) {
    const std::size_t size = chain_absorber_size(k, plan.ell, plan.connector_length, t);
    const double share = strict ? kAbsorberShare : 0.5;
    const double fill = strict ? kSlack : 1.0;
    if (static_cast<double>(size) > share * n) return false;
    if (static_cast<double>(t * vb) > fill * static_cast<double>(w1)) return false;
    if (static_cast<double>(t * static_cast<std::size_t>(plan.ell - 1)) >
        fill * static_cast<double>(connector_capacity(w2, R, c)))
      return false;
    return static_cast<double>(t - 1) <= fill * static_cast<double>(connector_capacity(w3, R, c));
  };

  // the cover and the last connect step for a given |X|
  auto fit_cover = [&](std::size_t t) -> bool {
    const std::size_t size = chain_absorber_size(k, plan.ell, plan.connector_length, t);
    if (size >= n) return false;
    const std::size_t U = n - size;
    auto try_s = [&](std::size_t s, std::size_t tc) {
      if (s < 1 || tc < 2 * static_cast<std::size_t>(k)) return false;
      const std::size_t ux = s * tc - U;
      if (ux >= t) return false;
      const std::size_t W = t - ux;
      const int fr = cfg.rounds > 0 ? cfg.rounds : clamped_rounds(n, W, c);
      if (connector_capacity(W, fr, c) < s + 1) return false;
      plan.absorb_size = static_cast<int>(t);
      plan.absorber_vertices = size;
      plan.cover_vertices = U;
      plan.paths = static_cast<int>(s);
      plan.t_cover = static_cast<int>(tc);
      plan.ux = static_cast<int>(ux);
      plan.final_rounds = fr;
      return true;
    };
    if (cfg.t_cover > 0) {
      const auto tc = static_cast<std::size_t>(cfg.t_cover);
      return try_s((U + tc - 1) / tc, tc);
    }
    for (std::size_t s = U / (2 * static_cast<std::size_t>(k)); s >= 1; --s)
      if (try_s(s, (U + s - 1) / s)) return true;
    return false;
  };

  if (cfg.absorb_size > 0) {
    const auto t = static_cast<std::size_t>(cfg.absorb_size);
    if (absorber_fits(t, false) && fit_cover(t)) return plan;
  } else {
    std::size_t t = 1;
    while (absorber_fits(t + 1, true)) ++t;
    for (; t >= 1 && absorber_fits(t, true); --t)
      if (fit_cover(t)) return plan;
  }
  throw std::invalid_argument("n = " + std::to_string(n) + " below the minimum for k = " + std::to_string(k) + ", " +
                              std::string(to_string(cfg.mode)) + " mode (no feasible absorber / cover sizes)");
}

namespace {

struct Attempt {
  std::optional<CycleCertificate> cert;
  std::string phase;
};

std::vector<Vertex> internal_of(const std::vector<Vertex>& path, int k) {
  return std::vector<Vertex>(path.begin() + k, path.end() - k);
}

Attempt run_attempt(const Hypergraph& G, const Parameters& cfg, const Plan& plan, Seed seed, std::optional<double> p) {
  const int k = cfg.k;
  const Vertex n = G.vertex_count();
  auto parts = split_edges_three(G, derive_seed(seed, 0), p);

  Parameters acfg = cfg;
  acfg.ell = plan.ell;
  acfg.connector_length = plan.connector_length;
  acfg.absorb_size = plan.absorb_size;
  auto built = build_chain_absorber(parts[0], acfg);
  if (!built.ok()) return {std::nullopt, "absorber-" + built.failed_phase};
  const ChainAbsorber& A = *built.absorber;

  std::vector<char> in_a(n, 0);
  for (Vertex v : A.vertices()) in_a[v] = 1;
  std::vector<Vertex> U;
  for (Vertex v = 0; v < n; ++v)
    if (!in_a[v]) U.push_back(v);
  auto X = A.absorbable();
  std::sort(X.begin(), X.end());
  std::vector<Vertex> UX(X.begin(), X.begin() + plan.ux), W(X.begin() + plan.ux, X.end());

  auto cover = cover_with_paths(parts[1], U, UX, plan.t_cover, k, cfg.mode);
  if (!cover.ok()) return {std::nullopt, "cover"};
  const CoverFamily& Q = *cover.family;
  const std::size_t s = Q.paths.size();

  std::vector<std::pair<VertexTuple, VertexTuple>> pairs;
  pairs.emplace_back(A.b(), Q.a(0));
  for (std::size_t i = 0; i + 1 < s; ++i) pairs.emplace_back(Q.b(i), Q.a(i + 1));
  pairs.emplace_back(Q.b(s - 1), A.a());
  ConnectOptions opts;
  opts.rounds = plan.final_rounds;
  opts.enforce_hypothesis = cfg.enforce_hypotheses;
  opts.limits = SearchLimits{cfg.node_budget};
  PathsResult Z;
  try {
    Z = connect_paths(parts[2], pairs, W, k, plan.connector_length, cfg.mode, opts);
  } catch (const std::invalid_argument&) {
    return {std::nullopt, "connect"};
  }
  if (!Z.ok()) return {std::nullopt, "connect"};

  std::vector<Vertex> Xp = UX;
  for (const auto& z : *Z.paths) {
    auto in = internal_of(z, k);
    Xp.insert(Xp.end(), in.begin(), in.end());
  }
  std::vector<Vertex> order = absorb(A, Xp);
  for (std::size_t i = 0; i <= s; ++i) {
    auto z = internal_of((*Z.paths)[i], k);
    order.insert(order.end(), z.begin(), z.end());
    if (i < s) order.insert(order.end(), Q.paths[i].begin(), Q.paths[i].end());
  }
  // vertex accounting
  std::vector<char> seen(n, 0);
  if (order.size() != n) return {std::nullopt, "merge"};
  for (Vertex v : order) {
    if (v >= n || seen[v]) return {std::nullopt, "merge"};
    seen[v] = 1;
  }
  CycleCertificate cert{cfg.mode, k, std::move(order)};
  if (!verify_certificate(G, cert)) return {std::nullopt, "verify"};
  return {std::move(cert), ""};
}

}  // namespace

HamiltonResult find_hamilton(const Hypergraph& G, const Parameters& cfg, std::optional<double> p) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  if (G.uniformity() != host_uniformity(cfg.mode, cfg.k))
    throw std::invalid_argument("mode does not match host uniformity");
  if (cfg.retries < 0) throw std::invalid_argument("retries must be >= 0");
  HamiltonResult res;
  res.plan = plan_pipeline(G.vertex_count(), cfg);
  for (int a = 0; a <= cfg.retries; ++a) {
    auto at = run_attempt(G, cfg, res.plan, derive_seed(cfg.seed, static_cast<std::uint64_t>(a)), p);
    res.attempt_phases.push_back(at.phase);
    res.phase_failed = at.phase;
    if (at.cert) {
      res.certificate = std::move(at.cert);
      break;
    }
  }
  return res;
}

Seed trial_seed(Seed base, std::size_t grid_point, int trial) {
  return derive_seed(derive_seed(base, grid_point), static_cast<std::uint64_t>(trial));
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 0) throw std::invalid_argument("trials must be >= 0");
  const int uni = host_uniformity(cfg.base.mode, cfg.base.k);
  std::vector<TrialRecord> rows;
  for (std::size_t a = 0; a < cfg.ns.size(); ++a)
    for (std::size_t b = 0; b < cfg.ps.size(); ++b)
      for (int i = 0; i < cfg.trials; ++i) {
        TrialRecord r;
        r.n = cfg.ns[a];
        r.p = cfg.ps[b];
        r.trial = i;
        r.seed = trial_seed(cfg.base.seed, a * cfg.ps.size() + b, i);
        rows.push_back(r);
      }
  const auto count = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, cfg.jobs))
  for (std::int64_t i = 0; i < count; ++i) {
    auto& r = rows[static_cast<std::size_t>(i)];
    const auto start = std::chrono::steady_clock::now();
    try {
      auto G = sample_uniform_hypergraph(uni, r.n, r.p, derive_seed(r.seed, 0));
      Parameters run = cfg.base;
      run.seed = derive_seed(r.seed, 1);
      auto res = find_hamilton(G, run, r.p);
      r.success = res.ok();
      r.phase_failed = res.phase_failed;
    } catch (const std::invalid_argument&) {
      r.success = false;
      r.phase_failed = "plan";
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rows;
}

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string experiment_csv(const std::vector<TrialRecord>& rows, bool timing) {
  std::string out = "n,p,trial,seed,success,phase_failed,runtime_ms\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + shortest(r.p) + ',' + std::to_string(r.trial) + ',' + std::to_string(r.seed) +
           ',' + (r.success ? "1" : "0") + ',' + r.phase_failed + ',';
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace hcp
