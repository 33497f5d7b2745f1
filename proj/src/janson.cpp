#include "hcp/janson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hcp/combinatorics.hpp"
#include "hcp/kernels.hpp"

namespace hcp {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

// log-sum-exp with compensated accumulation of the scaled terms
double sum_from_logs(const std::vector<double>& logs) {
  double top = -std::numeric_limits<double>::infinity();
  for (double l : logs) top = std::max(top, l);
  if (!std::isfinite(top)) return 0.0;
  std::vector<double> scaled;
  scaled.reserve(logs.size());
  for (double l : logs) scaled.push_back(std::exp(l - top));
  return std::exp(top) * kernels::compensated_sum(scaled);
}

double log_power(double p, double exponent) {
  if (exponent == 0.0) return 0.0;
  if (p == 0.0) return exponent > 0 ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  return exponent * std::log(p);
}

kernels::CopyFamily lex_copies(std::uint64_t n, const Hypergraph& H, std::uint64_t budget) {
  const Vertex v = H.vertex_count();
  if (v > n) throw std::invalid_argument("template has more vertices than the host");
  const std::uint64_t copies = binomial(n, v);
  if (copies > budget) throw std::invalid_argument("C(n, v(H)) exceeds the enumeration budget");
  if (n > 0xFFFFFFFFull) throw std::invalid_argument("n too large");
  LexRanker host(H.uniformity(), static_cast<Vertex>(n));
  auto tedges = H.edges();
  kernels::CopyFamily fam;
  fam.copies = copies;
  fam.edges_per_copy = tedges.size();
  fam.edge_ranks.reserve(copies * tedges.size());
  std::vector<Vertex> subset(v), img(H.uniformity());
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<std::uint64_t> ranks(tedges.size());
  for (std::uint64_t c = 0; c < copies; ++c) {
    for (std::size_t e = 0; e < tedges.size(); ++e) {
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = subset[tedges[e][i]];  // increasing map keeps order
      ranks[e] = host.rank(img);
    }
    std::sort(ranks.begin(), ranks.end());
    fam.edge_ranks.insert(fam.edge_ranks.end(), ranks.begin(), ranks.end());
    if (v > 0) next_combination(subset, static_cast<Vertex>(n));
  }
  return fam;
}

template <class Kernel>
MuDelta mu_delta_with(std::uint64_t n, const Hypergraph& H, double p, std::uint64_t budget, Kernel kernel) {
  check_probability(p);
  auto fam = lex_copies(n, H, budget);
  MuDelta out;
  out.copies = fam.copies;
  out.mu = static_cast<double>(fam.copies) * std::pow(p, static_cast<double>(H.edge_count()));
  out.delta = fam.edges_per_copy == 0 ? 0.0 : kernel(fam, p);
  return out;
}

}  // namespace

JansonParams JansonParams::make(double mu, double delta, double gamma) {
  JansonParams j;
  j.mu = mu;
  j.delta = delta;
  j.gamma = gamma;
  j.bound = lower_tail_bound(mu, delta, gamma);
  return j;
}

double lower_tail_bound(double mu, double delta, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");
  if (!(mu >= 0.0) || !(delta >= 0.0)) throw std::invalid_argument("mu and delta must be non-negative");
  if (mu == 0.0) return 1.0;
  return std::exp(-gamma * gamma * mu * mu / (2.0 * (mu + delta)));
}

double lower_tail_bound(const JansonParams& params) { return lower_tail_bound(params.mu, params.delta, params.gamma); }

double expected_lex_copies(std::uint64_t n, const Hypergraph& H, double p) {
  check_probability(p);
  const double v = H.vertex_count();
  if (v > static_cast<double>(n)) throw std::invalid_argument("template has more vertices than the host");
  return std::exp(log_binomial(static_cast<double>(n), v) + log_power(p, static_cast<double>(H.edge_count())));
}

double delta_upper_bound(std::uint64_t n, const Hypergraph& H, double p) {
  check_probability(p);
  if (H.edge_count() == 0) throw std::invalid_argument("delta bound of an edgeless template");
  const double m1 = m1_density(H).to_double();
  const double e = static_cast<double>(H.edge_count());
  const int v = static_cast<int>(H.vertex_count());
  const double nn = static_cast<double>(n);
  std::vector<double> logs;
  for (int j = H.uniformity(); j <= v - 1; ++j)
    logs.push_back(log_binomial(nn, j) + 2.0 * log_binomial(nn - j, v - j) + log_power(p, 2.0 * e - (j - 1) * m1));
  return sum_from_logs(logs);
}

MuDelta exact_mu_delta(std::uint64_t n, const Hypergraph& H, double p, std::uint64_t budget) {
  return mu_delta_with(n, H, p, budget, [](const kernels::CopyFamily& f, double q) { return kernels::omp::overlap_delta(f, q); });
}

MuDelta exact_mu_delta_serial(std::uint64_t n, const Hypergraph& H, double p, std::uint64_t budget) {
  return mu_delta_with(n, H, p, budget,
                       [](const kernels::CopyFamily& f, double q) { return kernels::serial::overlap_delta(f, q); });
}

std::uint64_t count_lex_copies(const Hypergraph& G, const Hypergraph& H) {
  if (G.uniformity() != H.uniformity()) throw std::invalid_argument("template and host uniformity differ");
  const Vertex v = H.vertex_count(), n = G.vertex_count();
  if (v > n) return 0;
  auto tedges = H.edges();
  std::vector<Vertex> subset(v), img(H.uniformity());
  std::iota(subset.begin(), subset.end(), 0);
  std::uint64_t count = 0;
  do {
    bool all = true;
    for (const auto& e : tedges) {
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = subset[e[i]];
      if (!G.has_sorted_edge(img)) {
        all = false;
        break;
      }
    }
    count += all;
  } while (v > 0 && next_combination(subset, n));
  return count;
}

RootedDeltaBound delta_rooted_bound(const RootedTemplate& rt, std::uint64_t n, std::uint64_t s_size, std::uint64_t t,
                                    double p) {
  check_probability(p);
  const auto& F = rt.tmpl;
  if (F.edge_count() == 0) throw std::invalid_argument("delta bound of an edgeless template");
  if (s_size > n) throw std::invalid_argument("|S| exceeds n");
  const int v = static_cast<int>(F.vertex_count());
  const int r = static_cast<int>(rt.root.size());
  const int free = v - r;
  const std::uint64_t used = t * static_cast<std::uint64_t>(free);
  if (used > s_size) throw std::invalid_argument("t (v(F) - r) exceeds |S|");
  const double sp = static_cast<double>(s_size - used);  // |S'|
  const double m = m_density(rt).to_double();
  const double e = static_cast<double>(F.edge_count());
  const double lt = t > 0 ? std::log(static_cast<double>(t)) : -std::numeric_limits<double>::infinity();
  RootedDeltaBound out;
  if (t == 0) return out;
  std::vector<double> logs;
  for (int j = 2; j <= free; ++j)
    logs.push_back(log_binomial(sp, j) + 2.0 * (lt + log_binomial(sp - j, free - j)) +
                   log_power(p, 2.0 * e - (j - 1) * m));
  out.delta1 = sum_from_logs(logs);
  logs.clear();
  if (r > 0)
    for (int j = 1; j <= free; ++j)
      logs.push_back(lt + log_binomial(sp, j) + 2.0 * log_binomial(sp - j, free - j) + log_power(p, 2.0 * e - j * m));
  out.delta2 = sum_from_logs(logs);
  return out;
}

}  // namespace hcp
