#pragma once

#include <cstdint>
#include <optional>

#include "hcp/density.hpp"
#include "hcp/hypergraph.hpp"

namespace hcp {

/// Parameters of the lower-tail inequality
///   Pr[X < (1 - gamma) mu] <= exp(-gamma^2 mu^2 / (2 (mu + delta))).
/// beta, K, C, C' are carried only for reporting.
struct JansonParams {
  double mu = 0.0;
  double delta = 0.0;
  double gamma = 0.5;
  double bound = 1.0;
  std::optional<double> beta, K, C, C_prime;

  /// Fills bound from mu, delta, gamma.
  static JansonParams make(double mu, double delta, double gamma);
};

/// exp(-gamma^2 mu^2 / (2(mu + delta))), or 1 when mu = 0.
double lower_tail_bound(const JansonParams& params);
double lower_tail_bound(double mu, double delta, double gamma);

/// C(n, v(H)) p^e(H): one lexicographic copy per v(H)-subset.
double expected_lex_copies(std::uint64_t n, const Hypergraph& H, double p);

/// sum_{j=k}^{v(H)-1} C(n,j) C(n-j, v(H)-j)^2 p^(2e(H) - (j-1) m1(H)),
/// evaluated in log space; k is H's uniformity.
double delta_upper_bound(std::uint64_t n, const Hypergraph& H, double p);

struct MuDelta {
  double mu = 0.0;
  double delta = 0.0;
  std::uint64_t copies = 0;
};

/// mu and delta of the lexicographic copies of H in K_n^(k) by explicit
/// enumeration: delta sums p^(2e - shared) over ordered pairs of distinct
/// copies sharing an edge. Refuses when C(n, v(H)) exceeds the budget.
MuDelta exact_mu_delta(std::uint64_t n, const Hypergraph& H, double p, std::uint64_t budget = 100000);

/// Same as exact_mu_delta with the single-threaded kernel.
MuDelta exact_mu_delta_serial(std::uint64_t n, const Hypergraph& H, double p, std::uint64_t budget = 100000);

/// Number of lexicographic copies of H present in G (the Janson variable X).
std::uint64_t count_lex_copies(const Hypergraph& G, const Hypergraph& H);

/// The two sums bounding delta for a rooted family of t root tuples in a
/// vertex pool S: copies sharing root images (delta1) and copies sharing
/// internal vertices (delta2), with |S'| = |S| - t (v(F) - r).
struct RootedDeltaBound {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double total() const { return delta1 + delta2; }
};
RootedDeltaBound delta_rooted_bound(const RootedTemplate& rt, std::uint64_t n, std::uint64_t s_size, std::uint64_t t,
                                    double p);

}  // namespace hcp
