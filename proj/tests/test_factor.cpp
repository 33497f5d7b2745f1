#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hcp/density.hpp"
#include "hcp/factor.hpp"
#include "hcp/randmodels.hpp"
#include "hcp/rng.hpp"
#include "hcp/templates.hpp"

using namespace hcp;

namespace {

std::vector<Vertex> range(Vertex lo, Vertex hi) {
  std::vector<Vertex> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

Hypergraph single_edge() { return Hypergraph::from_edges(2, 2, {{0, 1}}); }

}  // namespace

TEST(AlmostFactor, PerfectMatchingHost) {
  HypergraphBuilder b(2, 20);
  for (Vertex i = 0; i < 20; i += 2) b.add_edge({i, i + 1});
  auto G = b.build();
  auto r = almost_factor(G, single_edge(), 2.0 / 20);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.copies.size(), 10u);
  EXPECT_EQ(r.leftover, 0u);
  EXPECT_TRUE(disjoint_copies(G, single_edge(), r.copies));

  // shifted matching: the first window {0, 1} has no edge
  HypergraphBuilder s(2, 20);
  for (Vertex i = 1; i + 1 < 20; i += 2) s.add_edge({i, i + 1});
  auto bad = almost_factor(s.build(), single_edge(), 2.0 / 20);
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.failed_window, std::optional<std::size_t>(0));
}

TEST(AlmostFactor, CompleteHosts) {
  for (int k : {2, 3}) {
    for (double eps : {0.1, 0.2, 0.5}) {
      const Vertex n = k == 2 ? 200 : 60;
      auto G = Hypergraph::complete(k, n);
      for (const auto& H : {tight_path_template(k - 1, k + 2), Hypergraph::complete(k, k + 1)}) {
        auto r = almost_factor(G, H, eps);
        ASSERT_TRUE(r.ok());
        EXPECT_LT(static_cast<double>(r.leftover), eps * n);
        EXPECT_EQ(r.leftover + r.copies.size() * H.vertex_count(), n);
        EXPECT_TRUE(disjoint_copies(G, H, r.copies));
      }
    }
  }
}

TEST(AlmostFactor, Errors) {
  auto G = Hypergraph::complete(2, 20);
  EXPECT_THROW(almost_factor(G, single_edge(), 0.0), std::invalid_argument);
  EXPECT_THROW(almost_factor(G, single_edge(), 1.0), std::invalid_argument);
  EXPECT_THROW(almost_factor(G, Hypergraph::complete(2, 5), 0.1), std::invalid_argument);  // window of 2
  EXPECT_THROW(almost_factor(G, Hypergraph::complete(3, 4), 0.5), std::invalid_argument);
}

// triangle, m1 = 3/2; p = (v^4 / n)^(2/3) with C = 1 is about 0.297
TEST(AlmostFactor, MonteCarloTriangle) {
  const Hypergraph K3 = Hypergraph::complete(2, 3);
  const double p = std::pow(81.0 / 500.0, 1.0 / 1.5);
  int ok = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto G = sample_uniform_hypergraph(2, 500, p, derive_seed(31, trial));
    auto r = almost_factor(G, K3, 0.1);
    if (r.ok()) {
      ASSERT_TRUE(disjoint_copies(G, K3, r.copies));
      ASSERT_LT(r.leftover, 50u);
      ++ok;
    }
  }
  EXPECT_GE(ok, 95);
}

TEST(FactorInWindow, CompleteBackbone) {
  auto B = backbone_graph(2, 5, Mode::power);
  ASSERT_EQ(B.vertex_count(), 21u);
  auto G = Hypergraph::complete(2, 200);
  auto W = range(20, 188);
  auto r = factor_in_window(G, B, W);
  ASSERT_TRUE(r.ok());
  EXPECT_GE(r.copies.size(), 2u);
  EXPECT_TRUE(disjoint_copies(G, B, r.copies, &W));
  EXPECT_EQ(r.leftover, 168u - 21 * r.copies.size());

  auto full = factor_in_window(G, B, W, 8);
  ASSERT_TRUE(full.ok());
  EXPECT_EQ(full.copies.size(), 8u);
  EXPECT_EQ(full.leftover, 0u);
}

TEST(FactorInWindow, Errors) {
  auto B = backbone_graph(2, 5, Mode::power);
  auto G = Hypergraph::complete(2, 100);
  EXPECT_THROW(factor_in_window(G, B, range(0, 20)), std::invalid_argument);
  EXPECT_THROW(factor_in_window(G, B, range(0, 83)), std::invalid_argument);
  EXPECT_THROW(factor_in_window(G, B, range(0, 41), 2), std::invalid_argument);
  EXPECT_THROW(factor_in_window(G, B, range(0, 120)), std::invalid_argument);
}

TEST(FactorInWindow, FailureReported) {
  // the window is an independent set
  HypergraphBuilder b(2, 100);
  for (Vertex u = 0; u < 50; ++u)
    for (Vertex v = 50; v < 100; ++v) b.add_edge({u, v});
  auto r = factor_in_window(b.build(), Hypergraph::complete(2, 3), range(0, 50));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed_window, std::optional<std::size_t>(0));
}

// B^2_5 at m1 = 21/10; W = 336 vertices, quota 4
TEST(FactorInWindow, MonteCarloBackbone) {
  auto B = backbone_graph(2, 5, Mode::power);
  int ok = 0;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    auto G = sample_uniform_hypergraph(2, 400, 0.3, derive_seed(57, trial));
    auto W = range(64, 400);
    auto r = factor_in_window(G, B, W, SearchLimits{2'000'000});
    if (r.ok()) {
      ASSERT_TRUE(disjoint_copies(G, B, r.copies, &W));
      ASSERT_EQ(r.copies.size(), 4u);
      ++ok;
    }
  }
  EXPECT_GE(ok, 45);
}
