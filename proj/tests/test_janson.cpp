#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hcp/janson.hpp"
#include "hcp/randmodels.hpp"
#include "hcp/templates.hpp"
#include "oracles.hpp"

using namespace hcp;

namespace {

Hypergraph triangle() { return Hypergraph::complete(2, 3); }

}  // namespace

TEST(ExpectedLexCopies, Examples) {
  EXPECT_NEAR(expected_lex_copies(5, triangle(), 0.5), 1.25, 1e-12);
  EXPECT_NEAR(expected_lex_copies(9, triangle(), 1.0), 84.0, 1e-9);
  EXPECT_NEAR(expected_lex_copies(4, Hypergraph::from_edges(2, 2, {{0, 1}}), 0.5), 3.0, 1e-12);
  EXPECT_THROW(expected_lex_copies(2, triangle(), 0.5), std::invalid_argument);
}

TEST(DeltaUpperBound, Examples) {
  EXPECT_EQ(delta_upper_bound(10, Hypergraph::from_edges(2, 2, {{0, 1}}), 0.5), 0.0);
  // j = 2 only: C(5,2) C(3,1)^2 p^(6 - 3/2)
  EXPECT_NEAR(delta_upper_bound(5, triangle(), 0.5), 90 * std::pow(0.5, 4.5), 1e-9);
  EXPECT_GE(delta_upper_bound(5, triangle(), 0.5), 1.875);
  EXPECT_LT(delta_upper_bound(50, triangle(), 1e-6), 1e-12);
  EXPECT_THROW(delta_upper_bound(5, Hypergraph(2, 3), 0.5), std::invalid_argument);
}

TEST(ExactMuDelta, TriangleOnFive) {
  auto md = exact_mu_delta(5, triangle(), 0.5);
  EXPECT_EQ(md.copies, 10u);
  EXPECT_NEAR(md.mu, 1.25, 1e-12);
  // 10 triangles, each shares one edge with 3 * 2 others
  EXPECT_NEAR(md.delta, 60 * std::pow(0.5, 5), 1e-12);
  auto [mu, delta] = oracle::naive_mu_delta(5, triangle(), 0.5);
  EXPECT_NEAR(md.delta, delta, 1e-12);
  EXPECT_NEAR(md.mu, mu, 1e-12);
}

TEST(ExactMuDelta, Degenerate) {
  auto md = exact_mu_delta(3, triangle(), 0.7);
  EXPECT_EQ(md.copies, 1u);
  EXPECT_EQ(md.delta, 0.0);
  auto full = exact_mu_delta(6, triangle(), 1.0);
  EXPECT_EQ(full.mu, 20.0);
  EXPECT_EQ(full.delta, 20.0 * 3 * 3);  // each edge lies in 4 triangles
  EXPECT_THROW(exact_mu_delta(30, triangle(), 0.5, 1000), std::invalid_argument);
}

TEST(ExactMuDelta, AgreesWithNaivePairsAndKernelsAgree) {
  std::vector<Hypergraph> hs{triangle(), power_path_template(1, 4), power_path_template(2, 4),
                             tight_path_template(2, 4), Hypergraph::from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}})};
  for (const auto& h : hs)
    for (Vertex n : {6u, 9u})
      for (double p : {0.3, 0.9}) {
        auto a = exact_mu_delta(n, h, p);
        auto b = exact_mu_delta_serial(n, h, p);
        EXPECT_EQ(a.delta, b.delta);
        auto [mu, delta] = oracle::naive_mu_delta(n, h, p);
        EXPECT_NEAR(a.mu, mu, 1e-9 * mu);
        EXPECT_NEAR(a.delta, delta, 1e-9 * (delta + 1));
      }
}

TEST(ExactMuDelta, UpperBoundDominates) {
  std::vector<Hypergraph> hs{triangle(),
                             power_path_template(1, 3),
                             power_path_template(1, 4),
                             power_path_template(2, 4),
                             Hypergraph::complete(2, 4),
                             tight_path_template(2, 4),
                             Hypergraph::complete(3, 4),
                             Hypergraph::from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}})};
  for (const auto& h : hs)
    for (Vertex n : {6u, 9u, 12u})
      for (double p : {0.3, 0.5, 0.9}) {
        auto md = exact_mu_delta(n, h, p);
        EXPECT_GE(delta_upper_bound(n, h, p) * (1 + 1e-12), md.delta) << n << " " << p;
        EXPECT_NEAR(expected_lex_copies(n, h, p), md.mu, 1e-9 * md.mu);
      }
}

TEST(LowerTailBound, Examples) {
  EXPECT_NEAR(lower_tail_bound(1.25, 1.875, 0.5), std::exp(-0.0625), 1e-15);
  EXPECT_NEAR(lower_tail_bound(1.25, 1.875, 0.5), 0.9394, 1e-4);
  EXPECT_EQ(lower_tail_bound(0.0, 3.0, 0.5), 1.0);
  EXPECT_NEAR(lower_tail_bound(8.0, 0.0, 0.5), std::exp(-1.0), 1e-15);
  EXPECT_THROW(lower_tail_bound(1, 1, 0.0), std::invalid_argument);
  EXPECT_THROW(lower_tail_bound(1, 1, 1.0), std::invalid_argument);
  auto j = JansonParams::make(1.25, 1.875, 0.5);
  EXPECT_EQ(j.bound, lower_tail_bound(j));
}

TEST(LowerTailBound, Monotone) {
  double prev = 1.0;
  for (double mu = 0.5; mu < 50; mu *= 1.5) {
    double b = lower_tail_bound(mu, 2 * mu, 0.5);
    EXPECT_LT(b, prev);
    prev = b;
  }
  EXPECT_LT(lower_tail_bound(4, 1, 0.5), lower_tail_bound(4, 2, 0.5));
}

TEST(CountLexCopies, MatchesDefinition) {
  EXPECT_EQ(count_lex_copies(Hypergraph::complete(2, 6), triangle()), 20u);
  auto g = Hypergraph::from_edges(2, 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(count_lex_copies(g, triangle()), 1u);
  // P^1_3 lexicographic copy on {a<b<c} uses ab, bc only: {0,1,2}, {0,2,3}, {1,2,3}
  EXPECT_EQ(count_lex_copies(g, power_path_template(1, 3)), 3u);
}

TEST(DeltaRootedBound, Trivial) {
  RootedTemplate edge(Hypergraph::from_edges(2, 2, {{0, 1}}), VertexTuple{0});
  auto b = delta_rooted_bound(edge, 100, 50, 5, 0.5);
  EXPECT_EQ(b.delta1, 0.0);  // j runs from 2 to 1
  EXPECT_GT(b.delta2, 0.0);
  RootedTemplate unrooted(triangle(), VertexTuple{});
  EXPECT_EQ(delta_rooted_bound(unrooted, 100, 50, 3, 0.5).delta2, 0.0);
  auto small = delta_rooted_bound(RootedTemplate(power_path_template(1, 4), VertexTuple{0, 3}), 100, 60, 4, 1e-8);
  EXPECT_LT(small.total(), 1e-12);
  EXPECT_EQ(delta_rooted_bound(edge, 100, 50, 0, 0.5).total(), 0.0);
}

// exact delta of the rooted family on a tiny instance, split the same way
TEST(DeltaRootedBound, DominatesEnumeration) {
  struct Case {
    Hypergraph f;
    VertexTuple x;
  };
  std::vector<Case> cases{{power_path_template(1, 4), VertexTuple{0, 3}},
                          {Hypergraph::from_edges(2, 3, {{0, 1}, {1, 2}, {0, 2}}), VertexTuple{0}},
                          {power_path_template(1, 3), VertexTuple{0}},
                          {tight_path_template(1, 5), VertexTuple{0, 4}}};
  for (const auto& c : cases)
    for (std::uint64_t t : {1u, 2u})
      for (double p : {0.3, 0.6}) {
        const Vertex r = static_cast<Vertex>(c.x.size()), v = c.f.vertex_count(), freec = v - r;
        const Vertex s = 9;
        const Vertex sp = s - static_cast<Vertex>(t) * freec;
        // host: roots y_i on 0.., S' on the next sp vertices
        const Vertex n = static_cast<Vertex>(t) * r + s;
        std::vector<std::vector<std::vector<Vertex>>> copies;
        std::vector<std::vector<Vertex>> vsets;
        std::vector<Vertex> free_ids;
        for (Vertex u = 0; u < v; ++u)
          if (!c.x.contains(u)) free_ids.push_back(u);
        for (std::uint64_t i = 0; i < t; ++i) {
          std::vector<Vertex> q(freec);
          std::iota(q.begin(), q.end(), 0);
          do {
            std::vector<Vertex> f(v);
            for (Vertex a = 0; a < r; ++a) f[c.x[a]] = static_cast<Vertex>(i * r + a);
            for (Vertex a = 0; a < freec; ++a) f[free_ids[a]] = static_cast<Vertex>(t * r) + q[a];
            std::vector<std::vector<Vertex>> es;
            c.f.for_each_edge([&](std::span<const Vertex> e) {
              std::vector<Vertex> img;
              for (Vertex u : e) img.push_back(f[u]);
              std::sort(img.begin(), img.end());
              es.push_back(img);
            });
            std::sort(es.begin(), es.end());
            copies.push_back(es);
            std::sort(f.begin(), f.end());
            vsets.push_back(f);
          } while (next_combination(q, sp));
        }
        const double e = static_cast<double>(c.f.edge_count());
        double d1 = 0, d2 = 0;
        for (std::size_t a = 0; a < copies.size(); ++a)
          for (std::size_t b = 0; b < copies.size(); ++b) {
            if (a == b) continue;
            std::vector<std::vector<Vertex>> common;
            std::set_intersection(copies[a].begin(), copies[a].end(), copies[b].begin(), copies[b].end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            std::vector<Vertex> shared;
            std::set_intersection(vsets[a].begin(), vsets[a].end(), vsets[b].begin(), vsets[b].end(),
                                  std::back_inserter(shared));
            bool touches_roots = std::any_of(shared.begin(), shared.end(), [&](Vertex u) { return u < t * r; });
            double term = std::pow(p, 2 * e - static_cast<double>(common.size()));
            (touches_roots ? d2 : d1) += term;
          }
        auto bound = delta_rooted_bound(RootedTemplate(c.f, c.x), n, s, t, p);
        EXPECT_GE(bound.delta1 * (1 + 1e-12), d1);
        EXPECT_GE(bound.delta2 * (1 + 1e-12), d2);
      }
}

TEST(Janson, EmpiricalLowerTail) {
  const Vertex n = 12;
  const double p = 0.4;
  auto md = exact_mu_delta(n, triangle(), p);
  const double bound = lower_tail_bound(md.mu, md.delta, 0.5);
  const int samples = 10000;
  int low = 0;
  for (int s = 0; s < samples; ++s) {
    auto g = sample_uniform_hypergraph(2, n, p, derive_seed(2024, s));
    if (static_cast<double>(count_lex_copies(g, triangle())) < md.mu / 2) ++low;
  }
  const double freq = static_cast<double>(low) / samples;
  const double sigma = std::sqrt(bound * (1 - bound) / samples);
  EXPECT_LE(freq, bound + 3 * sigma);
}
