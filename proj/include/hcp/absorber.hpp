#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcp/certificate.hpp"
#include "hcp/hypergraph.hpp"
#include "hcp/matcher.hpp"
#include "hcp/params.hpp"
#include "hcp/templates.hpp"

namespace hcp {

struct Backbone {
  Hypergraph graph;
  BackboneLabels labels;
  Mode mode;
};

/// B^k_l (power, 2-uniform) or BH^k_l (tight, (k+1)-uniform). Needs odd l >= 5
/// and k >= 1.
Backbone backbone_template(int k, int l, Mode mode);

/// Backbone copy plus the connectors U_1..U_{l-1}; connectors[i] holds the
/// internal vertices of the path from w_{i+1}^b to w_{i+2}^a (0-based i).
struct SingleVertexAbsorber {
  int k = 0;
  int l = 0;
  Mode mode = Mode::power;
  Embedding backbone;
  std::vector<std::vector<Vertex>> connectors;

  Vertex x() const { return backbone.at(0); }
  VertexTuple image(const VertexTuple& t) const;
  VertexTuple a() const;  // image of w_1^a
  VertexTuple b() const;  // image of w_l^b
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const;
};

/// include_x: w1a, x, w1b, U1, w2a, w2b, U2, ..., wla, wlb.
/// otherwise: w1a, rev w2a, rev U1, rev w1b, rev w3a, rev U2, rev w2b, ...,
///            rev wla, rev U_{l-1}, rev w_{l-1}b, wlb.
/// Throws on a structurally invalid absorber.
std::vector<Vertex> absorb_single(const SingleVertexAbsorber& A, bool include_x);

struct ChainAbsorber {
  int k = 0;
  Mode mode = Mode::power;
  std::vector<SingleVertexAbsorber> parts;
  std::vector<std::vector<Vertex>> chain;  // internal vertices of Q_i from b_i to a_{i+1}

  VertexTuple a() const { return parts.front().a(); }
  VertexTuple b() const { return parts.back().b(); }
  std::vector<Vertex> absorbable() const;  // x_1..x_t
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const;
};

/// Path from a to b on V(A) \ X'. Throws unless X' is a subset of X.
std::vector<Vertex> absorb(const ChainAbsorber& A, const std::vector<Vertex>& X_prime);

/// Every component embeds in G and all pieces are disjoint as required.
bool is_valid_absorber(const Hypergraph& G, const SingleVertexAbsorber& A);
bool is_valid_absorber(const Hypergraph& G, const ChainAbsorber& A);

struct AbsorberBuild {
  std::optional<ChainAbsorber> absorber;
  std::string failed_phase;  // factor, intra-connect, chain-connect
  ConnectReport report;      // of the failing connect step
  bool ok() const { return absorber.has_value(); }
};

/// v(A) for t absorbers with backbone length l and connector length L.
std::size_t chain_absorber_size(int k, int l, int L, std::size_t t);

/// Equipartition by residue mod 3; t backbones in W1, intra-absorber
/// connectors in W2, chain connectors in W3. |X| = cfg.absorb_size or
/// floor(n / (16 log2^2 n)). Throws if |X| < 1 or v(A) would exceed n/2.
AbsorberBuild build_chain_absorber(const Hypergraph& G1, const Parameters& cfg);

/// absorb(A, X') is a path of G from a to b on exactly V(A) minus X'.
bool absorbs_correctly(const Hypergraph& G, const ChainAbsorber& A, const std::vector<Vertex>& X_prime);

/// Number of random X' (each absorbable vertex kept with probability 1/2)
/// that pass absorbs_correctly.
int validate_absorber(const Hypergraph& G, const ChainAbsorber& A, int samples, Seed seed);

/// Single-vertex absorber on the complete host of the right size, shortest
/// connectors (length 2k + 1), backbone on the lowest labels.
std::pair<Hypergraph, SingleVertexAbsorber> complete_host_absorber(int k, int l, Mode mode);

}  // namespace hcp
