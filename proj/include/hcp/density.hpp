#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "hcp/hypergraph.hpp"
#include "hcp/types.hpp"

namespace hcp {

/// Reduced fraction with positive denominator; comparisons are exact.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    auto l = static_cast<__int128>(a.num_) * b.den_;
    auto r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Template F with a root tuple x over V(F).
struct RootedTemplate {
  Hypergraph tmpl;
  VertexTuple root;

  RootedTemplate(Hypergraph t, VertexTuple r);
  std::size_t free_count() const { return tmpl.vertex_count() - root.size(); }
  /// No edge of F lies entirely inside the root set.
  bool root_independent() const;
};

/// max e(H)/(v(H)-1) over subgraphs with at least one edge.
/// Exact: parametric max-closure (min cut) instead of subset enumeration.
Rational m1_density(const Hypergraph& F);

/// max e(F')/(v(F') - max{1, |V(F') ∩ X|}) over subgraphs with an edge that
/// contain all of X or avoid X. Throws on edgeless F or a dependent root.
Rational m_density(const RootedTemplate& rt);

/// True iff every vertex closes at most k edges, counting for each vertex
/// the edges whose last vertex in the order it is.
bool is_degenerate_ordering(const Hypergraph& F, const VertexTuple& ordering, int k);

/// Backbone vertex order x, rev wa1, then (rev wa_i, wb_i) for even i,
/// then wb_l, rev wa_l, then (wb_i, rev wa_i) for odd i from l-2 down to 3,
/// then wb1. Labels as in BackboneLabels. Needs odd l >= 3.
VertexTuple backbone_degeneracy_ordering(int k, int l);

}  // namespace hcp
