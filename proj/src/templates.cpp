#include "hcp/templates.hpp"

#include <stdexcept>
#include <string>

namespace hcp {
namespace {

void add_power_path(HypergraphBuilder& b, const VertexTuple& seq, int k) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size() && j - i <= static_cast<std::size_t>(k); ++j)
      b.add_edge({seq[i], seq[j]});
}

// returns number of windows that were already present
int add_tight_path(HypergraphBuilder& b, const VertexTuple& seq, int k) {
  int repeats = 0;
  for (std::size_t i = 0; i + k < seq.size(); ++i) {
    std::vector<Vertex> e(seq.begin() + i, seq.begin() + i + k + 1);
    if (!b.insert(std::move(e))) ++repeats;
  }
  return repeats;
}

}  // namespace

Hypergraph power_path_template(int k, int l) {
  if (k < 1) throw std::invalid_argument("power path needs k >= 1");
  if (l < 2) throw std::invalid_argument("power path needs l >= 2");
  HypergraphBuilder b(2, static_cast<Vertex>(l));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l && j - i <= k; ++j) b.add_edge({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return b.build();
}

Hypergraph connecting_path_template(int k, int l) {
  if (k < 1) throw std::invalid_argument("connecting path needs k >= 1");
  if (l <= 2 * k) throw std::invalid_argument("connecting path needs l > 2k");
  HypergraphBuilder b(2, static_cast<Vertex>(l));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l && j - i <= k; ++j) {
      if (j < k || i >= l - k) continue;  // both inside an end block
      b.add_edge({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  return b.build();
}

Hypergraph tight_path_template(int k, int l) {
  if (k < 1) throw std::invalid_argument("tight path needs k >= 1");
  if (l <= k) throw std::invalid_argument("tight path needs l > k");
  HypergraphBuilder b(k + 1, static_cast<Vertex>(l));
  for (int i = 0; i + k < l; ++i) {
    std::vector<Vertex> e;
    for (int j = 0; j <= k; ++j) e.push_back(static_cast<Vertex>(i + j));
    b.add_edge(std::move(e));
  }
  return b.build();
}

VertexTuple path_root(int k, int l) {
  if (l < 2 * k) throw std::invalid_argument("path too short for two disjoint end blocks");
  std::vector<Vertex> r;
  for (int i = 0; i < k; ++i) r.push_back(static_cast<Vertex>(i));
  for (int i = l - k; i < l; ++i) r.push_back(static_cast<Vertex>(i));
  return VertexTuple(std::move(r));
}

VertexTuple BackboneLabels::wa(int i) const {
  std::vector<Vertex> v;
  for (int j = 1; j <= k; ++j) v.push_back(w(i, j));
  return VertexTuple(std::move(v));
}

VertexTuple BackboneLabels::wb(int i) const {
  std::vector<Vertex> v;
  for (int j = k + 1; j <= 2 * k; ++j) v.push_back(w(i, j));
  return VertexTuple(std::move(v));
}

std::vector<VertexTuple> backbone_sequences(int k, int l) {
  if (k < 1) throw std::invalid_argument("backbone needs k >= 1");
  if (l < 3) throw std::invalid_argument("backbone needs l >= 3");
  BackboneLabels L{k, l};
  std::vector<VertexTuple> seqs;
  seqs.push_back(L.wa(1) + VertexTuple{L.x()} + L.wb(1));
  for (int i = 2; i <= l; ++i) seqs.push_back(L.wa(i) + L.wb(i));
  seqs.push_back(L.wa(2) + L.wa(1).reversed());
  for (int i = 1; i <= l - 2; ++i) seqs.push_back(L.wa(i + 2) + L.wb(i));
  seqs.push_back(L.wb(l).reversed() + L.wb(l - 1));
  return seqs;
}

Hypergraph backbone_graph(int k, int l, Mode mode) {
  auto seqs = backbone_sequences(k, l);
  BackboneLabels L{k, l};
  if (mode == Mode::power) {
    HypergraphBuilder b(2, L.vertex_count());
    for (const auto& s : seqs) add_power_path(b, s, k);
    return b.build();
  }
  HypergraphBuilder b(k + 1, L.vertex_count());
  int repeats = 0;
  for (const auto& s : seqs) repeats += add_tight_path(b, s, k);
  if (repeats != 0) throw std::logic_error("tight backbone paths are not edge-disjoint");
  return b.build();
}

}  // namespace hcp
