#pragma once

#include "hcp/hypergraph.hpp"
#include "hcp/types.hpp"

namespace hcp {

/// k-th power of a path on l vertices: {i, j} for 0 < j - i <= k.
Hypergraph power_path_template(int k, int l);

/// Power path with the edges inside the first k and inside the last k
/// vertices removed, so both end blocks act as free sockets.
Hypergraph connecting_path_template(int k, int l);

/// (k+1)-uniform tight path on l vertices: windows {i, ..., i+k}.
Hypergraph tight_path_template(int k, int l);

/// End blocks of a path template on l vertices: (0..k-1, l-k..l-1).
VertexTuple path_root(int k, int l);

/// Vertex labels of the backbone on 1 + 2kl vertices:
/// x = 0, w_{i,j} = 1 + (i-1)2k + (j-1) for i in [1,l], j in [1,2k].
struct BackboneLabels {
  int k;
  int l;
  Vertex x() const { return 0; }
  Vertex w(int i, int j) const { return static_cast<Vertex>(1 + (i - 1) * 2 * k + (j - 1)); }
  VertexTuple wa(int i) const;  // first k of block i
  VertexTuple wb(int i) const;  // last k of block i
  Vertex vertex_count() const { return static_cast<Vertex>(1 + 2 * k * l); }
};

/// The vertex sequences whose k-paths (tight paths) make up the backbone:
/// (wa1, x, wb1); (wa_i, wb_i) for 2 <= i <= l; (wa2, rev wa1);
/// (wa_{i+2}, wb_i) for 1 <= i <= l-2; (rev wb_l, wb_{l-1}).
std::vector<VertexTuple> backbone_sequences(int k, int l);

/// Union of the constituent paths: graph in power mode, (k+1)-graph in
/// tight mode. Needs k >= 1, l >= 3; no parity check here.
Hypergraph backbone_graph(int k, int l, Mode mode);

}  // namespace hcp
