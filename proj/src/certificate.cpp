#include "hcp/certificate.hpp"

#include <stdexcept>
#include <string>

#include "hcp/kernels.hpp"

namespace hcp {

bool is_embedding(const Hypergraph& F, const Hypergraph& G, const Embedding& f) {
  if (F.uniformity() != G.uniformity()) throw std::invalid_argument("template and host uniformity differ");
  if (f.size() != F.vertex_count()) return false;
  std::vector<char> used(G.vertex_count(), 0);
  for (Vertex v : f) {
    if (v >= G.vertex_count() || used[v]) return false;
    used[v] = 1;
  }
  bool ok = true;
  std::vector<Vertex> img(static_cast<std::size_t>(F.uniformity()));
  F.for_each_edge([&](std::span<const Vertex> e) {
    if (!ok) return;
    for (std::size_t i = 0; i < e.size(); ++i) img[i] = f[e[i]];
    ok = G.has_edge(img);
  });
  return ok;
}

namespace {

void check_mode(const Hypergraph& G, Mode mode, int k) {
  if (k < 1) throw std::invalid_argument("certificate k must be >= 1");
  if (G.uniformity() != host_uniformity(mode, k))
    throw std::invalid_argument(std::string(to_string(mode)) + " mode with k=" + std::to_string(k) +
                                " needs a " + std::to_string(host_uniformity(mode, k)) + "-uniform host, got " +
                                std::to_string(G.uniformity()));
}

}  // namespace

bool verify_certificate(const Hypergraph& G, const CycleCertificate& cert) {
  check_mode(G, cert.mode, cert.k);
  const Vertex n = G.vertex_count();
  if (cert.order.size() != n) throw std::invalid_argument("certificate does not list every vertex exactly once");
  std::vector<char> seen(n, 0);
  for (Vertex v : cert.order) {
    if (v >= n || seen[v]) throw std::invalid_argument("certificate ordering is not a permutation");
    seen[v] = 1;
  }
  // a tight window would wrap onto itself
  if (cert.mode == Mode::tight && n < static_cast<Vertex>(G.uniformity())) return false;
  return kernels::omp::cyclic_windows_ok(G, cert.order, cert.k, cert.mode);
}

bool verify_path(const Hypergraph& G, std::span<const Vertex> order, int k, Mode mode) {
  check_mode(G, mode, k);
  std::vector<char> seen(G.vertex_count(), 0);
  for (Vertex v : order) {
    if (v >= G.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  const std::size_t len = order.size();
  if (mode == Mode::power) {
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t d = 1; d <= static_cast<std::size_t>(k) && i + d < len; ++d)
        if (!G.adjacent(order[i], order[i + d])) return false;
    return true;
  }
  for (std::size_t i = 0; i + k < len; ++i)
    if (!G.has_edge(order.subspan(i, static_cast<std::size_t>(k) + 1))) return false;
  return true;
}

}  // namespace hcp
