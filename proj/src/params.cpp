#include "hcp/params.hpp"

#include <cmath>
#include <stdexcept>

namespace hcp {

namespace {

int ceil_log2(std::uint64_t n) {
  int r = 0;
  while (r < 63 && (std::uint64_t{1} << r) < n) ++r;
  return r;
}

}  // namespace

int log_backbone_length(std::uint64_t n) {
  int l = std::max(5, ceil_log2(n));
  return l % 2 ? l : l + 1;
}

int formula_absorber_size(std::uint64_t n) {
  if (n < 2) return 0;
  const double lg = std::log2(static_cast<double>(n));
  return static_cast<int>(std::floor(static_cast<double>(n) / (16.0 * lg * lg)));
}

int resolved_connector_length(const Parameters& cfg) {
  if (cfg.connector_length > 0) return cfg.connector_length;
  return cfg.mode == Mode::power ? 3 * cfg.k : 2 * cfg.k + 1;
}

int resolved_backbone_length(const Parameters& cfg, std::uint64_t n) {
  if (cfg.ell < 0) throw std::invalid_argument("backbone length must be >= 0");
  return cfg.ell > 0 ? cfg.ell : log_backbone_length(n);
}

}  // namespace hcp
