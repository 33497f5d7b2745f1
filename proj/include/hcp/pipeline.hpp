#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcp/absorber.hpp"
#include "hcp/certificate.hpp"
#include "hcp/hypergraph.hpp"
#include "hcp/params.hpp"
#include "hcp/randmodels.hpp"

namespace hcp {

/// Hopcroft-Karp. mate[l] is the right partner of left vertex l, or none if
/// no perfect matching exists. Throws on unbalanced sides.
std::optional<std::vector<std::uint32_t>> perfect_matching(const BipartiteGraph& B);

/// Maximum matching size (same algorithm; no balance requirement).
std::size_t maximum_matching_size(const BipartiteGraph& B);

struct CoverFamily {
  int k = 0;
  Mode mode = Mode::power;
  std::vector<std::vector<Vertex>> parts;  // U_1..U_t
  std::vector<std::vector<Vertex>> paths;  // Q_1..Q_s; paths[i][j] lies in parts[j]
  VertexTuple a(std::size_t i) const;      // first k vertices of Q_i
  VertexTuple b(std::size_t i) const;      // last k vertices of Q_i
};

struct CoverResult {
  std::optional<CoverFamily> family;
  int failed_step = 0;  // j + 1 of the matching that did not exist
  bool ok() const { return family.has_value(); }
};

/// Splits U u U_X (ascending) into t consecutive equal parts and grows s
/// paths one part at a time through perfect matchings. Power mode: the new
/// vertex must be adjacent to each of the last min(k, j) path vertices.
/// Tight mode: once the path has k vertices, its last k plus the new vertex
/// must be an edge. Throws unless t divides |U u U_X|.
CoverResult cover_with_paths(const Hypergraph& G2, const std::vector<Vertex>& U, const std::vector<Vertex>& U_X, int t,
                             int k, Mode mode);

/// Disjointness, transversality and path validity of a cover family.
bool is_cover_family(const Hypergraph& G, const CoverFamily& f);

/// Sizes chosen for one run of find_hamilton on n vertices.
struct Plan {
  Vertex n = 0;
  int k = 0;
  Mode mode = Mode::power;
  int ell = 0;                 // backbone length
  int connector_length = 0;    // L
  int absorb_size = 0;         // |X|
  std::size_t absorber_vertices = 0;
  std::size_t cover_vertices = 0;  // |U|
  int paths = 0;               // s
  int t_cover = 0;             // parts of the cover
  int ux = 0;                  // |U_X|
  int final_rounds = 0;        // rounds of the last connect step
};

/// Throws std::invalid_argument when no feasible plan exists (n too small).
Plan plan_pipeline(Vertex n, const Parameters& cfg);

/// Rounds used for a connect step on |W| = w with c internal vertices per
/// copy: ceil(log2 n) clamped so every piece holds at least one copy.
int clamped_rounds(Vertex n, std::size_t w, int c);

struct HamiltonResult {
  std::optional<CycleCertificate> certificate;
  std::string phase_failed;                 // last attempt; empty on success
  std::vector<std::string> attempt_phases;  // one per attempt
  Plan plan;
  int attempts() const { return static_cast<int>(attempt_phases.size()); }
  bool ok() const { return certificate.has_value(); }
};

/// End-to-end search on G. Each attempt splits G into three parts with a
/// seed derived from cfg.seed (rate p when G was drawn from G(n, p), else the
/// edge density), builds the absorber on part 1, covers the rest on part 2,
/// connects on part 3 and absorbs. Nothing is returned unless the verifier
/// accepts it against G. Up to 1 + cfg.retries attempts.
HamiltonResult find_hamilton(const Hypergraph& G, const Parameters& cfg, std::optional<double> p = std::nullopt);

struct ExperimentConfig {
  Parameters base;  // base.seed is the experiment seed
  std::vector<Vertex> ns;
  std::vector<double> ps;
  int trials = 1;
  int jobs = 1;
};

struct TrialRecord {
  Vertex n = 0;
  double p = 0;
  int trial = 0;
  Seed seed = 0;
  bool success = false;
  std::string phase_failed;
  double runtime_ms = 0;
};

/// Seed of trial i at grid point g: derive_seed(derive_seed(base, g), i).
Seed trial_seed(Seed base, std::size_t grid_point, int trial);

/// One G(n, p) sample and one find_hamilton call per trial; records come
/// back in (n, p, trial) order whatever the scheduling.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);

/// CSV with header n,p,trial,seed,success,phase_failed,runtime_ms.
/// runtime_ms is left empty unless `timing`.
std::string experiment_csv(const std::vector<TrialRecord>& rows, bool timing);

}  // namespace hcp
