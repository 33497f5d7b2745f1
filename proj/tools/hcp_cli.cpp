#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hcp/absorber.hpp"
#include "hcp/density.hpp"
#include "hcp/factor.hpp"
#include "hcp/io.hpp"
#include "hcp/janson.hpp"
#include "hcp/pipeline.hpp"
#include "hcp/randmodels.hpp"
#include "hcp/templates.hpp"

using namespace hcp;

namespace {

constexpr int kUsage = 1;
constexpr int kFailed = 2;

std::string shortest(double x) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, r.ptr};
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// builtin:triangle, builtin:path-K-L, builtin:tight-K-L, builtin:backbone-K-L, or a file
Hypergraph load_template(const std::string& arg) {
  const std::string pre = "builtin:";
  if (arg.rfind(pre, 0) != 0) return load_hypergraph(arg);
  const std::string name = arg.substr(pre.size());
  if (name == "triangle") return Hypergraph::complete(2, 3);
  int k = 0, l = 0;
  char kind[16] = {};
  if (std::sscanf(name.c_str(), "%15[a-z]-%d-%d", kind, &k, &l) == 3) {
    const std::string K = kind;
    if (K == "path") return power_path_template(k, l);
    if (K == "tight") return tight_path_template(k, l);
    if (K == "backbone") return backbone_graph(k, l, Mode::power);
  }
  throw std::invalid_argument("unknown template " + arg);
}

// graph seed and run seed both derive from the user seed
Seed graph_seed(Seed s) { return derive_seed(s, 0); }
Seed run_seed(Seed s) { return derive_seed(s, 1); }

struct ModelArgs {
  std::string model;
  Vertex n = 0;
  double p = 0.0;
};

void add_model(CLI::App* c, ModelArgs& m) {
  c->add_option("--model", m.model, "random model: gnp (power mode) or hgnp (tight mode)")
      ->check(CLI::IsMember({"gnp", "hgnp"}));
  c->add_option("--n", m.n, "vertices");
  c->add_option("--p", m.p, "edge probability")->check(CLI::Range(0.0, 1.0));
}

Hypergraph model_graph(const ModelArgs& m, const Parameters& cfg) {
  if (m.model == "gnp" && cfg.mode != Mode::power) throw std::invalid_argument("--model gnp needs --mode power");
  if (m.model == "hgnp" && cfg.mode != Mode::tight) throw std::invalid_argument("--model hgnp needs --mode tight");
  if (m.n == 0) throw std::invalid_argument("--model needs --n");
  return sample_uniform_hypergraph(host_uniformity(cfg.mode, cfg.k), m.n, m.p, graph_seed(cfg.seed));
}

void add_params(CLI::App* c, Parameters& cfg, std::string& mode) {
  c->add_option("--k", cfg.k, "power / tightness parameter")->check(CLI::Range(1, 8));
  c->add_option("--mode", mode, "power or tight")->check(CLI::IsMember({"power", "tight"}));
  c->add_option("--seed", cfg.seed, "seed (default " + std::to_string(kDefaultSeed) + ")");
  c->add_option("--retries", cfg.retries, "extra attempts with derived seeds")->check(CLI::NonNegativeNumber);
  c->add_option("--ell", cfg.ell, "backbone length, odd >= 5; 0 uses the log rule")->check(CLI::NonNegativeNumber);
  c->add_option("--connector-length", cfg.connector_length, "connecting path length L; 0 picks 3k or 2k+1");
  c->add_option("--rounds", cfg.rounds, "reservoir rounds; 0 picks ceil(log2 n)");
  c->add_option("--absorb-size", cfg.absorb_size, "|X|; 0 picks the largest that fits");
  c->add_option("--t-cover", cfg.t_cover, "cover path length; 0 lets the planner choose");
  c->add_option("--node-budget", cfg.node_budget, "search nodes per rooted copy; 0 is unlimited");
  c->add_flag("--enforce-hypotheses", cfg.enforce_hypotheses, "check reservoir size hypotheses before connecting");
  c->add_option("--C", cfg.C, "threshold constant, reporting only");
  c->add_option("--C-prime", cfg.C_prime, "split threshold constant, reporting only");
}

void print_thresholds(std::ostream& out, const Parameters& cfg, Vertex n, double p) {
  const double L8 = std::pow(std::log2(static_cast<double>(n)), 8) / n;
  if (cfg.mode == Mode::power)
    out << "threshold: p^k >= C log^8 n / n gives p >= " << num(std::pow(cfg.C * L8, 1.0 / cfg.k)) << '\n';
  else
    out << "threshold: p >= C log^8 n / n = " << num(cfg.C * L8) << '\n';
  if (p > 0) out << "p = " << shortest(p) << ", split rate q = " << num(three_round_rate(p)) << '\n';
}

void print_plan(std::ostream& out, const Plan& pl) {
  out << "plan: ell " << pl.ell << ", L " << pl.connector_length << ", |X| " << pl.absorb_size << ", absorber "
      << pl.absorber_vertices << ", paths " << pl.paths << " x " << pl.t_cover << ", |U_X| " << pl.ux
      << ", final rounds " << pl.final_rounds << '\n';
}

int cmd_gen(const std::string& model, int k, Vertex n, double p, Seed seed, const std::string& out) {
  std::cout << "seed " << seed << '\n';
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  if (model == "bip") {
    // left side 0..n-1, right side n..2n-1
    auto B = sample_bipartite(n, p, graph_seed(seed));
    HypergraphBuilder b(2, 2 * n);
    for (std::uint32_t l = 0; l < n; ++l)
      for (auto r : B.neighbors(l)) b.add_edge({l, n + r});
    write_hypergraph(f, b.build());
  } else {
    const int u = model == "gnp" ? 2 : k;
    if (model == "hgnp" && k < 2) throw std::invalid_argument("hgnp needs --k >= 2 (the uniformity)");
    write_hypergraph(f, sample_uniform_hypergraph(u, n, p, graph_seed(seed)));
  }
  return 0;
}

int cmd_find(const std::string& graph, const ModelArgs& m, Parameters cfg, const std::string& out) {
  std::cout << "seed " << cfg.seed << '\n';
  const bool from_model = !m.model.empty();
  if (from_model == !graph.empty()) throw std::invalid_argument("give exactly one of --graph and --model");
  const Hypergraph G = from_model ? model_graph(m, cfg) : load_hypergraph(graph);
  const double p = from_model ? m.p : 0.0;
  std::cout << "host: uniformity " << G.uniformity() << ", n " << G.vertex_count() << ", m " << G.edge_count()
            << '\n';
  print_thresholds(std::cout, cfg, G.vertex_count(), p);
  print_plan(std::cout, plan_pipeline(G.vertex_count(), cfg));
  const Seed user = cfg.seed;
  cfg.seed = run_seed(user);
  auto r = find_hamilton(G, cfg, from_model ? std::optional<double>(p) : std::nullopt);
  for (std::size_t i = 0; i < r.attempt_phases.size(); ++i)
    std::cout << "attempt " << i + 1 << ": " << (r.attempt_phases[i].empty() ? "ok" : r.attempt_phases[i]) << '\n';
  if (!r.ok()) {
    std::cout << "failed: " << r.phase_failed << '\n';
    return kFailed;
  }
  std::cout << "verified " << to_string(cfg.mode) << ' ' << cfg.k << " cycle on " << G.vertex_count()
            << " vertices\n";
  if (!out.empty()) save_certificate(out, *r.certificate);
  return 0;
}

int cmd_verify(const std::string& graph, const ModelArgs& m, const Parameters& cfg, const std::string& cert) {
  const bool from_model = !m.model.empty();
  if (from_model == !graph.empty()) throw std::invalid_argument("give exactly one of --graph and --model");
  const auto c = load_certificate(cert);
  Parameters model_cfg = cfg;
  model_cfg.k = c.k;
  model_cfg.mode = c.mode;
  const Hypergraph G = from_model ? model_graph(m, model_cfg) : load_hypergraph(graph);
  bool ok = false;
  try {
    ok = verify_certificate(G, c);
  } catch (const std::invalid_argument& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kFailed;
  }
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? 0 : kFailed;
}

int cmd_density(const std::string& input, const std::vector<Vertex>& root) {
  auto F = load_template(input);
  if (root.empty())
    std::cout << m1_density(F) << '\n';
  else
    std::cout << m_density(RootedTemplate(F, VertexTuple(root))) << '\n';
  return 0;
}

int cmd_janson(Vertex n, double p, const std::string& tmpl, double gamma, bool exact) {
  auto H = load_template(tmpl);
  double mu = 0, delta = 0;
  if (exact) {
    auto md = exact_mu_delta(n, H, p);
    mu = md.mu;
    delta = md.delta;
    std::cout << "copies " << md.copies << '\n';
  } else {
    mu = expected_lex_copies(n, H, p);
    delta = delta_upper_bound(n, H, p);
  }
  std::cout << "mu " << num(mu) << '\n' << (exact ? "delta " : "delta_bound ") << num(delta) << '\n';
  std::cout << "tail " << num(lower_tail_bound(mu, delta, gamma)) << '\n';
  return 0;
}

int cmd_factor(const std::string& graph, const std::string& tmpl, double eps, std::uint64_t budget) {
  auto G = load_hypergraph(graph);
  auto H = load_template(tmpl);
  auto r = almost_factor(G, H, eps, SearchLimits{budget});
  std::cout << "copies " << r.copies.size() << '\n' << "leftover " << r.leftover << '\n';
  if (!r.ok()) {
    std::cout << "failed in window " << *r.failed_window << (r.budget_hit ? " (node budget)" : "") << '\n';
    return kFailed;
  }
  return 0;
}

void print_order(const char* label, const std::vector<Vertex>& v) {
  std::cout << label;
  for (Vertex u : v) std::cout << ' ' << u;
  std::cout << '\n';
}

int cmd_absorber(Parameters cfg, bool demo, int validate) {
  const int l = cfg.ell > 0 ? cfg.ell : 5;
  int rc = 0;
  if (demo || validate == 0) {
    auto [G, A] = complete_host_absorber(cfg.k, l, cfg.mode);
    std::cout << "host: complete, uniformity " << G.uniformity() << ", n " << G.vertex_count() << '\n';
    std::cout << "x " << A.x() << '\n';
    auto with = absorb_single(A, true), without = absorb_single(A, false);
    print_order("with x:", with);
    print_order("without x:", without);
    const bool ok = verify_path(G, with, cfg.k, cfg.mode) && verify_path(G, without, cfg.k, cfg.mode);
    std::cout << (ok ? "both traversals valid" : "traversal invalid") << '\n';
    if (!ok) rc = kFailed;
  }
  if (validate > 0) {
    std::cout << "seed " << cfg.seed << '\n';
    cfg.ell = l;
    if (cfg.absorb_size == 0) cfg.absorb_size = 3;
    const auto size = chain_absorber_size(cfg.k, l, resolved_connector_length(cfg), cfg.absorb_size);
    const auto n = static_cast<Vertex>(4 * size);
    auto G = Hypergraph::complete(host_uniformity(cfg.mode, cfg.k), n);
    auto b = build_chain_absorber(G, cfg);
    if (!b.ok()) {
      std::cout << "construction failed: " << b.failed_phase << '\n';
      return kFailed;
    }
    const int passed = validate_absorber(G, *b.absorber, validate, cfg.seed);
    std::cout << "chain absorber: |X| " << cfg.absorb_size << ", " << b.absorber->vertex_count() << " vertices on "
              << n << '\n';
    std::cout << "validated " << passed << "/" << validate << '\n';
    if (passed != validate) rc = kFailed;
  }
  return rc;
}

int cmd_experiment(ExperimentConfig cfg, const std::string& csv, bool timing) {
  std::cout << "seed " << cfg.base.seed << '\n';
  for (Vertex n : cfg.ns) print_thresholds(std::cout, cfg.base, n, 0.0);
  auto rows = run_experiment(cfg);
  const auto text = experiment_csv(rows, timing);
  if (csv.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(csv, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + csv);
    f << text;
  }
  for (std::size_t i = 0; i < rows.size(); i += static_cast<std::size_t>(cfg.trials)) {
    int ok = 0;
    for (int t = 0; t < cfg.trials; ++t) ok += rows[i + static_cast<std::size_t>(t)].success;
    std::cout << "n " << rows[i].n << " p " << shortest(rows[i].p) << ": " << ok << "/" << cfg.trials << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"powers of Hamilton cycles and tight Hamilton cycles in random (hyper)graphs"};
  app.require_subcommand(1);

  std::string mode = "power";
  Parameters cfg;
  ModelArgs model;

  auto* gen = app.add_subcommand("gen", "sample a random graph or hypergraph");
  std::string gen_model, out;
  int gen_k = 2;
  Vertex gen_n = 0;
  double gen_p = 0;
  Seed gen_seed = kDefaultSeed;
  gen->add_option("--model", gen_model, "gnp, hgnp or bip")->required()->check(CLI::IsMember({"gnp", "hgnp", "bip"}));
  gen->add_option("--k", gen_k, "uniformity for hgnp");
  gen->add_option("--n", gen_n, "vertices (per side for bip)")->required();
  gen->add_option("--p", gen_p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "seed (default " + std::to_string(kDefaultSeed) + ")");
  gen->add_option("--out", out, "output file")->required();

  auto* find = app.add_subcommand("find", "find a cycle and write a verified certificate");
  std::string graph, cert;
  find->add_option("--graph", graph, "host file");
  add_model(find, model);
  add_params(find, cfg, mode);
  find->add_option("--out", cert, "certificate file");

  auto* verify = app.add_subcommand("verify", "check a certificate against a host");
  verify->add_option("--graph", graph, "host file");
  verify->add_option("--cert", cert, "certificate file")->required();
  add_model(verify, model);
  verify->add_option("--seed", cfg.seed, "seed the host was sampled with");

  auto* density = app.add_subcommand("density", "m1 density, or rooted density with --root");
  std::string input;
  std::vector<Vertex> root;
  density->add_option("--input", input, "template file or builtin:NAME")->required();
  density->add_option("--root", root, "root vertices")->delimiter(',');

  auto* janson = app.add_subcommand("janson", "mu, delta and the lower tail bound for copies of a template");
  Vertex jn = 0;
  double jp = 0, gamma = 0.5;
  bool exact = false;
  std::string tmpl;
  janson->add_option("--n", jn, "vertices")->required();
  janson->add_option("--p", jp, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
  janson->add_option("--template", tmpl, "FILE, builtin:triangle or builtin:path-K-L")->required();
  janson->add_option("--gamma", gamma, "tail parameter in (0, 1)");
  janson->add_flag("--exact", exact, "enumerate copies instead of bounding delta");

  auto* factor = app.add_subcommand("factor", "greedy almost-spanning factor of copies of a template");
  double eps = 0.1;
  factor->add_option("--graph", graph, "host file")->required();
  factor->add_option("--template", tmpl, "template file or builtin:NAME")->required();
  factor->add_option("--epsilon", eps, "leftover fraction")->required();
  factor->add_option("--node-budget", cfg.node_budget, "search nodes per copy; 0 is unlimited");

  auto* absorber = app.add_subcommand("absorber", "absorber on a complete host");
  bool demo = false;
  int validate = 0;
  add_params(absorber, cfg, mode);
  absorber->add_flag("--demo", demo, "print both traversals of a single-vertex absorber");
  absorber->add_option("--validate", validate, "random X' checks on a chain absorber")->check(CLI::NonNegativeNumber);

  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo success rates over an (n, p) grid");
  ExperimentConfig ex;
  std::string csv;
  bool timing = false;
  add_params(experiment, cfg, mode);
  experiment->add_option("--n-list", ex.ns, "comma separated n values")->required()->delimiter(',');
  experiment->add_option("--p-grid", ex.ps, "comma separated p values")->required()->delimiter(',');
  experiment->add_option("--trials", ex.trials, "trials per point")->check(CLI::PositiveNumber);
  experiment->add_option("--jobs", ex.jobs, "worker threads")->check(CLI::PositiveNumber);
  experiment->add_option("--csv", csv, "output file (default stdout)");
  experiment->add_flag("--timing", timing, "fill the runtime_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.mode = parse_mode(mode);
    if (*gen) return cmd_gen(gen_model, gen_k, gen_n, gen_p, gen_seed, out);
    if (*find) return cmd_find(graph, model, cfg, cert);
    if (*verify) return cmd_verify(graph, model, cfg, cert);
    if (*density) return cmd_density(input, root);
    if (*janson) return cmd_janson(jn, jp, tmpl, gamma, exact);
    if (*factor) return cmd_factor(graph, tmpl, eps, cfg.node_budget);
    if (*absorber) return cmd_absorber(cfg, demo, validate);
    if (*experiment) {
      ex.base = cfg;
      return cmd_experiment(ex, csv, timing);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
