#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nbc/analysis.hpp"
#include "nbc/centrality.hpp"
#include "nbc/error.hpp"
#include "nbc/experiments.hpp"
#include "nbc/generators.hpp"
#include "nbc/graph.hpp"
#include "nbc/output.hpp"

namespace {

constexpr double kCliTol = 1e-8;
constexpr int kExitRuntime = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotConverged = 3;

// "-" or empty selects stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw nbc::Error("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct InputError : nbc::Error {
  using nbc::Error::Error;
};

nbc::ParseResult load_graph(const std::string& path) {
  if (path != "-" && !std::filesystem::is_regular_file(path))
    throw InputError("no such file: " + path);
  nbc::ParseResult r = path == "-" ? nbc::parse_edge_list(std::cin) : nbc::parse_edge_list_file(path);
  if (r.cleanup.duplicates_merged || r.cleanup.self_loops_dropped)
    std::cerr << "note: merged " << r.cleanup.duplicates_merged << " duplicate edges, dropped "
              << r.cleanup.self_loops_dropped << " self-loops\n";
  return r;
}

struct GenerateArgs {
  std::string model;
  std::size_t nodes = nbc::kDeskScaleNodes;
  double mean_degree = 10.0;
  double hub_degree = 0.0;
  double alpha = 2.5;
  std::size_t kmin = 1;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int run_generate(const GenerateArgs& a) {
  nbc::Graph g;
  if (a.model == "er-hub") {
    g = nbc::generate_er_plus_hub({a.nodes, a.mean_degree, a.hub_degree, a.seed});
  } else {
    std::vector<std::size_t> degrees;
    g = nbc::generate_powerlaw_config({a.nodes, a.alpha, a.kmin, a.seed}, &degrees);
    std::size_t stubs = 0;
    for (const auto k : degrees) stubs += k;
    std::cerr << "note: erased " << stubs / 2 - g.edge_count()
              << " self-loops and multi-edges from the stub matching\n";
  }
  Output out(a.out);
  nbc::write_edge_list(out.stream(), g);
  return 0;
}

struct SolverArgs {
  std::string graph;
  double tol = kCliTol;
  std::size_t max_iters = 10000;
  std::uint64_t seed = 0;
  bool largest_component = false;
};

void add_solver_options(CLI::App* cmd, SolverArgs& s) {
  cmd->add_option("--graph", s.graph, "edge list file, or - for stdin")->required();
  cmd->add_option("--tol", s.tol, "relative residual tolerance")->capture_default_str();
  cmd->add_option("--max-iters", s.max_iters, "power iteration limit")->capture_default_str();
  cmd->add_option("--seed", s.seed, "seed for the start-vector jitter")->capture_default_str();
  cmd->add_flag("--largest-component", s.largest_component,
                "analyse the largest connected component");
}

nbc::CentralityOptions centrality_options(const SolverArgs& s) {
  nbc::CentralityOptions o;
  o.tol = s.tol;
  o.max_iters = s.max_iters;
  o.seed = s.seed;
  return o;
}

nbc::Graph prepare(const SolverArgs& s, std::size_t& source_nodes) {
  nbc::Graph g = load_graph(s.graph).graph;
  source_nodes = g.node_count();
  if (s.largest_component) g = nbc::largest_component(g);
  return g;
}

nbc::CentralityVector compute(const nbc::Graph& g, nbc::CentralityMethod m,
                              const nbc::CentralityOptions& o) {
  switch (m) {
    case nbc::CentralityMethod::kDegree: return nbc::degree_centrality(g);
    case nbc::CentralityMethod::kEigenvector: return nbc::eigenvector_centrality(g, o);
    case nbc::CentralityMethod::kNonbacktracking: return nbc::nonbacktracking_centrality(g, o);
  }
  throw nbc::ParameterError("unknown centrality method");
}

int report_warnings(const std::vector<nbc::CentralityVector>& results) {
  int code = 0;
  for (const auto& r : results) {
    for (const auto& w : r.warnings) std::cerr << "warning: " << nbc::to_string(r.method) << ": " << w << '\n';
    if (r.eigenvalue && !r.converged) code = kExitNotConverged;
  }
  return code;
}

int run_centrality(const std::string& which, const SolverArgs& s, const std::string& format,
                   const std::string& out_path) {
  std::vector<nbc::CentralityMethod> methods;
  if (which == "all")
    methods = {nbc::CentralityMethod::kDegree, nbc::CentralityMethod::kEigenvector,
               nbc::CentralityMethod::kNonbacktracking};
  else
    methods = {*nbc::parse_centrality_method(which)};

  nbc::CentralityRunInfo info;
  const nbc::Graph g = prepare(s, info.source_nodes);
  info.tol = s.tol;
  info.max_iters = s.max_iters;
  info.seed = s.seed;
  info.largest_component = s.largest_component;
  const auto opts = centrality_options(s);
  std::vector<nbc::CentralityVector> results;
  for (const auto m : methods) results.push_back(compute(g, m, opts));

  Output out(out_path);
  if (format == "json")
    nbc::write_centrality_json(out.stream(), g, results, info);
  else
    nbc::write_centrality_csv(out.stream(), g, results, info);
  return report_warnings(results);
}

int run_ipr(const SolverArgs& s, const std::string& method, const std::string& hub_label,
            double factor, const std::string& format) {
  std::size_t source_nodes = 0;
  const nbc::Graph g = prepare(s, source_nodes);
  const auto m = nbc::parse_centrality_method(method);
  if (!m) throw nbc::ParameterError("unknown method '" + method + "'");
  const auto scores = compute(g, *m, centrality_options(s));

  std::optional<nbc::NodeId> hub;
  if (!hub_label.empty()) {
    for (nbc::NodeId i = 0; i < g.node_count() && !hub; ++i)
      if (g.label(i) == hub_label) hub = i;
    if (!hub) throw nbc::ParameterError("no node labelled '" + hub_label + "'");
  }
  const auto report = nbc::localization_report(g, scores, hub, factor);
  if (format == "json") {
    std::cout << nbc::to_json(report) << '\n';
  } else {
    std::cout << "method " << nbc::to_string(report.method) << '\n'
              << "nodes " << report.node_count << '\n'
              << "ipr " << nbc::format_double(report.ipr) << '\n'
              << "localized " << (report.localized ? "yes" : "no") << '\n'
              << "hub " << g.label(report.hub_node) << '\n'
              << "hub_score " << nbc::format_double(report.groups.hub) << '\n';
    if (report.groups.hub_neighbors)
      std::cout << "neighbor_mean " << nbc::format_double(*report.groups.hub_neighbors) << '\n';
    if (report.groups.others)
      std::cout << "other_mean " << nbc::format_double(*report.groups.others) << '\n';
  }
  return report_warnings({scores});
}

struct SweepArgs {
  double c = 10.0;
  double d_from = 70.0;
  double d_to = 150.0;
  double d_step = 10.0;
  std::size_t nodes = nbc::kDeskScaleNodes;
  bool full = false;
  std::size_t seeds = 5;
  std::uint64_t first_seed = 1;
  std::size_t workers = 1;
  double tol = kCliTol;
  std::size_t max_iters = 20000;
  bool deterministic = false;
  std::string out = "-";
  std::string summary;
};

int run_sweep(const SweepArgs& a, bool nodes_given) {
  nbc::HubSweepConfig cfg;
  cfg.c = a.c;
  cfg.d_values = nbc::linear_range(a.d_from, a.d_to, a.d_step);
  cfg.n = a.full && !nodes_given ? nbc::kFullScaleNodes : a.nodes;
  cfg.seeds.clear();
  for (std::size_t i = 0; i < a.seeds; ++i) cfg.seeds.push_back(a.first_seed + i);
  cfg.workers = nbc::effective_workers(a.workers);
  cfg.tol = a.tol;
  cfg.max_iters = a.max_iters;
  cfg.deterministic = a.deterministic;

  const auto records = nbc::run_hub_sweep(cfg);
  Output out(a.out);
  nbc::write_sweep_csv(out.stream(), records);
  if (!a.summary.empty()) {
    Output s(a.summary);
    nbc::write_summary_csv(s.stream(), nbc::summarize_sweep(records));
  }
  int failed = 0;
  for (const auto& r : records)
    if (!r.ok()) {
      ++failed;
      std::cerr << "warning: d=" << nbc::format_double(r.d) << " seed=" << r.seed << ": "
                << r.error << '\n';
    }
  return failed ? kExitRuntime : 0;
}

struct TableArgs {
  std::string manifest;
  std::string out = "-";
  std::string csv;
  bool full = false;
  std::size_t scale = nbc::kDeskScaleNodes;
  std::size_t workers = 1;
  double tol = kCliTol;
  std::size_t max_iters = 50000;
};

int run_table_cmd(const TableArgs& a) {
  const auto sources = nbc::read_manifest_file(a.manifest);
  nbc::TableConfig cfg;
  cfg.tol = a.tol;
  cfg.max_iters = a.max_iters;
  cfg.workers = nbc::effective_workers(a.workers);
  if (!a.full) cfg.synthetic_scale = a.scale;
  const auto rows = nbc::run_table(sources, cfg);
  Output out(a.out);
  nbc::write_table_text(out.stream(), rows);
  if (!a.csv.empty()) {
    Output c(a.csv);
    nbc::write_table_csv(c.stream(), rows);
  }
  for (const auto& r : rows)
    if (!r.ok()) std::cerr << "warning: " << r.name << ": " << r.error << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvector and nonbacktracking centrality of networks"};
  app.require_subcommand(1);
  std::function<int()> action;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a random graph as an edge list");
  generate->add_option("model", gen.model, "er-hub or powerlaw")
      ->required()
      ->check(CLI::IsMember({"er-hub", "powerlaw"}));
  generate->add_option("--nodes", gen.nodes, "node count (hub included)")->capture_default_str();
  generate->add_option("--mean-degree", gen.mean_degree, "mean degree c of the random block")
      ->capture_default_str();
  generate->add_option("--hub-degree", gen.hub_degree, "expected hub degree d")->capture_default_str();
  generate->add_option("--alpha", gen.alpha, "power-law exponent (> 2)")->capture_default_str();
  generate->add_option("--kmin", gen.kmin, "minimum degree of the power law")->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("--out", gen.out, "output file, - for stdout")->capture_default_str();
  generate->callback([&] { action = [&] { return run_generate(gen); }; });

  SolverArgs cent_solver;
  std::string cent_which, cent_format = "csv", cent_out = "-";
  auto* centrality = app.add_subcommand("centrality", "compute centrality scores");
  centrality->add_option("method", cent_which)
      ->required()
      ->check(CLI::IsMember({"eigenvector", "nonbacktracking", "degree", "all"}));
  add_solver_options(centrality, cent_solver);
  centrality->add_option("--format", cent_format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  centrality->add_option("--out", cent_out, "output file, - for stdout")->capture_default_str();
  centrality->callback([&] {
    action = [&] { return run_centrality(cent_which, cent_solver, cent_format, cent_out); };
  });

  SolverArgs ipr_solver;
  std::string ipr_method = "eigenvector", ipr_hub, ipr_format = "text";
  double ipr_factor = nbc::kDefaultVerdictFactor;
  auto* ipr = app.add_subcommand("ipr", "inverse participation ratio and localization report");
  add_solver_options(ipr, ipr_solver);
  ipr->add_option("--method", ipr_method, "eigenvector, nonbacktracking or degree")
      ->capture_default_str();
  ipr->add_option("--hub", ipr_hub, "label of the hub node (default: max degree)");
  ipr->add_option("--factor", ipr_factor, "localized when ipr > factor / sqrt(n)")
      ->capture_default_str();
  ipr->add_option("--format", ipr_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  ipr->callback([&] {
    action = [&] { return run_ipr(ipr_solver, ipr_method, ipr_hub, ipr_factor, ipr_format); };
  });

  SweepArgs sw;
  std::string sweep_kind;
  auto* sweep = app.add_subcommand("sweep", "hub-degree sweep of the random graph plus hub");
  sweep->add_option("kind", sweep_kind)->required()->check(CLI::IsMember({"hub"}));
  sweep->add_option("--mean-degree", sw.c)->capture_default_str();
  sweep->add_option("--d-from", sw.d_from)->capture_default_str();
  sweep->add_option("--d-to", sw.d_to)->capture_default_str();
  sweep->add_option("--d-step", sw.d_step)->capture_default_str();
  auto* sweep_nodes = sweep->add_option("--nodes", sw.nodes)->capture_default_str();
  sweep->add_flag("--full", sw.full, "use 1000000 nodes unless --nodes is given");
  sweep->add_option("--seeds", sw.seeds, "number of seeds per point")->capture_default_str();
  sweep->add_option("--first-seed", sw.first_seed)->capture_default_str();
  sweep->add_option("--workers", sw.workers, "worker threads (capped by NBC_THREADS)")
      ->capture_default_str();
  sweep->add_option("--tol", sw.tol)->capture_default_str();
  sweep->add_option("--max-iters", sw.max_iters)->capture_default_str();
  sweep->add_flag("--deterministic", sw.deterministic, "zero the runtime column");
  sweep->add_option("--out", sw.out, "CSV file, - for stdout")->capture_default_str();
  sweep->add_option("--summary", sw.summary, "per-d seed summary CSV");
  sweep->callback([&] { action = [&] { return run_sweep(sw, sweep_nodes->count() > 0); }; });

  TableArgs tab;
  auto* table = app.add_subcommand("table", "IPR table over the networks of a manifest");
  table->add_option("--manifest", tab.manifest)->required();
  table->add_option("--out", tab.out, "text table, - for stdout")->capture_default_str();
  table->add_option("--csv", tab.csv, "also write the rows as CSV");
  table->add_flag("--full", tab.full, "generate synthetic rows at the manifest's sizes");
  table->add_option("--scale", tab.scale, "synthetic node count without --full")
      ->capture_default_str();
  table->add_option("--workers", tab.workers)->capture_default_str();
  table->add_option("--tol", tab.tol)->capture_default_str();
  table->add_option("--max-iters", tab.max_iters)->capture_default_str();
  table->callback([&] { action = [&] { return run_table_cmd(tab); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const nbc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nbc::EmptyGraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nbc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
