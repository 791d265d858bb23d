#include "nbc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "nbc/analysis.hpp"
#include "nbc/centrality.hpp"
#include "nbc/error.hpp"
#include "nbc/output.hpp"
#include "nbc/theory.hpp"

namespace nbc {
namespace {

// Runs job(i) for i in [0, count) on up to `workers` threads. Each job
// writes only its own slot, so output order never depends on scheduling.
void parallel_jobs(std::size_t count, std::size_t workers,
                   const std::function<void(std::size_t)>& job) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

const char* const kSweepColumns[] = {
    "n",           "c",           "d",
    "seed",        "ev_lambda",   "nb_lambda",
    "ev_ipr",      "nb_ipr",      "hub_mean",
    "neighbor_mean", "other_mean", "theory_z1",
    "theory_z2",   "theory_threshold", "predicted_localized",
    "runtime_ms",  "component_nodes", "hub_degree",
    "hub_in_component", "nb_theory_lambda", "ev_converged",
    "nb_converged", "ev_iterations", "nb_iterations",
    "error"};
constexpr std::size_t kSweepColumnCount = std::size(kSweepColumns);

struct Ensemble {
  double sum = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  void add(double x) {
    min = count == 0 ? x : std::min(min, x);
    max = count == 0 ? x : std::max(max, x);
    sum += x;
    ++count;
  }
  double mean() const { return count == 0 ? 0.0 : sum / static_cast<double>(count); }
};

}  // namespace

std::size_t effective_workers(std::size_t requested) {
  std::size_t workers = std::max<std::size_t>(requested, 1);
  if (const char* env = std::getenv("NBC_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) workers = std::min<std::size_t>(workers, cap);
  }
  return workers;
}

std::vector<double> linear_range(double from, double to, double step) {
  if (!(step > 0.0)) throw ParameterError("linear_range: step must be positive");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double x = from + static_cast<double>(i) * step;
    if (x > to + step * 1e-9) break;
    out.push_back(x);
  }
  return out;
}

SweepRecord run_hub_point(std::size_t n, double c, double d, std::uint64_t seed, double tol,
                          std::size_t max_iters, bool deterministic) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord r;
  r.n = n;
  r.c = c;
  r.d = d;
  r.seed = seed;
  try {
    const theory::HubTheory t = theory::hub_predictions(c, d);
    r.theory_z1 = t.z1;
    r.theory_z2 = t.z2;
    r.theory_threshold = t.d_threshold;
    r.predicted_localized = t.predicted_localized;

    const Graph g = generate_er_plus_hub({n, c, d, seed});
    const Component comp = largest_component_with_map(g);
    const Graph& h = comp.graph;
    r.component_nodes = h.node_count();

    const auto hub_original = static_cast<NodeId>(n - 1);
    const auto it = std::lower_bound(comp.original.begin(), comp.original.end(), hub_original);
    NodeId hub = 0;
    if (it != comp.original.end() && *it == hub_original) {
      hub = static_cast<NodeId>(it - comp.original.begin());
      r.hub_in_component = true;
    } else {
      hub = max_degree_node(h);
    }
    r.hub_degree = h.degree(hub);

    CentralityOptions opts;
    opts.tol = tol;
    opts.max_iters = max_iters;
    opts.seed = seed;
    const CentralityVector ev = eigenvector_centrality(h, opts);
    const CentralityVector nb = nonbacktracking_centrality(h, opts);
    r.ev_lambda = ev.eigenvalue.value_or(0.0);
    r.nb_lambda = nb.eigenvalue.value_or(0.0);
    r.ev_converged = ev.converged;
    r.nb_converged = nb.converged;
    r.ev_iterations = ev.iterations;
    r.nb_iterations = nb.iterations;
    r.ev_ipr = inverse_participation_ratio(ev);
    r.nb_ipr = inverse_participation_ratio(nb);

    const GroupMeans groups = group_means(h, ev.scores, hub);
    r.hub_mean = groups.hub;
    r.neighbor_mean = groups.hub_neighbors.value_or(0.0);
    r.other_mean = groups.others.value_or(0.0);

    DegreeStats non_hub;
    std::uint64_t sum = 0, sum_sq = 0;
    for (NodeId i = 0; i < h.node_count(); ++i) {
      if (i == hub) continue;
      const std::uint64_t k = h.degree(i);
      sum += k;
      sum_sq += k * k;
    }
    non_hub.node_count = h.node_count() - 1;
    non_hub.mean = static_cast<double>(sum) / static_cast<double>(non_hub.node_count);
    non_hub.second_moment = static_cast<double>(sum_sq) / static_cast<double>(non_hub.node_count);
    r.nb_theory_lambda = theory::nb_leading_eigenvalue_with_hub(
        non_hub, static_cast<double>(r.hub_degree), 2.0 * static_cast<double>(h.edge_count()));
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  if (!deterministic) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
  }
  return r;
}

std::vector<SweepRecord> run_hub_sweep(const HubSweepConfig& config) {
  if (config.seeds.empty()) throw ParameterError("run_hub_sweep: no seeds");
  struct Job {
    double d;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const double d : config.d_values)
    for (const auto seed : config.seeds) jobs.push_back({d, seed});
  std::vector<SweepRecord> records(jobs.size());
  parallel_jobs(jobs.size(), effective_workers(config.workers), [&](std::size_t i) {
    records[i] = run_hub_point(config.n, config.c, jobs[i].d, jobs[i].seed, config.tol,
                               config.max_iters, config.deterministic);
  });
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  for (std::size_t i = 0; i < kSweepColumnCount; ++i)
    out << (i ? "," : "") << kSweepColumns[i];
  out << '\n';
  auto b = [](bool x) { return x ? "1" : "0"; };
  for (const auto& r : records) {
    out << r.n << ',' << format_double(r.c) << ',' << format_double(r.d) << ',' << r.seed << ','
        << format_double(r.ev_lambda) << ',' << format_double(r.nb_lambda) << ','
        << format_double(r.ev_ipr) << ',' << format_double(r.nb_ipr) << ','
        << format_double(r.hub_mean) << ',' << format_double(r.neighbor_mean) << ','
        << format_double(r.other_mean) << ',' << format_double(r.theory_z1) << ','
        << (r.theory_z2 ? format_double(*r.theory_z2) : std::string()) << ','
        << format_double(r.theory_threshold) << ',' << b(r.predicted_localized) << ','
        << format_double(r.runtime_ms) << ',' << r.component_nodes << ',' << r.hub_degree << ','
        << b(r.hub_in_component) << ',' << format_double(r.nb_theory_lambda) << ','
        << b(r.ev_converged) << ',' << b(r.nb_converged) << ',' << r.ev_iterations << ','
        << r.nb_iterations << ',' << sanitize(r.error) << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing sweep header");
  {
    std::string expected;
    for (std::size_t i = 0; i < kSweepColumnCount; ++i)
      expected += std::string(i ? "," : "") + kSweepColumns[i];
    if (line != expected) throw ParseError(1, "unexpected sweep header");
  }
  std::vector<SweepRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream cells(line);
    while (std::getline(cells, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != kSweepColumnCount)
      throw ParseError(line_no, "expected " + std::to_string(kSweepColumnCount) + " fields");
    try {
      SweepRecord r;
      std::size_t k = 0;
      auto u = [&] { return static_cast<std::size_t>(std::stoull(f[k++])); };
      auto d = [&] { return std::stod(f[k++]); };
      auto b = [&] { return f[k++] == "1"; };
      r.n = u();
      r.c = d();
      r.d = d();
      r.seed = u();
      r.ev_lambda = d();
      r.nb_lambda = d();
      r.ev_ipr = d();
      r.nb_ipr = d();
      r.hub_mean = d();
      r.neighbor_mean = d();
      r.other_mean = d();
      r.theory_z1 = d();
      if (f[k].empty()) {
        ++k;
      } else {
        r.theory_z2 = d();
      }
      r.theory_threshold = d();
      r.predicted_localized = b();
      r.runtime_ms = d();
      r.component_nodes = u();
      r.hub_degree = u();
      r.hub_in_component = b();
      r.nb_theory_lambda = d();
      r.ev_converged = b();
      r.nb_converged = b();
      r.ev_iterations = u();
      r.nb_iterations = u();
      r.error = f[k++];
      out.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw ParseError(line_no, std::string("bad numeric field: ") + e.what());
    }
  }
  return out;
}

std::vector<SweepSummary> summarize_sweep(const std::vector<SweepRecord>& records) {
  struct Acc {
    Ensemble ev, nb, ev_lambda, nb_lambda, hub, neighbor;
  };
  std::vector<std::pair<double, double>> order;
  std::map<std::pair<double, double>, Acc> acc;
  for (const auto& r : records) {
    if (!r.ok()) continue;
    const auto key = std::make_pair(r.c, r.d);
    if (!acc.contains(key)) order.push_back(key);
    Acc& a = acc[key];
    a.ev.add(r.ev_ipr);
    a.nb.add(r.nb_ipr);
    a.ev_lambda.add(r.ev_lambda);
    a.nb_lambda.add(r.nb_lambda);
    a.hub.add(r.hub_mean);
    a.neighbor.add(r.neighbor_mean);
  }
  std::vector<SweepSummary> out;
  for (const auto& key : order) {
    const Acc& a = acc.at(key);
    SweepSummary s;
    s.c = key.first;
    s.d = key.second;
    s.samples = a.ev.count;
    s.ev_ipr_mean = a.ev.mean();
    s.ev_ipr_min = a.ev.min;
    s.ev_ipr_max = a.ev.max;
    s.nb_ipr_mean = a.nb.mean();
    s.nb_ipr_min = a.nb.min;
    s.nb_ipr_max = a.nb.max;
    s.ev_lambda_mean = a.ev_lambda.mean();
    s.nb_lambda_mean = a.nb_lambda.mean();
    s.hub_mean_mean = a.hub.mean();
    s.neighbor_mean_mean = a.neighbor.mean();
    out.push_back(s);
  }
  return out;
}

void write_summary_csv(std::ostream& out, const std::vector<SweepSummary>& rows) {
  out << "c,d,samples,ev_ipr_mean,ev_ipr_min,ev_ipr_max,nb_ipr_mean,nb_ipr_min,nb_ipr_max,"
         "ev_lambda_mean,nb_lambda_mean,hub_mean,neighbor_mean\n";
  for (const auto& s : rows) {
    out << format_double(s.c) << ',' << format_double(s.d) << ',' << s.samples << ','
        << format_double(s.ev_ipr_mean) << ',' << format_double(s.ev_ipr_min) << ','
        << format_double(s.ev_ipr_max) << ',' << format_double(s.nb_ipr_mean) << ','
        << format_double(s.nb_ipr_min) << ',' << format_double(s.nb_ipr_max) << ','
        << format_double(s.ev_lambda_mean) << ',' << format_double(s.nb_lambda_mean) << ','
        << format_double(s.hub_mean_mean) << ',' << format_double(s.neighbor_mean_mean) << '\n';
  }
}

// ---------------------------------------------------------------------------

std::vector<NetworkSource> read_manifest(std::istream& in, const std::string& base_dir) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("manifest: invalid JSON: ") + e.what());
  }
  if (!j.contains("networks") || !j["networks"].is_array())
    throw Error("manifest: expected a \"networks\" array");
  std::vector<NetworkSource> out;
  for (const auto& item : j["networks"]) {
    NetworkSource s;
    s.name = item.value("name", std::string());
    const std::string type = item.value("type", std::string());
    try {
      if (type == "er-hub") {
        s.kind = SourceKind::kErHub;
        s.nodes = item.at("nodes").get<std::size_t>();
        s.mean_degree = item.at("mean_degree").get<double>();
        s.hub_degree = item.at("hub_degree").get<double>();
      } else if (type == "powerlaw") {
        s.kind = SourceKind::kPowerLaw;
        s.nodes = item.at("nodes").get<std::size_t>();
        s.alpha = item.at("alpha").get<double>();
        s.k_min = item.value("k_min", std::size_t{1});
      } else if (type == "edge-list") {
        s.kind = SourceKind::kEdgeList;
        s.path = item.at("path").get<std::string>();
        if (!base_dir.empty() && std::filesystem::path(s.path).is_relative())
          s.path = (std::filesystem::path(base_dir) / s.path).string();
      } else {
        throw Error("manifest: network \"" + s.name + "\" has unknown type \"" + type + "\"");
      }
      if (item.contains("seeds")) s.seeds = item["seeds"].get<std::vector<std::uint64_t>>();
      s.largest_component = item.value("largest_component", true);
      if (item.contains("expected")) {
        const auto& e = item["expected"];
        if (e.contains("nodes")) s.expected_nodes = e["nodes"].get<std::size_t>();
        if (e.contains("eigenvector")) s.expected_ev_ipr = e["eigenvector"].get<double>();
        if (e.contains("nonbacktracking")) s.expected_nb_ipr = e["nonbacktracking"].get<double>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error("manifest: network \"" + s.name + "\": " + e.what());
    }
    if (s.seeds.empty()) s.seeds = {1};
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<NetworkSource> read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest: " + path);
  return read_manifest(in, std::filesystem::path(path).parent_path().string());
}

TableRow run_table_row(const NetworkSource& source, const TableConfig& config) {
  TableRow row;
  row.name = source.name;
  row.expected_ev_ipr = source.expected_ev_ipr;
  row.expected_nb_ipr = source.expected_nb_ipr;
  Ensemble ev, nb;
  try {
    const std::size_t runs = source.kind == SourceKind::kEdgeList ? 1 : source.seeds.size();
    for (std::size_t s = 0; s < runs; ++s) {
      const std::uint64_t seed = source.seeds[s];
      Graph g;
      switch (source.kind) {
        case SourceKind::kErHub: {
          const std::size_t n = config.synthetic_scale ? *config.synthetic_scale + 1 : source.nodes;
          g = generate_er_plus_hub({n, source.mean_degree, source.hub_degree, seed});
          break;
        }
        case SourceKind::kPowerLaw: {
          const std::size_t n = config.synthetic_scale ? *config.synthetic_scale : source.nodes;
          g = generate_powerlaw_config({n, source.alpha, source.k_min, seed});
          break;
        }
        case SourceKind::kEdgeList:
          g = parse_edge_list_file(source.path).graph;
          break;
      }
      row.source_nodes = g.node_count();
      if (source.largest_component) g = largest_component(g);
      row.nodes = g.node_count();
      CentralityOptions opts;
      opts.tol = config.tol;
      opts.max_iters = config.max_iters;
      opts.seed = seed;
      const auto e = eigenvector_centrality(g, opts);
      const auto b = nonbacktracking_centrality(g, opts);
      if (!e.converged || !b.converged)
        throw Error("power iteration did not converge (eigenvector " +
                    std::to_string(e.iterations) + ", nonbacktracking " +
                    std::to_string(b.iterations) + " iterations)");
      ev.add(inverse_participation_ratio(e));
      nb.add(inverse_participation_ratio(b));
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    return row;
  }
  row.samples = ev.count;
  row.ev_ipr = ev.mean();
  row.ev_ipr_min = ev.min;
  row.ev_ipr_max = ev.max;
  row.nb_ipr = nb.mean();
  row.nb_ipr_min = nb.min;
  row.nb_ipr_max = nb.max;
  return row;
}

std::vector<TableRow> run_table(const std::vector<NetworkSource>& sources,
                                const TableConfig& config) {
  std::vector<TableRow> rows(sources.size());
  parallel_jobs(sources.size(), effective_workers(config.workers),
                [&](std::size_t i) { rows[i] = run_table_row(sources[i], config); });
  return rows;
}

namespace {

std::string short_number(double x) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  if (x != 0.0 && std::abs(x) < 1e-3) {
    s << std::scientific << std::setprecision(1) << x;
  } else {
    s << std::fixed << std::setprecision(4) << x;
  }
  return s.str();
}

}  // namespace

void write_table_text(std::ostream& out, const std::vector<TableRow>& rows) {
  std::size_t name_w = 7;
  for (const auto& r : rows) name_w = std::max(name_w, r.name.size());
  auto pad = [](const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
  };
  auto lpad = [](const std::string& s, std::size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
  };
  out << pad("Network", name_w) << "  " << lpad("Nodes", 9) << "  " << lpad("Eigenvector", 12)
      << "  " << lpad("Nonbacktr.", 12) << "  " << lpad("ref EV", 9) << "  " << lpad("ref NB", 9)
      << '\n';
  out << std::string(name_w + 2 + 9 + 2 + 12 + 2 + 12 + 2 + 9 + 2 + 9, '-') << '\n';
  for (const auto& r : rows) {
    out << pad(r.name, name_w) << "  ";
    if (!r.ok()) {
      out << "error: " << r.error << '\n';
      continue;
    }
    out << lpad(std::to_string(r.nodes), 9) << "  " << lpad(short_number(r.ev_ipr), 12) << "  "
        << lpad(short_number(r.nb_ipr), 12) << "  "
        << lpad(r.expected_ev_ipr ? short_number(*r.expected_ev_ipr) : "-", 9) << "  "
        << lpad(r.expected_nb_ipr ? short_number(*r.expected_nb_ipr) : "-", 9) << '\n';
  }
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "network,nodes,source_nodes,samples,ev_ipr,ev_ipr_min,ev_ipr_max,nb_ipr,nb_ipr_min,"
         "nb_ipr_max,expected_ev_ipr,expected_nb_ipr,error\n";
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  for (const auto& r : rows) {
    out << sanitize(r.name) << ',' << r.nodes << ',' << r.source_nodes << ',' << r.samples << ','
        << format_double(r.ev_ipr) << ',' << format_double(r.ev_ipr_min) << ','
        << format_double(r.ev_ipr_max) << ',' << format_double(r.nb_ipr) << ','
        << format_double(r.nb_ipr_min) << ',' << format_double(r.nb_ipr_max) << ','
        << opt(r.expected_ev_ipr) << ',' << opt(r.expected_nb_ipr) << ',' << sanitize(r.error)
        << '\n';
  }
}

}  // namespace nbc
