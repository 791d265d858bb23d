#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nbc/generators.hpp"

namespace nbc {

// One (n, c, d, seed) point of a hub-degree sweep.
struct SweepRecord {
  std::size_t n = 0;
  double c = 0.0;
  double d = 0.0;
  std::uint64_t seed = 0;
  double ev_lambda = 0.0;
  double nb_lambda = 0.0;
  double ev_ipr = 0.0;
  double nb_ipr = 0.0;
  double hub_mean = 0.0;       // eigenvector centrality of the hub
  double neighbor_mean = 0.0;  // mean over the hub's neighbors (0 if none)
  double other_mean = 0.0;     // mean over all remaining nodes
  double theory_z1 = 0.0;
  std::optional<double> theory_z2;
  double theory_threshold = 0.0;
  bool predicted_localized = false;
  double runtime_ms = 0.0;
  // Diagnostics.
  std::size_t component_nodes = 0;  // nodes of the largest component analysed
  std::size_t hub_degree = 0;
  bool hub_in_component = false;
  double nb_theory_lambda = 0.0;  // hub-corrected (<k^2>-<k>)/<k>
  bool ev_converged = false;
  bool nb_converged = false;
  std::size_t ev_iterations = 0;
  std::size_t nb_iterations = 0;
  std::string error;  // non-empty when this point failed

  bool ok() const noexcept { return error.empty(); }
};

struct HubSweepConfig {
  double c = 10.0;
  std::vector<double> d_values;
  std::size_t n = 100000;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  double tol = 1e-10;
  std::size_t max_iters = 20000;
  std::size_t workers = 1;
  // Zeroes runtime_ms so output is bitwise reproducible.
  bool deterministic = false;
};

inline constexpr std::size_t kDeskScaleNodes = 100000;
inline constexpr std::size_t kFullScaleNodes = 1000000;

// Every graph is generated with generate_er_plus_hub and analysed on its
// largest component. Records are ordered by (d, seed) in config order.
// Failures are recorded in the row and the sweep continues.
std::vector<SweepRecord> run_hub_sweep(const HubSweepConfig& config);

// Single sweep point; what run_hub_sweep executes per job.
SweepRecord run_hub_point(std::size_t n, double c, double d, std::uint64_t seed, double tol,
                          std::size_t max_iters, bool deterministic = false);

// d_from, d_from + step, ... up to and including d_to (within step/1e9).
std::vector<double> linear_range(double from, double to, double step);

// Number of worker threads after applying the NBC_THREADS cap.
std::size_t effective_workers(std::size_t requested);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
// Parses what write_sweep_csv produced. Throws ParseError.
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

struct SweepSummary {
  double c = 0.0;
  double d = 0.0;
  std::size_t samples = 0;
  double ev_ipr_mean = 0.0, ev_ipr_min = 0.0, ev_ipr_max = 0.0;
  double nb_ipr_mean = 0.0, nb_ipr_min = 0.0, nb_ipr_max = 0.0;
  double ev_lambda_mean = 0.0;
  double nb_lambda_mean = 0.0;
  double hub_mean_mean = 0.0;
  double neighbor_mean_mean = 0.0;
};

// Seed-ensemble statistics per (c, d), skipping failed rows.
std::vector<SweepSummary> summarize_sweep(const std::vector<SweepRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SweepSummary>& rows);

// ---------------------------------------------------------------------------
// IPR table over a list of networks.

enum class SourceKind { kErHub, kPowerLaw, kEdgeList };

struct NetworkSource {
  std::string name;
  SourceKind kind = SourceKind::kErHub;
  // kErHub
  std::size_t nodes = 0;
  double mean_degree = 0.0;
  double hub_degree = 0.0;
  // kPowerLaw
  double alpha = 0.0;
  std::size_t k_min = 1;
  // kEdgeList
  std::string path;
  std::vector<std::uint64_t> seeds = {1};
  bool largest_component = true;
  // Reference values to compare against, when known.
  std::optional<std::size_t> expected_nodes;
  std::optional<double> expected_ev_ipr;
  std::optional<double> expected_nb_ipr;
};

struct TableRow {
  std::string name;
  std::size_t nodes = 0;  // nodes analysed (largest component when selected)
  std::size_t source_nodes = 0;
  std::size_t samples = 0;
  double ev_ipr = 0.0, ev_ipr_min = 0.0, ev_ipr_max = 0.0;
  double nb_ipr = 0.0, nb_ipr_min = 0.0, nb_ipr_max = 0.0;
  std::optional<double> expected_ev_ipr;
  std::optional<double> expected_nb_ipr;
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

struct TableConfig {
  double tol = 1e-10;
  std::size_t max_iters = 50000;
  std::size_t workers = 1;
  // Overrides synthetic sizes when set: hub-model sources get scale + 1
  // nodes (the hub included), power-law sources get scale nodes.
  std::optional<std::size_t> synthetic_scale;
};

// Manifest: {"networks": [{"name", "type": "er-hub"|"powerlaw"|"edge-list",
// ...}]}. Relative edge-list paths resolve against `base_dir`.
std::vector<NetworkSource> read_manifest(std::istream& in, const std::string& base_dir = "");
std::vector<NetworkSource> read_manifest_file(const std::string& path);

TableRow run_table_row(const NetworkSource& source, const TableConfig& config);
std::vector<TableRow> run_table(const std::vector<NetworkSource>& sources, const TableConfig& config);

// Aligned text table: Network, Nodes, Eigenvector, Nonbacktracking, and the
// reference values when present.
void write_table_text(std::ostream& out, const std::vector<TableRow>& rows);
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

}  // namespace nbc
