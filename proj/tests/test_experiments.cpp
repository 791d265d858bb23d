#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nbc/error.hpp"
#include "nbc/experiments.hpp"
#include "nbc/theory.hpp"
#include "support/test_graphs.hpp"

using namespace nbc;

namespace {

HubSweepConfig small_sweep() {
  HubSweepConfig cfg;
  cfg.c = 4.0;
  cfg.d_values = {0.0, 10.0, 40.0};
  cfg.n = 5000;
  cfg.seeds = {1, 2};
  cfg.deterministic = true;
  return cfg;
}

std::string sweep_csv(const std::vector<SweepRecord>& r) {
  std::ostringstream out;
  write_sweep_csv(out, r);
  return out.str();
}

}  // namespace

TEST_CASE("linear_range includes the end point") {
  CHECK(linear_range(70, 150, 10).size() == 9);
  CHECK(linear_range(70, 150, 10).back() == 150.0);
  CHECK(linear_range(1, 1, 0.5) == std::vector<double>{1.0});
  CHECK_THROWS_AS(linear_range(0, 1, 0), ParameterError);
}

TEST_CASE("single sweep point without a hub reduces to plain ER") {
  const SweepRecord r = run_hub_point(20000, 10.0, 0.0, 3, 1e-10, 20000);
  REQUIRE(r.ok());
  CHECK_FALSE(r.hub_in_component);
  CHECK(r.ev_converged);
  CHECK(r.nb_converged);
  // Delocalized: S = O(1/n).
  CHECK(r.ev_ipr < 20.0 / static_cast<double>(r.component_nodes));
  CHECK(r.ev_ipr >= 1.0 / static_cast<double>(r.component_nodes));
  CHECK(std::abs(r.nb_lambda - 10.0) < 0.5);
}

TEST_CASE("sweep output is bitwise deterministic and independent of worker count") {
  HubSweepConfig cfg = small_sweep();
  const auto serial = run_hub_sweep(cfg);
  cfg.workers = 3;
  const auto parallel = run_hub_sweep(cfg);
  CHECK(sweep_csv(serial) == sweep_csv(parallel));
  REQUIRE(serial.size() == 6);
  // Ordered by (d, seed) in configuration order.
  CHECK(serial[0].d == 0.0);
  CHECK(serial[1].seed == 2);
  CHECK(serial[5].d == 40.0);
  for (const auto& r : serial) {
    REQUIRE(r.ok());
    CHECK(r.runtime_ms == 0.0);
    const double n = static_cast<double>(r.component_nodes);
    CHECK(r.ev_ipr >= 1.0 / n * (1 - 1e-12));
    CHECK(r.ev_ipr <= 1.0);
    CHECK(r.nb_ipr >= 1.0 / n * (1 - 1e-12));
    CHECK(r.nb_ipr <= 1.0);
  }
}

TEST_CASE("sweep CSV read-back preserves records and theory columns") {
  const auto records = run_hub_sweep(small_sweep());
  std::istringstream in(sweep_csv(records));
  const auto back = read_sweep_csv(in);
  REQUIRE(back.size() == records.size());
  CHECK(sweep_csv(back) == sweep_csv(records));
  for (const auto& r : back) {
    const auto t = theory::hub_predictions(r.c, r.d);
    CHECK(r.theory_z1 == t.z1);
    CHECK(r.theory_threshold == t.d_threshold);
    CHECK(r.theory_z2.has_value() == t.z2.has_value());
    if (t.z2) CHECK(*r.theory_z2 == *t.z2);
    CHECK(r.predicted_localized == t.predicted_localized);
    CHECK(std::isfinite(r.ev_lambda));
    CHECK(std::isfinite(r.nb_ipr));
  }
}

TEST_CASE("sweep CSV reader rejects foreign input") {
  std::istringstream wrong_header("a,b,c\n");
  CHECK_THROWS_AS(read_sweep_csv(wrong_header), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_sweep_csv(empty), ParseError);
}

TEST_CASE("failed points are recorded in-row and the sweep continues") {
  HubSweepConfig cfg = small_sweep();
  cfg.n = 50;
  cfg.d_values = {5.0, 500.0};  // d/(n-1) > 1 for the second
  cfg.seeds = {1};
  const auto r = run_hub_sweep(cfg);
  REQUIRE(r.size() == 2);
  CHECK(r[0].ok());
  CHECK_FALSE(r[1].ok());
  CHECK(r[1].error.find("probability") != std::string::npos);
  const auto summary = summarize_sweep(r);
  CHECK(summary.size() == 1);
}

TEST_CASE("summary aggregates seeds per hub degree") {
  const auto records = run_hub_sweep(small_sweep());
  const auto s = summarize_sweep(records);
  REQUIRE(s.size() == 3);
  CHECK(s[2].d == 40.0);
  CHECK(s[2].samples == 2);
  CHECK(s[2].ev_ipr_min <= s[2].ev_ipr_mean);
  CHECK(s[2].ev_ipr_mean <= s[2].ev_ipr_max);
  // c = 4: threshold at d = 20. d = 40 is localized, d = 10 is not.
  CHECK(s[2].ev_ipr_mean > 20.0 * s[1].ev_ipr_mean);
}

TEST_CASE("worker cap from NBC_THREADS") {
  ::setenv("NBC_THREADS", "2", 1);
  CHECK(effective_workers(8) == 2);
  CHECK(effective_workers(1) == 1);
  ::unsetenv("NBC_THREADS");
  CHECK(effective_workers(8) == 8);
  CHECK(effective_workers(0) == 1);
}

TEST_CASE("manifest parsing and a table with a missing dataset") {
  const auto dir = std::filesystem::temp_directory_path() / "nbc_test_table";
  std::filesystem::create_directories(dir);
  {
    std::ofstream edges(dir / "k4_tail.txt");
    edges << "a b\na c\na d\nb c\nb d\nc d\nd e\ne f\n";
  }
  std::istringstream manifest(R"({
    "networks": [
      {"name": "hub", "type": "er-hub", "nodes": 3001, "mean_degree": 4, "hub_degree": 40,
       "seeds": [1, 2], "expected": {"eigenvector": 0.2, "nonbacktracking": 0.001}},
      {"name": "pl", "type": "powerlaw", "nodes": 3000, "alpha": 2.9, "k_min": 2},
      {"name": "file", "type": "edge-list", "path": "k4_tail.txt"},
      {"name": "missing", "type": "edge-list", "path": "does_not_exist.txt"}
    ]})");
  const auto sources = read_manifest(manifest, dir.string());
  REQUIRE(sources.size() == 4);
  CHECK(sources[0].seeds.size() == 2);
  CHECK(*sources[0].expected_ev_ipr == 0.2);
  CHECK(sources[1].k_min == 2);
  CHECK(sources[2].path == (dir / "k4_tail.txt").string());

  TableConfig cfg;
  const auto rows = run_table(sources, cfg);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].ok());
  CHECK(rows[0].samples == 2);
  CHECK(rows[0].ev_ipr > rows[0].nb_ipr);
  CHECK(rows[1].ok());
  CHECK(rows[2].ok());
  CHECK(rows[2].nodes == 6);
  CHECK_FALSE(rows[3].ok());

  std::ostringstream text, csv;
  write_table_text(text, rows);
  write_table_csv(csv, rows);
  CHECK(text.str().find("error") != std::string::npos);
  CHECK(csv.str().rfind("network,nodes", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("manifest errors") {
  std::istringstream not_json("{");
  CHECK_THROWS_AS(read_manifest(not_json), Error);
  std::istringstream bad_type(R"({"networks": [{"name": "x", "type": "lattice"}]})");
  CHECK_THROWS_AS(read_manifest(bad_type), Error);
  std::istringstream missing_field(R"({"networks": [{"name": "x", "type": "er-hub"}]})");
  CHECK_THROWS_AS(read_manifest(missing_field), Error);
}

TEST_CASE("synthetic scale override sizes hub and power-law sources") {
  NetworkSource s;
  s.name = "hub";
  s.kind = SourceKind::kErHub;
  s.nodes = 1000001;
  s.mean_degree = 5;
  s.hub_degree = 10;
  TableConfig cfg;
  cfg.synthetic_scale = 2000;
  const TableRow row = run_table_row(s, cfg);
  REQUIRE(row.ok());
  CHECK(row.source_nodes == 2001);
}
