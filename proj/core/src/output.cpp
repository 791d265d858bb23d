#include "nbc/output.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <ostream>

namespace nbc {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  const auto res = std::to_chars(buf, buf + sizeof buf, h, 16);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_centrality_csv(std::ostream& out, const Graph& g,
                          const std::vector<CentralityVector>& results,
                          const CentralityRunInfo& info) {
  out << "# nodes=" << g.node_count() << '\n';
  out << "# edges=" << g.edge_count() << '\n';
  out << "# source_nodes=" << info.source_nodes << '\n';
  out << "# largest_component=" << (info.largest_component ? "true" : "false") << '\n';
  out << "# tol=" << format_double(info.tol) << '\n';
  out << "# max_iters=" << info.max_iters << '\n';
  out << "# seed=" << info.seed << '\n';
  out << "# graph_hash=" << hash_hex(g.structure_hash()) << '\n';
  for (const auto& r : results) {
    const auto name = to_string(r.method);
    if (r.eigenvalue) out << "# " << name << "_lambda=" << format_double(*r.eigenvalue) << '\n';
    if (r.method != CentralityMethod::kDegree) {
      out << "# " << name << "_residual=" << format_double(r.residual) << '\n';
      out << "# " << name << "_iterations=" << r.iterations << '\n';
      out << "# " << name << "_converged=" << (r.converged ? "true" : "false") << '\n';
    }
  }
  out << "label,degree";
  for (const auto& r : results) out << ',' << to_string(r.method);
  out << '\n';
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << g.label(i) << ',' << g.degree(i);
    for (const auto& r : results) out << ',' << format_double(r.scores[i]);
    out << '\n';
  }
}

void write_centrality_json(std::ostream& out, const Graph& g,
                           const std::vector<CentralityVector>& results,
                           const CentralityRunInfo& info) {
  nlohmann::ordered_json j;
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  j["source_nodes"] = info.source_nodes;
  j["largest_component"] = info.largest_component;
  j["tol"] = info.tol;
  j["max_iters"] = info.max_iters;
  j["seed"] = info.seed;
  j["graph_hash"] = hash_hex(g.structure_hash());
  auto& methods = j["methods"];
  methods = nlohmann::ordered_json::object();
  for (const auto& r : results) {
    nlohmann::ordered_json m;
    m["normalization"] = "unit-l2";
    m["eigenvalue"] = r.eigenvalue ? nlohmann::ordered_json(*r.eigenvalue) : nullptr;
    m["residual"] = r.residual;
    m["iterations"] = r.iterations;
    m["converged"] = r.converged;
    m["degenerate"] = r.degenerate;
    m["warnings"] = r.warnings;
    methods[std::string(to_string(r.method))] = std::move(m);
  }
  auto& nodes = j["scores"];
  nodes = nlohmann::ordered_json::array();
  for (NodeId i = 0; i < g.node_count(); ++i) {
    nlohmann::ordered_json row;
    row["label"] = g.label(i);
    row["degree"] = g.degree(i);
    for (const auto& r : results) row[std::string(to_string(r.method))] = r.scores[i];
    nodes.push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
}

}  // namespace nbc
