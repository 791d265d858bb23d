#include "nbc/analysis.hpp"

#include <cmath>
#include <json.hpp>

#include "nbc/error.hpp"

namespace nbc {

double inverse_participation_ratio(std::span<const double> v) {
  double sq = 0.0;
  for (const double x : v) sq += x * x;
  if (sq == 0.0) throw DegenerateError("inverse_participation_ratio: zero vector");
  double quartic = 0.0;
  for (const double x : v) {
    const double y = x * x / sq;
    quartic += y * y;
  }
  return quartic;
}

GroupMeans group_means(const Graph& g, std::span<const double> scores, NodeId hub) {
  if (hub >= g.node_count()) throw ParameterError("group_means: hub index out of range");
  if (scores.size() != g.node_count())
    throw ParameterError("group_means: score vector does not match the graph");
  GroupMeans out;
  out.hub = scores[hub];
  double neighbor_sum = 0.0;
  for (const NodeId j : g.neighbors(hub)) neighbor_sum += scores[j];
  out.neighbor_count = g.degree(hub);
  out.other_count = g.node_count() - 1 - out.neighbor_count;
  if (out.neighbor_count > 0)
    out.hub_neighbors = neighbor_sum / static_cast<double>(out.neighbor_count);
  if (out.other_count > 0) {
    // Summing the others directly keeps precision when they are tiny.
    std::vector<char> excluded(g.node_count(), 0);
    excluded[hub] = 1;
    for (const NodeId j : g.neighbors(hub)) excluded[j] = 1;
    double others = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i)
      if (!excluded[i]) others += scores[i];
    out.others = others / static_cast<double>(out.other_count);
  }
  return out;
}

bool localization_verdict(double ipr, std::size_t n, double factor) {
  if (n == 0) throw ParameterError("localization_verdict: n must be positive");
  return ipr > factor / std::sqrt(static_cast<double>(n));
}

LocalizationReport localization_report(const Graph& g, const CentralityVector& scores,
                                       std::optional<NodeId> hub, double verdict_factor) {
  LocalizationReport r;
  r.method = scores.method;
  r.node_count = g.node_count();
  r.ipr = inverse_participation_ratio(scores.scores);
  r.hub_node = hub.value_or(max_degree_node(g));
  r.groups = group_means(g, scores.scores, r.hub_node);
  r.verdict_factor = verdict_factor;
  r.localized = localization_verdict(r.ipr, r.node_count, verdict_factor);
  return r;
}

std::string to_json(const LocalizationReport& report) {
  nlohmann::ordered_json j;
  j["method"] = std::string(to_string(report.method));
  j["node_count"] = report.node_count;
  j["ipr"] = report.ipr;
  j["hub_node"] = report.hub_node;
  auto& groups = j["group_means"];
  groups["hub"] = report.groups.hub;
  groups["hub_neighbors"] = report.groups.hub_neighbors
                                ? nlohmann::ordered_json(*report.groups.hub_neighbors)
                                : nlohmann::ordered_json(nullptr);
  groups["others"] = report.groups.others ? nlohmann::ordered_json(*report.groups.others)
                                          : nlohmann::ordered_json(nullptr);
  groups["neighbor_count"] = report.groups.neighbor_count;
  groups["other_count"] = report.groups.other_count;
  j["localized"] = report.localized;
  j["verdict_factor"] = report.verdict_factor;
  if (report.threshold_context) {
    const auto& t = *report.threshold_context;
    j["threshold_context"] = {{"c", t.c},
                              {"d", t.d},
                              {"d_threshold", t.d_threshold},
                              {"predicted_localized", t.predicted_localized}};
  } else {
    j["threshold_context"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace nbc
