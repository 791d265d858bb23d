#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "nbc/centrality.hpp"
#include "nbc/graph.hpp"

namespace nbc {

// S = sum_i v_i^4 of the unit-normalized vector. Ranges from 1/n (uniform)
// to 1 (a single spike). Throws DegenerateError on the zero vector.
double inverse_participation_ratio(std::span<const double> v);
inline double inverse_participation_ratio(const CentralityVector& c) {
  return inverse_participation_ratio(c.scores);
}

struct GroupMeans {
  double hub = 0.0;
  std::optional<double> hub_neighbors;  // absent when the hub has no neighbors
  std::optional<double> others;         // absent when every node is hub or neighbor
  std::size_t neighbor_count = 0;
  std::size_t other_count = 0;
};

// Mean score of the hub, of its neighbors, and of every remaining node.
GroupMeans group_means(const Graph& g, std::span<const double> scores, NodeId hub);

inline constexpr double kDefaultVerdictFactor = 10.0;

// Localized iff S > factor / sqrt(n). S is O(1/n) for delocalized vectors
// and O(1) for localized ones; the 1/sqrt(n) cut sits between the two
// scales at any n but is a heuristic, not a sharp transition.
bool localization_verdict(double ipr, std::size_t n, double factor = kDefaultVerdictFactor);

struct ThresholdContext {
  double c = 0.0;
  double d = 0.0;
  double d_threshold = 0.0;
  bool predicted_localized = false;
};

struct LocalizationReport {
  CentralityMethod method = CentralityMethod::kEigenvector;
  std::size_t node_count = 0;
  double ipr = 0.0;
  GroupMeans groups;
  NodeId hub_node = 0;
  bool localized = false;
  double verdict_factor = kDefaultVerdictFactor;
  std::optional<ThresholdContext> threshold_context;
};

// Builds the full report. hub defaults to max_degree_node(g).
LocalizationReport localization_report(const Graph& g, const CentralityVector& scores,
                                       std::optional<NodeId> hub = std::nullopt,
                                       double verdict_factor = kDefaultVerdictFactor);

std::string to_json(const LocalizationReport& report);

}  // namespace nbc
