#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbc/graph.hpp"
#include "nbc/spectral.hpp"

namespace nbc {

enum class CentralityMethod { kDegree, kEigenvector, kNonbacktracking };

std::string_view to_string(CentralityMethod method);
// Accepts "degree", "eigenvector", "nonbacktracking" (or "nb").
std::optional<CentralityMethod> parse_centrality_method(std::string_view name);

struct CentralityVector {
  std::vector<double> scores;  // unit L2 norm, entries >= 0
  CentralityMethod method = CentralityMethod::kDegree;
  std::optional<double> eigenvalue;  // absent for degree centrality
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
  bool degenerate = false;  // all-zero scores (no edges)
  std::uint64_t source_graph_hash = 0;
  std::vector<std::string> warnings;
};

struct CentralityOptions {
  double tol = 1e-10;
  std::size_t max_iters = 10000;
  std::uint64_t seed = 0;
  // Power-iteration shift. A positive shift separates the Perron value from
  // -lambda on bipartite graphs and from complex pairs of the Ihara-Bass
  // operator. Defaults to 1 for both spectral methods.
  std::optional<double> shift;
};

// Entries below this (after unit normalization) mean the solver landed on
// something other than the Perron vector.
inline constexpr double kNegativeEntryLimit = -1e-6;

CentralityVector degree_centrality(const Graph& g);

// Leading eigenvector of A. Throws DisconnectedGraphError on disconnected
// input; callers select a component first (--largest-component).
CentralityVector eigenvector_centrality(const Graph& g, const CentralityOptions& options = {});

// First n entries of the leading eigenvector of the Ihara-Bass matrix.
// Throws DegenerateError on forests, where the measure vanishes, and
// DisconnectedGraphError on disconnected input.
CentralityVector nonbacktracking_centrality(const Graph& g, const CentralityOptions& options = {});

// Directed-edge index of a graph: edge e = (source, target) sits at the CSR
// position of `target` in source's neighbor list.
struct NBEdgeSpace {
  std::vector<NodeId> source;
  std::vector<NodeId> target;
  std::vector<EdgeIndex> reverse;  // reverse[e] is the index of target -> source

  std::size_t size() const noexcept { return source.size(); }
};

NBEdgeSpace build_nb_edge_space(const Graph& g);

// The explicit 2m x 2m nonbacktracking matrix B with
// B(k->l, i->j) = [j == k][i != l].
PatternMatrixOperator nonbacktracking_matrix(const Graph& g, const NBEdgeSpace& space);

inline constexpr std::size_t kNbOracleEdgeLimit = 20000;

// Reference nonbacktracking centrality through the explicit B:
// x_j = sum_i A_ij v_{i->j}. Throws SizeLimitError when 2m exceeds
// kNbOracleEdgeLimit.
CentralityVector nb_centrality_oracle(const Graph& g, const CentralityOptions& options = {});

}  // namespace nbc
