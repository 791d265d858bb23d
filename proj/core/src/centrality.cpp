#include "nbc/centrality.hpp"

#include <algorithm>
#include <cmath>

#include "nbc/error.hpp"

namespace nbc {
namespace {

constexpr double kDefaultShift = 1.0;
constexpr std::size_t kOracleMinIters = 100000;

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw DisconnectedGraphError(std::string(what) +
                                 ": graph is disconnected; rerun on the largest component "
                                 "(--largest-component)");
}

// Unit-normalizes, rejects vectors that are clearly not Perron vectors and
// clamps the remaining round-off negatives to zero.
void finalize_scores(std::vector<double>& x, bool strict, const char* what) {
  double s = norm2(x);
  if (s == 0.0) throw DegenerateError(std::string(what) + ": leading eigenvector is zero");
  for (double& v : x) v /= s;
  const double lowest = *std::min_element(x.begin(), x.end());
  if (strict && lowest < kNegativeEntryLimit)
    throw WrongEigenpairError(std::string(what) + ": converged vector has entry " +
                              std::to_string(lowest) +
                              "; the solver did not reach the Perron eigenvector");
  bool clamped = false;
  for (double& v : x) {
    if (v < 0.0) {
      v = 0.0;
      clamped = true;
    }
  }
  if (clamped) {
    s = norm2(x);
    if (s == 0.0) throw DegenerateError(std::string(what) + ": leading eigenvector is zero");
    for (double& v : x) v /= s;
  }
}

PowerIterationOptions solver_options(const CentralityOptions& options) {
  PowerIterationOptions p;
  p.tol = options.tol;
  p.max_iters = options.max_iters;
  p.seed = options.seed;
  p.shift = options.shift.value_or(kDefaultShift);
  return p;
}

void check_nb_preconditions(const Graph& g, CentralityVector& out, const char* what) {
  if (g.edge_count() == 0) throw DegenerateError(std::string(what) + ": graph has no edges");
  require_connected(g, what);
  const auto core = two_core_nodes(g);
  if (core.empty())
    throw DegenerateError(std::string(what) +
                          ": graph is a tree; nonbacktracking walks die out and the "
                          "centrality vanishes identically");
  const bool single_cycle = std::all_of(core.begin(), core.end(), [&](NodeId i) {
    std::size_t in_core = 0;
    for (const NodeId j : g.neighbors(i))
      if (std::binary_search(core.begin(), core.end(), j)) ++in_core;
    return in_core == 2;
  });
  if (single_cycle)
    out.warnings.emplace_back(
        "2-core is a single cycle; the leading nonbacktracking eigenvalue is 1 and "
        "not simple, convergence may be slow");
}

}  // namespace

std::string_view to_string(CentralityMethod method) {
  switch (method) {
    case CentralityMethod::kDegree:
      return "degree";
    case CentralityMethod::kEigenvector:
      return "eigenvector";
    case CentralityMethod::kNonbacktracking:
      return "nonbacktracking";
  }
  return "unknown";
}

std::optional<CentralityMethod> parse_centrality_method(std::string_view name) {
  if (name == "degree") return CentralityMethod::kDegree;
  if (name == "eigenvector" || name == "ev") return CentralityMethod::kEigenvector;
  if (name == "nonbacktracking" || name == "nb") return CentralityMethod::kNonbacktracking;
  return std::nullopt;
}

CentralityVector degree_centrality(const Graph& g) {
  if (g.empty()) throw EmptyGraphError("degree_centrality: empty graph");
  CentralityVector out;
  out.method = CentralityMethod::kDegree;
  out.source_graph_hash = g.structure_hash();
  out.scores.resize(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out.scores[i] = static_cast<double>(g.degree(i));
  const double s = norm2(out.scores);
  if (s == 0.0) {
    out.degenerate = true;
    out.warnings.emplace_back("graph has no edges; all degree centralities are zero");
    return out;
  }
  for (double& v : out.scores) v /= s;
  return out;
}

CentralityVector eigenvector_centrality(const Graph& g, const CentralityOptions& options) {
  if (g.empty()) throw EmptyGraphError("eigenvector_centrality: empty graph");
  require_connected(g, "eigenvector_centrality");
  CentralityVector out;
  out.method = CentralityMethod::kEigenvector;
  out.source_graph_hash = g.structure_hash();
  if (g.edge_count() == 0) {
    // Single isolated node.
    out.scores = {1.0};
    out.eigenvalue = 0.0;
    out.degenerate = true;
    return out;
  }
  const AdjacencyOperator op(g);
  EigenResult eig = power_iteration(op, solver_options(options));
  out.eigenvalue = eig.eigenvalue;
  out.residual = eig.residual;
  out.iterations = eig.iterations;
  out.converged = eig.converged;
  if (!eig.converged)
    out.warnings.emplace_back("power iteration did not converge in " +
                              std::to_string(eig.iterations) + " iterations");
  out.scores = std::move(eig.vector);
  finalize_scores(out.scores, eig.converged, "eigenvector_centrality");
  return out;
}

CentralityVector nonbacktracking_centrality(const Graph& g, const CentralityOptions& options) {
  if (g.empty()) throw EmptyGraphError("nonbacktracking_centrality: empty graph");
  CentralityVector out;
  out.method = CentralityMethod::kNonbacktracking;
  out.source_graph_hash = g.structure_hash();
  check_nb_preconditions(g, out, "nonbacktracking_centrality");

  const IharaBassOperator op(g);
  EigenResult eig = power_iteration(op, solver_options(options));
  out.eigenvalue = eig.eigenvalue;
  if (eig.converged) {
    // Larger root of the quadratic Rayleigh functional
    // lambda^2 (x.x) - lambda (x.Ax) + x.(D-I)x = 0, stationary in x.
    double xx = 0.0, xax = 0.0, xdx = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
      const double xi = eig.vector[i];
      double ax = 0.0;
      for (const NodeId j : g.neighbors(i)) ax += eig.vector[j];
      xx += xi * xi;
      xax += xi * ax;
      xdx += xi * xi * (static_cast<double>(g.degree(i)) - 1.0);
    }
    const double disc = xax * xax - 4.0 * xx * xdx;
    if (xx > 0.0 && disc >= 0.0) out.eigenvalue = (xax + std::sqrt(disc)) / (2.0 * xx);
  }
  out.residual = eig.residual;
  out.iterations = eig.iterations;
  out.converged = eig.converged;
  if (!eig.converged)
    out.warnings.emplace_back("power iteration did not converge in " +
                              std::to_string(eig.iterations) + " iterations");
  eig.vector.resize(g.node_count());
  out.scores = std::move(eig.vector);
  finalize_scores(out.scores, eig.converged, "nonbacktracking_centrality");
  return out;
}

NBEdgeSpace build_nb_edge_space(const Graph& g) {
  NBEdgeSpace space;
  const std::size_t directed = 2 * g.edge_count();
  space.source.resize(directed);
  space.target.resize(directed);
  space.reverse.resize(directed);
  const auto offsets = g.offsets();
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto nbrs = g.neighbors(i);
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      const EdgeIndex e = offsets[i] + p;
      const NodeId j = nbrs[p];
      space.source[e] = i;
      space.target[e] = j;
      const auto back = g.neighbors(j);
      const auto q = std::lower_bound(back.begin(), back.end(), i) - back.begin();
      space.reverse[e] = offsets[j] + static_cast<EdgeIndex>(q);
    }
  }
  return space;
}

PatternMatrixOperator nonbacktracking_matrix(const Graph& g, const NBEdgeSpace& space) {
  // Row k->l collects every edge i->k with i != l. Those are the reverses
  // of k's outgoing edges other than k->l itself.
  const auto offsets = g.offsets();
  std::vector<std::uint64_t> rows(space.size() + 1, 0);
  std::vector<std::uint64_t> cols;
  for (EdgeIndex row = 0; row < space.size(); ++row) {
    const NodeId k = space.source[row];
    const NodeId l = space.target[row];
    for (EdgeIndex out_edge = offsets[k]; out_edge < offsets[k + 1]; ++out_edge) {
      if (space.target[out_edge] == l) continue;
      cols.push_back(space.reverse[out_edge]);
    }
    rows[row + 1] = cols.size();
  }
  return PatternMatrixOperator(std::move(rows), std::move(cols));
}

CentralityVector nb_centrality_oracle(const Graph& g, const CentralityOptions& options) {
  if (g.empty()) throw EmptyGraphError("nb_centrality_oracle: empty graph");
  if (2 * g.edge_count() > kNbOracleEdgeLimit)
    throw SizeLimitError("nb_centrality_oracle: 2m = " + std::to_string(2 * g.edge_count()) +
                         " exceeds the limit of " + std::to_string(kNbOracleEdgeLimit));
  CentralityVector out;
  out.method = CentralityMethod::kNonbacktracking;
  out.source_graph_hash = g.structure_hash();
  check_nb_preconditions(g, out, "nb_centrality_oracle");

  const NBEdgeSpace space = build_nb_edge_space(g);
  const PatternMatrixOperator b = nonbacktracking_matrix(g, space);
  PowerIterationOptions p = solver_options(options);
  p.max_iters = std::max(p.max_iters, kOracleMinIters);
  const EigenResult eig = power_iteration(b, p);
  out.eigenvalue = eig.eigenvalue;
  out.residual = eig.residual;
  out.iterations = eig.iterations;
  out.converged = eig.converged;

  // x_j = sum over incoming edges i->j of v_{i->j}.
  out.scores.assign(g.node_count(), 0.0);
  for (EdgeIndex e = 0; e < space.size(); ++e) out.scores[space.target[e]] += eig.vector[e];
  finalize_scores(out.scores, eig.converged, "nb_centrality_oracle");
  return out;
}

}  // namespace nbc
