#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nbc/centrality.hpp"
#include "nbc/graph.hpp"

namespace nbc {

// Locale-independent shortest round-trip decimal form of a double.
std::string format_double(double x);

struct CentralityRunInfo {
  double tol = 0.0;
  std::size_t max_iters = 0;
  std::uint64_t seed = 0;
  bool largest_component = false;
  std::size_t source_nodes = 0;  // node count before component selection
};

// One row per node: label, degree, then one column per computed method in
// the order given. Metadata precedes the header as "# key=value" lines.
void write_centrality_csv(std::ostream& out, const Graph& g,
                          const std::vector<CentralityVector>& results,
                          const CentralityRunInfo& info);

void write_centrality_json(std::ostream& out, const Graph& g,
                           const std::vector<CentralityVector>& results,
                           const CentralityRunInfo& info);

}  // namespace nbc
