#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nbc {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint64_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Counters reported when an edge list is normalized into a simple graph.
struct CleanupCounts {
  std::size_t duplicates_merged = 0;
  std::size_t self_loops_dropped = 0;
};

// Immutable simple undirected graph in CSR layout. Neighbor lists are sorted
// ascending; every edge {u, v} appears once in each endpoint's list.
class Graph {
 public:
  Graph() = default;

  // Takes ownership of a CSR structure and verifies the symmetry and
  // simplicity invariants. Throws nbc::Error on violation.
  Graph(std::vector<EdgeIndex> offsets, std::vector<NodeId> neighbors,
        std::vector<std::string> labels = {});

  // Builds a simple graph from an arbitrary edge list over nodes [0, n).
  // Self-loops are dropped and duplicates (in either orientation) merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {},
                          CleanupCounts* counts = nullptr);

  std::size_t node_count() const noexcept {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  bool empty() const noexcept { return node_count() == 0; }

  std::size_t degree(NodeId i) const noexcept {
    return static_cast<std::size_t>(offsets_[i + 1] - offsets_[i]);
  }
  std::span<const NodeId> neighbors(NodeId i) const noexcept {
    return {neighbors_.data() + offsets_[i], degree(i)};
  }
  bool has_edge(NodeId u, NodeId v) const;

  // Re-checks symmetry, simplicity and CSR consistency; throws nbc::Error.
  void validate() const;

  std::span<const EdgeIndex> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> adjacency() const noexcept { return neighbors_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  // Original identifier of node i; the decimal index when unlabeled.
  std::string label(NodeId i) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Undirected edges with u < v, sorted.
  std::vector<Edge> edges() const;

  // FNV-1a over the CSR arrays. Identifies the structure, not the labels.
  std::uint64_t structure_hash() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<EdgeIndex> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Degree statistics

struct DegreeStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::map<std::size_t, std::size_t> histogram;  // degree k -> n_k
  double mean = 0.0;           // <k>
  double second_moment = 0.0;  // <k^2>
  std::size_t max_degree = 0;
};

DegreeStats degree_stats(const Graph& g);

// Smallest-index node of maximum degree. Throws EmptyGraphError on n = 0.
NodeId max_degree_node(const Graph& g);

// ---------------------------------------------------------------------------
// Connectivity

struct Component {
  Graph graph;
  std::vector<NodeId> original;  // original[i] = index of node i in the source
};

// Component id per node, numbered in order of smallest contained node.
std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count = nullptr);
bool is_connected(const Graph& g);

// Induced subgraph on the node subset `keep` (must be sorted, unique).
Component induced_subgraph(const Graph& g, std::span<const NodeId> keep);

// Largest connected component; ties go to the component containing the
// smallest node index. Throws EmptyGraphError on n = 0.
Component largest_component_with_map(const Graph& g);
Graph largest_component(const Graph& g);

// Nodes of the 2-core (repeatedly strip nodes of degree < 2).
std::vector<NodeId> two_core_nodes(const Graph& g);

// ---------------------------------------------------------------------------
// Edge-list text format

struct ParseResult {
  Graph graph;
  CleanupCounts cleanup;
};

// Reads whitespace-separated "u v" lines; '#' starts a comment line. Tokens
// are arbitrary labels mapped to dense indices in order of first appearance.
// Every line is treated as an undirected edge, which symmetrizes directed
// sources. Throws ParseError or EmptyGraphError.
ParseResult parse_edge_list(std::istream& in);
ParseResult parse_edge_list_file(const std::string& path);

// Canonical form: one "u v" line per edge with u < v by index, sorted,
// written using node labels.
void write_edge_list(std::ostream& out, const Graph& g);
std::string serialize_edge_list(const Graph& g);

}  // namespace nbc
