#include "nbc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "nbc/error.hpp"

namespace nbc {

Graph::Graph(std::vector<EdgeIndex> offsets_in, std::vector<NodeId> neighbors_in,
             std::vector<std::string> labels_in)
    : offsets_(std::move(offsets_in)),
      neighbors_(std::move(neighbors_in)),
      labels_(std::move(labels_in)) {
  validate();
}

void Graph::validate() const {
  if (offsets_.empty()) {
    if (!neighbors_.empty()) throw Error("graph: neighbors without offsets");
    if (!labels_.empty()) throw Error("graph: labels without nodes");
    return;
  }
  const std::size_t n = offsets_.size() - 1;
  if (offsets_.front() != 0 || offsets_.back() != neighbors_.size())
    throw Error("graph: offsets do not span the neighbor array");
  if (n > std::numeric_limits<NodeId>::max())
    throw Error("graph: node count exceeds index range");
  if (!labels_.empty() && labels_.size() != n)
    throw Error("graph: label count does not match node count");

  for (std::size_t i = 0; i < n; ++i) {
    if (offsets_[i] > offsets_[i + 1]) throw Error("graph: offsets not monotone");
    const auto nbrs = neighbors(static_cast<NodeId>(i));
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      const NodeId j = nbrs[p];
      if (j >= n) throw Error("graph: neighbor index out of range");
      if (j == i) throw Error("graph: self-loop at node " + std::to_string(i));
      if (p > 0 && nbrs[p - 1] >= j)
        throw Error("graph: neighbor list of node " + std::to_string(i) +
                    " is not strictly increasing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const NodeId j : neighbors(static_cast<NodeId>(i))) {
      if (!has_edge(j, static_cast<NodeId>(i)))
        throw Error("graph: asymmetric edge " + std::to_string(i) + " -> " +
                    std::to_string(j));
    }
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels, CleanupCounts* counts) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw Error("graph: edge endpoint out of range");
    if (e.u == e.v) {
      ++loops;
      continue;
    }
    canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(canon.begin(), canon.end());
  const auto last = std::unique(canon.begin(), canon.end());
  const auto dupes = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());
  if (counts != nullptr) {
    counts->duplicates_merged = dupes;
    counts->self_loops_dropped = loops;
  }

  std::vector<EdgeIndex> offsets(n + 1, 0);
  for (const Edge& e : canon) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<NodeId> neighbors(offsets[n]);
  std::vector<EdgeIndex> cursor(offsets.begin(), offsets.end() - 1);
  // Edges are sorted by (u, v) with u < v, so filling in that order yields
  // sorted lists: for node x, neighbors w < x arrive (as e.v == x) in
  // increasing u before any neighbor w > x (as e.u == x).
  for (const Edge& e : canon) {
    neighbors[cursor[e.u]++] = e.v;
    neighbors[cursor[e.v]++] = e.u;
  }
  Graph g;
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
  if (!labels.empty() && labels.size() != n)
    throw Error("graph: label count does not match node count");
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string Graph::label(NodeId i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId i = 0; i < node_count(); ++i)
    for (const NodeId j : neighbors(i))
      if (i < j) out.push_back({i, j});
  return out;
}

std::uint64_t Graph::structure_hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(node_count());
  for (const EdgeIndex o : offsets_) mix(o);
  for (const NodeId j : neighbors_) mix(j);
  return h;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::uint64_t k = g.degree(i);
    ++s.histogram[k];
    sum += k;
    sum_sq += k * k;
    s.max_degree = std::max<std::size_t>(s.max_degree, k);
  }
  if (s.node_count > 0) {
    s.mean = static_cast<double>(sum) / static_cast<double>(s.node_count);
    s.second_moment = static_cast<double>(sum_sq) / static_cast<double>(s.node_count);
  }
  return s;
}

NodeId max_degree_node(const Graph& g) {
  if (g.empty()) throw EmptyGraphError("max_degree_node: empty graph");
  NodeId best = 0;
  for (NodeId i = 1; i < g.node_count(); ++i)
    if (g.degree(i) > g.degree(best)) best = i;
  return best;
}

std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> comp(n, kUnset);
  std::vector<NodeId> queue;
  queue.reserve(n);
  std::uint32_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    queue.clear();
    queue.push_back(s);
    comp[s] = next;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const NodeId j : g.neighbors(queue[head])) {
        if (comp[j] == kUnset) {
          comp[j] = next;
          queue.push_back(j);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Component induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
  constexpr auto kDropped = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> remap(g.node_count(), kDropped);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.node_count() || (i > 0 && keep[i - 1] >= keep[i]))
      throw Error("induced_subgraph: node subset must be sorted and unique");
    remap[keep[i]] = static_cast<NodeId>(i);
  }
  std::vector<EdgeIndex> offsets(keep.size() + 1, 0);
  std::vector<NodeId> neighbors;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    // remap is monotone on kept nodes, so the filtered list stays sorted.
    for (const NodeId j : g.neighbors(keep[i]))
      if (remap[j] != kDropped) neighbors.push_back(remap[j]);
    offsets[i + 1] = neighbors.size();
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(keep.size());
    for (const NodeId i : keep) labels.push_back(g.labels()[i]);
  }
  return {Graph(std::move(offsets), std::move(neighbors), std::move(labels)),
          std::vector<NodeId>(keep.begin(), keep.end())};
}

Component largest_component_with_map(const Graph& g) {
  if (g.empty()) throw EmptyGraphError("largest_component: empty graph");
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  if (count == 1) {
    std::vector<NodeId> all(g.node_count());
    for (NodeId i = 0; i < all.size(); ++i) all[i] = i;
    return {g, std::move(all)};
  }
  std::vector<std::size_t> sizes(count, 0);
  for (const auto c : comp) ++sizes[c];
  // Components are numbered by smallest member, so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> keep;
  keep.reserve(sizes[best]);
  for (NodeId i = 0; i < g.node_count(); ++i)
    if (comp[i] == best) keep.push_back(i);
  return induced_subgraph(g, keep);
}

Graph largest_component(const Graph& g) { return largest_component_with_map(g).graph; }

std::vector<NodeId> two_core_nodes(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<NodeId> stack;
  for (NodeId i = 0; i < n; ++i) {
    deg[i] = g.degree(i);
    if (deg[i] < 2) {
      removed[i] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const NodeId i = stack.back();
    stack.pop_back();
    for (const NodeId j : g.neighbors(i)) {
      if (removed[j]) continue;
      if (--deg[j] < 2) {
        removed[j] = 1;
        stack.push_back(j);
      }
    }
  }
  std::vector<NodeId> core;
  for (NodeId i = 0; i < n; ++i)
    if (!removed[i]) core.push_back(i);
  return core;
}

ParseResult parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& token) {
    const auto [it, inserted] = index.try_emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  std::size_t self_loops = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream tokens(line);
    std::string a, b, extra;
    tokens >> a >> b;
    if (b.empty() || (tokens >> extra))
      throw ParseError(line_no, "expected exactly two tokens \"u v\", got \"" + line + "\"");
    if (a == b) {
      ++self_loops;
      continue;
    }
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    edges.push_back({u, v});
  }
  if (edges.empty()) throw EmptyGraphError("edge list contains no edges");

  CleanupCounts counts;
  const std::size_t n = labels.size();
  Graph g = Graph::from_edges(n, edges, std::move(labels), &counts);
  counts.self_loops_dropped = self_loops;
  return {std::move(g), counts};
}

ParseResult parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open edge list: " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace nbc
