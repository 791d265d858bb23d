#include "nbc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nbc/error.hpp"
#include "nbc/rng.hpp"

namespace nbc {
namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterError(std::string(what) + " probability " + std::to_string(p) +
                         " is outside [0, 1]");
}

// Batagelj-Brandes skipping over the lower triangle of an n-node block.
void append_erdos_renyi(std::size_t n, double p, Rng& rng, std::vector<Edge>& out) {
  if (n < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    for (NodeId v = 1; v < n; ++v)
      for (NodeId w = 0; w < v; ++w) out.push_back({w, v});
    return;
  }
  const double log1m_p = std::log1p(-p);
  std::uint64_t v = 1;
  std::uint64_t w = 0;
  bool first = true;
  while (v < n) {
    const std::uint64_t skip = rng.geometric_skip(log1m_p);
    w += first ? skip : skip + 1;
    first = false;
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) out.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v)});
  }
}

}  // namespace

Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "edge");
  Rng rng(seed, Stream::kErBlock);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * (n - 1) / 2 * 1.05) + 16);
  append_erdos_renyi(n, p, rng, edges);
  return Graph::from_edges(n, edges);
}

Graph generate_er_plus_hub(const HubModelParams& params) {
  const std::size_t n = params.n;
  if (n < 3) throw ParameterError("hub model needs n >= 3");
  if (!(params.c > 0.0)) throw ParameterError("hub model needs c > 0");
  if (!(params.d >= 0.0)) throw ParameterError("hub model needs d >= 0");
  const double p_block = params.c / static_cast<double>(n - 2);
  const double p_hub = params.d / static_cast<double>(n - 1);
  check_probability(p_block, "block edge");
  check_probability(p_hub, "hub edge");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(params.c * static_cast<double>(n) / 2 * 1.05 +
                                         params.d * 1.2) + 16);
  Rng block_rng(params.seed, Stream::kErBlock);
  append_erdos_renyi(n - 1, p_block, block_rng, edges);

  const auto hub = static_cast<NodeId>(n - 1);
  if (p_hub >= 1.0) {
    for (NodeId i = 0; i < hub; ++i) edges.push_back({i, hub});
  } else if (p_hub > 0.0) {
    Rng hub_rng(params.seed, Stream::kHubEdges);
    const double log1m_p = std::log1p(-p_hub);
    std::uint64_t i = hub_rng.geometric_skip(log1m_p);
    while (i < n - 1) {
      edges.push_back({static_cast<NodeId>(i), hub});
      i += 1 + hub_rng.geometric_skip(log1m_p);
    }
  }
  return Graph::from_edges(n, edges);
}

double powerlaw_mean_degree(double alpha, std::size_t k_min, std::size_t k_max) {
  double z = 0.0;
  double first = 0.0;
  // Sum smallest terms first.
  for (std::size_t k = k_max; k >= k_min && k > 0; --k) {
    const double w = std::pow(static_cast<double>(k), -alpha);
    z += w;
    first += static_cast<double>(k) * w;
  }
  return first / z;
}

std::vector<std::size_t> sample_powerlaw_degrees(const PowerLawParams& params) {
  if (!(params.alpha > 2.0)) throw ParameterError("power law needs alpha > 2");
  if (params.k_min < 1) throw ParameterError("power law needs k_min >= 1");
  if (params.n < 2 || params.k_min > params.n - 1)
    throw ParameterError("power law needs k_min <= n - 1");

  const std::size_t k_max = params.n - 1;
  const std::size_t span = k_max - params.k_min + 1;
  std::vector<double> cdf(span);
  double acc = 0.0;
  for (std::size_t i = 0; i < span; ++i) {
    acc += std::pow(static_cast<double>(params.k_min + i), -params.alpha);
    cdf[i] = acc;
  }
  for (double& x : cdf) x /= acc;
  cdf.back() = 1.0;

  Rng rng(params.seed, Stream::kDegrees);
  std::vector<std::size_t> degrees(params.n);
  for (auto& k : degrees) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    k = params.k_min + static_cast<std::size_t>(it - cdf.begin());
  }
  return degrees;
}

Graph configuration_model(std::span<const std::size_t> degrees, std::uint64_t seed,
                          std::vector<Edge>* raw) {
  const std::size_t total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  if (total % 2 != 0) throw ParameterError("configuration model needs an even degree sum");
  std::vector<NodeId> stubs;
  stubs.reserve(total);
  for (NodeId i = 0; i < degrees.size(); ++i) stubs.insert(stubs.end(), degrees[i], i);

  Rng rng(seed, Stream::kStubMatching);
  for (std::size_t i = stubs.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_index(i));
    std::swap(stubs[i - 1], stubs[j]);
  }
  std::vector<Edge> edges(total / 2);
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e] = {stubs[2 * e], stubs[2 * e + 1]};
  Graph g = Graph::from_edges(degrees.size(), edges);
  if (raw != nullptr) *raw = std::move(edges);
  return g;
}

Graph generate_powerlaw_config(const PowerLawParams& params,
                               std::vector<std::size_t>* degrees_out, std::vector<Edge>* raw) {
  std::vector<std::size_t> degrees = sample_powerlaw_degrees(params);
  const std::size_t total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  if (total % 2 != 0) {
    Rng parity(params.seed, Stream::kDegrees);
    // Fresh engine on the degree stream, offset past the degree draws.
    parity.discard(params.n);
    ++degrees[parity.uniform_index(params.n)];
  }
  Graph g = configuration_model(degrees, params.seed, raw);
  if (degrees_out != nullptr) *degrees_out = std::move(degrees);
  return g;
}

}  // namespace nbc
