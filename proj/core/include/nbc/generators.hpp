#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nbc/graph.hpp"

namespace nbc {

// Erdos-Renyi block on nodes 0..n-2 with edge probability c/(n-2), plus a
// hub at node n-1 joined to each other node with probability d/(n-1).
struct HubModelParams {
  std::size_t n = 0;  // total node count including the hub
  double c = 0.0;     // mean degree of the random block
  double d = 0.0;     // expected hub degree
  std::uint64_t seed = 0;
};

struct PowerLawParams {
  std::size_t n = 0;
  double alpha = 0.0;      // p_k proportional to k^-alpha, alpha > 2
  std::size_t k_min = 1;   // smallest degree; the largest is n-1
  std::uint64_t seed = 0;
};

// Throws ParameterError if either probability leaves [0, 1] or n < 3.
Graph generate_er_plus_hub(const HubModelParams& params);

// G(n, p) with geometric edge skipping; draws from Stream::kErBlock.
Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Degrees i.i.d. from the truncated discrete power law, parity fixed by
// incrementing one uniformly chosen node, stubs matched uniformly, then
// self-loops and multi-edges erased. The degree sequence after the parity
// fix and the raw stub pairs are returned through the optional pointers.
Graph generate_powerlaw_config(const PowerLawParams& params,
                               std::vector<std::size_t>* degrees_out = nullptr,
                               std::vector<Edge>* raw = nullptr);

// Truncated power-law degree sequence alone (before the parity fix).
std::vector<std::size_t> sample_powerlaw_degrees(const PowerLawParams& params);

// Stub matching for a prescribed degree sequence (sum must be even).
// The raw multigraph edge list, before erasure, is returned through
// `raw` when non-null.
Graph configuration_model(std::span<const std::size_t> degrees, std::uint64_t seed,
                          std::vector<Edge>* raw = nullptr);

// Exact mean of the truncated power law on [k_min, k_max].
double powerlaw_mean_degree(double alpha, std::size_t k_min, std::size_t k_max);

}  // namespace nbc
