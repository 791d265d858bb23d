#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nbc/graph.hpp"

namespace nbc::theory {

// Closed-form large-n predictions for the random-graph-plus-hub model and
// for nonbacktracking spectra. Every function is total on its documented
// domain; quantities that do not exist for given parameters are returned
// as std::nullopt together with a reason.

struct Stieltjes {
  double value = 0.0;       // g(z) = (z - sqrt(z^2 - 4c)) / 2c
  double derivative = 0.0;  // g'(z); -inf at the band edge
};

// Semicircle Stieltjes transform of the random block, real branch above
// the band. Throws ParameterError when z < 2 sqrt(c) or c <= 0.
Stieltjes stieltjes_transform(double z, double c);

struct HubTheory {
  double c = 0.0;
  double d = 0.0;
  double z1 = 0.0;           // c + 1, leading eigenvalue of the random block
  double d_threshold = 0.0;  // c (c + 1)
  // d / sqrt(d - c). Exists only for d > 2c: below that, d g(z) = z has no
  // solution above the band and the hub produces no outlying eigenvalue.
  std::optional<double> z2;
  std::optional<double> hub_weight_sq;          // (d - 2c) / (2d - 2c), d > 2c
  std::optional<double> neighbor_mean_factor;   // 1 / sqrt(d - c), d > c
  std::optional<double> nonhub_mean_prefactor;  // d v_n / sqrt(d - c), d > 2c
  bool predicted_localized = false;             // d > c (c + 1)
  std::vector<std::string> absent_reasons;

  std::optional<double> hub_score() const;
  // Mean eigenvector-centrality entry over the hub's neighbors.
  std::optional<double> neighbor_mean() const;
  // Mean over all n - 1 non-hub nodes; falls off as 1/n.
  std::optional<double> nonhub_mean(std::size_t n) const;
  // Leading adjacency eigenvalue: max(z1, z2).
  double leading_eigenvalue() const;
};

// Throws ParameterError for c <= 0 or d < 0.
HubTheory hub_predictions(double c, double d);

// (<k^2> - <k>) / <k>. Throws ParameterError when <k> = 0.
double nb_leading_eigenvalue(const DegreeStats& stats);

// [(n-1)(<k^2> - <k>) + (d-1) d] / 2m with the moments taken over the n-1
// non-hub nodes and 2m the total degree including the hub.
double nb_leading_eigenvalue_with_hub(const DegreeStats& non_hub, double d, double two_m);

// True iff alpha > 5/2 (strict). Throws ParameterError for alpha <= 2.
bool powerlaw_localization_predicted(double alpha);

// Expected order of the largest degree in an n-node power-law sample.
double powerlaw_max_degree_scale(double n, double alpha);

struct SpectralBounds {
  double rayleigh_hub_bound = 0.0;    // sqrt(max degree), lower bound on lambda(A)
  std::optional<double> clique_bound; // k - 2, lower bound on lambda(B)
};

// Throws ParameterError when a clique size below 2 is given.
SpectralBounds spectral_bounds(const DegreeStats& stats,
                               std::optional<std::size_t> clique_size = std::nullopt);

}  // namespace nbc::theory
