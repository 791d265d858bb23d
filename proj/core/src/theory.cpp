#include "nbc/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nbc/error.hpp"

namespace nbc::theory {

Stieltjes stieltjes_transform(double z, double c) {
  if (!(c > 0.0)) throw ParameterError("stieltjes_transform: c must be positive");
  const double edge = 2.0 * std::sqrt(c);
  if (!(z >= edge))
    throw ParameterError("stieltjes_transform: z = " + std::to_string(z) +
                         " lies inside the band; the real branch needs z >= 2 sqrt(c) = " +
                         std::to_string(edge));
  // (z - edge)(z + edge) avoids cancellation in z^2 - 4c near the edge.
  const double root = std::sqrt((z - edge) * (z + edge));
  Stieltjes s;
  // 2 / (z + root) equals (z - root) / 2c without the cancellation at large z.
  s.value = 2.0 / (z + root);
  s.derivative = root == 0.0 ? -std::numeric_limits<double>::infinity() : -s.value / root;
  return s;
}

std::optional<double> HubTheory::hub_score() const {
  if (!hub_weight_sq) return std::nullopt;
  return std::sqrt(*hub_weight_sq);
}

std::optional<double> HubTheory::neighbor_mean() const {
  const auto v = hub_score();
  if (!v || !neighbor_mean_factor) return std::nullopt;
  return *v * *neighbor_mean_factor;
}

std::optional<double> HubTheory::nonhub_mean(std::size_t n) const {
  if (!nonhub_mean_prefactor || n < 2) return std::nullopt;
  return *nonhub_mean_prefactor / static_cast<double>(n - 1);
}

double HubTheory::leading_eigenvalue() const { return z2 ? std::max(z1, *z2) : z1; }

HubTheory hub_predictions(double c, double d) {
  if (!(c > 0.0)) throw ParameterError("hub_predictions: c must be positive");
  if (!(d >= 0.0)) throw ParameterError("hub_predictions: d must be non-negative");
  HubTheory t;
  t.c = c;
  t.d = d;
  t.z1 = c + 1.0;
  t.d_threshold = c * (c + 1.0);
  t.predicted_localized = d > t.d_threshold;

  if (d > c) {
    t.neighbor_mean_factor = 1.0 / std::sqrt(d - c);
  } else {
    t.absent_reasons.emplace_back("neighbor_mean_factor: needs d > c");
  }
  if (d > 2.0 * c) {
    const double z2 = d / std::sqrt(d - c);
    t.z2 = z2;
    t.hub_weight_sq = (d - 2.0 * c) / (2.0 * d - 2.0 * c);
    t.nonhub_mean_prefactor = d * std::sqrt(*t.hub_weight_sq) / std::sqrt(d - c);
  } else {
    t.absent_reasons.emplace_back(
        "z2, hub_weight_sq, nonhub_mean_prefactor: need d > 2c; the hub eigenvalue "
        "stays inside the semicircle band");
  }
  return t;
}

double nb_leading_eigenvalue(const DegreeStats& stats) {
  if (!(stats.mean > 0.0)) throw ParameterError("nb_leading_eigenvalue: mean degree is zero");
  return (stats.second_moment - stats.mean) / stats.mean;
}

double nb_leading_eigenvalue_with_hub(const DegreeStats& non_hub, double d, double two_m) {
  if (!(two_m > 0.0)) throw ParameterError("nb_leading_eigenvalue_with_hub: graph has no edges");
  const auto count = static_cast<double>(non_hub.node_count);
  return (count * (non_hub.second_moment - non_hub.mean) + (d - 1.0) * d) / two_m;
}

bool powerlaw_localization_predicted(double alpha) {
  if (!(alpha > 2.0)) throw ParameterError("powerlaw_localization_predicted: alpha must exceed 2");
  return alpha > 2.5;
}

double powerlaw_max_degree_scale(double n, double alpha) {
  if (!(alpha > 1.0)) throw ParameterError("powerlaw_max_degree_scale: alpha must exceed 1");
  return std::pow(n, 1.0 / (alpha - 1.0));
}

SpectralBounds spectral_bounds(const DegreeStats& stats, std::optional<std::size_t> clique_size) {
  SpectralBounds b;
  b.rayleigh_hub_bound = std::sqrt(static_cast<double>(stats.max_degree));
  if (clique_size) {
    if (*clique_size < 2) throw ParameterError("spectral_bounds: clique size must be at least 2");
    b.clique_bound = static_cast<double>(*clique_size) - 2.0;
  }
  return b;
}

}  // namespace nbc::theory
