#include <doctest.h>

#include <cmath>

#include "nbc/error.hpp"
#include "nbc/graph.hpp"
#include "nbc/theory.hpp"
#include "support/test_graphs.hpp"

using namespace nbc;
using namespace nbc::theory;

TEST_CASE("Stieltjes transform: band edge, hub eigenvalue, asymptote") {
  for (const double c : {1.0, 4.0, 10.0}) {
    const auto s = stieltjes_transform(2.0 * std::sqrt(c), c);
    CHECK(s.value == doctest::Approx(1.0 / std::sqrt(c)).epsilon(1e-12));
    CHECK(std::isinf(s.derivative));
  }
  // 1/sqrt(110), frozen from a 30-digit mpmath evaluation.
  CHECK(stieltjes_transform(120.0 / std::sqrt(110.0), 10.0).value ==
        doctest::Approx(0.0953462589245592315).epsilon(1e-12));
  const double g = stieltjes_transform(1000.0, 10.0).value;
  CHECK(g >= 0.99e-3);
  CHECK(g <= 1.01e-3);
}

TEST_CASE("Stieltjes transform: branch and parameter errors") {
  CHECK_THROWS_AS(stieltjes_transform(6.0, 10.0), ParameterError);
  CHECK_THROWS_AS(stieltjes_transform(6.0, 0.0), ParameterError);
}

TEST_CASE("Stieltjes transform: self-consistency and derivative") {
  for (double c = 1.0; c <= 20.0; c += 1.5) {
    for (double t = 0.0; t <= 50.0; t += 0.7) {
      const double z = 2.0 * std::sqrt(c) + t;
      const auto s = stieltjes_transform(z, c);
      CHECK(std::abs(c * s.value * s.value - z * s.value + 1.0) <= 1e-12);
      if (t > 0.5) {
        // Central difference as an independent check of g'.
        const double h = 1e-5;
        const double fd = (stieltjes_transform(z + h, c).value - stieltjes_transform(z - h, c).value) / (2 * h);
        CHECK(s.derivative == doctest::Approx(fd).epsilon(1e-6));
      }
    }
    for (double z = 100.0; z <= 1e6; z *= 3.0) {
      const double g = stieltjes_transform(z, c).value;
      CHECK(std::abs(c * g * g - z * g + 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("hub predictions at c = 10, d = 120") {
  const HubTheory t = hub_predictions(10.0, 120.0);
  CHECK(t.d_threshold == 110.0);
  CHECK(t.z1 == 11.0);
  REQUIRE(t.z2);
  CHECK(*t.z2 == doctest::Approx(11.4415510709471078).epsilon(1e-12));
  REQUIRE(t.hub_weight_sq);
  CHECK(*t.hub_weight_sq == doctest::Approx(100.0 / 220.0).epsilon(1e-14));
  CHECK(*t.hub_score() == doctest::Approx(0.674199862463242086).epsilon(1e-12));
  CHECK(*t.neighbor_mean() == doctest::Approx(0.0642824346533225022).epsilon(1e-12));
  CHECK(t.predicted_localized);
  CHECK(t.leading_eigenvalue() == *t.z2);
  // Non-hub mean falls as 1/n.
  CHECK(*t.nonhub_mean(1000001) == doctest::Approx(*t.nonhub_mean(100001) / 10.0).epsilon(1e-4));
}

TEST_CASE("hub predictions at c = 10, d = 70: delocalized") {
  const HubTheory t = hub_predictions(10.0, 70.0);
  CHECK_FALSE(t.predicted_localized);
  REQUIRE(t.z2);
  CHECK(*t.z2 < t.z1);
  CHECK(t.leading_eigenvalue() == t.z1);
}

TEST_CASE("hub predictions: crossing exactly at the threshold") {
  for (double c = 2.0; c <= 20.0; c += 1.0) {
    const HubTheory t = hub_predictions(c, c * (c + 1.0));
    REQUIRE(t.z2);
    CHECK(std::abs(*t.z2 - t.z1) <= 1e-12 * t.z1);
    CHECK_FALSE(t.predicted_localized);
  }
}

TEST_CASE("hub predictions: absent fields below their domains") {
  const HubTheory low = hub_predictions(10.0, 15.0);
  CHECK_FALSE(low.z2.has_value());
  CHECK_FALSE(low.hub_weight_sq.has_value());
  CHECK(low.neighbor_mean_factor.has_value());
  CHECK_FALSE(low.absent_reasons.empty());
  const HubTheory none = hub_predictions(10.0, 5.0);
  CHECK_FALSE(none.neighbor_mean_factor.has_value());
  CHECK_FALSE(none.hub_score().has_value());
  CHECK_THROWS_AS(hub_predictions(0.0, 5.0), ParameterError);
  CHECK_THROWS_AS(hub_predictions(1.0, -5.0), ParameterError);
}

TEST_CASE("hub weight equals 1 / (1 - d g'(z2))") {
  for (double c = 2.0; c <= 20.0; c += 0.5) {
    for (double d = 2.0 * c + 0.5; d <= 3.0 * c * c; d += c / 3.0) {
      const HubTheory t = hub_predictions(c, d);
      const auto s = stieltjes_transform(*t.z2, c);
      CHECK(std::abs(*t.hub_weight_sq - 1.0 / (-d * s.derivative + 1.0)) <= 1e-10);
      CHECK(*t.hub_weight_sq > 0.0);
      CHECK(*t.hub_weight_sq < 0.5);
      // z2 solves d g(z) = z, and g(z2) = 1/sqrt(d - c).
      CHECK(std::abs(d * s.value - *t.z2) <= 1e-10 * *t.z2);
      CHECK(std::abs(s.value - *t.neighbor_mean_factor) <= 1e-12);
    }
  }
}

TEST_CASE("threshold equivalence: z2 > z1 iff d > c(c+1)") {
  for (double c = 2.0; c <= 20.0; c += 0.25) {
    const int steps = 400;
    for (int i = 1; i <= steps; ++i) {
      const double d = c + (3.0 * c * c - c) * i / steps;
      const HubTheory t = hub_predictions(c, d);
      const bool hub_leads = t.z2 && *t.z2 > t.z1 + 1e-9;
      const bool above = d > c * (c + 1.0) + 1e-9;
      if (std::abs(d - c * (c + 1.0)) > 1e-9) CHECK(hub_leads == above);
    }
  }
}

TEST_CASE("nonbacktracking eigenvalue formula") {
  for (const std::size_t k : {2UL, 3UL, 7UL}) {
    const auto s = degree_stats(nbc::testing::random_regular_graph(50, k, 3));
    CHECK(nb_leading_eigenvalue(s) == doctest::Approx(static_cast<double>(k) - 1.0));
  }
  // Poisson moments: <k^2> = c^2 + c.
  DegreeStats poisson;
  poisson.mean = 10.0;
  poisson.second_moment = 110.0;
  CHECK(nb_leading_eigenvalue(poisson) == doctest::Approx(10.0));
  DegreeStats empty;
  CHECK_THROWS_AS(nb_leading_eigenvalue(empty), ParameterError);

  // Hub correction: n-1 Poisson nodes, 2m = (n-1) c + 2d.
  DegreeStats non_hub = poisson;
  non_hub.node_count = 999999;
  const double two_m = 999999.0 * 10.0 + 240.0;
  const double z = nb_leading_eigenvalue_with_hub(non_hub, 120.0, two_m);
  CHECK(z == doctest::Approx((999999.0 * 100.0 + 119.0 * 120.0) / two_m));
  CHECK(std::abs(z - 10.0) < 0.01);
}

TEST_CASE("power-law localization criterion") {
  CHECK(powerlaw_localization_predicted(2.9));
  CHECK_FALSE(powerlaw_localization_predicted(2.1));
  CHECK_FALSE(powerlaw_localization_predicted(2.5));
  CHECK(powerlaw_localization_predicted(std::nextafter(2.5, 3.0)));
  CHECK_THROWS_AS(powerlaw_localization_predicted(2.0), ParameterError);
  CHECK(powerlaw_max_degree_scale(1e6, 3.0) == doctest::Approx(1000.0));
}

TEST_CASE("spectral bounds") {
  DegreeStats s;
  s.max_degree = 120;
  const auto b = spectral_bounds(s, 12);
  CHECK(b.rayleigh_hub_bound == doctest::Approx(10.954451150103322));
  CHECK(*b.clique_bound == 10.0);
  CHECK(*spectral_bounds(s, 2).clique_bound == 0.0);
  CHECK_FALSE(spectral_bounds(s).clique_bound.has_value());
  CHECK_THROWS_AS(spectral_bounds(s, 1), ParameterError);
}
