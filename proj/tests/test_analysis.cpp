#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "nbc/analysis.hpp"
#include "nbc/error.hpp"
#include "nbc/generators.hpp"
#include "nbc/rng.hpp"
#include "support/test_graphs.hpp"

using namespace nbc;
using namespace nbc::testing;

TEST_CASE("IPR: uniform and spike") {
  for (const std::size_t n : {1UL, 7UL, 1000UL}) {
    const std::vector<double> u(n, 1.0 / std::sqrt(static_cast<double>(n)));
    CHECK(inverse_participation_ratio(u) == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-12));
  }
  std::vector<double> spike(50, 0.0);
  spike[17] = 1.0;
  CHECK(inverse_participation_ratio(spike) == 1.0);
}

TEST_CASE("IPR renormalizes and rejects the zero vector") {
  CHECK(inverse_participation_ratio(std::vector<double>{3.0, 3.0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(inverse_participation_ratio(std::vector<double>{0.0, 0.0}), DegenerateError);
}

TEST_CASE("property: IPR bounds and invariance under permutation and sign flips") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed, Stream::kTest);
    const std::size_t n = 1 + rng.uniform_index(64);
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform() * 2.0 - 1.0;
    if (norm2(v) == 0.0) continue;
    const double s = inverse_participation_ratio(v);
    CHECK(s >= 1.0 / static_cast<double>(n) * (1.0 - 1e-12));
    CHECK(s <= 1.0 + 1e-12);
    std::vector<double> w = v;
    for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[rng.uniform_index(i)]);
    for (double& x : w)
      if (rng.uniform() < 0.5) x = -x;
    CHECK(inverse_participation_ratio(w) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("group means: star, hub at the center") {
  const Graph g = star_graph(4);
  const auto c = eigenvector_centrality(g);
  const GroupMeans m = group_means(g, c.scores, 0);
  CHECK(m.hub == doctest::Approx(0.7071067811865476).epsilon(1e-9));
  REQUIRE(m.hub_neighbors);
  CHECK(*m.hub_neighbors == doctest::Approx(0.3535533905932738).epsilon(1e-9));
  CHECK_FALSE(m.others.has_value());
  CHECK(m.neighbor_count == 4);
  CHECK(m.other_count == 0);
}

TEST_CASE("group means: isolated hub has no neighbor mean; groups partition") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}});
  const std::vector<double> s{0.1, 0.2, 0.3, 0.4};
  const GroupMeans m = group_means(g, s, 3);
  CHECK_FALSE(m.hub_neighbors.has_value());
  REQUIRE(m.others);
  CHECK(*m.others == doctest::Approx(0.2));
  CHECK(1 + m.neighbor_count + m.other_count == g.node_count());
  CHECK_THROWS_AS(group_means(g, s, 4), ParameterError);
}

TEST_CASE("localization verdict") {
  CHECK_FALSE(localization_verdict(2.6e-6, 1000000));
  CHECK(localization_verdict(0.2567, 1000000));
  CHECK_FALSE(localization_verdict(1.0 / 1000.0, 1000));
  CHECK_FALSE(localization_verdict(1.0, 1));  // factor 10 exceeds any IPR at n = 1
  CHECK(localization_verdict(0.05, 1000000, 1.0));
  CHECK_THROWS_AS(localization_verdict(0.1, 0), ParameterError);
}

TEST_CASE("localization report defaults to the max-degree hub and serializes") {
  const Graph g = star_graph(6);
  const auto c = eigenvector_centrality(g);
  auto report = localization_report(g, c);
  CHECK(report.hub_node == 0);
  CHECK(report.ipr == doctest::Approx(inverse_participation_ratio(c)));
  report.threshold_context = ThresholdContext{10.0, 120.0, 110.0, true};
  const auto j = nlohmann::json::parse(to_json(report));
  CHECK(j["method"] == "eigenvector");
  CHECK(j["group_means"]["others"].is_null());
  CHECK(j["threshold_context"]["d_threshold"] == 110.0);
  CHECK(j["localized"].get<bool>() == report.localized);
}
