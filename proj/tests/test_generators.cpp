#include <doctest.h>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>

#include "nbc/error.hpp"
#include "nbc/generators.hpp"
#include "nbc/graph.hpp"

using namespace nbc;

TEST_CASE("er_plus_hub: d = 0 leaves the hub isolated") {
  const Graph g = generate_er_plus_hub({2000, 5.0, 0.0, 3});
  g.validate();
  CHECK(g.node_count() == 2000);
  CHECK(g.degree(1999) == 0);
}

TEST_CASE("er_plus_hub: hub degree and block mean degree concentrate") {
  for (std::uint64_t seed = 7; seed < 12; ++seed) {
    const std::size_t n = 100000;
    const Graph g = generate_er_plus_hub({n, 10.0, 120.0, seed});
    const auto hub = static_cast<NodeId>(n - 1);
    CHECK(std::abs(static_cast<double>(g.degree(hub)) - 120.0) <= 3.0 * std::sqrt(120.0));
    const double non_hub_sum = static_cast<double>(2 * g.edge_count() - g.degree(hub));
    const double non_hub_mean = non_hub_sum / static_cast<double>(n - 1);
    CHECK(std::abs(non_hub_mean - 10.0) <= 0.01 * 10.0);
  }
}

TEST_CASE("er_plus_hub: same seed gives identical graphs, other seeds differ") {
  const HubModelParams p{5000, 4.0, 30.0, 42};
  const Graph a = generate_er_plus_hub(p);
  const Graph b = generate_er_plus_hub(p);
  CHECK(a == b);
  CHECK(serialize_edge_list(a) == serialize_edge_list(b));
  HubModelParams q = p;
  q.seed = 43;
  CHECK_FALSE(generate_er_plus_hub(q) == a);
}

TEST_CASE("er_plus_hub: hub edges do not perturb the block") {
  // Separate substreams: changing d leaves the random block untouched.
  const Graph a = generate_er_plus_hub({3000, 6.0, 0.0, 9});
  const Graph b = generate_er_plus_hub({3000, 6.0, 80.0, 9});
  std::size_t block_a = 0, block_b = 0;
  for (const Edge& e : a.edges()) block_a += e.v != 2999;
  for (const Edge& e : b.edges()) {
    if (e.v == 2999) continue;
    ++block_b;
    CHECK(a.has_edge(e.u, e.v));
  }
  CHECK(block_a == block_b);
}

TEST_CASE("er_plus_hub: parameter errors") {
  CHECK_THROWS_AS(generate_er_plus_hub({10, 9.0, 1.0, 0}), ParameterError);   // c/(n-2) > 1
  CHECK_THROWS_AS(generate_er_plus_hub({10, 2.0, 10.0, 0}), ParameterError);  // d/(n-1) > 1
  CHECK_THROWS_AS(generate_er_plus_hub({2, 1.0, 1.0, 0}), ParameterError);
  CHECK_THROWS_AS(generate_er_plus_hub({100, -1.0, 1.0, 0}), ParameterError);
  CHECK_NOTHROW(generate_er_plus_hub({10, 8.0, 9.0, 0}));  // both probabilities exactly 1
  const Graph full = generate_er_plus_hub({10, 8.0, 9.0, 0});
  CHECK(full.edge_count() == 45);
}

TEST_CASE("er_plus_hub: non-hub degrees follow Binomial(n-2, p) + Bernoulli(q)") {
  // Goodness of fit per seed at level 0.01; with 20 independent seeds more
  // than two rejections would have probability about 1e-3.
  const std::size_t n = 4000;
  const double c = 6.0, d = 200.0;
  const double p = c / static_cast<double>(n - 2);
  const double q = d / static_cast<double>(n - 1);
  const boost::math::binomial_distribution<double> block(static_cast<double>(n - 2), p);
  auto pmf = [&](std::size_t k) {
    double v = (1.0 - q) * boost::math::pdf(block, static_cast<double>(k));
    if (k > 0) v += q * boost::math::pdf(block, static_cast<double>(k - 1));
    return v;
  };
  // Bins [0, lo], lo+1, ..., hi-1, [hi, inf) chosen so every expectation is >= 5.
  const std::size_t lo = 1, hi = 13;
  std::vector<double> probs;
  double acc = 0.0;
  for (std::size_t k = 0; k <= lo; ++k) acc += pmf(k);
  probs.push_back(acc);
  for (std::size_t k = lo + 1; k < hi; ++k) probs.push_back(pmf(k));
  probs.push_back(1.0 - std::accumulate(probs.begin(), probs.end(), 0.0));
  const double expected_min = *std::min_element(probs.begin(), probs.end()) * (n - 1);
  REQUIRE(expected_min >= 5.0);

  const boost::math::chi_squared_distribution<double> chi2(static_cast<double>(probs.size() - 1));
  const double critical = boost::math::quantile(chi2, 0.99);
  int rejections = 0;
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Graph g = generate_er_plus_hub({n, c, d, seed});
    std::vector<double> observed(probs.size(), 0.0);
    for (NodeId i = 0; i + 1 < n; ++i) {
      const std::size_t k = g.degree(i);
      const std::size_t bin = k <= lo ? 0 : (k >= hi ? probs.size() - 1 : k - lo);
      observed[bin] += 1.0;
    }
    double stat = 0.0;
    for (std::size_t b = 0; b < probs.size(); ++b) {
      const double e = probs[b] * static_cast<double>(n - 1);
      stat += (observed[b] - e) * (observed[b] - e) / e;
    }
    if (stat > critical) ++rejections;
  }
  CHECK(rejections <= 2);
}

TEST_CASE("powerlaw: alpha must exceed 2") {
  CHECK_THROWS_AS(generate_powerlaw_config({1000, 2.0, 1, 0}), ParameterError);
  CHECK_THROWS_AS(generate_powerlaw_config({1000, 1.5, 1, 0}), ParameterError);
  CHECK_THROWS_AS(generate_powerlaw_config({1000, 2.5, 0, 0}), ParameterError);
}

TEST_CASE("powerlaw: deterministic for a fixed seed") {
  const PowerLawParams p{20000, 2.5, 2, 5};
  CHECK(generate_powerlaw_config(p) == generate_powerlaw_config(p));
  PowerLawParams q = p;
  q.seed = 6;
  CHECK_FALSE(generate_powerlaw_config(q) == generate_powerlaw_config(p));
}

TEST_CASE("powerlaw: sampled mean matches the truncated distribution") {
  // Frozen from a direct numeric sum over k = 3..9999 of k^-3.5.
  const double analytic = 4.295414349117088;
  CHECK(powerlaw_mean_degree(3.5, 3, 9999) == doctest::Approx(analytic).epsilon(1e-12));
  const PowerLawParams p{10000, 3.5, 3, 11};
  const auto degrees = sample_powerlaw_degrees(p);
  const double mean = std::accumulate(degrees.begin(), degrees.end(), 0.0) / 10000.0;
  CHECK(std::abs(mean - analytic) <= 0.05 * analytic);
  const Graph g = generate_powerlaw_config(p);
  g.validate();
  const double graph_mean = 2.0 * static_cast<double>(g.edge_count()) / 10000.0;
  CHECK(std::abs(graph_mean - analytic) <= 0.05 * analytic);
  for (const auto k : degrees) CHECK(k >= 3);
}

TEST_CASE("powerlaw: stub multigraph realizes the degree sequence exactly") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PowerLawParams p{5000, 2.3, 1, seed};
    const auto sampled = sample_powerlaw_degrees(p);
    std::vector<std::size_t> degrees;
    std::vector<Edge> raw;
    const Graph g = generate_powerlaw_config(p, &degrees, &raw);
    g.validate();
    // Parity fix: at most one entry incremented by one.
    std::size_t changed = 0;
    for (std::size_t i = 0; i < sampled.size(); ++i) {
      CHECK(degrees[i] >= sampled[i]);
      CHECK(degrees[i] <= sampled[i] + 1);
      changed += degrees[i] != sampled[i];
    }
    CHECK(changed <= 1);
    CHECK(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) % 2 == 0);
    std::vector<std::size_t> realized(p.n, 0);
    for (const Edge& e : raw) {
      ++realized[e.u];
      ++realized[e.v];
    }
    CHECK(realized == degrees);
    // Erasure only removes edges.
    for (NodeId i = 0; i < p.n; ++i) CHECK(g.degree(i) <= degrees[i]);
  }
}

TEST_CASE("powerlaw: maximum degree grows as n^(1/(alpha-1))") {
  const double alpha = 2.9;
  for (const std::size_t n : {10000UL, 100000UL, 1000000UL}) {
    const Graph g = generate_powerlaw_config({n, alpha, 1, 17});
    const double max_degree = static_cast<double>(degree_stats(g).max_degree);
    const double scale = std::pow(static_cast<double>(n), 1.0 / (alpha - 1.0));
    // Within half a decade either way.
    CHECK(std::abs(std::log10(max_degree / scale)) <= 0.5);
  }
}
