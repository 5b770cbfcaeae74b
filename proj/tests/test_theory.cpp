#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "dcj/rng.hpp"
#include "dcj/theory.hpp"
#include "doctest.h"

using namespace dcj;

TEST_CASE("gamma equals the identity below the critical point") {
  for (double c = 0.05; c < 0.495; c += 0.05) {
    const GammaResult g = gamma_series(c);
    CHECK(g.converged);
    CHECK(std::abs(g.value - c) <= 1e-8);
    CHECK(g.bound <= 1e-8);
  }
  // At the critical point the series decays polynomially; the identity
  // still holds but only a 1e-4 certificate is cheap.
  const GammaResult crit = gamma_series(0.5);
  CHECK(crit.converged);
  CHECK(std::abs(crit.value - 0.5) <= 1e-4);
}

TEST_CASE("gamma is strictly below the identity past the critical point") {
  double prev = 0.5;
  for (double c : {0.6, 0.8, 1.0, 1.5, 2.0, 3.0}) {
    const GammaResult g = gamma_series(c);
    CHECK(g.converged);
    CHECK(g.value < c);
    CHECK(g.value > prev);  // increasing in c
    prev = g.value;
  }
  CHECK(gamma_series(5.0).value > 0.999);  // tends to 1
}

TEST_CASE("truncation bound is honest") {
  for (double c : {0.2, 0.5, 0.9}) {
    const GammaResult coarse = gamma_series(c, 1e-3);
    const GammaResult fine = gamma_series(c, 1e-12, 8000000);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.bound + 1e-12);
  }
}

TEST_CASE("gamma input validation") {
  CHECK_THROWS(gamma_series(0.0));
  CHECK_THROWS(gamma_series(-1.0));
  CHECK_THROWS(gamma_series(0.3, 0.0));
}

TEST_CASE("edge probability scales like 2c/n") {
  const double p = edge_probability(1000, 4, 0.3);
  CHECK(p == doctest::Approx(2 * 0.3 / 1000).epsilon(0.01));
  CHECK(edge_probability(10, 1, 0.5) < 1.0);
  CHECK_THROWS(edge_probability(0, 1, 0.5));
  CHECK_THROWS(edge_probability(10, 1, 0.0));
}

TEST_CASE("ER tree counts match the series prediction") {
  // Independent check of the series against direct G(m, p) simulation.
  const int n = 2000, k = 1, reps = 40;
  for (double c : {0.3, 1.0}) {
    const double p = edge_probability(n, k, c);
    double sum = 0;
    for (int i = 0; i < reps; ++i) {
      Xoshiro256 rng(123, static_cast<uint64_t>(i));
      sum += sample_er_tree_count(n + k, p, rng);
    }
    const double mean = sum / reps;
    const double expect = expected_tree_components(n, c);
    CHECK(std::abs(mean - expect) <= 3 * std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("ER sampler edge cases") {
  Xoshiro256 rng(9);
  CHECK(sample_er_tree_count(5, 0.0, rng) == 5);   // empty graph
  CHECK(sample_er_tree_count(4, 1.0, rng) == 0);   // complete graph, m >= 3
  CHECK_THROWS(sample_er_tree_count(5, 1.5, rng));
}

TEST_CASE("expected trees near n for small times") {
  CHECK(expected_tree_components(1000, 0.01) ==
        doctest::Approx(990).epsilon(0.001));
}
