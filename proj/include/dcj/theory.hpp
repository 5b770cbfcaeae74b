#pragma once

#include "dcj/rng.hpp"

namespace dcj {

struct GammaResult {
  double c = 0;
  double value = 0;    // in [0, 1]
  long terms = 0;      // series terms summed
  double bound = 0;    // certified truncation bound on value
  bool converged = true;
};

// gamma(c) = 1 - (1/2c) * sum_{j>=1} j^(j-2)/j! * (2c e^{-2c})^j, summed in
// log space. The term ratio is bounded by r = 2c e^{1-2c} <= 1 (equality only
// at c = 1/2), giving a geometric remainder bound away from the critical
// point and a j^(-5/2) integral bound at it.
GammaResult gamma_series(double c, double tol, long max_terms = 4000000);

// Default tolerance: 1e-10, relaxed to 2e-5 within 1e-3 of the critical
// point c = 1/2 where the series decays only polynomially.
double default_gamma_tol(double c);
GammaResult gamma_series(double c);

// (1 - gamma(c)) * n, the expected tree-component count of the matched
// Erdos-Renyi graph.
double expected_tree_components(int n, double c);

// 1 - exp(-2cn / ((n+k)(n+k-1))) ~ 2c/n: per-edge presence probability of
// the label graph at time cn.
double edge_probability(int n, int k, double c);

// Samples G(m, p_edge) by geometric edge skipping and returns its tree
// component count.
int sample_er_tree_count(int m, double p_edge, Xoshiro256& rng);

}  // namespace dcj
