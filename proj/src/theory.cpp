#include "dcj/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcj/estimator.hpp"

namespace dcj {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014327;
}

GammaResult gamma_series(double c, double tol, long max_terms) {
  if (c <= 0) throw std::invalid_argument("c must be positive");
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  const double log_x = std::log(2 * c) - 2 * c;
  const double r = 2 * c * std::exp(1 - 2 * c);  // term-ratio bound, <= 1
  double sum = 0;
  double tail = 0;
  long j = 1;
  bool converged = false;
  for (; j <= max_terms; ++j) {
    const double jd = static_cast<double>(j);
    const double term =
        std::exp((jd - 2) * std::log(jd) - std::lgamma(jd + 1) + jd * log_x);
    sum += term;
    // j^(j-2)/j! <= e^j j^(-5/2)/sqrt(2pi), so with r <= 1 the tail past j is
    // below (1/sqrt(2pi)) * (2/3) * j^(-3/2); away from c = 1/2 the geometric
    // bound term * r/(1-r) is far tighter.
    tail = kInvSqrt2Pi * (2.0 / 3.0) * std::pow(jd, -1.5);
    if (r < 1.0 - 1e-12) tail = std::min(tail, term * r / (1 - r));
    if (tail / (2 * c) < tol) {
      converged = true;
      break;
    }
  }
  GammaResult res;
  res.c = c;
  res.value = std::clamp(1 - sum / (2 * c), 0.0, 1.0);
  res.terms = std::min(j, max_terms);
  res.bound = tail / (2 * c);
  res.converged = converged;
  return res;
}

double default_gamma_tol(double c) {
  return std::abs(c - 0.5) < 1e-3 ? 2e-5 : 1e-10;
}

GammaResult gamma_series(double c) { return gamma_series(c, default_gamma_tol(c)); }

double expected_tree_components(int n, double c) {
  return (1 - gamma_series(c).value) * n;
}

double edge_probability(int n, int k, double c) {
  if (n < 1 || k < 0 || c <= 0) throw std::invalid_argument("bad parameters");
  const double m = static_cast<double>(n + k);
  return -std::expm1(-2 * c * n / (m * (m - 1)));
}

int sample_er_tree_count(int m, double p_edge, Xoshiro256& rng) {
  if (p_edge < 0 || p_edge > 1) throw std::invalid_argument("bad probability");
  LabelGraph z(m);
  if (p_edge >= 1.0) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) z.record_pair(i, j);
    return z.tree_component_count();
  }
  if (p_edge > 0) {
    // Batagelj-Brandes skip sampling over the C(m,2) edge slots.
    const double log_q = std::log1p(-p_edge);
    long long v = 1, w = -1;
    while (v < m) {
      const double u = rng.next_double();
      w += 1 + static_cast<long long>(std::floor(std::log1p(-u) / log_q));
      while (w >= v && v < m) {
        w -= v;
        ++v;
      }
      if (v < m) z.record_pair(static_cast<int>(v) + 1, static_cast<int>(w) + 1);
    }
  }
  return z.tree_component_count();
}

}  // namespace dcj
