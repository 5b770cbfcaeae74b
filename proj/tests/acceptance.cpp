// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Statistical checks use 3*sqrt(n) CLT-scale bands.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "dcj/breakpoint.hpp"
#include "dcj/oracle.hpp"
#include "dcj/runner.hpp"
#include "dcj/theory.hpp"

using namespace dcj;

namespace {

int failures = 0;

void criterion(int idx, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("criterion %d: %s (%.2fs) %s%s%s\n", idx, ok ? "PASS" : "FAIL",
              secs, name.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double mean_of(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

DcjMove random_move(const Genome& g, Xoshiro256& rng) {
  const Ext u = static_cast<Ext>(rng.uniform(g.extremity_count()));
  Ext v;
  do {
    v = static_cast<Ext>(rng.uniform(g.extremity_count()));
  } while (v == u || v == g.mate(u));
  const auto [a, b] = g.oriented_adjacency(u);
  const auto [c, d] = g.oriented_adjacency(v);
  return DcjMove{a, b, c, d,
                 rng.bernoulli(0.5) ? JoinType::delta1 : JoinType::delta2};
}

}  // namespace

int main() {
  // 1. Exact distance formula vs exhaustive BFS; restricted vs unrestricted.
  criterion(1, "oracle equivalence: formula = BFS (n<=3), d* = d with a linear endpoint",
            [](std::string& detail) {
    bool ok = true;
    long deviations = 0;
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 2; ++k) ok = ok && certify_formula(n, k).ok();
      const OracleReport rep = certify_restricted(n);
      ok = ok && rep.ok();
      deviations += rep.circular_pair_deviations;
    }
    detail = "restricted metric deviates on " + std::to_string(deviations) +
             " circular-circular pairs (expected; reabsorption theorem "
             "needs a linear endpoint)";
    return ok;
  });

  // 2. The one-move displacement table against realized distance changes.
  criterion(2, "alpha case table on 10^4 randomized instances (n <= 30)",
            [](std::string& detail) {
    Xoshiro256 rng(2024);
    int checked = 0;
    for (int rep = 0; rep < 10000; ++rep) {
      const int n = 2 + static_cast<int>(rng.uniform(29));
      const int k = 1 + static_cast<int>(rng.uniform(2));
      const Genome g1 = Genome::random(n, k, rng);
      Genome g2 = Genome::random(n, k, rng);
      const DcjMove m = random_move(g2, rng);
      const BreakpointGraph bp(g1, g2);
      int a = bp.black_vertex(m.a), b = bp.black_vertex(m.b);
      int c = bp.black_vertex(m.c), d = bp.black_vertex(m.d);
      int flips = 0;
      if (!bp.natural_leaves(a)) { std::swap(a, b); ++flips; }
      if (!bp.natural_leaves(c)) { std::swap(c, d); ++flips; }
      const JoinType dj = flips % 2 ? other_join(m.join) : m.join;
      const int predicted = predict_alpha(bp, a, b, c, d, dj);
      const int before = dcj_distance(g1, g2);
      apply_dcj_inplace(g2, m);
      if (dcj_distance(g1, g2) - before != predicted) {
        detail = "mismatch at instance " + std::to_string(rep);
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + "/10000 exact";
    return true;
  });

  // 3. The series reproduces the identity on (0, 1/2].
  criterion(3, "gamma(c) = c up to the critical point", [](std::string& detail) {
    for (double c = 0.05; c < 0.451; c += 0.05) {
      const GammaResult g = gamma_series(c);
      if (!g.converged || std::abs(g.value - c) > 1e-8) {
        detail = "failed at c=" + std::to_string(c);
        return false;
      }
    }
    const GammaResult crit = gamma_series(0.5);
    if (!crit.converged || std::abs(crit.value - 0.5) > 1e-4) {
      detail = "failed at c=0.5, |err|=" + std::to_string(std::abs(crit.value - 0.5));
      return false;
    }
    detail = "|gamma(0.5)-0.5| = " + std::to_string(std::abs(crit.value - 0.5));
    return true;
  });

  // 4. Unrestricted parsimony binding and escape, desk scale.
  criterion(4, "unrestricted n=300: d ~ cn for c <= 0.5, escape at c = 1.5",
            [](std::string& detail) {
    const double band = 3 * std::sqrt(300.0);
    const std::vector<double> cs = {0.1, 0.2, 0.3, 0.4, 0.5, 1.5};
    const double gamma15 = gamma_series(1.5).value;
    for (double p : {0.0, 0.5, 1.0}) {
      RunConfig cfg;
      cfg.model = Model::unrestricted;
      cfg.sizes = {30, 60, 90, 120};
      cfg.schedule = PSchedule::constant(p);
      cfg.checkpoints = cs;
      cfg.seed = 42;
      cfg.reps = 30;
      const auto recs = simulate(cfg);
      for (double c : cs) {
        std::vector<double> d;
        for (const SampleRecord& r : recs)
          if (r.c == c) d.push_back(r.distance);
        const double mean = mean_of(d);
        if (c <= 0.5 && std::abs(mean - c * 300) > band) {
          detail = "p=" + std::to_string(p) + " c=" + std::to_string(c) +
                   " mean d=" + std::to_string(mean);
          return false;
        }
        if (c > 0.5 && (mean > gamma15 * 300 + band || mean > 0.9 * c * 300)) {
          detail = "p=" + std::to_string(p) + " no escape, mean d=" +
                   std::to_string(mean);
          return false;
        }
      }
    }
    return true;
  });

  // 5. Restricted model: the tree-count estimate tracks cn and d.
  criterion(5, "restricted n=300: n - trees ~ cn and ~ d for c <= 0.5",
            [](std::string& detail) {
    const double band = 3 * std::sqrt(300.0);
    RunConfig cfg;
    cfg.model = Model::restricted;
    cfg.sizes = {300};
    cfg.schedule = PSchedule::constant(0.5);
    cfg.checkpoints = {0.1, 0.2, 0.3, 0.4, 0.5};
    cfg.seed = 43;
    cfg.reps = 30;
    const auto recs = simulate(cfg);
    for (double c : cfg.checkpoints) {
      std::vector<double> est, d;
      for (const SampleRecord& r : recs)
        if (r.c == c) {
          est.push_back(r.est_raw);
          d.push_back(r.distance);
        }
      const double me = mean_of(est), md = mean_of(d);
      if (std::abs(me - c * 300) > band || std::abs(me - md) > band) {
        detail = "c=" + std::to_string(c) + " mean est=" + std::to_string(me) +
                 " mean d=" + std::to_string(md);
        return false;
      }
    }
    return true;
  });

  // 6. Label graph ~ Erdos-Renyi ~ series, full scale.
  criterion(6, "trees: walk Z and ER both within 95 of 700 (n=1000, c=0.3)",
            [](std::string& detail) {
    const ErCompareReport rep = er_compare(1000, 4, 0.3, 100, 44);
    detail = "walk=" + std::to_string(rep.mean_walk) +
             " er=" + std::to_string(rep.mean_er) + " theory=700";
    return std::abs(rep.mean_walk - 700.0) <= 95.0 &&
           std::abs(rep.mean_er - 700.0) <= 95.0;
  });

  // 7. Small-fragment splits stay Poisson-rare.
  criterion(7, "fragmentation events <= 1.5 * 2c*sqrt(n+k) at n=300, c=1",
            [](std::string& detail) {
    RunConfig cfg;
    cfg.sizes = {300};
    cfg.schedule = PSchedule::constant(0.5);
    cfg.checkpoints = {1.0};
    cfg.seed = 45;
    cfg.reps = 30;
    std::vector<double> frag;
    for (const SampleRecord& r : simulate(cfg))
      frag.push_back(static_cast<double>(r.frag_events));
    const double mean = mean_of(frag);
    const double bound = 1.5 * 2.0 * std::sqrt(301.0);
    detail = "mean=" + std::to_string(mean) + " bound=" + std::to_string(bound);
    return mean <= bound;
  });

  // 8. Bitwise determinism, independent of the worker fan-out.
  criterion(8, "byte-identical CSV across runs and worker counts",
            [](std::string& detail) {
    RunConfig cfg;
    cfg.sizes = {40, 60};
    cfg.schedule = PSchedule::parse("0:0.5,30:1");
    cfg.checkpoints = {0.25, 0.75};
    cfg.seed = 46;
    cfg.reps = 12;
    setenv("DCJSIM_WORKERS", "1", 1);
    const std::string one = csv_string(simulate(cfg));
    setenv("DCJSIM_WORKERS", "4", 1);
    const std::string four = csv_string(simulate(cfg));
    unsetenv("DCJSIM_WORKERS");
    const std::string def = csv_string(simulate(cfg));
    detail = std::to_string(one.size()) + " bytes";
    return one == four && one == def;
  });

  // 9. The standalone property suites, re-run inline.
  criterion(9, "property sweep: round trips, bijectivity, Z, restricted closure",
            [](std::string& detail) {
    Xoshiro256 rng(2025);
    for (int rep = 0; rep < 100; ++rep) {
      const Genome g = Genome::random(8, 2, rng);
      g.validate();
      if (parse_genome(format_genome(g)).canonical_key() != g.canonical_key() ||
          Genome::from_chromosomes(g.decompose(), 8, 2).canonical_key() !=
              g.canonical_key()) {
        detail = "genome round trip failed";
        return false;
      }
    }
    {
      Genome g = Genome::identity({50});
      Labeling lab(g);
      for (int i = 0; i < 10000; ++i) {
        const DcjMove m = random_move(g, rng);
        lab.apply_move(m.a, m.b, m.c, m.d, m.join);
        apply_dcj_inplace(g, m);
      }
      if (!lab.is_bijection(g)) {
        detail = "labeling bijectivity failed";
        return false;
      }
    }
    {
      LabelGraph z(4);
      if (!z.record_pair(1, 2) || z.record_pair(2, 1) || z.edge_count() != 1) {
        detail = "label graph simplicity failed";
        return false;
      }
    }
    {
      WalkConfig wc;
      wc.model = Model::restricted;
      wc.sizes = {100};
      wc.schedule = PSchedule::constant(0.5);
      wc.seed = 47;
      Walk walk(wc);
      for (int i = 0; i < 100000; ++i) {
        walk.step();
        if (walk.genome().circular_count() > 1) {
          detail = "restricted closure violated at step " + std::to_string(i);
          return false;
        }
      }
    }
    return true;
  });

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED"
                                    : "SOME CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
