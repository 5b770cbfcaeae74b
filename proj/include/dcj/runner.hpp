#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dcj/walks.hpp"

namespace dcj {

// One CSV row: a checkpoint sample of one replicate.
struct SampleRecord {
  std::string model;
  int n, k;
  std::string p;  // schedule descriptor
  uint64_t seed;
  int replicate;
  double c, t;
  int64_t jumps;
  int distance;
  int est_raw;  // n - tree count, may dip below 0
  int est_clamped;
  int64_t frag_events;
};

struct RunConfig {
  Model model = Model::unrestricted;
  std::vector<int> sizes;
  PSchedule schedule = PSchedule::constant(0.5);
  std::vector<double> checkpoints;
  TimeMode time_mode = TimeMode::discrete;
  uint64_t seed = 1;
  int reps = 0;
  bool validate = false;

  WalkConfig walk_config(int replicate) const;
};

// Runs all replicates, fanned out over DCJSIM_WORKERS threads (default:
// hardware concurrency), merged in replicate order; output is independent
// of the worker count.
std::vector<SampleRecord> simulate(const RunConfig& cfg);

std::string csv_header();
std::string csv_string(const std::vector<SampleRecord>& records);
void write_csv(std::ostream& out, const std::vector<SampleRecord>& records);
std::vector<SampleRecord> parse_csv(std::istream& in);

struct SummaryRow {
  std::string model, p;
  int n = 0;
  double c = 0;
  long reps = 0;
  double mean_d = 0, sd_d = 0, mean_est = 0;
  bool escaped = false;  // mean_d < (1 - eps) * c * n
};

struct Summary {
  std::vector<SummaryRow> rows;
  double escape_c = -1;  // smallest escaped checkpoint, -1 if none
  std::string format() const;
};

Summary summarize(const std::vector<SampleRecord>& records, double eps = 0.05);

struct ErCompareReport {
  int n = 0, k = 0;
  double c = 0;
  int reps = 0;
  double mean_walk = 0;    // tree count from walk-coupled label graphs
  double mean_er = 0;      // tree count from direct G(n+k, p) samples
  double theory = 0;       // (1 - gamma(c)) * n
  double gap_walk_er = 0, gap_walk_theory = 0, gap_er_theory = 0;  // / sqrt(n)
  std::string describe() const;
};

ErCompareReport er_compare(int n, int k, double c, int reps, uint64_t seed);

}  // namespace dcj
