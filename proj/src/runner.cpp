#include "dcj/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "dcj/theory.hpp"

namespace dcj {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

const char* model_name(Model m) {
  return m == Model::unrestricted ? "unrestricted" : "restricted";
}

int worker_count() {
  if (const char* env = std::getenv("DCJSIM_WORKERS")) {
    const int w = std::atoi(env);
    if (w < 1) throw std::invalid_argument("DCJSIM_WORKERS must be >= 1");
    return w;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const size_t next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

WalkConfig RunConfig::walk_config(int replicate) const {
  WalkConfig wc;
  wc.model = model;
  wc.sizes = sizes;
  wc.schedule = schedule;
  wc.checkpoints = checkpoints;
  wc.time_mode = time_mode;
  wc.seed = seed;
  wc.replicate = replicate;
  wc.validate_states = validate;
  return wc;
}

std::vector<SampleRecord> simulate(const RunConfig& cfg) {
  if (cfg.reps < 0) throw std::invalid_argument("reps must be >= 0");
  cfg.walk_config(0).validate();
  const int n = cfg.walk_config(0).n();
  const int k = cfg.walk_config(0).k();
  const std::string p_desc = cfg.schedule.describe();
  const size_t per_rep = cfg.checkpoints.size();
  std::vector<SampleRecord> records(static_cast<size_t>(cfg.reps) * per_rep);

  auto run_replicate = [&](int rep) {
    Walk walk(cfg.walk_config(rep));
    const std::vector<CheckpointSample> samples = walk.run();
    for (size_t s = 0; s < samples.size(); ++s) {
      const CheckpointSample& cs = samples[s];
      SampleRecord& r = records[static_cast<size_t>(rep) * per_rep + s];
      r.model = model_name(cfg.model);
      r.n = n;
      r.k = k;
      r.p = p_desc;
      r.seed = cfg.seed;
      r.replicate = rep;
      r.c = cs.c;
      r.t = cs.t;
      r.jumps = cs.jumps;
      r.distance = cs.distance;
      r.est_raw = n - cs.tree_count;
      r.est_clamped = distance_estimate(n, cs.tree_count);
      r.frag_events = cs.frag_events;
    }
  };

  const int workers = std::min(worker_count(), std::max(cfg.reps, 1));
  if (workers <= 1 || cfg.reps <= 1) {
    for (int rep = 0; rep < cfg.reps; ++rep) run_replicate(rep);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int rep = next.fetch_add(1); rep < cfg.reps;
             rep = next.fetch_add(1))
          run_replicate(rep);
      });
    for (auto& t : pool) t.join();
  }
  return records;
}

std::string csv_header() {
  return "model,n,k,p,seed,replicate,c,t,jumps,distance,est_raw,est_clamped,"
         "frag_events";
}

std::string csv_string(const std::vector<SampleRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const SampleRecord& r : records) {
    out += r.model;
    out += ',' + std::to_string(r.n) + ',' + std::to_string(r.k);
    out += ',' + r.p;
    out += ',' + std::to_string(r.seed) + ',' + std::to_string(r.replicate);
    out += ',' + fmt(r.c) + ',' + fmt(r.t);
    out += ',' + std::to_string(r.jumps) + ',' + std::to_string(r.distance);
    out += ',' + std::to_string(r.est_raw) + ',' + std::to_string(r.est_clamped);
    out += ',' + std::to_string(r.frag_events) + '\n';
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<SampleRecord>& records) {
  out << csv_string(records);
}

std::vector<SampleRecord> parse_csv(std::istream& in) {
  std::vector<SampleRecord> out;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (line != csv_header()) throw std::invalid_argument("bad CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    // p schedules may themselves contain commas; rejoin the middle fields.
    if (f.size() < 13) throw std::invalid_argument("short CSV row: " + line);
    const size_t extra = f.size() - 13;
    std::string p = f[3];
    for (size_t i = 0; i < extra; ++i) p += ',' + f[4 + i];
    SampleRecord r;
    r.model = f[0];
    r.n = std::stoi(f[1]);
    r.k = std::stoi(f[2]);
    r.p = p;
    r.seed = std::stoull(f[4 + extra]);
    r.replicate = std::stoi(f[5 + extra]);
    r.c = std::stod(f[6 + extra]);
    r.t = std::stod(f[7 + extra]);
    r.jumps = std::stoll(f[8 + extra]);
    r.distance = std::stoi(f[9 + extra]);
    r.est_raw = std::stoi(f[10 + extra]);
    r.est_clamped = std::stoi(f[11 + extra]);
    r.frag_events = std::stoll(f[12 + extra]);
    out.push_back(std::move(r));
  }
  return out;
}

Summary summarize(const std::vector<SampleRecord>& records, double eps) {
  Summary sum;
  std::map<std::tuple<std::string, std::string, double>,
           std::vector<const SampleRecord*>>
      groups;
  for (const SampleRecord& r : records)
    groups[{r.model, r.p, r.c}].push_back(&r);
  for (const auto& [key, recs] : groups) {
    SummaryRow row;
    row.model = std::get<0>(key);
    row.p = std::get<1>(key);
    row.c = std::get<2>(key);
    row.n = recs.front()->n;
    row.reps = static_cast<long>(recs.size());
    double s = 0, s2 = 0, se = 0;
    for (const SampleRecord* r : recs) {
      s += r->distance;
      s2 += static_cast<double>(r->distance) * r->distance;
      se += r->est_clamped;
    }
    row.mean_d = s / row.reps;
    row.mean_est = se / row.reps;
    const double var =
        row.reps > 1 ? (s2 - s * s / row.reps) / (row.reps - 1) : 0.0;
    row.sd_d = std::sqrt(std::max(var, 0.0));
    row.escaped = row.c > 0 && row.mean_d < (1 - eps) * row.c * row.n;
    if (row.escaped && (sum.escape_c < 0 || row.c < sum.escape_c))
      sum.escape_c = row.c;
    sum.rows.push_back(std::move(row));
  }
  return sum;
}

std::string Summary::format() const {
  std::string out =
      "model,p,n,c,reps,mean_distance,sd_distance,mean_estimate,escaped\n";
  for (const SummaryRow& r : rows) {
    out += r.model + ',' + r.p + ',' + std::to_string(r.n) + ',' + fmt(r.c) +
           ',' + std::to_string(r.reps) + ',' + fmt(r.mean_d) + ',' +
           fmt(r.sd_d) + ',' + fmt(r.mean_est) + ',' +
           (r.escaped ? "1" : "0") + '\n';
  }
  out += escape_c >= 0 ? "escape_c=" + fmt(escape_c) + "\n" : "escape_c=none\n";
  return out;
}

std::string ErCompareReport::describe() const {
  std::string out;
  out += "n=" + std::to_string(n) + " k=" + std::to_string(k) +
         " c=" + fmt(c) + " reps=" + std::to_string(reps) + "\n";
  out += "mean trees (walk Z):  " + fmt(mean_walk) + "\n";
  out += "mean trees (ER):      " + fmt(mean_er) + "\n";
  out += "theory (1-gamma(c))n: " + fmt(theory) + "\n";
  out += "gaps / sqrt(n): walk-er=" + fmt(gap_walk_er) +
         " walk-theory=" + fmt(gap_walk_theory) +
         " er-theory=" + fmt(gap_er_theory) + "\n";
  return out;
}

ErCompareReport er_compare(int n, int k, double c, int reps, uint64_t seed) {
  if (n < 1 || k < 1 || c <= 0 || reps < 1)
    throw std::invalid_argument("bad er-compare parameters");
  ErCompareReport rep;
  rep.n = n;
  rep.k = k;
  rep.c = c;
  rep.reps = reps;

  RunConfig cfg;
  cfg.sizes.assign(k, n / k);
  for (int i = 0; i < n % k; ++i) ++cfg.sizes[i];
  cfg.checkpoints = {c};
  cfg.seed = seed;
  cfg.reps = reps;
  double walk_sum = 0;
  for (const SampleRecord& r : simulate(cfg)) walk_sum += n - r.est_raw;
  rep.mean_walk = walk_sum / reps;

  const double p_edge = edge_probability(n, k, c);
  double er_sum = 0;
  for (int i = 0; i < reps; ++i) {
    Xoshiro256 rng(seed ^ 0xE5CAFE5ULL, static_cast<uint64_t>(i));
    er_sum += sample_er_tree_count(n + k, p_edge, rng);
  }
  rep.mean_er = er_sum / reps;

  rep.theory = expected_tree_components(n, c);
  const double rt = std::sqrt(static_cast<double>(n));
  rep.gap_walk_er = (rep.mean_walk - rep.mean_er) / rt;
  rep.gap_walk_theory = (rep.mean_walk - rep.theory) / rt;
  rep.gap_er_theory = (rep.mean_er - rep.theory) / rt;
  return rep;
}

}  // namespace dcj
