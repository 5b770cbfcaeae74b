#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcj/oracle.hpp"
#include "dcj/runner.hpp"
#include "dcj/theory.hpp"
#include "json.hpp"

namespace {

using dcj::Model;
using dcj::TimeMode;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw CLI::RuntimeError("cannot write " + path, 1);
  return file;
}

dcj::RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::RuntimeError("cannot read " + path, 1);
  nlohmann::json j;
  in >> j;
  dcj::RunConfig cfg;
  if (j.contains("model"))
    cfg.model = j["model"] == "restricted" ? Model::restricted
                                           : Model::unrestricted;
  if (j.contains("sizes"))
    cfg.sizes = j["sizes"].get<std::vector<int>>();
  else if (j.contains("n"))
    cfg.sizes = {j["n"].get<int>()};
  if (j.contains("p"))
    cfg.schedule = dcj::PSchedule::constant(j["p"].get<double>());
  if (j.contains("p_schedule"))
    cfg.schedule = dcj::PSchedule::parse(j["p_schedule"].get<std::string>());
  if (j.contains("checkpoints"))
    cfg.checkpoints = j["checkpoints"].get<std::vector<double>>();
  if (j.contains("time_mode"))
    cfg.time_mode =
        j["time_mode"] == "poisson" ? TimeMode::poisson : TimeMode::discrete;
  if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
  if (j.contains("reps")) cfg.reps = j["reps"].get<int>();
  if (j.contains("validate")) cfg.validate = j["validate"].get<bool>();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DCJ genome rearrangement walk simulator and analysis tool"};
  app.require_subcommand(1);

  // --- simulate ---
  auto* sim = app.add_subcommand("simulate", "run replicated walks, emit CSV");
  std::string cfg_path, model = "unrestricted", p_sched, time_mode = "discrete";
  std::string out_path;
  std::optional<int> n_flag, reps_flag;
  std::optional<double> p_flag;
  std::optional<uint64_t> seed_flag;
  std::vector<int> sizes_flag;
  std::vector<double> checkpoints_flag;
  bool validate = false;
  sim->add_option("--config", cfg_path, "JSON config file; flags override it");
  sim->add_option("--model", model, "unrestricted|restricted")
      ->check(CLI::IsMember({"unrestricted", "restricted"}));
  sim->add_option("--n", n_flag, "gene count (single chromosome unless --sizes)");
  sim->add_option("--sizes", sizes_flag, "chromosome sizes")->delimiter(',');
  sim->add_option("--p", p_flag, "constant reversal probability p");
  sim->add_option("--p-schedule", p_sched, "piecewise p, e.g. 0:0.5,100:1");
  sim->add_option("--reps", reps_flag, "replicate count");
  sim->add_option("--checkpoints", checkpoints_flag, "c values, ascending")
      ->delimiter(',');
  sim->add_option("--seed", seed_flag, "RNG seed");
  sim->add_option("--time-mode", time_mode, "discrete|poisson")
      ->check(CLI::IsMember({"discrete", "poisson"}));
  sim->add_option("--out", out_path, "output file (default stdout)");
  sim->add_flag("--validate", validate, "validate state at every checkpoint");
  sim->callback([&] {
    dcj::RunConfig cfg;
    if (!cfg_path.empty()) cfg = load_config_file(cfg_path);
    if (sim->count("--model"))
      cfg.model = model == "restricted" ? Model::restricted : Model::unrestricted;
    if (!sizes_flag.empty()) cfg.sizes = sizes_flag;
    if (n_flag) {
      if (sizes_flag.empty() && cfg.sizes.empty()) cfg.sizes = {*n_flag};
      int total = 0;
      for (int s : cfg.sizes) total += s;
      if (total != *n_flag)
        throw CLI::ValidationError("--n disagrees with the chromosome sizes");
    }
    if (p_flag) cfg.schedule = dcj::PSchedule::constant(*p_flag);
    if (!p_sched.empty()) cfg.schedule = dcj::PSchedule::parse(p_sched);
    if (!checkpoints_flag.empty()) cfg.checkpoints = checkpoints_flag;
    if (reps_flag) cfg.reps = *reps_flag;
    if (seed_flag) cfg.seed = *seed_flag;
    if (sim->count("--time-mode"))
      cfg.time_mode =
          time_mode == "poisson" ? TimeMode::poisson : TimeMode::discrete;
    if (validate) cfg.validate = true;
    std::ofstream file;
    dcj::write_csv(open_out(file, out_path), dcj::simulate(cfg));
  });

  // --- summarize ---
  auto* summ = app.add_subcommand("summarize", "per-checkpoint statistics");
  std::string in_path, sum_out;
  double eps = 0.05;
  summ->add_option("--in", in_path, "CSV file (default stdin)");
  summ->add_option("--out", sum_out, "output file (default stdout)");
  summ->add_option("--eps", eps, "escape threshold: mean d < (1-eps)cn");
  summ->callback([&] {
    std::vector<dcj::SampleRecord> recs;
    if (in_path.empty() || in_path == "-") {
      recs = dcj::parse_csv(std::cin);
    } else {
      std::ifstream in(in_path);
      if (!in) throw CLI::RuntimeError("cannot read " + in_path, 1);
      recs = dcj::parse_csv(in);
    }
    std::ofstream file;
    open_out(file, sum_out) << dcj::summarize(recs, eps).format();
  });

  // --- gamma-table ---
  auto* gt = app.add_subcommand("gamma-table", "tabulate the gamma series");
  double c_min = 0.05, c_max = 2.0, c_step = 0.05;
  std::string gt_out;
  gt->add_option("--min", c_min, "first c");
  gt->add_option("--max", c_max, "last c");
  gt->add_option("--step", c_step, "c increment");
  gt->add_option("--out", gt_out, "output file (default stdout)");
  gt->callback([&] {
    if (c_step <= 0 || c_min <= 0 || c_max < c_min)
      throw CLI::ValidationError("need 0 < min <= max and step > 0");
    std::ofstream file;
    auto& out = open_out(file, gt_out);
    out << "c,gamma,terms,bound\n";
    char buf[96];
    for (double c = c_min; c <= c_max + 1e-12; c += c_step) {
      const dcj::GammaResult g = dcj::gamma_series(c);
      std::snprintf(buf, sizeof(buf), "%.6g,%.10g,%ld,%.3g\n", c, g.value,
                    g.terms, g.bound);
      out << buf;
    }
  });

  // --- er-compare ---
  auto* er = app.add_subcommand(
      "er-compare", "walk label graph vs Erdos-Renyi vs theory");
  int er_n = 1000, er_k = 1, er_reps = 100;
  double er_c = 0.3;
  uint64_t er_seed = 1;
  er->add_option("--n", er_n, "gene count");
  er->add_option("--k", er_k, "chromosome count");
  er->add_option("--c", er_c, "time scale t = cn");
  er->add_option("--reps", er_reps, "samples per estimate");
  er->add_option("--seed", er_seed, "RNG seed");
  er->callback([&] {
    std::cout << dcj::er_compare(er_n, er_k, er_c, er_reps, er_seed).describe();
  });

  // --- oracle-check ---
  auto* oc = app.add_subcommand(
      "oracle-check", "exhaustive BFS certification on tiny genome spaces");
  int max_n = 3;
  oc->add_option("--max-n", max_n, "largest n to certify (<= 4)")
      ->check(CLI::Range(1, 4));
  oc->callback([&] {
    bool ok = true;
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= 2; ++k) {
        if (n + k > 5 && n > 3) continue;  // keep the slow n=4,k=2 case out
        const dcj::OracleReport rep = dcj::certify_formula(n, k);
        std::cout << "formula " << rep.describe() << "\n";
        ok = ok && rep.ok();
      }
      const dcj::OracleReport rep = dcj::certify_restricted(n);
      std::cout << "restricted " << rep.describe() << "\n";
      ok = ok && rep.ok();
    }
    if (!ok) throw CLI::RuntimeError("oracle certification failed", 2);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
