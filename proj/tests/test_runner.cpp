#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <sstream>

#include "dcj/runner.hpp"
#include "dcj/theory.hpp"
#include "doctest.h"

using namespace dcj;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.sizes = {20, 30};
  cfg.schedule = PSchedule::constant(0.5);
  cfg.checkpoints = {0.2, 0.6};
  cfg.seed = 100;
  cfg.reps = 6;
  return cfg;
}

}  // namespace

TEST_CASE("zero replicates produce a header-only CSV") {
  RunConfig cfg = small_config();
  cfg.reps = 0;
  CHECK(csv_string(simulate(cfg)) == csv_header() + "\n");
}

TEST_CASE("one record per replicate and checkpoint, in order") {
  const auto recs = simulate(small_config());
  REQUIRE(recs.size() == 12);
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].replicate == static_cast<int>(i / 2));
    CHECK(recs[i].c == (i % 2 ? 0.6 : 0.2));
    CHECK(recs[i].n == 50);
    CHECK(recs[i].k == 2);
    CHECK(recs[i].distance >= 0);
    CHECK(recs[i].est_clamped >= 0);
  }
}

TEST_CASE("CSV round trip") {
  const auto recs = simulate(small_config());
  const std::string text = csv_string(recs);
  std::istringstream in(text);
  const auto back = parse_csv(in);
  REQUIRE(back.size() == recs.size());
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(back[i].model == recs[i].model);
    CHECK(back[i].p == recs[i].p);
    CHECK(back[i].seed == recs[i].seed);
    CHECK(back[i].replicate == recs[i].replicate);
    CHECK(back[i].c == doctest::Approx(recs[i].c));
    CHECK(back[i].distance == recs[i].distance);
    CHECK(back[i].est_raw == recs[i].est_raw);
    CHECK(back[i].frag_events == recs[i].frag_events);
  }
}

TEST_CASE("CSV round trip with commas in the schedule descriptor") {
  RunConfig cfg = small_config();
  cfg.schedule = PSchedule::parse("0:0.5,10:1");
  cfg.reps = 2;
  const auto recs = simulate(cfg);
  std::istringstream in(csv_string(recs));
  const auto back = parse_csv(in);
  REQUIRE(back.size() == recs.size());
  CHECK(back[0].p == "0:0.5,10:1");
  CHECK(back[0].distance == recs[0].distance);
}

TEST_CASE("parse_csv rejects malformed input") {
  std::istringstream empty("");
  CHECK_THROWS(parse_csv(empty));
  std::istringstream bad_header("a,b,c\n");
  CHECK_THROWS(parse_csv(bad_header));
  std::istringstream short_row(csv_header() + "\nunrestricted,1,2\n");
  CHECK_THROWS(parse_csv(short_row));
}

TEST_CASE("byte-identical output across worker counts") {
  RunConfig cfg = small_config();
  cfg.reps = 16;
  setenv("DCJSIM_WORKERS", "1", 1);
  const std::string serial = csv_string(simulate(cfg));
  setenv("DCJSIM_WORKERS", "5", 1);
  const std::string parallel = csv_string(simulate(cfg));
  unsetenv("DCJSIM_WORKERS");
  CHECK(serial == parallel);
  CHECK(serial == csv_string(simulate(cfg)));
}

TEST_CASE("summarize: parsimonious data never escapes") {
  std::vector<SampleRecord> recs;
  for (int rep = 0; rep < 10; ++rep)
    for (double c : {0.1, 0.5, 1.0, 2.0}) {
      SampleRecord r{};
      r.model = "unrestricted";
      r.n = 100;
      r.k = 1;
      r.p = "0.5";
      r.replicate = rep;
      r.c = c;
      r.distance = static_cast<int>(c * 100);  // d = cn exactly
      recs.push_back(r);
    }
  const Summary s = summarize(recs);
  CHECK(s.escape_c == -1);
  for (const auto& row : s.rows) CHECK(!row.escaped);
}

TEST_CASE("summarize: gamma-shaped data escapes past the critical point") {
  std::vector<SampleRecord> recs;
  const int n = 1000;
  for (int rep = 0; rep < 5; ++rep)
    for (double c = 0.1; c <= 1.501; c += 0.1) {
      SampleRecord r{};
      r.model = "unrestricted";
      r.n = n;
      r.k = 1;
      r.p = "0.5";
      r.replicate = rep;
      r.c = c;
      r.distance = static_cast<int>(gamma_series(c).value * n);
      recs.push_back(r);
    }
  const Summary s = summarize(recs);
  CHECK(s.escape_c > 0.5);
  CHECK(s.escape_c <= 1.0);
}

TEST_CASE("summarize statistics are exact on a tiny input") {
  std::vector<SampleRecord> recs(2);
  for (int i = 0; i < 2; ++i) {
    recs[i].model = "m";
    recs[i].n = 10;
    recs[i].k = 1;
    recs[i].p = "1";
    recs[i].replicate = i;
    recs[i].c = 1.0;
    recs[i].distance = i ? 4 : 2;
    recs[i].est_clamped = 3;
  }
  const Summary s = summarize(recs);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0].reps == 2);
  CHECK(s.rows[0].mean_d == doctest::Approx(3.0));
  CHECK(s.rows[0].sd_d == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.rows[0].mean_est == doctest::Approx(3.0));
  CHECK(s.rows[0].escaped);  // 3 < 0.95 * 10
  CHECK(!s.format().empty());
}

TEST_CASE("er_compare is deterministic and internally consistent") {
  const ErCompareReport a = er_compare(200, 2, 0.3, 10, 77);
  const ErCompareReport b = er_compare(200, 2, 0.3, 10, 77);
  CHECK(a.mean_walk == b.mean_walk);
  CHECK(a.mean_er == b.mean_er);
  const double rt = std::sqrt(200.0);
  CHECK(a.gap_walk_er ==
        doctest::Approx((a.mean_walk - a.mean_er) / rt));
  CHECK(a.theory == doctest::Approx(expected_tree_components(200, 0.3)));
  CHECK(!a.describe().empty());
  CHECK_THROWS(er_compare(0, 1, 0.3, 10, 1));
}
