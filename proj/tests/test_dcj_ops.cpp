#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "dcj/breakpoint.hpp"
#include "dcj/dcj_ops.hpp"
#include "dcj/genome.hpp"
#include "dcj/rng.hpp"
#include "doctest.h"

using namespace dcj;

namespace {

// A uniformly chosen applicable move on g.
DcjMove random_move(const Genome& g, Xoshiro256& rng) {
  const int m = g.extremity_count();
  const Ext u = static_cast<Ext>(rng.uniform(m));
  Ext v;
  do {
    v = static_cast<Ext>(rng.uniform(m));
  } while (v == u || v == g.mate(u));
  const auto [a, b] = g.oriented_adjacency(u);
  const auto [c, d] = g.oriented_adjacency(v);
  return DcjMove{a, b, c, d,
                 rng.bernoulli(0.5) ? JoinType::delta1 : JoinType::delta2};
}

}  // namespace

TEST_CASE("delta2 circularizes a single-gene chromosome") {
  const Genome g = parse_genome("L: 1\n");
  // Adjacencies: (tau1, t1) and (h1, tau2); delta2 joins t1-h1 and tau1-tau2.
  const auto [a, b] = g.oriented_adjacency(tail_of(1));
  const auto [c, d] = g.oriented_adjacency(head_of(1));
  const Genome h = apply_dcj(g, DcjMove{a, b, c, d, JoinType::delta2});
  CHECK(h.circular_count() == 1);
  CHECK(h.canonical_key() == parse_genome("L:\nC: 1\n").canonical_key());
  // The other join keeps a single linear chromosome.
  const Genome h1 = apply_dcj(g, DcjMove{a, b, c, d, JoinType::delta1});
  CHECK(h1.circular_count() == 0);
}

TEST_CASE("reversal on the identity") {
  const Genome g = Genome::identity({3});
  // Cut (h1, t2) and (h2, t3); the reversal join yields 1 -2 3.
  const auto [a, b] = g.oriented_adjacency(head_of(1));
  const auto [c, d] = g.oriented_adjacency(head_of(2));
  const Genome rev = apply_dcj(g, DcjMove{a, b, c, d, JoinType::delta1});
  CHECK(rev.canonical_key() == parse_genome("L: 1 -2 3\n").canonical_key());
  const Genome exc = apply_dcj(g, DcjMove{a, b, c, d, JoinType::delta2});
  CHECK(exc.canonical_key() == parse_genome("L: 1 3\nC: 2\n").canonical_key());
}

TEST_CASE("apply_dcj rejects bad moves") {
  const Genome g = Genome::identity({2});
  const auto [a, b] = g.oriented_adjacency(0);
  CHECK_THROWS(apply_dcj(g, DcjMove{a, b, a, b, JoinType::delta1}));  // same edge
  CHECK_THROWS(apply_dcj(g, DcjMove{b, a, 2, 3, JoinType::delta1}));  // wrong orientation
  CHECK_THROWS(apply_dcj(g, DcjMove{a, 3, 2, b, JoinType::delta1}));  // not adjacencies
}

TEST_CASE("moves preserve genome validity") {
  Xoshiro256 rng(5);
  Genome g = Genome::identity({4, 6});
  for (int i = 0; i < 2000; ++i) {
    apply_dcj_inplace(g, random_move(g, rng));
    if (i % 100 == 0) g.validate();
  }
  g.validate();
}

TEST_CASE("every DCJ is reversible by one DCJ") {
  Xoshiro256 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const Genome g = Genome::random(5, 1, rng);
    const Genome h = apply_dcj(g, random_move(g, rng));
    // g must appear among h's neighbors (or be flip-equivalent to h).
    if (h.canonical_key() == g.canonical_key()) continue;
    bool found = false;
    for (const auto& [w, join] : neighbors(h))
      if (w.canonical_key() == g.canonical_key()) {
        found = true;
        break;
      }
    CHECK(found);
  }
}

TEST_CASE("neighbor count is 2 C(n+k, 2)") {
  const Genome g = Genome::identity({3, 2});  // n+k = 7
  CHECK(neighbors(g).size() == 2 * 21);
  const Genome g1 = parse_genome("L: 1\n");  // n+k = 2
  CHECK(neighbors(g1).size() == 2);
}

TEST_CASE("neighbors are at distance exactly one or zero") {
  Xoshiro256 rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    const Genome g = Genome::random(3, 1, rng);
    for (const auto& [h, join] : neighbors(g)) {
      const int d = dcj_distance(g, h);
      CHECK(d <= 1);
      CHECK(d == (h.canonical_key() == g.canonical_key() ? 0 : 1));
    }
  }
}

TEST_CASE("deduplicated neighbors collapse flip-equivalent results") {
  const Genome g = Genome::identity({1, 1});  // symmetric, so moves repeat
  const auto all = neighbors(g);
  const auto dedup = neighbors(g, true);
  CHECK(all.size() == 12);
  CHECK(dedup.size() == 7);
  std::set<std::string> keys;
  for (const auto& [h, join] : dedup) CHECK(keys.insert(h.canonical_key_string()).second);
}

TEST_CASE("restricted state classification") {
  CHECK(restricted_state(Genome::identity({4})) == RestrictedState::U);
  CHECK(restricted_state(parse_genome("L: 1 2\nC: 3\n")) == RestrictedState::UTilde);
  CHECK(restricted_state(parse_genome("L: 1\nC: 2\nC: 3\n")) == RestrictedState::Other);
  CHECK_THROWS(restricted_state(Genome::identity({2, 2})));  // k != 1
}
