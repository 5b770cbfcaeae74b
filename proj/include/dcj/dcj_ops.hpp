#pragma once

#include <cstdint>
#include <vector>

#include "dcj/genome.hpp"

namespace dcj {

enum class JoinType : uint8_t { delta1, delta2 };

inline JoinType other_join(JoinType j) {
  return j == JoinType::delta1 ? JoinType::delta2 : JoinType::delta1;
}

// Two oriented adjacencies (a -> b), (c -> d) of the current genome plus a
// join type. delta1 replaces them by {a,c},{b,d}; delta2 by {a,d},{b,c}.
struct DcjMove {
  Ext a, b, c, d;
  JoinType join;
};

// Rewires the matching and repairs the standard direction of the affected
// chromosomes. Throws if the moves' edges are not adjacencies of g or are
// equal.
void apply_dcj_inplace(Genome& g, const DcjMove& move);
Genome apply_dcj(const Genome& g, const DcjMove& move);

// All genomes reachable by one DCJ, one entry per (unordered pair, join)
// application with standard-direction orientations: 2 * C(n+k, 2) entries.
// With dedup, collapsed to canonical classes.
std::vector<std::pair<Genome, JoinType>> neighbors(const Genome& g,
                                                   bool dedup = false);

enum class RestrictedState : uint8_t { U, UTilde, Other };

// Requires k = 1. U: no circular chromosome; UTilde: exactly one.
RestrictedState restricted_state(const Genome& g);

}  // namespace dcj
