#include "dcj/dcj_ops.hpp"

#include <stdexcept>
#include <unordered_set>

namespace dcj {

void apply_dcj_inplace(Genome& g, const DcjMove& m) {
  if (g.mate(m.a) != m.b || g.mate(m.c) != m.d)
    throw std::invalid_argument("move edges are not adjacencies of the genome");
  if (m.a == m.c || m.a == m.d)
    throw std::invalid_argument("the two cut adjacencies must be distinct");
  auto link = [&g](Ext u, Ext v) {
    g.mate_[u] = v;
    g.mate_[v] = u;
  };
  if (m.join == JoinType::delta1) {
    link(m.a, m.c);
    link(m.b, m.d);
  } else {
    link(m.a, m.d);
    link(m.b, m.c);
  }
  g.recompute_direction_component(m.a);
  g.recompute_direction_component(m.b);
}

Genome apply_dcj(const Genome& g, const DcjMove& m) {
  Genome out = g;
  apply_dcj_inplace(out, m);
  return out;
}

std::vector<std::pair<Genome, JoinType>> neighbors(const Genome& g,
                                                   bool dedup) {
  std::vector<Ext> reps;  // one endpoint per adjacency
  for (Ext u = 0; u < g.extremity_count(); ++u)
    if (u < g.mate(u)) reps.push_back(u);
  std::vector<std::pair<Genome, JoinType>> out;
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = i + 1; j < reps.size(); ++j) {
      auto [a, b] = g.oriented_adjacency(reps[i]);
      auto [c, d] = g.oriented_adjacency(reps[j]);
      for (JoinType join : {JoinType::delta1, JoinType::delta2}) {
        Genome h = apply_dcj(g, DcjMove{a, b, c, d, join});
        if (dedup && !seen.insert(h.canonical_key_string()).second) continue;
        out.emplace_back(std::move(h), join);
      }
    }
  }
  return out;
}

RestrictedState restricted_state(const Genome& g) {
  if (g.linear_count() != 1)
    throw std::invalid_argument("restricted model requires k = 1");
  switch (g.circular_count()) {
    case 0:
      return RestrictedState::U;
    case 1:
      return RestrictedState::UTilde;
    default:
      return RestrictedState::Other;
  }
}

}  // namespace dcj
