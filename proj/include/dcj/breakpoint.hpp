#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dcj/dcj_ops.hpp"
#include "dcj/genome.hpp"

namespace dcj {

enum class LineEnds : uint8_t { TT, TTp, TpTp };

struct BpComponent {
  bool is_cycle;
  int black_edges;
  int total_edges;
  LineEnds ends;  // meaningful for lines only
};

// Breakpoint graph of (g1, g2): gray edges are g1's adjacencies, black edges
// are g2's with telomeres renamed to T'. Vertex ids: gene extremities keep
// their codes, T_j = 2n + (j-1), T'_j = 2n + 2k + (j-1).
class BreakpointGraph {
public:
  BreakpointGraph(const Genome& g1, const Genome& g2);

  int gene_count() const { return n_; }
  int linear_count() const { return k_; }
  int cycle_count() const { return cycles_; }
  int even_line_count() const { return even_lines_; }
  const std::vector<BpComponent>& components() const { return comps_; }

  bool is_t(int v) const { return v >= 2 * n_ && v < 2 * n_ + 2 * k_; }
  bool is_tprime(int v) const { return v >= 2 * n_ + 2 * k_; }
  // Maps a g2 extremity to its breakpoint-graph vertex id.
  int black_vertex(Ext e) const { return e >= 2 * n_ ? e + 2 * k_ : e; }

  bool has_black_edge(int u, int v) const { return black_[u] == v; }
  // u must be an endpoint of a black edge.
  int component_of_black(int u) const { return comp_[u]; }
  // True if the natural direction traverses the black edge at u leaving u.
  bool natural_leaves(int u) const { return nat_out_[u] != 0; }

  // One line per component in discovery order: `cycle l=2`, `line TT' l=3`.
  std::string census() const;

private:
  int n_, k_;
  int cycles_ = 0, even_lines_ = 0;
  std::vector<int> gray_, black_;  // -1 where the edge is absent
  std::vector<int> comp_;
  std::vector<uint8_t> nat_out_;
  std::vector<BpComponent> comps_;

  void trace_line(int start);
  void trace_cycle(int start);
};

// Exact DCJ distance, Eq. d = n - C - P_e / 2.
int dcj_distance(const Genome& g1, const Genome& g2);

// Distance displacement of a DCJ on two black edges (a -> b), (c -> d) of bp,
// oriented by the natural direction (the Delta convention). Throws if the
// edges are missing, equal, or not naturally oriented.
int predict_alpha(const BreakpointGraph& bp, int a, int b, int c, int d,
                  JoinType join);

// (even lines, odd TT lines, odd T'T' lines); sums to 2k.
std::array<int, 3> path_parity_census(const BreakpointGraph& bp);

}  // namespace dcj
