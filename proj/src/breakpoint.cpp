#include "dcj/breakpoint.hpp"

#include <stdexcept>

namespace dcj {

BreakpointGraph::BreakpointGraph(const Genome& g1, const Genome& g2)
    : n_(g1.gene_count()), k_(g1.linear_count()) {
  if (g2.gene_count() != n_ || g2.linear_count() != k_)
    throw std::invalid_argument("genomes must share n and k");
  const int v_count = 2 * n_ + 4 * k_;
  gray_.assign(v_count, -1);
  black_.assign(v_count, -1);
  comp_.assign(v_count, -1);
  nat_out_.assign(v_count, 0);
  for (Ext u = 0; u < g1.extremity_count(); ++u) gray_[u] = g1.mate(u);
  for (Ext u = 0; u < g2.extremity_count(); ++u)
    black_[black_vertex(u)] = black_vertex(g2.mate(u));

  // Lines start at T telomeres (TT and TT' lines), then leftover T'
  // telomeres (T'T' lines); scanning in index order realizes the
  // smaller-index start rule. Cycles start at their minimum gene extremity.
  for (int v = 2 * n_; v < v_count; ++v)
    if (comp_[v] == -1) trace_line(v);
  for (int v = 0; v < 2 * n_; ++v)
    if (comp_[v] == -1) trace_cycle(v);

  for (const auto& c : comps_) {
    if (c.is_cycle)
      ++cycles_;
    else if (c.total_edges % 2 == 0)
      ++even_lines_;
  }
}

void BreakpointGraph::trace_line(int start) {
  const int id = static_cast<int>(comps_.size());
  comp_[start] = id;
  int v = start;
  bool use_black = is_tprime(start);  // T' telomeres carry only a black edge
  int total = 0, blacks = 0;
  while (true) {
    int w = use_black ? black_[v] : gray_[v];
    if (use_black) {
      nat_out_[v] = 1;
      ++blacks;
    }
    ++total;
    comp_[w] = id;
    if (w >= 2 * n_) {  // reached the far telomere
      v = w;
      break;
    }
    v = w;
    use_black = !use_black;
  }
  LineEnds ends;
  if (is_t(start) && is_t(v))
    ends = LineEnds::TT;
  else if (is_tprime(start) && is_tprime(v))
    ends = LineEnds::TpTp;
  else
    ends = LineEnds::TTp;
  comps_.push_back(BpComponent{false, blacks, total, ends});
}

void BreakpointGraph::trace_cycle(int start) {
  const int id = static_cast<int>(comps_.size());
  int v = start;
  bool use_black = true;  // "through the unique black edge incident to it"
  int total = 0, blacks = 0;
  do {
    comp_[v] = id;
    int w = use_black ? black_[v] : gray_[v];
    if (use_black) {
      nat_out_[v] = 1;
      ++blacks;
    }
    ++total;
    v = w;
    use_black = !use_black;
  } while (v != start);
  comps_.push_back(BpComponent{true, blacks, total, LineEnds::TT});
}

std::string BreakpointGraph::census() const {
  std::string out;
  for (const auto& c : comps_) {
    if (c.is_cycle) {
      out += "cycle l=" + std::to_string(c.total_edges) + "\n";
    } else {
      const char* ends = c.ends == LineEnds::TT     ? "TT"
                         : c.ends == LineEnds::TTp ? "TT'"
                                                   : "T'T'";
      out += "line " + std::string(ends) +
             " l=" + std::to_string(c.total_edges) + "\n";
    }
  }
  return out;
}

int dcj_distance(const Genome& g1, const Genome& g2) {
  BreakpointGraph bp(g1, g2);
  return g1.gene_count() - bp.cycle_count() - bp.even_line_count() / 2;
}

int predict_alpha(const BreakpointGraph& bp, int a, int b, int c, int d,
                  JoinType join) {
  auto check_edge = [&bp](int u, int v) {
    if (!bp.has_black_edge(u, v))
      throw std::invalid_argument("not a black edge");
    if (!bp.natural_leaves(u) || bp.natural_leaves(v))
      throw std::invalid_argument("edge not oriented by the natural direction");
  };
  check_edge(a, b);
  check_edge(c, d);
  if ((a == c && b == d) || (a == d && b == c))
    throw std::invalid_argument("the two black edges must be distinct");
  const int ca = bp.component_of_black(a);
  const int cc = bp.component_of_black(c);
  const auto& comps = bp.components();
  const BpComponent& A = comps[ca];
  const BpComponent& B = comps[cc];
  int a1, a2;
  if (ca == cc) {
    // Delta2 fragments the cycle (or excises a cycle from the line);
    // Delta1 leaves the component count unchanged.
    a1 = 0;
    a2 = -1;
  } else if (A.is_cycle || B.is_cycle) {
    a1 = a2 = 1;  // merge (cycle+cycle or cycle+line)
  } else {
    const bool even_a = A.ends == LineEnds::TTp;
    const bool even_b = B.ends == LineEnds::TTp;
    if (even_a && even_b) {
      a1 = 1;  // two odd lines out
      a2 = 0;  // two even lines out
    } else if (even_a != even_b) {
      a1 = a2 = 0;  // odd + even in, odd + even out
    } else if (A.ends == B.ends) {
      a1 = a2 = 0;  // TT,TT or T'T',T'T': two odd lines out
    } else {
      a1 = a2 = -1;  // TT + T'T' fuse into two even TT' lines
    }
  }
  return join == JoinType::delta1 ? a1 : a2;
}

std::array<int, 3> path_parity_census(const BreakpointGraph& bp) {
  std::array<int, 3> out{0, 0, 0};
  for (const auto& c : bp.components()) {
    if (c.is_cycle) continue;
    if (c.ends == LineEnds::TTp)
      ++out[0];
    else if (c.ends == LineEnds::TT)
      ++out[1];
    else
      ++out[2];
  }
  return out;
}

}  // namespace dcj
