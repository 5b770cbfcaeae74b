#include "dcj/estimator.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcj {

Labeling::Labeling(const Genome& g) {
  lab_.assign(g.extremity_count(), 0);
  int next = 1;
  auto label_edge = [&](Ext u) {
    lab_[u] = lab_[g.mate(u)] = next++;
  };
  std::vector<char> seen(g.extremity_count(), 0);
  // Linear chromosomes: walk from the direction-start telomere (the one
  // whose adjacency arc leaves it).
  for (int j = 1; j <= 2 * g.linear_count(); ++j) {
    Ext t = g.telomere(j);
    if (seen[t] || !g.arc_leaves(t)) continue;
    Ext cur = t;
    while (true) {
      Ext v = g.mate(cur);
      seen[cur] = seen[v] = 1;
      label_edge(cur);
      if (g.is_telomere(v)) break;
      cur = gene_partner(v);
    }
  }
  // Circular chromosomes: start past the smallest gene's head.
  for (Ext e = 0; e < 2 * g.gene_count(); ++e) {
    if (seen[e]) continue;
    Ext start = gene_partner(e);  // e is the smallest unseen tail
    Ext cur = start;
    do {
      Ext v = g.mate(cur);
      seen[cur] = seen[v] = 1;
      label_edge(cur);
      cur = gene_partner(v);
    } while (cur != start);
  }
}

void Labeling::apply_move(Ext a, Ext b, Ext c, Ext d, JoinType join) {
  const int le = lab_[a];
  const int lf = lab_[c];
  const Ext x = std::min({a, b, c, d});
  const bool x_in_e = (x == a || x == b);
  const int lx = x_in_e ? le : lf;
  const int ly = x_in_e ? lf : le;
  Ext p1, p2, q1, q2;
  if (join == JoinType::delta1) {
    p1 = a; p2 = c; q1 = b; q2 = d;
  } else {
    p1 = a; p2 = d; q1 = b; q2 = c;
  }
  // x is an endpoint of exactly one new edge.
  const bool x_in_p = (x == p1 || x == p2);
  lab_[p1] = lab_[p2] = x_in_p ? lx : ly;
  lab_[q1] = lab_[q2] = x_in_p ? ly : lx;
}

void Labeling::permute(const std::vector<int>& perm) {
  for (auto& l : lab_) l = perm[l - 1];
}

bool Labeling::is_bijection(const Genome& g) const {
  const int m = g.adjacency_count();
  std::vector<char> hit(m + 1, 0);
  for (Ext u = 0; u < g.extremity_count(); ++u) {
    const int l = lab_[u];
    if (l < 1 || l > m) return false;
    if (lab_[g.mate(u)] != l) return false;
    hit[l] = 1;
  }
  for (int l = 1; l <= m; ++l)
    if (!hit[l]) return false;
  return true;
}

LabelGraph::LabelGraph(int m)
    : m_(m), parent_(m), comp_vertices_(m, 1), comp_edges_(m, 0) {
  for (int i = 0; i < m; ++i) parent_[i] = i;
}

int LabelGraph::find(int v) const {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool LabelGraph::record_pair(int l1, int l2) {
  if (l1 == l2) throw std::invalid_argument("self-loop label pair");
  if (l1 < 1 || l2 < 1 || l1 > m_ || l2 > m_)
    throw std::invalid_argument("label out of range");
  int a = l1 - 1, b = l2 - 1;
  if (a > b) std::swap(a, b);
  const uint64_t key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
  if (!edges_.insert(key).second) return false;
  ++total_edges_;
  int ra = find(a), rb = find(b);
  if (ra == rb) {
    ++comp_edges_[ra];
    return true;
  }
  if (comp_vertices_[ra] < comp_vertices_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  comp_vertices_[ra] += comp_vertices_[rb];
  comp_edges_[ra] += comp_edges_[rb] + 1;
  return true;
}

bool LabelGraph::has_edge(int l1, int l2) const {
  int a = l1 - 1, b = l2 - 1;
  if (a > b) std::swap(a, b);
  const uint64_t key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
  return edges_.count(key) != 0;
}

int LabelGraph::tree_component_count() const {
  int trees = 0;
  for (int v = 0; v < m_; ++v)
    if (find(v) == v && comp_edges_[v] == comp_vertices_[v] - 1) ++trees;
  return trees;
}

}  // namespace dcj
