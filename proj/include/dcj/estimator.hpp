#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dcj/dcj_ops.hpp"
#include "dcj/genome.hpp"

namespace dcj {

// Bijection from adjacencies to 1..n+k, stored per extremity; both endpoints
// of an adjacency carry the same label.
class Labeling {
public:
  // Labels assigned in standard-direction traversal order: linear
  // chromosomes by starting telomere, then circular ones by smallest gene.
  explicit Labeling(const Genome& g);

  int label_at(Ext u) const { return lab_[u]; }

  // Eq.-(2) update for a move on the old edges {a,b}, {c,d}: the new edge
  // incident to x = min{a,b,c,d} inherits the label of the old edge
  // incident to x, the other new edge gets the other label.
  void apply_move(Ext a, Ext b, Ext c, Ext d, JoinType join);

  // Test hook: relabel through a permutation of 1..n+k (perm[old-1] = new).
  void permute(const std::vector<int>& perm);

  bool is_bijection(const Genome& g) const;

private:
  std::vector<int> lab_;
};

// Simple graph on labels 1..m with union-find component tracking; tree
// components estimate non-fragmented breakpoint-graph cycles.
class LabelGraph {
public:
  explicit LabelGraph(int m);

  // Adds {l1, l2} unless already present; returns true if added.
  bool record_pair(int l1, int l2);
  bool has_edge(int l1, int l2) const;

  int vertex_count() const { return m_; }
  int edge_count() const { return total_edges_; }
  // Components with edges = vertices - 1; isolated vertices count.
  int tree_component_count() const;

private:
  int find(int v) const;

  int m_;
  mutable std::vector<int> parent_;
  std::vector<int> comp_vertices_, comp_edges_;
  std::unordered_set<uint64_t> edges_;
  int total_edges_ = 0;
};

// max(0, n - trees); the raw value n - trees is reported alongside in CSV.
inline int distance_estimate(int n, int trees) {
  return n - trees > 0 ? n - trees : 0;
}

}  // namespace dcj
