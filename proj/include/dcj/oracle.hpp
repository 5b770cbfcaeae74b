#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "dcj/genome.hpp"

namespace dcj {

// Brute-force genome space for tiny n: every canonical class together with
// the one-DCJ adjacency graph over classes. With `restricted`, k must be 1
// and the space becomes the induced subgraph on states with at most one
// circular chromosome.
struct GenomeSpace {
  int n = 0, k = 0;
  bool restricted = false;
  std::vector<Genome> classes;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> adj;

  int class_of(const Genome& g) const;  // throws if g is not in the space
  std::vector<int> bfs_from(int src) const;
  int bfs_distance(const Genome& g1, const Genome& g2) const;
};

GenomeSpace enumerate_space(int n, int k, bool restricted = false);

struct OracleReport {
  int n = 0, k = 0;
  int classes = 0;
  long pairs = 0;
  long mismatches = 0;
  int diameter = 0;
  bool connected = true;
  // Pairs of one-circle states whose restricted distance exceeds the
  // unrestricted one (a block interchange inside the circle needs a
  // two-circle intermediate). Zero whenever one endpoint is linear.
  long circular_pair_deviations = 0;
  std::vector<std::string> counterexamples;  // capped at a handful

  bool ok() const { return mismatches == 0 && connected; }
  std::string describe() const;
};

// BFS over the full class graph against the closed-form distance, all pairs.
OracleReport certify_formula(int n, int k);

// Restricted BFS vs unrestricted BFS vs the closed form over the restricted
// space (k = 1). The equality is certified for every pair with at least one
// unichromosomal linear endpoint; pairs of one-circle states may differ and
// are tallied in circular_pair_deviations instead.
OracleReport certify_restricted(int n);

}  // namespace dcj
