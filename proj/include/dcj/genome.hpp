#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dcj {

// An extremity is a small integer code. For gene i in 1..n the tail (-i)
// is 2(i-1) and the head (+i) is 2(i-1)+1; telomere j in 1..2k is 2n+(j-1).
// Code order is the total extremity order used everywhere: tail before head,
// gene i before gene i+1, all gene extremities before telomeres, telomeres
// by index.
using Ext = int32_t;

constexpr Ext tail_of(int gene) { return 2 * (gene - 1); }
constexpr Ext head_of(int gene) { return 2 * (gene - 1) + 1; }
inline int gene_of(Ext e) { return static_cast<int>(e / 2) + 1; }
inline bool is_head(Ext e) { return (e & 1) != 0; }
inline Ext gene_partner(Ext e) { return e ^ 1; }  // other end of the same gene

struct Chromosome {
  bool circular = false;
  std::vector<int> genes;  // signed, nonzero; empty only for a null linear
};

struct DcjMove;

// A genome of G_{n,k}: the adjacency perfect matching on the 2(n+k)
// extremities plus the standard direction of every chromosome. Immutable
// from the caller's perspective; dcj-ops mutates exclusively-owned copies.
class Genome {
public:
  static Genome from_chromosomes(const std::vector<Chromosome>& chroms, int n,
                                 int k);
  // Direct construction from the matching; every perfect matching on the
  // extremity set is a valid genome.
  static Genome from_adjacencies(int n, int k, std::vector<Ext> mate);
  // Linear chromosomes with consecutive forward genes (1..s1), (s1+1..), ...
  static Genome identity(const std::vector<int>& sizes);
  static Genome random(int n, int k, class Xoshiro256& rng);

  int gene_count() const { return n_; }
  int linear_count() const { return k_; }
  int extremity_count() const { return 2 * (n_ + k_); }
  int adjacency_count() const { return n_ + k_; }

  bool is_telomere(Ext e) const { return e >= 2 * n_; }
  int telomere_index(Ext e) const { return e - 2 * n_ + 1; }  // 1-based
  Ext telomere(int j) const { return 2 * n_ + j - 1; }        // j in 1..2k

  Ext mate(Ext u) const { return mate_[u]; }
  // Standard direction: true if the arc on the adjacency at u leaves u.
  bool arc_leaves(Ext u) const { return out_[u] != 0; }
  // The adjacency containing u as an ordered (a, b) arc of the standard
  // direction.
  std::pair<Ext, Ext> oriented_adjacency(Ext u) const {
    return out_[u] ? std::pair<Ext, Ext>{u, mate_[u]}
                   : std::pair<Ext, Ext>{mate_[u], u};
  }

  std::vector<Chromosome> decompose() const;
  int circular_count() const;

  // Total key invariant under telomere relabeling, linear flips and circular
  // rotation/reflection; keys are equal iff the DCJ distance is 0.
  std::vector<int32_t> canonical_key() const;
  std::string canonical_key_string() const;

  void validate() const;  // throws std::invalid_argument on violation

private:
  Genome(int n, int k, std::vector<Ext> mate)
      : n_(n), k_(k), mate_(std::move(mate)) {}

  // Extremities of the component containing u0, listed so that
  // (s[0],s[1]),(s[2],s[3]),... are adjacencies; a path runs telomere to
  // telomere, a cycle closes with the gene edge from s.back() to s.front().
  std::vector<Ext> component_sequence(Ext u0) const;
  void set_direction(const std::vector<Ext>& seq);
  void recompute_direction_component(Ext u0);
  void recompute_direction_all();

  int n_ = 0, k_ = 0;
  std::vector<Ext> mate_;
  std::vector<uint8_t> out_;

  friend void apply_dcj_inplace(Genome& g, const DcjMove& move);
};

// Text format: one chromosome per line, `L: g1 g2 ...` or `C: g1 g2 ...`
// with signed integers; `#` starts a comment. n and k are inferred.
Genome parse_genome(std::istream& in);
Genome parse_genome(const std::string& text);
std::string format_genome(const Genome& g);

}  // namespace dcj
