#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcj/breakpoint.hpp"
#include "dcj/dcj_ops.hpp"
#include "dcj/estimator.hpp"
#include "dcj/genome.hpp"
#include "dcj/rng.hpp"

namespace dcj {

enum class Model : uint8_t { unrestricted, restricted };
enum class TimeMode : uint8_t { discrete, poisson };

// Piecewise-constant p_t: pieces[i].second applies from time pieces[i].first
// until the next threshold; the first threshold must be 0.
struct PSchedule {
  std::vector<std::pair<double, double>> pieces;

  static PSchedule constant(double p) { return PSchedule{{{0.0, p}}}; }
  static PSchedule parse(const std::string& spec);  // "t1:p1,t2:p2,..."

  double at(double t) const;
  std::string describe() const;
  void validate() const;
};

struct WalkConfig {
  Model model = Model::unrestricted;
  std::vector<int> sizes;  // linear chromosome gene counts; n = sum, k = count
  PSchedule schedule = PSchedule::constant(0.5);
  std::vector<double> checkpoints;  // c values, ascending
  TimeMode time_mode = TimeMode::discrete;
  uint64_t seed = 1;
  int replicate = 0;
  bool validate_states = false;

  int n() const;
  int k() const;
  void validate() const;
};

struct MoveEvent {
  int64_t index;       // jump number, 1-based
  double time;         // jump time tau_i
  int lambda1, lambda2;  // labels of the selected edges
  JoinType join;       // join as performed (delta convention of the genome)
  int alpha;           // distance displacement relative to the origin genome
  bool fragmentation;  // split produced a component of <= 2*sqrt(n+k) black edges
};

struct CheckpointSample {
  double c;
  double t;
  int64_t jumps;
  int distance;     // exact dcj_distance(G0, G_t)
  int tree_count;   // tree components of Z
  int64_t frag_events;
};

// One trajectory of the unrestricted process X or the restricted process Y,
// carrying the labeling L and the label graph Z. Strictly sequential; run
// replicates in parallel each with its own Walk.
class Walk {
public:
  explicit Walk(const WalkConfig& cfg);

  const Genome& origin() const { return g0_; }
  const Genome& genome() const { return g_; }
  const Labeling& labeling() const { return lab_; }
  const LabelGraph& label_graph() const { return z_; }
  double time() const { return t_; }
  int64_t jumps() const { return i_; }
  int64_t frag_events() const { return frag_; }
  int64_t merge_count() const { return merges_; }
  int64_t split_count() const { return splits_; }
  int64_t cumulative_alpha() const { return alpha_sum_; }

  MoveEvent step();
  // Advances to each checkpoint time c*n in order and samples there.
  std::vector<CheckpointSample> run();
  CheckpointSample sample_at(double c) const;

  // Test hook for the exchangeability property: relabels L0.
  void permute_labels(const std::vector<int>& perm);

private:
  struct PairChoice {
    Ext a, b, c, d;  // standard-direction oriented adjacencies
  };
  PairChoice choose_pair_unrestricted();
  PairChoice choose_pair_restricted();
  // True if the genome component containing u reaches a telomere.
  bool on_linear_chromosome(Ext u) const;

  // Local analysis of BP(G0, G_t) around one black edge.
  struct BpLocal {
    bool is_cycle = false;
    int black_count = 0;
    LineEnds ends = LineEnds::TT;
    bool contains_other = false;
    bool fwd_first = false;   // natural direction of the first queried edge
    bool fwd_second = false;  // and of the second, when found in this component
  };
  int bp_gray(int v) const;
  int bp_black(int v) const;
  int bp_vertex(Ext e) const { return e >= 2 * cfg_n_ ? e + 2 * cfg_k_ : e; }
  BpLocal analyze_component(int a, int b, int c, int d) const;
  int component_black_size(int v) const;

  WalkConfig cfg_;
  int cfg_n_, cfg_k_;
  Genome g0_, g_;
  Labeling lab_;
  LabelGraph z_;
  Xoshiro256 rng_;
  double t_ = 0;
  int64_t i_ = 0;
  int64_t frag_ = 0, merges_ = 0, splits_ = 0;
  int64_t alpha_sum_ = 0;
  Ext circ_anchor_ = -1;  // an extremity on the circular chromosome, in UTilde
  int frag_bound_;        // floor(2*sqrt(n+k))
  double pending_jump_ = -1;
};

// The first `count` Poisson(rate 1) jump times within [0, horizon].
std::vector<double> poisson_jump_times(double horizon, Xoshiro256& rng);

}  // namespace dcj
