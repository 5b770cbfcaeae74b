#include "dcj/walks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace dcj {

namespace {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

double PSchedule::at(double t) const {
  double p = pieces.front().second;
  for (const auto& [start, value] : pieces) {
    if (start > t) break;
    p = value;
  }
  return p;
}

PSchedule PSchedule::parse(const std::string& spec) {
  PSchedule s;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string piece = spec.substr(pos, comma - pos);
    const size_t colon = piece.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("schedule piece must be t:p, got '" + piece +
                                  "'");
    s.pieces.emplace_back(std::stod(piece.substr(0, colon)),
                          std::stod(piece.substr(colon + 1)));
    pos = comma + 1;
  }
  s.validate();
  return s;
}

std::string PSchedule::describe() const {
  if (pieces.size() == 1) return format_number(pieces.front().second);
  std::string out;
  for (const auto& [t, p] : pieces) {
    if (!out.empty()) out += ',';
    out += format_number(t) + ":" + format_number(p);
  }
  return out;
}

void PSchedule::validate() const {
  if (pieces.empty()) throw std::invalid_argument("empty p schedule");
  if (pieces.front().first != 0.0)
    throw std::invalid_argument("first schedule threshold must be 0");
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].second < 0 || pieces[i].second > 1)
      throw std::invalid_argument("p values must lie in [0,1]");
    if (i > 0 && pieces[i].first <= pieces[i - 1].first)
      throw std::invalid_argument("schedule thresholds must increase");
  }
}

int WalkConfig::n() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

int WalkConfig::k() const { return static_cast<int>(sizes.size()); }

void WalkConfig::validate() const {
  if (sizes.empty()) throw std::invalid_argument("no chromosome sizes");
  for (int s : sizes)
    if (s <= 0) throw std::invalid_argument("chromosome sizes must be positive");
  if (model == Model::restricted && sizes.size() != 1)
    throw std::invalid_argument("restricted model requires a single linear chromosome");
  schedule.validate();
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 0)
      throw std::invalid_argument("checkpoints must be non-negative");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("checkpoints must be ascending");
  }
}

Walk::Walk(const WalkConfig& cfg)
    : cfg_(cfg),
      cfg_n_(cfg.n()),
      cfg_k_(cfg.k()),
      g0_(Genome::identity(cfg.sizes)),
      g_(g0_),
      lab_(g0_),
      z_(cfg_n_ + cfg_k_),
      rng_(cfg.seed, static_cast<uint64_t>(cfg.replicate)),
      frag_bound_(static_cast<int>(2 * std::sqrt(cfg_n_ + cfg_k_))) {
  cfg_.validate();
}

void Walk::permute_labels(const std::vector<int>& perm) { lab_.permute(perm); }

int Walk::bp_gray(int v) const {
  if (v >= 2 * cfg_n_ + 2 * cfg_k_) return -1;  // T' carries only black
  return g0_.mate(v);
}

int Walk::bp_black(int v) const {
  if (v >= 2 * cfg_n_ && v < 2 * cfg_n_ + 2 * cfg_k_) return -1;  // T: gray only
  const Ext e = v >= 2 * cfg_n_ ? static_cast<Ext>(v - 2 * cfg_k_)
                                : static_cast<Ext>(v);
  return bp_vertex(g_.mate(e));
}

bool Walk::on_linear_chromosome(Ext u) const {
  if (g_.is_telomere(u)) return true;
  Ext cur = u;
  while (true) {
    Ext v = g_.mate(cur);
    if (g_.is_telomere(v)) return true;
    cur = gene_partner(v);
    if (cur == u) return false;
  }
}

Walk::PairChoice Walk::choose_pair_unrestricted() {
  const int m = g_.extremity_count();
  const Ext u = static_cast<Ext>(rng_.uniform(m));
  const Ext mu = g_.mate(u);
  Ext v;
  do {
    v = static_cast<Ext>(rng_.uniform(m));
  } while (v == u || v == mu);
  auto [a, b] = g_.oriented_adjacency(u);
  auto [c, d] = g_.oriented_adjacency(v);
  return PairChoice{a, b, c, d};
}

Walk::PairChoice Walk::choose_pair_restricted() {
  if (circ_anchor_ == -1) return choose_pair_unrestricted();
  // In UTilde: one edge uniform on the circular chromosome (j choices), one
  // uniform on the linear chromosome (n+1-j choices).
  std::vector<Ext> circ;
  Ext cur = circ_anchor_;
  do {
    circ.push_back(cur);
    cur = gene_partner(g_.mate(cur));
  } while (cur != circ_anchor_);
  const Ext u = circ[rng_.uniform(circ.size())];
  std::vector<char> on_circle(g_.extremity_count(), 0);
  for (Ext e : circ) on_circle[e] = on_circle[g_.mate(e)] = 1;
  Ext v;
  do {
    v = static_cast<Ext>(rng_.uniform(g_.extremity_count()));
  } while (on_circle[v]);
  auto [a, b] = g_.oriented_adjacency(u);
  auto [c, d] = g_.oriented_adjacency(v);
  return PairChoice{a, b, c, d};
}

Walk::BpLocal Walk::analyze_component(int a, int b, int c, int d) const {
  auto next = [this](int v, bool black) {
    return black ? bp_black(v) : bp_gray(v);
  };
  auto vertex_is_t = [this](int v) {
    return v >= 2 * cfg_n_ && v < 2 * cfg_n_ + 2 * cfg_k_;
  };
  BpLocal res;
  int end1 = -1, end2 = -1;
  bool cycle = false;
  {
    int v = a;
    bool black = false;  // scan away from b first
    while (true) {
      int w = next(v, black);
      if (w == -1) {
        end1 = v;
        break;
      }
      if (w == a) {
        cycle = true;
        break;
      }
      v = w;
      black = !black;
    }
  }
  if (!cycle) {
    int v = a;
    bool black = true;  // scan through b
    while (true) {
      int w = next(v, black);
      if (w == -1) {
        end2 = v;
        break;
      }
      v = w;
      black = !black;
    }
  }
  res.is_cycle = cycle;
  int start;
  bool first_black;
  if (cycle) {
    int min_v = a;
    int v = a;
    bool black = true;
    do {
      v = next(v, black);
      black = !black;
      min_v = std::min(min_v, v);
    } while (v != a);
    start = min_v;
    first_black = true;  // cycles start through the black edge
  } else {
    const bool t1 = vertex_is_t(end1), t2 = vertex_is_t(end2);
    if (t1 && t2)
      res.ends = LineEnds::TT;
    else if (!t1 && !t2)
      res.ends = LineEnds::TpTp;
    else
      res.ends = LineEnds::TTp;
    if (t1 == t2)
      start = std::min(end1, end2);  // same side: smaller telomere index
    else
      start = t1 ? end1 : end2;  // TT' lines start at the T end
    first_black = !vertex_is_t(start);
  }
  int v = start;
  bool black = first_black;
  while (true) {
    int w = next(v, black);
    if (w == -1) break;
    if (black) {
      ++res.black_count;
      if ((v == a && w == b) || (v == b && w == a)) res.fwd_first = (v == a);
      if ((v == c && w == d) || (v == d && w == c)) {
        res.contains_other = true;
        res.fwd_second = (v == c);
      }
    }
    if (cycle && w == start) break;
    v = w;
    black = !black;
  }
  return res;
}

int Walk::component_black_size(int v0) const {
  int count = 0;
  int v = v0;
  bool black = true;
  while (true) {
    int w = black ? bp_black(v) : bp_gray(v);
    if (w == -1) break;
    if (black) ++count;
    if (w == v0) return count;  // cycle closed
    v = w;
    black = !black;
  }
  v = v0;
  black = false;
  while (true) {
    int w = black ? bp_black(v) : bp_gray(v);
    if (w == -1) break;
    if (black) ++count;
    v = w;
    black = !black;
  }
  return count;
}

MoveEvent Walk::step() {
  double jump_time;
  if (cfg_.time_mode == TimeMode::discrete) {
    jump_time = static_cast<double>(i_ + 1);
  } else {
    if (pending_jump_ < 0) pending_jump_ = t_ + rng_.exponential();
    jump_time = pending_jump_;
  }
  const double p = cfg_.schedule.at(jump_time);
  const bool in_utilde =
      cfg_.model == Model::restricted && circ_anchor_ != -1;
  const PairChoice pc = cfg_.model == Model::restricted
                            ? choose_pair_restricted()
                            : choose_pair_unrestricted();
  JoinType join;
  if (in_utilde)  // uniform over the neighbours of a UTilde state
    join = rng_.bernoulli(0.5) ? JoinType::delta1 : JoinType::delta2;
  else
    join = rng_.bernoulli(p) ? JoinType::delta1 : JoinType::delta2;

  const int l1 = lab_.label_at(pc.a);
  const int l2 = lab_.label_at(pc.c);

  // Local BP(G0, G_t) analysis: the alpha of this move relative to the
  // origin, and whether a split occurs (the delta-convention join is delta2
  // on a single component).
  const int va = bp_vertex(pc.a), vb = bp_vertex(pc.b);
  const int vc = bp_vertex(pc.c), vd = bp_vertex(pc.d);
  const BpLocal first = analyze_component(va, vb, vc, vd);
  int alpha;
  bool split = false;
  if (first.contains_other) {
    const int flips = (first.fwd_first ? 0 : 1) + (first.fwd_second ? 0 : 1);
    const JoinType dj = flips % 2 == 0 ? join : other_join(join);
    split = dj == JoinType::delta2;
    alpha = split ? -1 : 0;
  } else {
    const BpLocal second = analyze_component(vc, vd, va, vb);
    if (first.is_cycle || second.is_cycle) {
      alpha = 1;
      ++merges_;
    } else {
      const bool even1 = first.ends == LineEnds::TTp;
      const bool even2 = second.ends == LineEnds::TTp;
      if (even1 && even2) {
        const int flips =
            (first.fwd_first ? 0 : 1) + (second.fwd_first ? 0 : 1);
        const JoinType dj = flips % 2 == 0 ? join : other_join(join);
        alpha = dj == JoinType::delta1 ? 1 : 0;
      } else if (even1 != even2) {
        alpha = 0;
      } else if (first.ends == second.ends) {
        alpha = 0;
      } else {
        alpha = -1;  // odd TT + odd T'T' fuse into two even lines
      }
    }
  }

  z_.record_pair(l1, l2);
  apply_dcj_inplace(g_, DcjMove{pc.a, pc.b, pc.c, pc.d, join});
  lab_.apply_move(pc.a, pc.b, pc.c, pc.d, join);

  bool frag = false;
  if (split) {
    ++splits_;
    const int s1 = component_black_size(bp_vertex(pc.a));
    const int s2 = component_black_size(bp_vertex(pc.b));
    frag = std::min(s1, s2) <= frag_bound_;
    if (frag) ++frag_;
  }
  alpha_sum_ += alpha;

  if (cfg_.model == Model::restricted) {
    if (in_utilde)
      circ_anchor_ = -1;  // any move out of UTilde reabsorbs the circle
    else if (join == JoinType::delta2)
      circ_anchor_ = on_linear_chromosome(pc.a) ? pc.b : pc.a;
  }

  ++i_;
  t_ = jump_time;
  pending_jump_ = -1;

  if (cfg_.validate_states && i_ % 1000 == 0) {
    g_.validate();
    if (!lab_.is_bijection(g_))
      throw std::logic_error("labeling lost bijectivity");
    if (cfg_.model == Model::restricted &&
        restricted_state(g_) == RestrictedState::Other)
      throw std::logic_error("restricted walk left U and UTilde");
  }

  return MoveEvent{i_, t_, l1, l2, join, alpha, frag};
}

CheckpointSample Walk::sample_at(double c) const {
  return CheckpointSample{c,           t_,
                          i_,          dcj_distance(g0_, g_),
                          z_.tree_component_count(), frag_};
}

std::vector<CheckpointSample> Walk::run() {
  std::vector<CheckpointSample> out;
  out.reserve(cfg_.checkpoints.size());
  for (double c : cfg_.checkpoints) {
    const double target = c * cfg_n_;
    if (cfg_.time_mode == TimeMode::discrete) {
      const int64_t steps = std::llround(target);
      while (i_ < steps) step();
    } else {
      while (true) {
        if (pending_jump_ < 0) pending_jump_ = t_ + rng_.exponential();
        if (pending_jump_ > target) break;
        step();
      }
    }
    out.push_back(sample_at(c));
  }
  return out;
}

std::vector<double> poisson_jump_times(double horizon, Xoshiro256& rng) {
  if (horizon <= 0) throw std::invalid_argument("horizon must be positive");
  std::vector<double> out;
  double t = 0;
  while (true) {
    t += rng.exponential();
    if (t > horizon) break;
    out.push_back(t);
  }
  return out;
}

}  // namespace dcj
