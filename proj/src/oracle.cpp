#include "dcj/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "dcj/breakpoint.hpp"
#include "dcj/dcj_ops.hpp"

namespace dcj {

namespace {

constexpr int kMaxN = 4;

// Neighbor genomes in the induced subgraph on states with at most one
// circular chromosome.
std::vector<Genome> restricted_neighbors(const Genome& g) {
  std::vector<Genome> out;
  for (auto& [h, join] : neighbors(g))
    if (h.circular_count() <= 1) out.push_back(std::move(h));
  return out;
}

void all_matchings(std::vector<Ext>& mate, int m,
                   const std::function<void(const std::vector<Ext>&)>& emit) {
  int i = 0;
  while (i < m && mate[i] != -1) ++i;
  if (i == m) {
    emit(mate);
    return;
  }
  for (int j = i + 1; j < m; ++j) {
    if (mate[j] != -1) continue;
    mate[i] = j;
    mate[j] = i;
    all_matchings(mate, m, emit);
    mate[i] = mate[j] = -1;
  }
}

}  // namespace

int GenomeSpace::class_of(const Genome& g) const {
  auto it = index.find(g.canonical_key_string());
  if (it == index.end())
    throw std::invalid_argument("genome not in enumerated space");
  return it->second;
}

std::vector<int> GenomeSpace::bfs_from(int src) const {
  std::vector<int> dist(classes.size(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

int GenomeSpace::bfs_distance(const Genome& g1, const Genome& g2) const {
  return bfs_from(class_of(g1))[class_of(g2)];
}

GenomeSpace enumerate_space(int n, int k, bool restricted) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("oracle requires 1 <= n <= 4");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (restricted && k != 1)
    throw std::invalid_argument("restricted space requires k = 1");
  GenomeSpace sp;
  sp.n = n;
  sp.k = k;
  sp.restricted = restricted;
  std::vector<Ext> mate(2 * (n + k), -1);
  all_matchings(mate, 2 * (n + k), [&](const std::vector<Ext>& m) {
    Genome g = Genome::from_adjacencies(n, k, m);
    if (restricted && g.circular_count() > 1) return;
    const std::string key = g.canonical_key_string();
    if (sp.index.emplace(key, static_cast<int>(sp.classes.size())).second)
      sp.classes.push_back(std::move(g));
  });
  sp.adj.resize(sp.classes.size());
  for (size_t i = 0; i < sp.classes.size(); ++i) {
    std::vector<Genome> nbrs;
    if (restricted) {
      nbrs = restricted_neighbors(sp.classes[i]);
    } else {
      for (auto& [h, join] : neighbors(sp.classes[i]))
        nbrs.push_back(std::move(h));
    }
    std::vector<int> ids;
    for (const Genome& h : nbrs) {
      const int j = sp.index.at(h.canonical_key_string());
      if (j != static_cast<int>(i)) ids.push_back(j);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    sp.adj[i] = std::move(ids);
  }
  return sp;
}

std::string OracleReport::describe() const {
  std::string s = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                  ": classes=" + std::to_string(classes) +
                  " pairs=" + std::to_string(pairs) +
                  " mismatches=" + std::to_string(mismatches) +
                  " diameter=" + std::to_string(diameter) +
                  (connected ? " connected" : " DISCONNECTED");
  if (circular_pair_deviations > 0)
    s += " circular-pair-deviations=" + std::to_string(circular_pair_deviations);
  for (const auto& ce : counterexamples) s += "\n  counterexample: " + ce;
  return s;
}

OracleReport certify_formula(int n, int k) {
  const GenomeSpace sp = enumerate_space(n, k, false);
  OracleReport rep;
  rep.n = n;
  rep.k = k;
  rep.classes = static_cast<int>(sp.classes.size());
  for (int i = 0; i < rep.classes; ++i) {
    const std::vector<int> dist = sp.bfs_from(i);
    for (int j = 0; j < rep.classes; ++j) {
      ++rep.pairs;
      if (dist[j] == -1) {
        rep.connected = false;
        continue;
      }
      rep.diameter = std::max(rep.diameter, dist[j]);
      const int formula = dcj_distance(sp.classes[i], sp.classes[j]);
      if (formula != dist[j]) {
        ++rep.mismatches;
        if (rep.counterexamples.size() < 5)
          rep.counterexamples.push_back(
              format_genome(sp.classes[i]) + " vs " +
              format_genome(sp.classes[j]) + ": formula " +
              std::to_string(formula) + ", bfs " + std::to_string(dist[j]));
      }
    }
  }
  return rep;
}

OracleReport certify_restricted(int n) {
  const GenomeSpace full = enumerate_space(n, 1, false);
  const GenomeSpace sub = enumerate_space(n, 1, true);
  OracleReport rep;
  rep.n = n;
  rep.k = 1;
  rep.classes = static_cast<int>(sub.classes.size());
  for (int i = 0; i < rep.classes; ++i) {
    const std::vector<int> dsub = sub.bfs_from(i);
    const std::vector<int> dfull = full.bfs_from(full.class_of(sub.classes[i]));
    const bool i_linear = sub.classes[i].circular_count() == 0;
    for (int j = 0; j < rep.classes; ++j) {
      ++rep.pairs;
      if (dsub[j] == -1) {
        rep.connected = false;
        continue;
      }
      rep.diameter = std::max(rep.diameter, dsub[j]);
      const int formula = dcj_distance(sub.classes[i], sub.classes[j]);
      const int unres = dfull[full.class_of(sub.classes[j])];
      if (dsub[j] != unres || dsub[j] != formula) {
        if (!i_linear && sub.classes[j].circular_count() > 0) {
          ++rep.circular_pair_deviations;
          continue;
        }
        ++rep.mismatches;
        if (rep.counterexamples.size() < 5)
          rep.counterexamples.push_back(
              format_genome(sub.classes[i]) + " vs " +
              format_genome(sub.classes[j]) + ": restricted " +
              std::to_string(dsub[j]) + ", unrestricted " +
              std::to_string(unres) + ", formula " + std::to_string(formula));
      }
    }
  }
  return rep;
}

}  // namespace dcj
