#include "dcj/genome.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dcj/rng.hpp"

namespace dcj {

namespace {

Ext left_ext(int signed_gene) {
  return signed_gene > 0 ? tail_of(signed_gene) : head_of(-signed_gene);
}
Ext right_ext(int signed_gene) {
  return signed_gene > 0 ? head_of(signed_gene) : tail_of(-signed_gene);
}

}  // namespace

Genome Genome::from_chromosomes(const std::vector<Chromosome>& chroms, int n,
                                int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative n or k");
  std::vector<Ext> mate(2 * (n + k), -1);
  auto link = [&](Ext u, Ext v) {
    if (u == v) throw std::invalid_argument("self adjacency");
    if (mate[u] != -1 || mate[v] != -1)
      throw std::invalid_argument("extremity used twice");
    mate[u] = v;
    mate[v] = u;
  };
  std::vector<char> used(n + 1, 0);
  int next_telomere = 1;
  int linear = 0;
  for (const auto& ch : chroms) {
    for (int g : ch.genes) {
      int a = std::abs(g);
      if (a < 1 || a > n) throw std::invalid_argument("gene id out of range");
      if (used[a]) throw std::invalid_argument("duplicate gene");
      used[a] = 1;
    }
    if (!ch.circular) {
      ++linear;
      if (next_telomere + 1 > 2 * k)
        throw std::invalid_argument("too many linear chromosomes");
      Ext tl = 2 * n + (next_telomere++) - 1;
      Ext tr = 2 * n + (next_telomere++) - 1;
      if (ch.genes.empty()) {
        link(tl, tr);  // null chromosome
        continue;
      }
      link(tl, left_ext(ch.genes.front()));
      for (size_t i = 0; i + 1 < ch.genes.size(); ++i)
        link(right_ext(ch.genes[i]), left_ext(ch.genes[i + 1]));
      link(right_ext(ch.genes.back()), tr);
    } else {
      if (ch.genes.empty())
        throw std::invalid_argument("empty circular chromosome");
      const size_t m = ch.genes.size();
      for (size_t i = 0; i < m; ++i)
        link(right_ext(ch.genes[i]), left_ext(ch.genes[(i + 1) % m]));
    }
  }
  for (int g = 1; g <= n; ++g)
    if (!used[g]) throw std::invalid_argument("missing gene");
  if (linear != k) throw std::invalid_argument("wrong linear chromosome count");
  Genome g(n, k, std::move(mate));
  g.validate();
  g.recompute_direction_all();
  return g;
}

Genome Genome::from_adjacencies(int n, int k, std::vector<Ext> mate) {
  Genome g(n, k, std::move(mate));
  g.validate();
  g.recompute_direction_all();
  return g;
}

Genome Genome::identity(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  std::vector<Chromosome> chroms;
  int next = 1;
  for (int s : sizes) {
    if (s <= 0) throw std::invalid_argument("chromosome size must be positive");
    Chromosome ch;
    for (int i = 0; i < s; ++i) ch.genes.push_back(next++);
    chroms.push_back(std::move(ch));
  }
  return from_chromosomes(chroms, next - 1, static_cast<int>(sizes.size()));
}

Genome Genome::random(int n, int k, Xoshiro256& rng) {
  std::vector<Ext> exts(2 * (n + k));
  std::iota(exts.begin(), exts.end(), 0);
  for (size_t i = exts.size() - 1; i > 0; --i)
    std::swap(exts[i], exts[rng.uniform(i + 1)]);
  std::vector<Ext> mate(exts.size());
  for (size_t i = 0; i < exts.size(); i += 2) {
    mate[exts[i]] = exts[i + 1];
    mate[exts[i + 1]] = exts[i];
  }
  return from_adjacencies(n, k, std::move(mate));
}

void Genome::validate() const {
  const int m = extremity_count();
  if (static_cast<int>(mate_.size()) != m)
    throw std::invalid_argument("matching size mismatch");
  for (Ext u = 0; u < m; ++u) {
    Ext v = mate_[u];
    if (v < 0 || v >= m) throw std::invalid_argument("extremity out of range");
    if (v == u) throw std::invalid_argument("extremity matched to itself");
    if (mate_[v] != u) throw std::invalid_argument("matching not symmetric");
  }
}

std::vector<Chromosome> Genome::decompose() const {
  std::vector<char> seen(extremity_count(), 0);
  std::vector<Chromosome> out;
  for (int j = 1; j <= 2 * k_; ++j) {
    Ext t = telomere(j);
    if (seen[t]) continue;
    seen[t] = 1;
    Chromosome ch;
    Ext v = mate_[t];
    while (!is_telomere(v)) {
      seen[v] = 1;
      int g = gene_of(v);
      ch.genes.push_back(is_head(v) ? -g : g);
      Ext w = gene_partner(v);
      seen[w] = 1;
      v = mate_[w];
    }
    seen[v] = 1;
    out.push_back(std::move(ch));
  }
  for (Ext e = 0; e < 2 * n_; ++e) {
    if (seen[e]) continue;
    Chromosome ch;
    ch.circular = true;
    Ext v = e;
    do {
      seen[v] = 1;
      int g = gene_of(v);
      ch.genes.push_back(is_head(v) ? -g : g);
      Ext w = gene_partner(v);
      seen[w] = 1;
      v = mate_[w];
    } while (v != e);
    out.push_back(std::move(ch));
  }
  return out;
}

int Genome::circular_count() const {
  int circ = 0;
  for (const auto& ch : decompose())
    if (ch.circular) ++circ;
  return circ;
}

std::vector<int32_t> Genome::canonical_key() const {
  // Telomere labels, linear flips and circular rotations/reflections leave
  // the internal adjacency set and the telomere-adjacent extremity multiset
  // unchanged, and d = 0 forces both to coincide. That pair (plus the null
  // chromosome count) is therefore a complete invariant.
  std::vector<std::pair<Ext, Ext>> internal;
  std::vector<Ext> telomeric;
  int nulls = 0;
  for (Ext u = 0; u < extremity_count(); ++u) {
    Ext v = mate_[u];
    if (u > v) continue;
    const bool tu = is_telomere(u), tv = is_telomere(v);
    if (tu && tv)
      ++nulls;
    else if (tv)
      telomeric.push_back(u);
    else
      internal.emplace_back(u, v);
  }
  std::sort(internal.begin(), internal.end());
  std::sort(telomeric.begin(), telomeric.end());
  std::vector<int32_t> key;
  key.reserve(4 + telomeric.size() + 2 * internal.size());
  key.push_back(n_);
  key.push_back(k_);
  key.push_back(nulls);
  for (Ext e : telomeric) key.push_back(e);
  key.push_back(-1);
  for (const auto& [u, v] : internal) {
    key.push_back(u);
    key.push_back(v);
  }
  return key;
}

std::string Genome::canonical_key_string() const {
  const auto key = canonical_key();
  std::string s;
  s.reserve(key.size() * 4);
  for (int32_t v : key) {
    s.append(reinterpret_cast<const char*>(&v), sizeof(v));
  }
  return s;
}

std::vector<Ext> Genome::component_sequence(Ext u0) const {
  std::vector<Ext> fwd;
  Ext cur = u0;
  bool cycle = false;
  while (true) {
    Ext v = mate_[cur];
    fwd.push_back(cur);
    fwd.push_back(v);
    if (is_telomere(v)) break;
    Ext w = gene_partner(v);
    if (w == u0) {
      cycle = true;
      break;
    }
    cur = w;
  }
  if (!cycle && !is_telomere(u0)) {
    std::vector<Ext> bwd;
    Ext cur2 = gene_partner(u0);
    while (true) {
      Ext v = mate_[cur2];
      bwd.push_back(cur2);
      bwd.push_back(v);
      if (is_telomere(v)) break;
      cur2 = gene_partner(v);
    }
    std::reverse(bwd.begin(), bwd.end());
    bwd.insert(bwd.end(), fwd.begin(), fwd.end());
    return bwd;
  }
  return fwd;
}

void Genome::set_direction(const std::vector<Ext>& seq) {
  bool reverse = false;
  if (seq.size() == 2 && is_telomere(seq.front())) {
    reverse = seq[0] > seq[1];  // null chromosome: smaller telomere first
  } else {
    // The smallest gene's edge must be traversed tail -> head. Along the
    // forward listing, gene edges enter each gene at an odd position, so
    // the listing direction is wrong iff that gene's tail sits at an even
    // position.
    Ext min_tail = -1;
    size_t min_pos = 0;
    for (size_t i = 0; i < seq.size(); ++i) {
      Ext e = seq[i];
      if (is_telomere(e) || is_head(e)) continue;
      if (min_tail == -1 || e < min_tail) {
        min_tail = e;
        min_pos = i;
      }
    }
    reverse = (min_pos % 2 == 0);
  }
  for (size_t i = 0; i + 1 < seq.size(); i += 2) {
    out_[seq[i]] = reverse ? 0 : 1;
    out_[seq[i + 1]] = reverse ? 1 : 0;
  }
}

void Genome::recompute_direction_component(Ext u0) {
  set_direction(component_sequence(u0));
}

void Genome::recompute_direction_all() {
  out_.assign(extremity_count(), 0);
  std::vector<char> seen(extremity_count(), 0);
  auto handle = [&](Ext u0) {
    auto seq = component_sequence(u0);
    for (Ext e : seq) seen[e] = 1;
    set_direction(seq);
  };
  for (int j = 1; j <= 2 * k_; ++j)
    if (!seen[telomere(j)]) handle(telomere(j));
  for (Ext e = 0; e < 2 * n_; ++e)
    if (!seen[e]) handle(e);
}

Genome parse_genome(std::istream& in) {
  std::vector<Chromosome> chroms;
  int max_gene = 0;
  int k = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    Chromosome ch;
    if (tag == "L:")
      ++k;
    else if (tag == "C:")
      ch.circular = true;
    else
      throw std::invalid_argument("expected 'L:' or 'C:', got '" + tag + "'");
    int g;
    while (ls >> g) {
      if (g == 0) throw std::invalid_argument("gene id 0 is not allowed");
      max_gene = std::max(max_gene, std::abs(g));
      ch.genes.push_back(g);
    }
    if (ch.circular && ch.genes.empty())
      throw std::invalid_argument("empty circular chromosome");
    chroms.push_back(std::move(ch));
  }
  return Genome::from_chromosomes(chroms, max_gene, k);
}

Genome parse_genome(const std::string& text) {
  std::istringstream in(text);
  return parse_genome(in);
}

std::string format_genome(const Genome& g) {
  std::string out;
  for (const auto& ch : g.decompose()) {
    out += ch.circular ? "C:" : "L:";
    for (int gene : ch.genes) {
      out += ' ';
      out += std::to_string(gene);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dcj
