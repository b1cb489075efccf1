// Copyright 2026 The respgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "respgap/verify.hpp"

namespace respgap {

namespace {

// ---------------------------------------------------------------------------
// Tree shapes.

struct STree {
  std::vector<STree> kids;
  std::string enc;  // "(" + sorted child encodings + ")"
};

std::string encode_shape(STree& t) {
  std::sort(t.kids.begin(), t.kids.end(),
            [](const STree& a, const STree& b) { return a.enc < b.enc; });
  t.enc = "(";
  for (const STree& k : t.kids) t.enc += k.enc;
  t.enc += ")";
  return t.enc;
}

// Every canonical shape of depth <= depth with branching <= max_children.
// Children are kept sorted by encoding so each unordered shape appears once.
std::vector<STree> shapes_up_to(int depth, int max_children) {
  std::vector<STree> out;
  STree leaf;
  encode_shape(leaf);
  out.push_back(leaf);
  if (depth == 0) return out;
  std::vector<STree> sub = shapes_up_to(depth - 1, max_children);
  // Multisets of 1..max_children subtrees, as non-decreasing index tuples.
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (!pick.empty()) {
      STree node;
      for (int i : pick) node.kids.push_back(sub[i]);
      encode_shape(node);
      out.push_back(std::move(node));
    }
    if (static_cast<int>(pick.size()) == max_children) return;
    for (int i = from; i < static_cast<int>(sub.size()); ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Flattened shape in preorder.
struct Flat {
  std::vector<std::vector<int>> kids;
  std::vector<std::string> enc;
  std::vector<int> internal;  // decision nodes, preorder
  std::vector<int> leaf_ids;
  std::vector<int> pos_in_parent;
  std::vector<std::vector<int>> autos;  // node permutations, identity first
};

int flatten_into(const STree& t, Flat& f) {
  int id = static_cast<int>(f.kids.size());
  f.kids.emplace_back();
  f.enc.push_back(t.enc);
  f.pos_in_parent.push_back(0);
  for (size_t i = 0; i < t.kids.size(); ++i) {
    int c = flatten_into(t.kids[i], f);
    f.kids[id].push_back(c);
    f.pos_in_parent[c] = static_cast<int>(i);
  }
  return id;
}

// All isomorphisms of subtree u onto subtree w, as (node, image) pair lists.
// Requires enc[u] == enc[w].
std::vector<std::vector<std::pair<int, int>>> subtree_isos(const Flat& f,
                                                           int u, int w) {
  std::vector<std::vector<std::pair<int, int>>> out;
  const std::vector<int>& cu = f.kids[u];
  std::vector<int> cw = f.kids[w];
  // Enumerate enc-preserving bijections cu -> cw via permutations of cw.
  std::sort(cw.begin(), cw.end());
  do {
    bool shape_ok = true;
    for (size_t i = 0; i < cu.size() && shape_ok; ++i)
      shape_ok = f.enc[cu[i]] == f.enc[cw[i]];
    if (!shape_ok) continue;
    std::vector<std::vector<std::pair<int, int>>> partial = {
        {{u, w}}};
    for (size_t i = 0; i < cu.size(); ++i) {
      std::vector<std::vector<std::pair<int, int>>> ext;
      for (const auto& sub : subtree_isos(f, cu[i], cw[i]))
        for (const auto& p : partial) {
          std::vector<std::pair<int, int>> merged = p;
          merged.insert(merged.end(), sub.begin(), sub.end());
          ext.push_back(std::move(merged));
        }
      partial = std::move(ext);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  } while (std::next_permutation(cw.begin(), cw.end()));
  return out;
}

// The automorphism list is only needed for canonicalization; it can be
// exponential in the node count, so sampled draws skip it.
Flat flatten(const STree& t, bool with_autos = true) {
  Flat f;
  flatten_into(t, f);
  for (size_t v = 0; v < f.kids.size(); ++v) {
    if (f.kids[v].empty())
      f.leaf_ids.push_back(static_cast<int>(v));
    else
      f.internal.push_back(static_cast<int>(v));
  }
  if (!with_autos) return f;
  for (const auto& pairs : subtree_isos(f, 0, 0)) {
    std::vector<int> perm(f.kids.size());
    for (auto [a, b] : pairs) perm[a] = b;
    f.autos.push_back(std::move(perm));
  }
  // Identity first so the plain encoding is compared first.
  std::sort(f.autos.begin(), f.autos.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              bool ia = std::is_sorted(a.begin(), a.end());
              bool ib = std::is_sorted(b.begin(), b.end());
              if (ia != ib) return ia;
              return a < b;
            });
  return f;
}

// ---------------------------------------------------------------------------
// Node decorations: decider subset, action counts, surjective choice table.

struct NodeDeco {
  int mask = 0;
  std::vector<int> counts;        // per agent, 0 = not a decider
  std::vector<int> deciders;      // agent indices, ascending
  std::vector<int> table;         // flat profile -> child position
  std::vector<std::vector<int>> digits;  // per profile, action per decider
  // Joint action permutations: perms[i][j] is the permutation applied to
  // decider j's actions. Identity first.
  std::vector<std::vector<std::vector<int>>> perms;
};

void build_profiles(NodeDeco& d) {
  int total = 1;
  for (int a : d.deciders) total *= d.counts[a];
  d.digits.assign(total, std::vector<int>(d.deciders.size(), 0));
  for (int p = 0; p < total; ++p) {
    int rest = p;
    for (int j = static_cast<int>(d.deciders.size()) - 1; j >= 0; --j) {
      int k = d.counts[d.deciders[j]];
      d.digits[p][j] = rest % k;
      rest /= k;
    }
  }
  // Cartesian product of per-decider permutations.
  std::vector<std::vector<std::vector<int>>> per_decider;
  for (int a : d.deciders) {
    std::vector<int> idp(d.counts[a]);
    std::iota(idp.begin(), idp.end(), 0);
    std::vector<std::vector<int>> ps;
    do {
      ps.push_back(idp);
    } while (std::next_permutation(idp.begin(), idp.end()));
    per_decider.push_back(std::move(ps));
  }
  d.perms = {{}};
  for (const auto& ps : per_decider) {
    std::vector<std::vector<std::vector<int>>> ext;
    for (const auto& tuple : d.perms)
      for (const auto& p : ps) {
        auto t = tuple;
        t.push_back(p);
        ext.push_back(std::move(t));
      }
    d.perms = std::move(ext);
  }
}

// Profile index after permuting each decider's actions.
int permute_profile(const NodeDeco& d, int profile,
                    const std::vector<std::vector<int>>& perm) {
  int out = 0;
  for (size_t j = 0; j < d.deciders.size(); ++j) {
    int k = d.counts[d.deciders[j]];
    out = out * k + perm[j][d.digits[profile][j]];
  }
  return out;
}

std::vector<NodeDeco> decorations(int nchildren, int agents, int max_actions) {
  std::vector<NodeDeco> out;
  for (int mask = 1; mask < (1 << agents); ++mask) {
    NodeDeco base;
    base.mask = mask;
    base.counts.assign(agents, 0);
    for (int a = 0; a < agents; ++a)
      if (mask & (1 << a)) base.deciders.push_back(a);
    // Odometer over action counts 1..max_actions per decider.
    std::vector<int> counts(base.deciders.size(), 1);
    while (true) {
      long long profiles = 1;
      for (int k : counts) profiles *= k;
      if (profiles >= nchildren) {
        if (profiles > 16)
          throw Error("BudgetExceeded",
                      "choice-table space too large for exhaustive walk");
        NodeDeco d = base;
        for (size_t j = 0; j < counts.size(); ++j)
          d.counts[d.deciders[j]] = counts[j];
        build_profiles(d);
        // Every surjective table.
        std::vector<int> table(profiles, 0);
        while (true) {
          std::vector<bool> hit(nchildren, false);
          for (int t : table) hit[t] = true;
          if (std::find(hit.begin(), hit.end(), false) == hit.end()) {
            d.table = table;
            out.push_back(d);
          }
          size_t i = 0;
          for (; i < table.size(); ++i) {
            if (++table[i] < nchildren) break;
            table[i] = 0;
          }
          if (i == table.size()) break;
        }
      }
      size_t j = 0;
      for (; j < counts.size(); ++j) {
        if (++counts[j] <= max_actions) break;
        counts[j] = 1;
      }
      if (j == counts.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Candidates and canonical filtering.

struct Candidate {
  const Flat* shape = nullptr;
  std::vector<const NodeDeco*> deco;  // per node, null at leaves
  std::vector<int> label;             // per node, leaves only (1 = Yes)
};

// Encoding block of the node that lands at output position j under phi,
// minimized over joint action permutations. inv maps output position to
// source node.
void min_block(const Candidate& c, const std::vector<int>& phi,
               const std::vector<int>& inv, int j, std::vector<int>& block,
               std::vector<int>* perm_choices) {
  const Flat& f = *c.shape;
  int i = inv[j];
  block.clear();
  if (perm_choices) perm_choices->clear();
  if (f.kids[i].empty()) {
    block.push_back(0);
    block.push_back(c.label[i]);
    if (perm_choices) perm_choices->push_back(0);
    return;
  }
  const NodeDeco& d = *c.deco[i];
  block.push_back(1);
  block.push_back(d.mask);
  for (int a : d.deciders) block.push_back(d.counts[a]);
  // Raw table with child positions renumbered through phi.
  std::vector<int> mapped(d.table.size());
  for (size_t p = 0; p < d.table.size(); ++p) {
    int child = f.kids[i][d.table[p]];
    mapped[p] = f.pos_in_parent[phi[child]];
  }
  std::vector<int> best, cur(mapped.size());
  for (size_t pi = 0; pi < d.perms.size(); ++pi) {
    for (size_t p = 0; p < mapped.size(); ++p)
      cur[permute_profile(d, static_cast<int>(p), d.perms[pi])] = mapped[p];
    if (best.empty() || cur < best) {
      best = cur;
      if (perm_choices) {
        perm_choices->clear();
        perm_choices->push_back(static_cast<int>(pi));
      }
    } else if (perm_choices && cur == best) {
      perm_choices->push_back(static_cast<int>(pi));
    }
  }
  block.insert(block.end(), best.begin(), best.end());
}

std::vector<std::vector<int>> plain_encoding(const Candidate& c) {
  const Flat& f = *c.shape;
  std::vector<std::vector<int>> blocks(f.kids.size());
  for (size_t i = 0; i < f.kids.size(); ++i) {
    std::vector<int>& b = blocks[i];
    if (f.kids[i].empty()) {
      b = {0, c.label[i]};
      continue;
    }
    const NodeDeco& d = *c.deco[i];
    b = {1, d.mask};
    for (int a : d.deciders) b.push_back(d.counts[a]);
    for (int t : d.table) b.push_back(t);
  }
  return blocks;
}

struct BaseAut {
  const std::vector<int>* phi = nullptr;
  // Per node: indices into the node deco's joint permutation list that
  // reproduce the canonical encoding (single {0} entry at leaves).
  std::vector<std::vector<int>> perm_options;
};

// True iff the candidate's own encoding is minimal over shape automorphisms
// and action permutations. When auts is given, collects the stabilizer.
bool canonical(const Candidate& c, std::vector<BaseAut>* auts) {
  const Flat& f = *c.shape;
  std::vector<std::vector<int>> own = plain_encoding(c);
  std::vector<int> inv(f.kids.size()), block, choices;
  for (const std::vector<int>& phi : f.autos) {
    for (size_t i = 0; i < phi.size(); ++i) inv[phi[i]] = static_cast<int>(i);
    int cmp = 0;
    BaseAut aut;
    aut.phi = &phi;
    for (size_t j = 0; j < f.kids.size() && cmp == 0; ++j) {
      min_block(c, phi, inv, static_cast<int>(j), block,
                auts ? &choices : nullptr);
      if (block < own[j]) cmp = -1;
      if (block > own[j]) cmp = 1;
      if (auts && cmp == 0) aut.perm_options.push_back(choices);
    }
    if (cmp < 0) return false;
    if (cmp == 0 && auts) auts->push_back(std::move(aut));
  }
  return true;
}

// ---------------------------------------------------------------------------
// Partitions.

// All partitions of positions 0..n-1 whose cells are signature-uniform,
// as restricted growth strings.
std::vector<std::vector<int>> partitions_of(const std::vector<int>& sig) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(sig.size(), 0), cell_sig;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == sig.size()) {
      out.push_back(rgs);
      return;
    }
    for (int c = 0; c <= static_cast<int>(cell_sig.size()); ++c) {
      if (c < static_cast<int>(cell_sig.size()) && cell_sig[c] != sig[i])
        continue;
      rgs[i] = c;
      bool fresh = c == static_cast<int>(cell_sig.size());
      if (fresh) cell_sig.push_back(sig[i]);
      self(self, i + 1);
      if (fresh) cell_sig.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Partition mapped through a node permutation, renormalized to RGS form
// over decision nodes in preorder.
std::vector<int> map_partition(const Flat& f, const std::vector<int>& rgs,
                               const std::vector<int>& phi) {
  // Position of each decision node in f.internal.
  std::vector<int> slot(f.kids.size(), -1);
  for (size_t i = 0; i < f.internal.size(); ++i)
    slot[f.internal[i]] = static_cast<int>(i);
  std::vector<int> moved(rgs.size());
  for (size_t i = 0; i < f.internal.size(); ++i)
    moved[slot[phi[f.internal[i]]]] = rgs[i];
  std::vector<int> relabel(rgs.size(), -1), out(rgs.size());
  int next = 0;
  for (size_t i = 0; i < moved.size(); ++i) {
    if (relabel[moved[i]] < 0) relabel[moved[i]] = next++;
    out[i] = relabel[moved[i]];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Document assembly.

Mechanism finish(const Candidate& c,
                 const std::vector<std::vector<int>>& partition_rgs,
                 int agents, long long index) {
  const Flat& f = *c.shape;
  Document doc;
  doc.name = "m" + std::to_string(index);
  for (int a = 0; a < agents; ++a) doc.agents.push_back(std::string(1, 'A' + a));
  doc.root = "n0";
  auto node_name = [](int v) { return "n" + std::to_string(v); };
  for (size_t v = 0; v < f.kids.size(); ++v) {
    if (f.kids[v].empty()) {
      doc.leaves.push_back(
          {node_name(static_cast<int>(v)),
           c.label[v] ? Outcome::Yes : Outcome::No});
      continue;
    }
    const NodeDeco& d = *c.deco[v];
    Document::Decision dec;
    dec.id = node_name(static_cast<int>(v));
    for (int a : d.deciders) {
      dec.deciders.push_back(doc.agents[a]);
      std::vector<std::string> names;
      for (int k = 0; k < d.counts[a]; ++k)
        names.push_back("a" + std::to_string(k));
      dec.actions.emplace_back(doc.agents[a], std::move(names));
    }
    for (size_t p = 0; p < d.table.size(); ++p) {
      std::vector<std::string> tuple;
      for (size_t j = 0; j < d.deciders.size(); ++j)
        tuple.push_back("a" + std::to_string(d.digits[p][j]));
      dec.choice.emplace_back(std::move(tuple), node_name(f.kids[v][d.table[p]]));
    }
    doc.decisions.push_back(std::move(dec));
  }
  for (int a = 0; a < agents; ++a) {
    if (partition_rgs.empty()) break;
    const std::vector<int>& rgs = partition_rgs[a];
    int cells = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    for (int cell = 0; cell < cells; ++cell) {
      Document::Indist in;
      in.agent = doc.agents[a];
      for (size_t i = 0; i < rgs.size(); ++i)
        if (rgs[i] == cell) in.nodes.push_back(node_name(f.internal[i]));
      if (in.nodes.size() > 1) doc.indist.push_back(std::move(in));
    }
  }
  ValidationResult vr = validate(doc);
  if (!vr.ok())
    throw Error("Internal", "generated mechanism failed validation: " +
                                vr.errors.front().message);
  return *std::move(vr.mechanism);
}

// ---------------------------------------------------------------------------
// Exhaustive walk.

struct Walk {
  const EnumerationConfig& cfg;
  const std::function<bool(const Mechanism&)>& yield;
  long long visits = 0;
  long long emitted = 0;
  bool stopped = false;

  void count_visit() {
    if (++visits > cfg.budget)
      throw Error("BudgetExceeded",
                  "candidate walk passed the budget of " +
                      std::to_string(cfg.budget) + " at count " +
                      std::to_string(visits));
  }

  bool emit(const Candidate& c,
            const std::vector<std::vector<int>>& partition_rgs) {
    Mechanism m = finish(c, partition_rgs, cfg.agent_count, emitted);
    ++emitted;
    if (!yield(m)) stopped = true;
    return !stopped;
  }
};

void walk_partitions(Walk& w, const Candidate& c) {
  const Flat& f = *c.shape;
  std::vector<BaseAut> auts;
  canonical(c, &auts);  // candidate already known canonical
  // Flatten the stabilizer; options multiply out, usually to 1.
  struct FlatAut {
    const std::vector<int>* phi;
    std::vector<int> perm;  // chosen joint-perm index per node
  };
  std::vector<FlatAut> group;
  for (const BaseAut& aut : auts) {
    std::vector<FlatAut> partial = {{aut.phi, {}}};
    for (const std::vector<int>& opts : aut.perm_options) {
      std::vector<FlatAut> ext;
      for (const FlatAut& g : partial)
        for (int o : opts) {
          FlatAut e = g;
          e.perm.push_back(o);
          ext.push_back(std::move(e));
        }
      partial = std::move(ext);
      if (partial.size() > 100000)
        throw Error("BudgetExceeded", "automorphism group too large");
    }
    group.insert(group.end(), partial.begin(), partial.end());
  }

  // Admissible partitions per agent.
  std::vector<std::vector<std::vector<int>>> per_agent;
  for (int a = 0; a < w.cfg.agent_count; ++a) {
    std::vector<int> sig;
    for (int v : f.internal) sig.push_back(c.deco[v]->counts[a]);
    per_agent.push_back(partitions_of(sig));
  }

  std::vector<int> pick(w.cfg.agent_count, 0);
  while (true) {
    w.count_visit();
    std::vector<std::vector<int>> tuple;
    for (int a = 0; a < w.cfg.agent_count; ++a)
      tuple.push_back(per_agent[a][pick[a]]);
    // Orbit-minimal under the stabilizer, restricted to elements whose
    // action permutations are uniform on every cell.
    bool minimal = true;
    for (const FlatAut& g : group) {
      bool uniform = true;
      for (int a = 0; a < w.cfg.agent_count && uniform; ++a) {
        const std::vector<int>& rgs = tuple[a];
        int cells =
            rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        for (int cell = 0; cell < cells && uniform; ++cell) {
          const std::vector<int>* first = nullptr;
          for (size_t i = 0; i < rgs.size(); ++i) {
            if (rgs[i] != cell) continue;
            int v = f.internal[i];
            const NodeDeco& d = *c.deco[v];
            // Permutation applied to agent a's actions at v; identity when
            // a is not a decider there. The stabilizer stores one joint-perm
            // choice per output position, hence the phi lookup.
            static const std::vector<int> kIdle = {0};
            const std::vector<int>* p = &kIdle;
            for (size_t j = 0; j < d.deciders.size(); ++j)
              if (d.deciders[j] == a) p = &d.perms[g.perm[(*g.phi)[v]]][j];
            if (!first)
              first = p;
            else if (*first != *p)
              uniform = false;
          }
        }
      }
      if (!uniform) continue;
      std::vector<std::vector<int>> mapped;
      for (int a = 0; a < w.cfg.agent_count; ++a)
        mapped.push_back(map_partition(f, tuple[a], *g.phi));
      if (mapped < tuple) {
        minimal = false;
        break;
      }
    }
    if (minimal && !w.emit(c, tuple)) return;

    int a = 0;
    for (; a < w.cfg.agent_count; ++a) {
      if (++pick[a] < static_cast<int>(per_agent[a].size())) break;
      pick[a] = 0;
    }
    if (a == w.cfg.agent_count) break;
  }
}

void walk_shape(Walk& w, const Flat& f,
                const std::vector<std::vector<NodeDeco>>& decos_by_arity) {
  Candidate c;
  c.shape = &f;
  c.deco.assign(f.kids.size(), nullptr);
  c.label.assign(f.kids.size(), 0);
  std::vector<int> deco_ix(f.internal.size(), 0);
  while (true) {
    w.count_visit();
    bool feasible = true;
    for (size_t i = 0; i < f.internal.size(); ++i) {
      int v = f.internal[i];
      const auto& options = decos_by_arity[f.kids[v].size()];
      if (deco_ix[i] >= static_cast<int>(options.size())) {
        feasible = false;
        break;
      }
      c.deco[v] = &options[deco_ix[i]];
    }
    if (feasible && canonical(c, nullptr)) {
      if (w.cfg.partition_mode == PartitionMode::PerfectOnly) {
        if (!w.emit(c, {})) return;
      } else {
        walk_partitions(w, c);
        if (w.stopped) return;
      }
    }

    // Odometer: decorations first, then leaf labels.
    size_t i = 0;
    for (; i < f.internal.size(); ++i) {
      int arity = static_cast<int>(f.kids[f.internal[i]].size());
      if (++deco_ix[i] < static_cast<int>(decos_by_arity[arity].size())) break;
      deco_ix[i] = 0;
    }
    if (i < f.internal.size()) continue;
    size_t l = 0;
    for (; l < f.leaf_ids.size(); ++l) {
      if (++c.label[f.leaf_ids[l]] < 2) break;
      c.label[f.leaf_ids[l]] = 0;
    }
    if (l == f.leaf_ids.size()) break;
  }
}

// ---------------------------------------------------------------------------
// Sampled walk.

struct Sampler {
  const EnumerationConfig& cfg;
  std::mt19937_64 rng;

  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                             hi - lo + 1));
  }

  // Random tree; children counts uniform over 0..max_children.
  void grow(STree& t, int depth_left) {
    if (depth_left == 0) return;
    int n = uniform(0, cfg.max_children);
    for (int i = 0; i < n; ++i) {
      t.kids.emplace_back();
      grow(t.kids.back(), depth_left - 1);
    }
  }

  Candidate draw(Flat& f, std::vector<std::vector<NodeDeco>>& storage) {
    while (true) {
      STree t;
      grow(t, cfg.max_depth);
      encode_shape(t);
      Flat cand = flatten(t, /*with_autos=*/false);
      if (cand.internal.empty() ||
          static_cast<int>(cand.internal.size()) > cfg.max_decision_nodes)
        continue;
      f = std::move(cand);
      break;
    }
    Candidate c;
    c.shape = &f;
    c.deco.assign(f.kids.size(), nullptr);
    c.label.assign(f.kids.size(), 0);
    storage.assign(1, {});
    for (int v : f.internal) {
      int arity = static_cast<int>(f.kids[v].size());
      NodeDeco d;
      while (true) {
        d = NodeDeco();
        d.mask = uniform(1, (1 << cfg.agent_count) - 1);
        d.counts.assign(cfg.agent_count, 0);
        for (int a = 0; a < cfg.agent_count; ++a)
          if (d.mask & (1 << a)) {
            d.deciders.push_back(a);
            d.counts[a] = uniform(1, cfg.max_actions);
          }
        long long profiles = 1;
        for (int a : d.deciders) profiles *= d.counts[a];
        if (profiles < arity) continue;
        build_profiles(d);
        // Surjective table: pin one profile per child, fill the rest.
        d.table.assign(d.digits.size(), 0);
        std::vector<int> pin(d.digits.size());
        std::iota(pin.begin(), pin.end(), 0);
        for (int i = 0; i < arity; ++i) {
          int j = uniform(i, static_cast<int>(pin.size()) - 1);
          std::swap(pin[i], pin[j]);
          d.table[pin[i]] = i;
        }
        for (size_t p = 0; p < d.table.size(); ++p)
          if (std::find(pin.begin(), pin.begin() + arity,
                        static_cast<int>(p)) == pin.begin() + arity)
            d.table[p] = uniform(0, arity - 1);
        break;
      }
      storage[0].push_back(std::move(d));
      c.deco[v] = &storage[0].back();
    }
    // Deco pointers must survive vector growth; re-point after the loop.
    {
      size_t slot = 0;
      for (int v : f.internal) c.deco[v] = &storage[0][slot++];
    }
    for (int v : f.leaf_ids) c.label[v] = uniform(0, 1);
    return c;
  }

  std::vector<std::vector<int>> draw_partitions(const Flat& f,
                                                const Candidate& c) {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < cfg.agent_count; ++a) {
      std::vector<int> sig, rgs(f.internal.size(), 0), cell_sig;
      for (int v : f.internal) sig.push_back(c.deco[v]->counts[a]);
      for (size_t i = 0; i < sig.size(); ++i) {
        std::vector<int> compatible;
        for (size_t cidx = 0; cidx < cell_sig.size(); ++cidx)
          if (cell_sig[cidx] == sig[i])
            compatible.push_back(static_cast<int>(cidx));
        // Bias towards merging so most samples carry imperfect information.
        if (!compatible.empty() && uniform(0, 2) < 2) {
          rgs[i] = compatible[uniform(0, static_cast<int>(compatible.size()) -
                                             1)];
        } else {
          rgs[i] = static_cast<int>(cell_sig.size());
          cell_sig.push_back(sig[i]);
        }
      }
      out.push_back(std::move(rgs));
    }
    return out;
  }
};

void check_config(const EnumerationConfig& cfg) {
  if (cfg.agent_count < 1 || cfg.agent_count > 6)
    throw Error("BadConfig", "agent count must be in 1..6");
  if (cfg.max_children < 1 || cfg.max_actions < 1 || cfg.max_depth < 0 ||
      cfg.max_decision_nodes < 0 || cfg.budget < 1)
    throw Error("BadConfig", "bounds must be positive");
  if (cfg.mode == EnumerationMode::Exhaustive &&
      cfg.partition_mode == PartitionMode::SampledPartitions)
    throw Error("BadConfig",
                "sampled partitions require sampled enumeration");
  if (cfg.mode == EnumerationMode::Sampled &&
      cfg.partition_mode == PartitionMode::ExhaustivePartitions)
    throw Error("BadConfig",
                "exhaustive partitions require exhaustive enumeration");
  if (cfg.mode == EnumerationMode::Sampled && cfg.sample_count < 0)
    throw Error("BadConfig", "sample count must be non-negative");
}

}  // namespace

long long enumerate(const EnumerationConfig& config,
                    const std::function<bool(const Mechanism&)>& yield) {
  check_config(config);
  if (config.mode == EnumerationMode::Sampled) {
    Sampler s{config, std::mt19937_64(config.seed)};
    long long emitted = 0;
    for (long long i = 0; i < config.sample_count; ++i) {
      Flat f;
      std::vector<std::vector<NodeDeco>> storage;
      Candidate c = s.draw(f, storage);
      std::vector<std::vector<int>> parts;
      if (config.partition_mode == PartitionMode::SampledPartitions)
        parts = s.draw_partitions(f, c);
      Mechanism m = finish(c, parts, config.agent_count, emitted);
      ++emitted;
      if (!yield(m)) break;
    }
    return emitted;
  }

  Walk w{config, yield};
  std::vector<std::vector<NodeDeco>> decos_by_arity(config.max_children + 1);
  for (int arity = 1; arity <= config.max_children; ++arity)
    decos_by_arity[arity] =
        decorations(arity, config.agent_count, config.max_actions);
  for (const STree& t : shapes_up_to(config.max_depth, config.max_children)) {
    Flat f = flatten(t);
    if (static_cast<int>(f.internal.size()) > config.max_decision_nodes)
      continue;
    walk_shape(w, f, decos_by_arity);
    if (w.stopped) break;
  }
  return w.emitted;
}

}  // namespace respgap
