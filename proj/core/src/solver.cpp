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

#include "respgap/solver.hpp"

#include <algorithm>

namespace respgap {

const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::Win:
      return "win";
    case Semantics::UWin:
      return "uwin";
    case Semantics::EWin:
      return "ewin";
  }
  return "?";
}

bool StrategySet::contains(int v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

namespace {

bool all_in(const std::vector<int>& set, const std::vector<bool>& in) {
  for (int v : set)
    if (!in[v]) return false;
  return true;
}

// Lowest action whose continuation set lies inside `in`, or -1.
int best_action(const Mechanism& m, int agent, Semantics semantics, int v,
                const std::vector<bool>& in) {
  const std::vector<int>& cls = m.equivalence_class(agent, v);
  for (int d = 0; d < m.action_count(v, agent); ++d) {
    bool ok = semantics == Semantics::Win
                  ? all_in(m.next(agent, d, v), in)
                  : all_in(m.next_of_class(agent, d, cls), in);
    if (ok) return d;
  }
  return -1;
}

}  // namespace

StrategySet solve(const Mechanism& m, int agent, Outcome outcome,
                  Semantics semantics) {
  if (agent < 0 || agent >= m.agent_count())
    throw Error("UnknownAgent", "index " + std::to_string(agent));
  std::vector<bool> in(m.node_count(), false);
  for (int v : m.leaves())
    if (m.label(v) == outcome) in[v] = true;

  // Kleene iteration; mechanisms are tree-shaped so this converges in at
  // most depth+1 sweeps.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : m.decision_nodes()) {
      if (in[v]) continue;
      bool add = best_action(m, agent, semantics, v, in) >= 0;
      if (!add && semantics == Semantics::EWin) add = all_in(m.children(v), in);
      if (add) {
        in[v] = true;
        changed = true;
      }
    }
  }

  StrategySet out;
  out.agent = agent;
  out.outcome = outcome;
  out.semantics = semantics;
  for (int v = 0; v < m.node_count(); ++v) {
    if (!in[v]) continue;
    out.nodes.push_back(v);
    out.witness.push_back(m.is_leaf(v) ? -1
                                       : best_action(m, agent, semantics, v, in));
  }
  return out;
}

StrategySet solve(const Mechanism& m, std::string_view agent, Outcome outcome,
                  Semantics semantics) {
  return solve(m, m.require_agent(agent), outcome, semantics);
}

namespace {

constexpr long long kMaxAssignments = 1 << 20;

// Enumerates assignments of one action index per slot, where slot i ranges
// over arity[i] values, and unions the forced sets.
std::vector<int> sweep(const Mechanism& m, int agent, Outcome outcome,
                       const std::vector<int>& arity, bool epistemic) {
  if (m.node_count() > 40)
    throw Error("BudgetExceeded",
                "oracle limited to 40 nodes, got " +
                    std::to_string(m.node_count()));
  long long total = 1;
  for (int n : arity) {
    total *= n;
    if (total > kMaxAssignments)
      throw Error("BudgetExceeded", "too many action assignments");
  }

  std::vector<bool> member(m.node_count(), false);
  std::vector<int> pick(arity.size(), 0);
  for (long long it = 0; it < total; ++it) {
    // Least forced set of this assignment. Classmates may sit anywhere in
    // the tree, so iterate rather than make one bottom-up pass.
    std::vector<bool> forced(m.node_count(), false);
    for (int v : m.leaves()) forced[v] = m.label(v) == outcome;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int v : m.decision_nodes()) {
        if (forced[v]) continue;
        int slot = epistemic ? m.class_id(agent, v) : v;
        int d = pick[slot];
        const std::vector<int> targets =
            epistemic
                ? m.next_of_class(agent, d, m.equivalence_class(agent, v))
                : m.next(agent, d, v);
        if (all_in(targets, forced)) {
          forced[v] = true;
          grew = true;
        }
      }
    }
    for (int v = 0; v < m.node_count(); ++v)
      if (forced[v]) member[v] = true;

    for (size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < arity[i]) break;
      pick[i] = 0;
    }
  }

  std::vector<int> out;
  for (int v = 0; v < m.node_count(); ++v)
    if (member[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<int> oracle_win(const Mechanism& m, int agent, Outcome outcome) {
  // One slot per node; leaves and non-decision slots get arity 1.
  std::vector<int> arity(m.node_count(), 1);
  for (int v : m.decision_nodes()) arity[v] = m.action_count(v, agent);
  return sweep(m, agent, outcome, arity, false);
}

std::vector<int> oracle_uwin(const Mechanism& m, int agent, Outcome outcome) {
  const auto& classes = m.classes(agent);
  std::vector<int> arity(classes.size(), 1);
  for (size_t c = 0; c < classes.size(); ++c)
    arity[c] = m.action_count(classes[c].front(), agent);
  return sweep(m, agent, outcome, arity, true);
}

}  // namespace respgap
