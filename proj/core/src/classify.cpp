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

#include "respgap/classify.hpp"

namespace respgap {

const char* to_string(DictatorKind k) {
  switch (k) {
    case DictatorKind::Plain:
      return "dictator";
    case DictatorKind::Epistemic:
      return "epistemic-dictator";
    case DictatorKind::SemiEpistemic:
      return "semi-epistemic-dictator";
  }
  return "?";
}

namespace {

bool dictator_from_sets(const StrategySet& win_yes, const StrategySet& win_no,
                        const StrategySet& ewin_yes,
                        const StrategySet& ewin_no, int v, DictatorKind kind) {
  switch (kind) {
    case DictatorKind::Plain:
      return win_yes.contains(v) && win_no.contains(v);
    case DictatorKind::Epistemic:
      return ewin_yes.contains(v) && ewin_no.contains(v);
    case DictatorKind::SemiEpistemic:
      return (ewin_yes.contains(v) && win_no.contains(v)) ||
             (ewin_no.contains(v) && win_yes.contains(v));
  }
  return false;
}

}  // namespace

bool dictator_at(const Mechanism& m, int agent, int v, DictatorKind kind) {
  if (m.is_leaf(v)) throw Error("NotDecisionNode", m.node_name(v));
  return dictator_from_sets(solve(m, agent, Outcome::Yes, Semantics::Win),
                            solve(m, agent, Outcome::No, Semantics::Win),
                            solve(m, agent, Outcome::Yes, Semantics::EWin),
                            solve(m, agent, Outcome::No, Semantics::EWin), v,
                            kind);
}

const std::vector<int>& Classification::at(int v, DictatorKind kind) const {
  return dictators[static_cast<int>(kind)][v];
}

Classification classify(const Mechanism& m) {
  std::vector<StrategySet> win_yes, win_no, ewin_yes, ewin_no;
  for (int a = 0; a < m.agent_count(); ++a) {
    win_yes.push_back(solve(m, a, Outcome::Yes, Semantics::Win));
    win_no.push_back(solve(m, a, Outcome::No, Semantics::Win));
    ewin_yes.push_back(solve(m, a, Outcome::Yes, Semantics::EWin));
    ewin_no.push_back(solve(m, a, Outcome::No, Semantics::EWin));
  }

  Classification out;
  out.dictators.assign(3, std::vector<std::vector<int>>(m.node_count()));
  for (int k = 0; k < 3; ++k) {
    for (int v : m.decision_nodes())
      for (int a = 0; a < m.agent_count(); ++a)
        if (dictator_from_sets(win_yes[a], win_no[a], ewin_yes[a], ewin_no[a],
                               v, static_cast<DictatorKind>(k)))
          out.dictators[k][v].push_back(a);

    out.elected[k] = true;
    out.paths.emplace_back();
    for (int leaf : m.leaves()) {
      Classification::PathWitness w;
      w.leaf = leaf;
      for (int u : m.decision_path(leaf)) {
        if (m.is_leaf(u) || out.dictators[k][u].empty()) continue;
        w.node = u;
        w.agent = out.dictators[k][u].front();
        break;
      }
      if (w.node < 0) out.elected[k] = false;
      out.paths.back().push_back(w);
    }
  }
  return out;
}

}  // namespace respgap
