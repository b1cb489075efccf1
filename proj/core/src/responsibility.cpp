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

#include "respgap/responsibility.hpp"

namespace respgap {

const char* to_string(RespSemantics s) {
  return s == RespSemantics::Counterfactual ? "counterfactual" : "epistemic";
}

const Verdict& Report::at(int leaf, int agent) const {
  for (const Verdict& v : verdicts)
    if (v.leaf == leaf && v.agent == agent) return v;
  throw Error("UnknownNode", "no verdict for leaf " + std::to_string(leaf));
}

namespace {

Semantics ability(RespSemantics s) {
  return s == RespSemantics::Counterfactual ? Semantics::Win : Semantics::EWin;
}

Verdict verdict_on_path(const Mechanism& m, int agent, int leaf,
                        const StrategySet& avoid) {
  Verdict out;
  out.leaf = leaf;
  out.agent = agent;
  for (int u : m.decision_path(leaf)) {
    if (m.is_leaf(u)) continue;
    if (avoid.contains(u)) {
      out.responsible = true;
      out.witness = u;
      break;
    }
  }
  return out;
}

}  // namespace

Verdict responsible(const Mechanism& m, int agent, int leaf,
                    RespSemantics semantics) {
  if (!m.is_leaf(leaf))
    throw Error("NotLeaf", m.node_name(leaf));
  StrategySet avoid =
      solve(m, agent, complement(m.label(leaf)), ability(semantics));
  return verdict_on_path(m, agent, leaf, avoid);
}

Report analyze(const Mechanism& m, RespSemantics semantics) {
  Report report;
  report.semantics = semantics;
  std::vector<StrategySet> avoid_yes, avoid_no;
  for (int a = 0; a < m.agent_count(); ++a) {
    avoid_yes.push_back(solve(m, a, Outcome::Yes, ability(semantics)));
    avoid_no.push_back(solve(m, a, Outcome::No, ability(semantics)));
  }
  for (int leaf : m.leaves()) {
    bool anyone = false;
    for (int a = 0; a < m.agent_count(); ++a) {
      const StrategySet& avoid =
          m.label(leaf) == Outcome::Yes ? avoid_no[a] : avoid_yes[a];
      Verdict v = verdict_on_path(m, a, leaf, avoid);
      anyone = anyone || v.responsible;
      report.verdicts.push_back(v);
    }
    if (!anyone) report.gap.push_back(leaf);
  }
  return report;
}

}  // namespace respgap
