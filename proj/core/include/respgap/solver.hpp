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

#pragma once

#include "respgap/mechanism.hpp"

namespace respgap {

/// Three notions of an agent being able to steer the mechanism towards an
/// outcome. Win ignores information, UWin demands one action per
/// indistinguishability class, EWin additionally closes over nodes whose
/// every continuation already qualifies.
enum class Semantics : std::uint8_t { Win, UWin, EWin };

const char* to_string(Semantics s);

/// Least fixed point of the chosen ability relation, with a deterministic
/// per-node witness. witness[i] is the lowest qualifying action index of the
/// agent at nodes[i], or -1 where membership holds for another reason (a
/// correctly labelled leaf, or closure over all children under EWin).
struct StrategySet {
  int agent = 0;
  Outcome outcome = Outcome::Yes;
  Semantics semantics = Semantics::Win;
  std::vector<int> nodes;    // sorted ascending
  std::vector<int> witness;  // parallel to nodes

  bool contains(int v) const;
};

StrategySet solve(const Mechanism& m, int agent, Outcome outcome,
                  Semantics semantics);
StrategySet solve(const Mechanism& m, std::string_view agent, Outcome outcome,
                  Semantics semantics);

/// Independent check of solve(Win): a node qualifies iff some assignment of
/// one action per decision node forces the outcome from it. Exponential in
/// the number of decision nodes; throws BudgetExceeded beyond 40 nodes or
/// 2^20 assignments.
std::vector<int> oracle_win(const Mechanism& m, int agent, Outcome outcome);

/// Independent check of solve(UWin): a node qualifies iff some assignment of
/// one action per indistinguishability class forces the outcome from it,
/// where forcing at a node quantifies over the node's whole class. Same
/// budget as oracle_win.
std::vector<int> oracle_uwin(const Mechanism& m, int agent, Outcome outcome);

}  // namespace respgap
