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

#include "respgap/solver.hpp"

namespace respgap {

/// Counterfactual responsibility asks whether the agent could have forced
/// the opposite outcome somewhere on the realised path; the epistemic
/// variant asks whether the agent could have knowingly done so.
enum class RespSemantics : std::uint8_t { Counterfactual, Epistemic };

const char* to_string(RespSemantics s);

struct Verdict {
  int leaf = 0;
  int agent = 0;
  bool responsible = false;
  int witness = -1;  // shallowest qualifying path node, -1 if none
};

struct Report {
  RespSemantics semantics = RespSemantics::Counterfactual;
  std::vector<Verdict> verdicts;  // leaves in preorder, agents nested inside
  std::vector<int> gap;           // leaves where nobody is responsible

  bool gap_free() const { return gap.empty(); }
  const Verdict& at(int leaf, int agent) const;  // throws UnknownNode
};

/// Whether the agent is responsible for the outcome reached at `leaf`.
Verdict responsible(const Mechanism& m, int agent, int leaf,
                    RespSemantics semantics);

/// Full verdict table plus the responsibility gap.
Report analyze(const Mechanism& m, RespSemantics semantics);

}  // namespace respgap
