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

/// Plain: the agent can force either outcome from the node. Epistemic: the
/// agent can knowingly force either outcome. SemiEpistemic: the agent can
/// knowingly force one outcome and (perhaps unknowingly) force the other.
enum class DictatorKind : std::uint8_t { Plain, Epistemic, SemiEpistemic };

const char* to_string(DictatorKind k);

/// Whether the agent is a dictator of the given kind at decision node v.
bool dictator_at(const Mechanism& m, int agent, int v, DictatorKind kind);

struct Classification {
  /// dictators[kind][v] = sorted agent indices holding that kind of
  /// dictatorship at decision node v (empty vectors at leaves).
  std::vector<std::vector<std::vector<int>>> dictators;

  /// elected[kind]: every root-to-leaf path passes a node with a dictator
  /// of that kind.
  bool elected[3] = {false, false, false};

  /// Per kind and leaf (preorder among leaves): the shallowest dictator
  /// node on the path with its first dictator agent, or {-1,-1}.
  struct PathWitness {
    int leaf = 0;
    int node = -1;
    int agent = -1;
  };
  std::vector<std::vector<PathWitness>> paths;

  const std::vector<int>& at(int v, DictatorKind kind) const;
  bool elected_kind(DictatorKind kind) const {
    return elected[static_cast<int>(kind)];
  }
};

Classification classify(const Mechanism& m);

}  // namespace respgap
