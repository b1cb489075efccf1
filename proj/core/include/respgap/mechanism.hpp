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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace respgap {

/// Binary outcome carried by leaf nodes.
enum class Outcome : std::uint8_t { Yes, No };

constexpr Outcome complement(Outcome o) {
  return o == Outcome::Yes ? Outcome::No : Outcome::Yes;
}

const char* to_string(Outcome o);

/// Error with a stable machine-readable code ("UnknownNode", "NotLeaf", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Raw, unvalidated mechanism description. Mirrors the text format
/// one declaration per entry; semantic checks live in validate().
struct Document {
  struct Decision {
    std::string id;
    std::vector<std::string> deciders;
    // agent -> ordered action list; one entry per decider.
    std::vector<std::pair<std::string, std::vector<std::string>>> actions;
    // action tuple (deciders order) -> target node id.
    std::vector<std::pair<std::vector<std::string>, std::string>> choice;
  };
  struct Leaf {
    std::string id;
    Outcome label = Outcome::Yes;
  };
  struct Indist {
    std::string agent;
    std::vector<std::string> nodes;
  };

  std::string name;
  std::vector<std::string> agents;
  std::string root;
  std::vector<Decision> decisions;
  std::vector<Leaf> leaves;
  std::vector<Indist> indist;
};

struct ValidationError {
  std::string code;     // NonTree, PartialChoiceFunction, EmptyActionSet,
                        // UnlabeledLeaf, MixedClass, ActionMismatch,
                        // DuplicateId, UnknownReference, OverlappingClass,
                        // NoAgents, BadIdentifier, EmptyDeciders
  std::string where;    // offending node/agent/action id
  std::string message;
};

/// The action name implicitly held by every agent that does not decide at a
/// node. Non-deciders always have the singleton action list {idle}.
inline constexpr const char* kIdleAction = "idle";

struct ValidationResult;
ValidationResult validate(const Document& doc);

/// Validated, immutable decision-making mechanism.
///
/// Nodes are indexed 0..node_count()-1 in preorder from the root (children
/// ordered by first appearance in the choice table). Agents are indexed in
/// declaration order. Actions are indexed by position in the declared list;
/// non-deciders have the single action {idle} at index 0.
class Mechanism {
 public:
  struct Node {
    std::string name;
    bool leaf = false;
    Outcome label = Outcome::Yes;  // leaves only
    int parent = -1;               // -1 for root
    std::vector<int> children;     // ascending node indices; empty iff leaf
    std::vector<int> deciders;     // agent indices, declaration order
    // Per agent: ordered action names ({idle} for non-deciders). Empty for
    // leaves.
    std::vector<std::vector<std::string>> actions;
    // Flat choice table over decider profiles; the first decider is the most
    // significant digit, so increasing index follows tuple lexicographic
    // order. Empty for leaves.
    std::vector<int> choice;
  };

  int agent_count() const { return static_cast<int>(agents_.size()); }
  const std::string& agent_name(int a) const { return agents_[a]; }
  const std::vector<std::string>& agents() const { return agents_; }
  std::optional<int> agent_index(std::string_view name) const;
  int require_agent(std::string_view name) const;  // throws UnknownAgent

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  const Node& node(int v) const { return nodes_[v]; }
  const std::string& node_name(int v) const { return nodes_[v].name; }
  std::optional<int> node_index(std::string_view name) const;
  int require_node(std::string_view name) const;  // throws UnknownNode

  bool is_leaf(int v) const { return nodes_[v].leaf; }
  Outcome label(int v) const;  // throws NotLeaf
  int parent(int v) const { return nodes_[v].parent; }
  int depth() const { return depth_; }
  const std::vector<int>& decision_nodes() const { return decision_nodes_; }
  const std::vector<int>& leaves() const { return leaves_; }

  /// Children of v (targets of its choice function); empty iff v is a leaf.
  const std::vector<int>& children(int v) const { return nodes_[v].children; }

  bool is_decider(int v, int a) const;
  int action_count(int v, int a) const;  // decision nodes only
  const std::string& action_name(int v, int a, int d) const;
  /// Index of the named action of agent a at decision node v, or throw.
  int require_action(int v, int a, std::string_view action) const;

  /// Number of decider action profiles at decision node v.
  int profile_count(int v) const;
  /// Choice-function value for a flat profile index.
  int choice(int v, int profile) const { return nodes_[v].choice[profile]; }

  /// Children reachable from v when agent a plays action d and everyone
  /// else plays anything. Sorted ascending.
  const std::vector<int>& next(int a, int d, int v) const;

  /// Union of next() over a set of decision nodes sharing agent a's action
  /// list. Sorted ascending.
  std::vector<int> next_of_class(int a, int d,
                                 const std::vector<int>& nodes) const;

  /// The unique root-to-v path, inclusive.
  std::vector<int> decision_path(int v) const;

  /// Indistinguishability class of decision node v for agent a. Sorted
  /// ascending; {v} under perfect information.
  const std::vector<int>& equivalence_class(int a, int v) const;
  /// Stable class id (index into classes(a)).
  int class_id(int a, int v) const;
  const std::vector<std::vector<int>>& classes(int a) const {
    return classes_[a];
  }
  bool perfect_information() const { return perfect_information_; }

  bool operator==(const Mechanism& other) const;

  // Name-based convenience wrappers used by the CLI and tests.
  std::vector<std::string> children_by_name(std::string_view node) const;
  std::vector<std::string> next_by_name(std::string_view agent,
                                        std::string_view action,
                                        std::string_view node) const;
  std::vector<std::string> decision_path_by_name(std::string_view node) const;
  std::vector<std::string> equivalence_class_by_name(
      std::string_view agent, std::string_view node) const;

  std::vector<std::string> names(const std::vector<int>& ids) const;

 private:
  friend struct ValidationResult;
  friend ValidationResult validate(const Document& doc);
  Mechanism() = default;

  std::vector<std::string> agents_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> agent_index_;
  std::unordered_map<std::string, int> node_index_;
  std::vector<int> decision_nodes_;
  std::vector<int> leaves_;
  // Per agent, per decision node index position: precomputed next sets.
  // next_[v][a][d] is sorted ascending.
  std::vector<std::vector<std::vector<std::vector<int>>>> next_;
  // classes_[a] = partition cells (sorted members); class_of_[a][v] = cell id
  // (-1 for leaves).
  std::vector<std::vector<std::vector<int>>> classes_;
  std::vector<std::vector<int>> class_of_;
  bool perfect_information_ = true;
  int depth_ = 0;
};

struct ValidationResult {
  std::optional<Mechanism> mechanism;
  std::vector<ValidationError> errors;
  bool ok() const { return mechanism.has_value(); }
};

/// Checks every structural invariant of the raw description and builds the
/// indexed Mechanism. Collects the complete list of violations instead of
/// stopping at the first.
ValidationResult validate(const Document& doc);

bool valid_identifier(std::string_view token);

}  // namespace respgap
