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

#include "respgap/mechanism.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace respgap {

const char* to_string(Outcome o) { return o == Outcome::Yes ? "Yes" : "No"; }

bool valid_identifier(std::string_view token) {
  if (token.empty()) return false;
  auto head = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  if (!head(token[0])) return false;
  for (char c : token.substr(1)) {
    if (!head(c) && c != '-') return false;
  }
  return true;
}

std::optional<int> Mechanism::agent_index(std::string_view name) const {
  auto it = agent_index_.find(std::string(name));
  if (it == agent_index_.end()) return std::nullopt;
  return it->second;
}

int Mechanism::require_agent(std::string_view name) const {
  auto idx = agent_index(name);
  if (!idx) throw Error("UnknownAgent", std::string(name));
  return *idx;
}

std::optional<int> Mechanism::node_index(std::string_view name) const {
  auto it = node_index_.find(std::string(name));
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

int Mechanism::require_node(std::string_view name) const {
  auto idx = node_index(name);
  if (!idx) throw Error("UnknownNode", std::string(name));
  return *idx;
}

Outcome Mechanism::label(int v) const {
  if (!nodes_[v].leaf) throw Error("NotLeaf", nodes_[v].name);
  return nodes_[v].label;
}

bool Mechanism::is_decider(int v, int a) const {
  const auto& d = nodes_[v].deciders;
  return std::find(d.begin(), d.end(), a) != d.end();
}

int Mechanism::action_count(int v, int a) const {
  if (nodes_[v].leaf) throw Error("NotDecisionNode", nodes_[v].name);
  return static_cast<int>(nodes_[v].actions[a].size());
}

const std::string& Mechanism::action_name(int v, int a, int d) const {
  return nodes_[v].actions[a][d];
}

int Mechanism::require_action(int v, int a, std::string_view action) const {
  if (nodes_[v].leaf) throw Error("NotDecisionNode", nodes_[v].name);
  const auto& list = nodes_[v].actions[a];
  for (int d = 0; d < static_cast<int>(list.size()); ++d) {
    if (list[d] == action) return d;
  }
  throw Error("UnknownAction", agents_[a] + "/" + std::string(action) + " at " +
                                   nodes_[v].name);
}

int Mechanism::profile_count(int v) const {
  return static_cast<int>(nodes_[v].choice.size());
}

const std::vector<int>& Mechanism::next(int a, int d, int v) const {
  const Node& n = nodes_[v];
  if (n.leaf) throw Error("NotDecisionNode", n.name);
  if (d < 0 || d >= static_cast<int>(n.actions[a].size()))
    throw Error("UnknownAction",
                agents_[a] + " action index out of range at " + n.name);
  return next_[v][a][d];
}

std::vector<int> Mechanism::next_of_class(int a, int d,
                                          const std::vector<int>& nodes) const {
  std::set<int> out;
  int arity = -1;
  for (int v : nodes) {
    if (nodes_[v].leaf) throw Error("NotDecisionNode", nodes_[v].name);
    int count = static_cast<int>(nodes_[v].actions[a].size());
    if (arity == -1) arity = count;
    if (count != arity)
      throw Error("ActionMismatch",
                  "nodes disagree on " + agents_[a] + "'s action list");
    const auto& targets = next(a, d, v);
    out.insert(targets.begin(), targets.end());
  }
  return {out.begin(), out.end()};
}

std::vector<int> Mechanism::decision_path(int v) const {
  std::vector<int> path;
  for (int u = v; u != -1; u = nodes_[u].parent) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

const std::vector<int>& Mechanism::equivalence_class(int a, int v) const {
  if (nodes_[v].leaf) throw Error("NotDecisionNode", nodes_[v].name);
  return classes_[a][class_of_[a][v]];
}

int Mechanism::class_id(int a, int v) const { return class_of_[a][v]; }

bool Mechanism::operator==(const Mechanism& other) const {
  if (agents_ != other.agents_) return false;
  if (nodes_.size() != other.nodes_.size()) return false;
  for (size_t v = 0; v < nodes_.size(); ++v) {
    const Node& x = nodes_[v];
    const Node& y = other.nodes_[v];
    if (x.name != y.name || x.leaf != y.leaf || x.parent != y.parent ||
        x.children != y.children || x.deciders != y.deciders ||
        x.actions != y.actions || x.choice != y.choice)
      return false;
    if (x.leaf && x.label != y.label) return false;
  }
  return classes_ == other.classes_;
}

std::vector<std::string> Mechanism::names(const std::vector<int>& ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int v : ids) out.push_back(nodes_[v].name);
  return out;
}

std::vector<std::string> Mechanism::children_by_name(
    std::string_view node) const {
  return names(children(require_node(node)));
}

std::vector<std::string> Mechanism::next_by_name(std::string_view agent,
                                                 std::string_view action,
                                                 std::string_view node) const {
  int v = require_node(node);
  int a = require_agent(agent);
  return names(next(a, require_action(v, a, action), v));
}

std::vector<std::string> Mechanism::decision_path_by_name(
    std::string_view node) const {
  return names(decision_path(require_node(node)));
}

std::vector<std::string> Mechanism::equivalence_class_by_name(
    std::string_view agent, std::string_view node) const {
  return names(equivalence_class(require_agent(agent), require_node(node)));
}

namespace {

struct Builder {
  const Document& doc;
  std::vector<ValidationError>& errors;

  void error(std::string code, std::string where, std::string message) {
    errors.push_back({std::move(code), std::move(where), std::move(message)});
  }
};

}  // namespace

ValidationResult validate(const Document& doc) {
  ValidationResult result;
  Builder b{doc, result.errors};

  // Agents.
  if (doc.agents.empty())
    b.error("NoAgents", "", "a mechanism needs at least one agent");
  std::map<std::string, int> agent_idx;
  for (const auto& a : doc.agents) {
    if (!valid_identifier(a)) {
      b.error("BadIdentifier", a, "invalid agent identifier");
      continue;
    }
    if (!agent_idx.emplace(a, static_cast<int>(agent_idx.size())).second)
      b.error("DuplicateId", a, "agent declared twice");
  }

  // Node declarations.
  std::map<std::string, int> decl_kind;  // 0 = decision, 1 = leaf
  for (const auto& d : doc.decisions) {
    if (!valid_identifier(d.id)) b.error("BadIdentifier", d.id, "invalid node identifier");
    if (!decl_kind.emplace(d.id, 0).second)
      b.error("DuplicateId", d.id, "node declared twice");
  }
  for (const auto& l : doc.leaves) {
    if (!valid_identifier(l.id)) b.error("BadIdentifier", l.id, "invalid node identifier");
    if (!decl_kind.emplace(l.id, 1).second)
      b.error("DuplicateId", l.id, "node declared twice");
  }

  if (doc.root.empty()) {
    b.error("UnknownReference", "", "no root declared");
  } else if (!decl_kind.count(doc.root)) {
    b.error("UnknownReference", doc.root, "root is not a declared node");
  }

  // Per decision node: deciders, action lists, choice table.
  struct DecInfo {
    std::vector<std::string> deciders;
    std::map<std::string, std::vector<std::string>> actions;
    // flat profile index -> target id (by tuple lexicographic order)
    std::vector<std::string> targets;
  };
  std::map<std::string, DecInfo> decinfo;

  for (const auto& d : doc.decisions) {
    DecInfo info;
    if (d.deciders.empty())
      b.error("EmptyDeciders", d.id, "a decision node needs deciders");
    std::set<std::string> seen_deciders;
    for (const auto& ag : d.deciders) {
      if (!agent_idx.count(ag)) {
        b.error("UnknownReference", ag, "unknown decider at " + d.id);
        continue;
      }
      if (!seen_deciders.insert(ag).second)
        b.error("DuplicateId", ag, "decider listed twice at " + d.id);
      info.deciders.push_back(ag);
    }
    for (const auto& [ag, list] : d.actions) {
      if (!seen_deciders.count(ag)) {
        b.error("UnknownReference", ag,
                "actions declared for non-decider at " + d.id);
        continue;
      }
      if (info.actions.count(ag)) {
        b.error("DuplicateId", ag, "actions declared twice at " + d.id);
        continue;
      }
      if (list.empty())
        b.error("EmptyActionSet", ag, "empty action list at " + d.id);
      std::set<std::string> seen_actions;
      for (const auto& act : list) {
        if (!valid_identifier(act))
          b.error("BadIdentifier", act, "invalid action at " + d.id);
        if (!seen_actions.insert(act).second)
          b.error("DuplicateId", act,
                  ag + "'s action listed twice at " + d.id);
      }
      info.actions[ag] = list;
    }
    for (const auto& ag : info.deciders) {
      if (!info.actions.count(ag))
        b.error("PartialChoiceFunction", d.id,
                "no action list for decider " + ag);
    }
    if (!result.errors.empty() && !decinfo.empty()) {
      // keep collecting; nothing special here
    }

    // Choice table totality.
    long long profiles = 1;
    bool arity_ok = true;
    for (const auto& ag : info.deciders) {
      auto it = info.actions.find(ag);
      if (it == info.actions.end() || it->second.empty()) {
        arity_ok = false;
        break;
      }
      profiles *= static_cast<long long>(it->second.size());
    }
    if (arity_ok && profiles > 0 && profiles < (1 << 22)) {
      info.targets.assign(static_cast<size_t>(profiles), "");
      for (const auto& [tuple, target] : d.choice) {
        if (tuple.size() != info.deciders.size()) {
          b.error("PartialChoiceFunction", d.id,
                  "map tuple arity does not match deciders");
          continue;
        }
        long long idx = 0;
        bool ok = true;
        for (size_t i = 0; i < tuple.size(); ++i) {
          const auto& list = info.actions[info.deciders[i]];
          auto pos = std::find(list.begin(), list.end(), tuple[i]);
          if (pos == list.end()) {
            b.error("UnknownReference", tuple[i],
                    "unknown action in map at " + d.id);
            ok = false;
            break;
          }
          idx = idx * static_cast<long long>(list.size()) +
                (pos - list.begin());
        }
        if (!ok) continue;
        if (!info.targets[static_cast<size_t>(idx)].empty()) {
          b.error("DuplicateId", d.id, "duplicate map entry");
          continue;
        }
        info.targets[static_cast<size_t>(idx)] = target;
        if (!decl_kind.count(target))
          b.error("UnlabeledLeaf", target,
                  "choice target at " + d.id + " is not a declared node");
      }
      long long missing = std::count(info.targets.begin(), info.targets.end(),
                                     std::string());
      if (missing > 0)
        b.error("PartialChoiceFunction", d.id,
                std::to_string(missing) + " action profiles without a target");
    }
    decinfo[d.id] = std::move(info);
  }

  // Tree structure: unique parents, reachability from root.
  std::map<std::string, std::string> parent;
  for (const auto& [id, info] : decinfo) {
    std::set<std::string> child_set(info.targets.begin(), info.targets.end());
    child_set.erase("");
    for (const auto& c : child_set) {
      if (!decl_kind.count(c)) continue;
      if (c == doc.root) {
        b.error("NonTree", c, "root appears as a choice target");
        continue;
      }
      auto [it, inserted] = parent.emplace(c, id);
      if (!inserted && it->second != id)
        b.error("NonTree", c, "node has more than one parent");
      if (c == id) b.error("NonTree", c, "node is its own child");
    }
  }
  if (decl_kind.count(doc.root)) {
    std::set<std::string> reachable;
    std::vector<std::string> stack{doc.root};
    while (!stack.empty()) {
      std::string id = stack.back();
      stack.pop_back();
      if (!reachable.insert(id).second) continue;
      auto it = decinfo.find(id);
      if (it == decinfo.end()) continue;
      std::set<std::string> child_set(it->second.targets.begin(),
                                      it->second.targets.end());
      child_set.erase("");
      for (const auto& c : child_set)
        if (decl_kind.count(c)) stack.push_back(c);
    }
    for (const auto& [id, kind] : decl_kind) {
      if (!reachable.count(id))
        b.error("NonTree", id, "node unreachable from root");
    }
  }

  // A declared decision node with an empty choice table behaves as a childless
  // internal node, which the tree check above reports as needed; a leaf used
  // as a choice source cannot be expressed in a Document at all.

  // Indistinguishability declarations.
  auto delta = [&](const std::string& node,
                   const std::string& agent) -> std::vector<std::string> {
    const DecInfo& info = decinfo.at(node);
    auto it = info.actions.find(agent);
    if (it != info.actions.end()) return it->second;
    return {kIdleAction};
  };
  std::map<std::string, std::set<std::string>> in_cell;  // agent -> nodes seen
  for (const auto& cell : doc.indist) {
    if (!agent_idx.count(cell.agent)) {
      b.error("UnknownReference", cell.agent, "unknown agent in indist");
      continue;
    }
    bool usable = true;
    for (const auto& n : cell.nodes) {
      auto it = decl_kind.find(n);
      if (it == decl_kind.end()) {
        b.error("UnknownReference", n, "unknown node in indist");
        usable = false;
        continue;
      }
      if (it->second == 1) {
        b.error("MixedClass", n, "leaf node in an indistinguishability class");
        usable = false;
        continue;
      }
      if (!in_cell[cell.agent].insert(n).second) {
        b.error("OverlappingClass", n,
                "node appears in two classes for " + cell.agent);
        usable = false;
      }
    }
    if (!usable) continue;
    for (size_t i = 1; i < cell.nodes.size(); ++i) {
      if (delta(cell.nodes[i], cell.agent) != delta(cell.nodes[0], cell.agent))
        b.error("ActionMismatch", cell.nodes[i],
                cell.agent + "'s actions differ from " + cell.nodes[0] +
                    " within one class");
    }
  }

  if (!result.errors.empty()) return result;

  // Build the indexed mechanism. Preorder from the root; children ordered by
  // first appearance in the choice table.
  Mechanism m;
  m.agents_ = doc.agents;
  for (int i = 0; i < static_cast<int>(doc.agents.size()); ++i)
    m.agent_index_[doc.agents[i]] = i;

  std::map<std::string, Outcome> leaf_label;
  for (const auto& l : doc.leaves) leaf_label[l.id] = l.label;

  std::vector<std::string> order;
  {
    std::vector<std::string> stack{doc.root};
    while (!stack.empty()) {
      std::string id = stack.back();
      stack.pop_back();
      order.push_back(id);
      auto it = decinfo.find(id);
      if (it == decinfo.end()) continue;
      std::vector<std::string> kids;
      for (const auto& t : it->second.targets)
        if (std::find(kids.begin(), kids.end(), t) == kids.end())
          kids.push_back(t);
      for (auto rit = kids.rbegin(); rit != kids.rend(); ++rit)
        stack.push_back(*rit);
    }
  }
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    m.node_index_[order[i]] = i;

  m.nodes_.resize(order.size());
  for (int v = 0; v < static_cast<int>(order.size()); ++v) {
    Mechanism::Node& n = m.nodes_[v];
    n.name = order[v];
    auto it = decinfo.find(n.name);
    if (it == decinfo.end()) {
      n.leaf = true;
      n.label = leaf_label.at(n.name);
      m.leaves_.push_back(v);
      continue;
    }
    m.decision_nodes_.push_back(v);
    const DecInfo& info = it->second;
    n.actions.resize(m.agent_count());
    for (int a = 0; a < m.agent_count(); ++a) {
      auto ait = info.actions.find(m.agents_[a]);
      n.actions[a] =
          ait != info.actions.end() ? ait->second
                                    : std::vector<std::string>{kIdleAction};
    }
    for (const auto& ag : info.deciders)
      n.deciders.push_back(m.agent_index_.at(ag));
    n.choice.reserve(info.targets.size());
    for (const auto& t : info.targets) n.choice.push_back(m.node_index_.at(t));
    std::set<int> kids(n.choice.begin(), n.choice.end());
    n.children.assign(kids.begin(), kids.end());
    for (int c : n.children) m.nodes_[c].parent = v;
  }
  // parent links set above require children processed after parents; preorder
  // guarantees that, but set parents in a second pass to be safe.
  for (int v = 0; v < m.node_count(); ++v)
    for (int c : m.nodes_[v].children) m.nodes_[c].parent = v;

  for (int v : m.leaves_) {
    int d = 0;
    for (int u = v; m.nodes_[u].parent != -1; u = m.nodes_[u].parent) ++d;
    m.depth_ = std::max(m.depth_, d);
  }

  // Next tables.
  m.next_.resize(m.node_count());
  for (int v : m.decision_nodes_) {
    const Mechanism::Node& n = m.nodes_[v];
    m.next_[v].resize(m.agent_count());
    for (int a = 0; a < m.agent_count(); ++a) {
      int arity = static_cast<int>(n.actions[a].size());
      m.next_[v][a].resize(arity);
      auto pos = std::find(n.deciders.begin(), n.deciders.end(), a);
      if (pos == n.deciders.end()) {
        // Non-deciders cannot constrain the transition.
        m.next_[v][a][0] = n.children;
        continue;
      }
      // Stride of this decider's digit in the flat profile index.
      int where = static_cast<int>(pos - n.deciders.begin());
      std::vector<std::set<int>> buckets(arity);
      int stride = 1;
      for (size_t i = n.deciders.size(); i-- > static_cast<size_t>(where) + 1;)
        stride *= static_cast<int>(n.actions[n.deciders[i]].size());
      for (int p = 0; p < static_cast<int>(n.choice.size()); ++p) {
        int digit = (p / stride) % arity;
        buckets[digit].insert(n.choice[p]);
      }
      for (int d = 0; d < arity; ++d)
        m.next_[v][a][d].assign(buckets[d].begin(), buckets[d].end());
    }
  }

  // Partitions: declared cells plus singletons for unlisted decision nodes.
  m.classes_.resize(m.agent_count());
  m.class_of_.assign(m.agent_count(),
                     std::vector<int>(m.node_count(), -1));
  for (const auto& cell : doc.indist) {
    if (cell.nodes.size() < 2) continue;  // singleton cells are the default
    int a = m.agent_index_.at(cell.agent);
    std::vector<int> members;
    for (const auto& n : cell.nodes) members.push_back(m.node_index_.at(n));
    std::sort(members.begin(), members.end());
    int id = static_cast<int>(m.classes_[a].size());
    for (int v : members) m.class_of_[a][v] = id;
    m.classes_[a].push_back(std::move(members));
    m.perfect_information_ = false;
  }
  for (int a = 0; a < m.agent_count(); ++a) {
    for (int v : m.decision_nodes_) {
      if (m.class_of_[a][v] != -1) continue;
      m.class_of_[a][v] = static_cast<int>(m.classes_[a].size());
      m.classes_[a].push_back({v});
    }
  }

  result.mechanism = std::move(m);
  return result;
}

}  // namespace respgap
