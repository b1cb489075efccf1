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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respgap/mechanism.hpp"
#include "util.hpp"

using namespace respgap;
using testutil::from_text;
using testutil::validation_codes;

TEST_CASE("nodes are indexed in preorder with children by map appearance") {
  Mechanism m = example("two-person-rule");
  REQUIRE(m.node_count() == 5);
  CHECK(m.node_name(0) == "u1");
  CHECK(m.node_name(1) == "v1");
  CHECK(m.node_name(2) == "u2");
  CHECK(m.node_name(3) == "v2");
  CHECK(m.node_name(4) == "v3");
  CHECK(m.root() == 0);
  CHECK(m.depth() == 2);
  CHECK(m.names(m.decision_nodes()) == std::vector<std::string>{"u1", "u2"});
  CHECK(m.names(m.leaves()) == std::vector<std::string>{"v1", "v2", "v3"});
  CHECK(m.parent(0) == -1);
  CHECK(m.parent(m.require_node("u2")) == m.require_node("u1"));
  CHECK(m.parent(m.require_node("v3")) == m.require_node("u2"));
  CHECK(m.children_by_name("u1") == std::vector<std::string>{"v1", "u2"});
  CHECK(m.children_by_name("v1").empty());
}

TEST_CASE("agents are indexed in declaration order") {
  Mechanism m = example("two-person-rule");
  REQUIRE(m.agent_count() == 3);
  CHECK(m.agents() == std::vector<std::string>{"P", "A", "B"});
  CHECK(m.agent_index("A") == 1);
  CHECK(!m.agent_index("Z").has_value());
  CHECK_THROWS_WITH_AS(m.require_agent("Z"), doctest::Contains("UnknownAgent"),
                       Error);
}

TEST_CASE("leaf labels and lookups") {
  Mechanism m = example("two-person-rule");
  CHECK(m.is_leaf(m.require_node("v1")));
  CHECK(!m.is_leaf(m.require_node("u1")));
  CHECK(m.label(m.require_node("v1")) == Outcome::No);
  CHECK(m.label(m.require_node("v3")) == Outcome::Yes);
  CHECK_THROWS_WITH_AS(m.label(m.require_node("u1")),
                       doctest::Contains("NotLeaf"), Error);
  CHECK(!m.node_index("w9").has_value());
  CHECK_THROWS_WITH_AS(m.require_node("w9"), doctest::Contains("UnknownNode"),
                       Error);
}

TEST_CASE("non-deciders hold the implicit idle action") {
  Mechanism m = example("two-person-rule");
  int u1 = m.require_node("u1");
  int u2 = m.require_node("u2");
  int P = m.require_agent("P"), A = m.require_agent("A");
  CHECK(m.is_decider(u1, P));
  CHECK(!m.is_decider(u1, A));
  CHECK(m.is_decider(u2, A));
  CHECK(!m.is_decider(u2, P));
  CHECK(m.action_count(u1, P) == 2);
  CHECK(m.action_count(u1, A) == 1);
  CHECK(m.action_name(u1, A, 0) == kIdleAction);
  CHECK(m.action_name(u1, P, 1) == "Right");
  CHECK(m.require_action(u1, P, "Left") == 0);
  CHECK(m.require_action(u1, A, kIdleAction) == 0);
  CHECK_THROWS_WITH_AS(m.require_action(u1, P, "Up"),
                       doctest::Contains("UnknownAction"), Error);
}

TEST_CASE("choice table follows tuple lexicographic order") {
  Mechanism m = example("two-person-rule");
  int u2 = m.require_node("u2");
  REQUIRE(m.profile_count(u2) == 4);
  int v2 = m.require_node("v2"), v3 = m.require_node("v3");
  // Profiles (A,B): (Left,Left) (Left,Right) (Right,Left) (Right,Right).
  CHECK(m.choice(u2, 0) == v2);
  CHECK(m.choice(u2, 1) == v2);
  CHECK(m.choice(u2, 2) == v2);
  CHECK(m.choice(u2, 3) == v3);
  CHECK(m.profile_count(m.require_node("u1")) == 2);
}

TEST_CASE("next sets for deciders and non-deciders") {
  Mechanism m = example("two-person-rule");
  CHECK(m.next_by_name("P", "Left", "u1") == std::vector<std::string>{"v1"});
  CHECK(m.next_by_name("P", "Right", "u1") == std::vector<std::string>{"u2"});
  CHECK(m.next_by_name("A", kIdleAction, "u1") ==
        std::vector<std::string>{"v1", "u2"});
  CHECK(m.next_by_name("A", "Left", "u2") == std::vector<std::string>{"v2"});
  CHECK(m.next_by_name("A", "Right", "u2") ==
        std::vector<std::string>{"v2", "v3"});
  CHECK(m.next_by_name("B", "Right", "u2") ==
        std::vector<std::string>{"v2", "v3"});
}

TEST_CASE("next of an indistinguishability class unions member next sets") {
  Mechanism m = example("mechanism-M");
  int B = m.require_agent("B");
  int u2 = m.require_node("u2");
  const std::vector<int>& cls = m.equivalence_class(B, u2);
  CHECK(m.names(cls) == std::vector<std::string>{"u2", "u4"});
  CHECK(m.names(m.next_of_class(B, 0, cls)) ==
        std::vector<std::string>{"u5", "v2"});
  CHECK(m.names(m.next_of_class(B, 1, cls)) ==
        std::vector<std::string>{"v1", "v6"});
  CHECK(m.names(m.next_of_class(B, 2, cls)) ==
        std::vector<std::string>{"u6", "v2"});
}

TEST_CASE("decision path runs from the root to the node inclusive") {
  Mechanism m = example("drawing-straws");
  CHECK(m.decision_path_by_name("v4") ==
        std::vector<std::string>{"u1", "u3", "v4"});
  CHECK(m.decision_path_by_name("u1") == std::vector<std::string>{"u1"});
}

TEST_CASE("declared cells merge classes, everything else stays singleton") {
  Mechanism m = example("drawing-straws");
  int A = m.require_agent("A"), B = m.require_agent("B");
  CHECK(!m.perfect_information());
  CHECK(m.equivalence_class_by_name("B", "u2") ==
        std::vector<std::string>{"u2", "u3"});
  CHECK(m.equivalence_class_by_name("A", "u2") ==
        std::vector<std::string>{"u2"});
  CHECK(m.classes(A).size() == 3);
  CHECK(m.classes(B).size() == 2);
  int u2 = m.require_node("u2"), u3 = m.require_node("u3");
  CHECK(m.class_id(B, u2) == m.class_id(B, u3));
  CHECK(m.class_id(A, u2) != m.class_id(A, u3));
  CHECK(example("two-person-rule").perfect_information());
}

TEST_CASE("equality compares structure, labels and partitions") {
  CHECK(example("senate") == example("senate"));
  CHECK(!(example("senate") == example("academic")));
  // mechanism-N without its indist cell is a different mechanism.
  std::string text = example_text("mechanism-N");
  std::string no_cell = text.substr(0, text.find("indist"));
  CHECK(!(from_text(no_cell) == example("mechanism-N")));
}

TEST_CASE("validation rejects missing agents and bad identifiers") {
  auto codes = validation_codes("mechanism \"x\"\nroot: v1\nleaf v1 = Yes\n");
  CHECK(codes.count("NoAgents") == 1);
  codes = validation_codes(
      "mechanism \"x\"\nagents: A, A\nroot: v1\nleaf v1 = Yes\n");
  CHECK(codes.count("DuplicateId") == 1);
}

TEST_CASE("validation rejects dangling references") {
  // An undeclared choice target is a leaf without a label.
  auto codes = validation_codes(R"(mechanism "x"
agents: A
root: u1
decision u1
  deciders: A
  actions: A = [l, r]
  map: [l] -> v1 ; [r] -> v9
leaf v1 = Yes
)");
  CHECK(codes.count("UnlabeledLeaf") == 1);
  codes = validation_codes(
      "mechanism \"x\"\nagents: A\nroot: v9\nleaf v1 = Yes\n");
  CHECK(codes.count("UnknownReference") == 1);
}

TEST_CASE("validation demands a total surjective choice function") {
  auto codes = validation_codes(R"(mechanism "x"
agents: A, B
root: u1
decision u1
  deciders: A, B
  actions: A = [l, r] ; B = [l, r]
  map: [l,l] -> v1 ; [l,r] -> v1 ; [r,l] -> v2
leaf v1 = Yes
leaf v2 = No
)");
  CHECK(codes.count("PartialChoiceFunction") == 1);
}

TEST_CASE("validation rejects non-tree shapes") {
  // Two decision nodes sharing a child.
  auto codes = validation_codes(R"(mechanism "x"
agents: A
root: u1
decision u1
  deciders: A
  actions: A = [l, r]
  map: [l] -> u2 ; [r] -> u3
decision u2
  deciders: A
  actions: A = [l]
  map: [l] -> v1
decision u3
  deciders: A
  actions: A = [l]
  map: [l] -> v1
leaf v1 = Yes
)");
  CHECK(codes.count("NonTree") == 1);
  codes = validation_codes(R"(mechanism "x"
agents: A
root: u1
decision u1
  deciders: A
  actions: A = [l]
  map: [l] -> v1
leaf v1 = Yes
leaf v2 = No
)");
  CHECK(codes.count("NonTree") == 1);
}

TEST_CASE("validation rejects malformed decision blocks") {
  // An empty action list cannot be written in the text form; build the raw
  // description directly.
  Document doc;
  doc.agents = {"A"};
  doc.root = "u1";
  Document::Decision d;
  d.id = "u1";
  d.deciders = {"A"};
  d.actions = {{"A", {}}};
  doc.decisions.push_back(d);
  doc.leaves.push_back({"v1", Outcome::Yes});
  bool found = false;
  for (const ValidationError& e : validate(doc).errors)
    found = found || e.code == "EmptyActionSet";
  CHECK(found);
}

TEST_CASE("validation rejects malformed indistinguishability cells") {
  std::string base = R"(mechanism "x"
agents: A, B
root: u1
decision u1
  deciders: A
  actions: A = [l, r]
  map: [l] -> u2 ; [r] -> u3
decision u2
  deciders: B
  actions: B = [l, r]
  map: [l] -> v1 ; [r] -> v2
decision u3
  deciders: B
  actions: B = [l, r, m]
  map: [l] -> v3 ; [r] -> v4 ; [m] -> v4
leaf v1 = Yes
leaf v2 = No
leaf v3 = No
leaf v4 = Yes
)";
  // Members of one cell must offer the agent the same ordered action list.
  auto codes = validation_codes(base + "indist B: {u2, u3}\n");
  CHECK(codes.count("ActionMismatch") == 1);
  codes = validation_codes(base + "indist B: {u2, v1}\n");
  CHECK(codes.count("MixedClass") == 1);
  codes = validation_codes(base + "indist A: {u2, u3}\nindist A: {u3, u1}\n");
  CHECK(codes.count("OverlappingClass") == 1);
}

TEST_CASE("validation collects every violation instead of stopping early") {
  auto codes = validation_codes(R"(mechanism "x"
agents: A
root: u1
decision u1
  deciders: A, Z
  actions: A = [l, r]
  map: [l] -> v1 ; [r] -> v9
leaf v1 = Yes
)");
  CHECK(codes.size() >= 2);
}

TEST_CASE("identifier syntax") {
  CHECK(valid_identifier("u1"));
  CHECK(valid_identifier("Left"));
  CHECK(!valid_identifier(""));
  CHECK(valid_identifier("0"));
  CHECK(valid_identifier("two-person"));
  CHECK(!valid_identifier("a b"));
  CHECK(!valid_identifier("-x"));
}
