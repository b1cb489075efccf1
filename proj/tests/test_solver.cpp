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

#include <set>
#include <string>
#include <vector>

#include "respgap/solver.hpp"
#include "util.hpp"

using namespace respgap;
using testutil::sorted_names;

namespace {

// Reference evaluator written directly from the definitions, reading only
// the raw choice tables. Kept deliberately naive and separate from the
// production solver.
std::set<int> naive_next(const Mechanism& m, int a, int d, int v) {
  std::set<int> out;
  const std::vector<int>& deciders = m.node(v).deciders;
  for (int p = 0; p < m.profile_count(v); ++p) {
    int rem = p, mine = -1;
    for (int i = static_cast<int>(deciders.size()) - 1; i >= 0; --i) {
      int cnt = m.action_count(v, deciders[i]);
      int digit = rem % cnt;
      rem /= cnt;
      if (deciders[i] == a) mine = digit;
    }
    if (mine == -1 || mine == d) out.insert(m.choice(v, p));
  }
  return out;
}

std::set<int> naive_solve(const Mechanism& m, int a, Outcome o, Semantics s) {
  std::set<int> in;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < m.node_count(); ++v) {
      if (in.count(v)) continue;
      bool member = false;
      if (m.is_leaf(v)) {
        member = m.label(v) == o;
      } else {
        for (int d = 0; d < m.action_count(v, a) && !member; ++d) {
          std::set<int> reach;
          if (s == Semantics::Win) {
            reach = naive_next(m, a, d, v);
          } else {
            for (int u : m.equivalence_class(a, v))
              reach.merge(naive_next(m, a, d, u));
          }
          member = true;
          for (int u : reach) member = member && in.count(u) > 0;
        }
        if (!member && s == Semantics::EWin) {
          member = true;
          for (int u : m.children(v)) member = member && in.count(u) > 0;
        }
      }
      if (member) {
        in.insert(v);
        changed = true;
      }
    }
  }
  return in;
}

std::vector<std::string> solved(const std::string& ex, const std::string& a,
                                Outcome o, Semantics s) {
  Mechanism m = example(ex);
  StrategySet set = solve(m, a, o, s);
  return sorted_names(m, set.nodes);
}

using Names = std::vector<std::string>;

}  // namespace

TEST_CASE("nobody can force approval alone under the two-person rule") {
  CHECK(solved("two-person-rule", "P", Outcome::No, Semantics::Win) ==
        Names{"u1", "v1", "v2"});
  CHECK(solved("two-person-rule", "P", Outcome::Yes, Semantics::Win) ==
        Names{"v3"});
  CHECK(solved("two-person-rule", "A", Outcome::No, Semantics::Win) ==
        Names{"u1", "u2", "v1", "v2"});
  CHECK(solved("two-person-rule", "A", Outcome::Yes, Semantics::Win) ==
        Names{"v3"});
}

TEST_CASE("the straw picker controls the outcome only counterfactually") {
  // Every decision node is in B's plain set for either outcome: B has the
  // deciding action at u2 and u3, and u1 then follows by closure over
  // children (B does not act at u1).
  CHECK(solved("drawing-straws", "B", Outcome::Yes, Semantics::Win) ==
        Names{"u1", "u2", "u3", "v1", "v4"});
  CHECK(solved("drawing-straws", "B", Outcome::No, Semantics::Win) ==
        Names{"u1", "u2", "u3", "v2", "v3"});
  // Knowingly, B can guarantee nothing beyond the leaves themselves.
  CHECK(solved("drawing-straws", "B", Outcome::Yes, Semantics::EWin) ==
        Names{"v1", "v4"});
  CHECK(solved("drawing-straws", "B", Outcome::Yes, Semantics::UWin) ==
        Names{"v1", "v4"});
  CHECK(solved("drawing-straws", "A", Outcome::Yes, Semantics::Win) ==
        Names{"v1", "v4"});
}

TEST_CASE("planned confusion separates uniform from epistemic ability") {
  Mechanism m = example("confusion");
  int A = m.require_agent("A");
  StrategySet uwin = solve(m, A, Outcome::Yes, Semantics::UWin);
  StrategySet ewin = solve(m, A, Outcome::Yes, Semantics::EWin);
  CHECK(!uwin.contains(m.require_node("u4")));
  CHECK(ewin.contains(m.require_node("u4")));
  CHECK(uwin.contains(m.require_node("u7")));
  CHECK(!uwin.contains(m.require_node("u6")));
  CHECK(ewin.contains(m.require_node("u6")));
}

TEST_CASE("confused straw picking leaves knowing routes to No but not Yes") {
  Mechanism m = example("mechanism-M");
  int B = m.require_agent("B");
  CHECK(solve(m, B, Outcome::No, Semantics::EWin)
            .contains(m.require_node("u2")));
  CHECK(!solve(m, B, Outcome::Yes, Semantics::EWin)
             .contains(m.require_node("u2")));
  CHECK(!solve(m, B, Outcome::Yes, Semantics::Win)
             .contains(m.require_node("u6")));
}

TEST_CASE("solver agrees with a naive reference evaluator everywhere") {
  for (const std::string& name : example_names()) {
    Mechanism m = example(name);
    for (int a = 0; a < m.agent_count(); ++a)
      for (Outcome o : {Outcome::Yes, Outcome::No})
        for (Semantics s : {Semantics::Win, Semantics::UWin, Semantics::EWin}) {
          CAPTURE(name);
          CAPTURE(a);
          StrategySet got = solve(m, a, o, s);
          std::set<int> want = naive_solve(m, a, o, s);
          CHECK(std::set<int>(got.nodes.begin(), got.nodes.end()) == want);
        }
  }
}

TEST_CASE("solver agrees with the assignment-sweep oracles") {
  for (const std::string& name : example_names()) {
    Mechanism m = example(name);
    for (int a = 0; a < m.agent_count(); ++a)
      for (Outcome o : {Outcome::Yes, Outcome::No}) {
        CAPTURE(name);
        CAPTURE(a);
        CHECK(solve(m, a, o, Semantics::Win).nodes == oracle_win(m, a, o));
        CHECK(solve(m, a, o, Semantics::UWin).nodes == oracle_uwin(m, a, o));
      }
  }
}

TEST_CASE("set containments hold on every example") {
  for (const std::string& name : example_names()) {
    Mechanism m = example(name);
    for (int a = 0; a < m.agent_count(); ++a)
      for (Outcome o : {Outcome::Yes, Outcome::No}) {
        StrategySet win = solve(m, a, o, Semantics::Win);
        StrategySet uwin = solve(m, a, o, Semantics::UWin);
        StrategySet ewin = solve(m, a, o, Semantics::EWin);
        for (int v : uwin.nodes) CHECK(ewin.contains(v));
        for (int v : ewin.nodes) CHECK(win.contains(v));
        if (m.perfect_information()) CHECK(win.nodes == uwin.nodes);
      }
  }
}

TEST_CASE("witnesses are the lowest qualifying action and deterministic") {
  Mechanism m = example("drawing-straws");
  int B = m.require_agent("B");
  StrategySet s = solve(m, B, Outcome::Yes, Semantics::Win);
  auto witness_at = [&](const std::string& node) {
    for (size_t i = 0; i < s.nodes.size(); ++i)
      if (s.nodes[i] == m.require_node(node))
        return s.witness[i];
    return -2;
  };
  REQUIRE(s.nodes.size() == s.witness.size());
  CHECK(witness_at("u2") == 0);  // action 0 reaches v1 = Yes
  CHECK(witness_at("u3") == 1);  // action 1 reaches v4 = Yes
  CHECK(witness_at("u1") == 0);  // idle qualifies, B does not act here
  CHECK(witness_at("v1") == -1);
  StrategySet again = solve(m, B, Outcome::Yes, Semantics::Win);
  CHECK(s.nodes == again.nodes);
  CHECK(s.witness == again.witness);
}

TEST_CASE("string-view overload matches the index overload") {
  Mechanism m = example("senate");
  StrategySet by_name = solve(m, "V", Outcome::Yes, Semantics::Win);
  StrategySet by_index =
      solve(m, m.require_agent("V"), Outcome::Yes, Semantics::Win);
  CHECK(by_name.nodes == by_index.nodes);
  CHECK_THROWS_WITH_AS(solve(m, "Z", Outcome::Yes, Semantics::Win),
                       doctest::Contains("UnknownAgent"), Error);
}

TEST_CASE("oracles refuse oversized inputs") {
  // A single decision node with 40 actions and 40 leaves: 41 nodes.
  std::string text = "mechanism \"big\"\nagents: A\nroot: u0\ndecision u0\n";
  text += "  deciders: A\n  actions: A = [";
  for (int i = 0; i < 40; ++i) text += (i ? ", a" : "a") + std::to_string(i);
  text += "]\n  map: ";
  for (int i = 0; i < 40; ++i)
    text += (i ? " ; [a" : "[a") + std::to_string(i) + "] -> v" +
            std::to_string(i);
  text += "\n";
  for (int i = 0; i < 40; ++i)
    text += "leaf v" + std::to_string(i) + " = Yes\n";
  Mechanism m = testutil::from_text(text);
  REQUIRE(m.node_count() == 41);
  CHECK_THROWS_WITH_AS(oracle_win(m, 0, Outcome::Yes),
                       doctest::Contains("BudgetExceeded"), Error);
  CHECK_THROWS_WITH_AS(oracle_uwin(m, 0, Outcome::Yes),
                       doctest::Contains("BudgetExceeded"), Error);
}
