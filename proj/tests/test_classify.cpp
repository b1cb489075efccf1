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

#include "respgap/classify.hpp"
#include "util.hpp"

using namespace respgap;

TEST_CASE("the dean is a dictator wherever the dean decides") {
  Mechanism m = example("academic");
  Classification c = classify(m);
  int D = m.require_agent("D");
  int u1 = m.require_node("u1");
  CHECK(dictator_at(m, D, u1, DictatorKind::Plain));
  CHECK(c.at(u1, DictatorKind::Plain) == std::vector<int>{D});
  CHECK(c.elected_kind(DictatorKind::Plain));
  CHECK(c.elected_kind(DictatorKind::Epistemic));
  CHECK(c.elected_kind(DictatorKind::SemiEpistemic));
  // Every leaf's shallowest dictator node is the root.
  for (const Classification::PathWitness& w :
       c.paths[static_cast<int>(DictatorKind::Plain)]) {
    CHECK(w.node == u1);
    CHECK(w.agent == D);
  }
}

TEST_CASE("the two-person rule elects nobody") {
  Mechanism m = example("two-person-rule");
  Classification c = classify(m);
  for (int v : m.decision_nodes())
    for (DictatorKind k : {DictatorKind::Plain, DictatorKind::Epistemic,
                           DictatorKind::SemiEpistemic}) {
      CAPTURE(m.node_name(v));
      CHECK(c.at(v, k).empty());
    }
  CHECK(!c.elected_kind(DictatorKind::Plain));
  CHECK(!c.elected_kind(DictatorKind::Epistemic));
  CHECK(!c.elected_kind(DictatorKind::SemiEpistemic));
}

TEST_CASE("the straw picker is a plain but never an epistemic dictator") {
  Mechanism m = example("drawing-straws");
  Classification c = classify(m);
  int B = m.require_agent("B");
  for (const char* node : {"u1", "u2", "u3"})
    CHECK(c.at(m.require_node(node), DictatorKind::Plain) ==
          std::vector<int>{B});
  CHECK(c.elected_kind(DictatorKind::Plain));
  CHECK(!c.elected_kind(DictatorKind::Epistemic));
  CHECK(!c.elected_kind(DictatorKind::SemiEpistemic));
}

TEST_CASE("a semi-epistemic dictator on every path need not be epistemic") {
  Mechanism m = example("mechanism-M");
  Classification c = classify(m);
  int B = m.require_agent("B"), C = m.require_agent("C");
  int u2 = m.require_node("u2"), u3 = m.require_node("u3");
  CHECK(!dictator_at(m, B, u2, DictatorKind::Epistemic));
  CHECK(dictator_at(m, B, u2, DictatorKind::SemiEpistemic));
  CHECK(dictator_at(m, C, u3, DictatorKind::SemiEpistemic));
  CHECK(c.elected_kind(DictatorKind::SemiEpistemic));
  CHECK(!c.elected_kind(DictatorKind::Epistemic));
  // Semi-epistemic dictators are plain dictators too.
  CHECK(c.elected_kind(DictatorKind::Plain));
}

TEST_CASE("conceding straws still elects a semi-epistemic dictator") {
  Mechanism m = example("mechanism-N");
  Classification c = classify(m);
  int B = m.require_agent("B");
  CHECK(dictator_at(m, B, m.require_node("u2"), DictatorKind::SemiEpistemic));
  CHECK(dictator_at(m, B, m.require_node("u3"), DictatorKind::SemiEpistemic));
  CHECK(c.elected_kind(DictatorKind::SemiEpistemic));
  CHECK(!c.elected_kind(DictatorKind::Epistemic));
}

TEST_CASE("kinds are ordered: epistemic implies semi-epistemic implies plain") {
  for (const std::string& name : example_names()) {
    Mechanism m = example(name);
    for (int v : m.decision_nodes())
      for (int a = 0; a < m.agent_count(); ++a) {
        CAPTURE(name);
        if (dictator_at(m, a, v, DictatorKind::Epistemic))
          CHECK(dictator_at(m, a, v, DictatorKind::SemiEpistemic));
        if (dictator_at(m, a, v, DictatorKind::SemiEpistemic))
          CHECK(dictator_at(m, a, v, DictatorKind::Plain));
      }
  }
}

TEST_CASE("path witnesses cover every leaf of an elected dictatorship") {
  Mechanism m = example("academic");
  Classification c = classify(m);
  const auto& paths = c.paths[static_cast<int>(DictatorKind::Plain)];
  REQUIRE(paths.size() == m.leaves().size());
  for (size_t i = 0; i < paths.size(); ++i) {
    CHECK(paths[i].leaf == m.leaves()[i]);
    CHECK(paths[i].node >= 0);
  }
  // Without an elected dictatorship some path carries no witness.
  Classification none = classify(example("two-person-rule"));
  bool missing = false;
  for (const auto& w : none.paths[static_cast<int>(DictatorKind::Plain)])
    missing = missing || w.node == -1;
  CHECK(missing);
}

TEST_CASE("dictatorship is defined at decision nodes only") {
  Mechanism m = example("senate");
  CHECK_THROWS_WITH_AS(
      dictator_at(m, 0, m.require_node("v1"), DictatorKind::Plain),
      doctest::Contains("NotDecisionNode"), Error);
}

TEST_CASE("display names of the three kinds") {
  CHECK(std::string(to_string(DictatorKind::Plain)) == "dictator");
  CHECK(std::string(to_string(DictatorKind::Epistemic)) ==
        "epistemic-dictator");
  CHECK(std::string(to_string(DictatorKind::SemiEpistemic)) ==
        "semi-epistemic-dictator");
}
