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

// Release gate: every check below must pass before the artifact ships. Each
// criterion prints exactly one [PASS]/[FAIL] line; the exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "respgap/classify.hpp"
#include "respgap/responsibility.hpp"
#include "respgap/text.hpp"
#include "respgap/verify.hpp"

using namespace respgap;

namespace {

std::string g_cli;  // path to the command line binary, for criterion 9
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

bool expect(bool ok, const std::string& what) {
  if (!ok) note("expected " + what);
  return ok;
}

std::set<std::string> solved(const std::string& ex, const std::string& agent,
                             Outcome o, Semantics s) {
  Mechanism m = example(ex);
  StrategySet set = solve(m, m.require_agent(agent), o, s);
  std::vector<std::string> names = m.names(set.nodes);
  return {names.begin(), names.end()};
}

std::set<std::string> gap(const std::string& ex, RespSemantics s) {
  Mechanism m = example(ex);
  std::vector<std::string> names = m.names(analyze(m, s).gap);
  return {names.begin(), names.end()};
}

using S = std::set<std::string>;

bool criterion1() {
  bool ok = true;
  ok &= expect(solved("two-person-rule", "P", Outcome::No, Semantics::Win) ==
                   S{"u1", "v1", "v2"},
               "win_P(No) = {u1, v1, v2}");
  ok &= expect(solved("two-person-rule", "P", Outcome::Yes, Semantics::Win) ==
                   S{"v3"},
               "win_P(Yes) = {v3}");
  ok &= expect(solved("two-person-rule", "A", Outcome::No, Semantics::Win) ==
                   S{"u1", "u2", "v1", "v2"},
               "win_A(No) = {u1, u2, v1, v2}");
  ok &= expect(solved("two-person-rule", "A", Outcome::Yes, Semantics::Win) ==
                   S{"v3"},
               "win_A(Yes) = {v3}");
  ok &= expect(solved("drawing-straws", "B", Outcome::Yes, Semantics::EWin) ==
                   S{"v1", "v4"},
               "ewin_B(Yes) = {v1, v4}");
  // The root joins u2, u3, v1, v4 by closure over children: B does not act
  // at u1 and both subtrees are already won.
  ok &= expect(solved("drawing-straws", "B", Outcome::Yes, Semantics::Win) ==
                   S{"u1", "u2", "u3", "v1", "v4"},
               "win_B(Yes) = {u1, u2, u3, v1, v4}");
  return ok;
}

bool criterion2() {
  Mechanism m = example("confusion");
  int A = m.require_agent("A");
  StrategySet uwin = solve(m, A, Outcome::Yes, Semantics::UWin);
  StrategySet ewin = solve(m, A, Outcome::Yes, Semantics::EWin);
  bool ok = true;
  ok &= expect(!uwin.contains(m.require_node("u4")), "u4 outside uwin_A(Yes)");
  ok &= expect(ewin.contains(m.require_node("u4")), "u4 inside ewin_A(Yes)");
  ok &= expect(uwin.contains(m.require_node("u7")), "u7 inside uwin_A(Yes)");
  Report r = analyze(m, RespSemantics::Epistemic);
  for (int leaf : m.leaves())
    ok &= expect(r.at(leaf, A).responsible,
                 "epistemic responsibility of A at " + m.node_name(leaf));
  return ok;
}

bool criterion3() {
  bool ok = true;
  ok &= expect(gap("two-person-rule", RespSemantics::Counterfactual) ==
                   S{"v1", "v2"},
               "counterfactual gap {v1, v2}");
  ok &= expect(gap("senate", RespSemantics::Counterfactual) == S{"v1", "v4"},
               "counterfactual gap {v1, v4}");
  ok &= expect(gap("academic", RespSemantics::Counterfactual).empty(),
               "no counterfactual gap in the delegation mechanism");
  ok &= expect(gap("mechanism-M", RespSemantics::Epistemic).empty(),
               "no epistemic gap in mechanism-M");
  ok &= expect(gap("mechanism-N", RespSemantics::Epistemic).count("v2") == 1,
               "epistemic gap of mechanism-N containing v2");
  return ok;
}

bool criterion4() {
  bool ok = true;
  {
    Mechanism m = example("academic");
    Classification c = classify(m);
    ok &= expect(c.elected_kind(DictatorKind::Plain),
                 "an elected dictatorship with a delegating dean");
    ok &= expect(c.at(m.require_node("u1"), DictatorKind::Plain) ==
                     std::vector<int>{m.require_agent("D")},
                 "D as the dictator at u1");
  }
  {
    Mechanism m = example("two-person-rule");
    Classification c = classify(m);
    bool nobody = true;
    for (int v : m.decision_nodes())
      nobody = nobody && c.at(v, DictatorKind::Plain).empty();
    ok &= expect(nobody, "no dictator anywhere under the two-person rule");
  }
  {
    Mechanism m = example("mechanism-M");
    Classification c = classify(m);
    ok &= expect(c.elected_kind(DictatorKind::SemiEpistemic),
                 "mechanism-M elected semi-epistemic");
    ok &= expect(!c.elected_kind(DictatorKind::Epistemic),
                 "mechanism-M not elected epistemic");
    ok &= expect(dictator_at(m, m.require_agent("B"), m.require_node("u2"),
                             DictatorKind::SemiEpistemic),
                 "B semi-epistemic at u2");
    ok &= expect(dictator_at(m, m.require_agent("C"), m.require_node("u3"),
                             DictatorKind::SemiEpistemic),
                 "C semi-epistemic at u3");
  }
  ok &= expect(classify(example("mechanism-N"))
                   .elected_kind(DictatorKind::SemiEpistemic),
               "mechanism-N elected semi-epistemic");
  return ok;
}

bool report_ok(const VerificationReport& r, const std::string& what) {
  bool ok = expect(r.ok(), what + " with 0 failures");
  ok &= expect(r.mechanisms > 0, what + " over a non-empty population");
  return ok;
}

bool criterion5() {
  return report_ok(verify_theorem1(default_theorem1_config(), 8),
                   "gap-free iff elected dictatorship, exhaustive");
}

bool criterion6() {
  bool ok = true;
  for (const EnumerationConfig& cfg :
       {default_partition_config(), default_sampled_config()}) {
    VerificationReport two = verify_theorem2(cfg, 8);
    VerificationReport three = verify_theorem3(cfg, 8);
    ok &= report_ok(two, "elected epistemic implies gap-free");
    ok &= report_ok(three, "gap-free implies elected semi-epistemic");
    ok &= expect(two.properties.size() == 2 && two.properties[1].passed == 1,
                 "converse falsified on mechanism-M");
    ok &= expect(
        three.properties.size() == 2 && three.properties[1].passed == 1,
        "strictness witnessed by mechanism-N");
  }
  return ok;
}

bool criterion7() {
  bool ok = true;
  for (const EnumerationConfig& cfg :
       {default_theorem1_config(), default_partition_config(),
        default_sampled_config()}) {
    VerificationReport r = verify_lemmas(cfg, 8);
    ok &= report_ok(r, "lemma suite");
    for (const PropertyTally& t : r.properties)
      ok &= expect(t.failed == 0, t.property + " with 0 failures");
  }
  return ok;
}

bool criterion8() {
  bool ok = true;
  EnumerationConfig sampled = default_sampled_config();
  sampled.sample_count = 2000;
  for (const EnumerationConfig& cfg :
       {default_theorem1_config(), default_partition_config(), sampled}) {
    VerificationReport r = verify_oracles(cfg, 8);
    ok &= report_ok(r, "oracle agreement");
    for (const PropertyTally& t : r.properties)
      ok &= expect(t.checked > 0, t.property + " checked on some mechanisms");
  }
  return ok;
}

std::string run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  if (status != 0) out += "\n<exit " + std::to_string(status) + ">";
  return out;
}

bool criterion9() {
  if (g_cli.empty()) {
    note("command line binary path missing (pass it as argv[1])");
    return false;
  }
  bool ok = true;
  for (const char* args :
       {"verify --theorem 2 --format json",
        "verify --theorem lemmas --mode sampled --samples 2000 --seed 5 "
        "--format json"}) {
    std::string serial = run_cli(std::string(args) + " --jobs 1");
    std::string parallel = run_cli(std::string(args) + " --jobs 8");
    ok &= expect(!serial.empty() && serial == parallel,
                 std::string("byte-identical reports for '") + args + "'");
  }
  return ok;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<bool()> check;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "strategic ability sets on the bundled mechanisms", 1.0,
       criterion1},
      {2, "uniform versus epistemic ability under planned confusion", 1.0,
       criterion2},
      {3, "responsibility gap detection", 1.0, criterion3},
      {4, "dictatorship classification", 1.0, criterion4},
      {5, "bounded verification: gap-free iff elected dictatorship", 300.0,
       criterion5},
      {6, "bounded verification: epistemic implications and their limits",
       300.0, criterion6},
      {7, "bounded verification: structural lemma suite", 300.0, criterion7},
      {8, "solver agreement with assignment-sweep oracles", 300.0,
       criterion8},
      {9, "byte-identical parallel verification reports", 300.0, criterion9},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    g_notes.clear();
    bool ok = false;
    std::string error;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.limit_seconds) {
      ok = false;
      note("finished within " + std::to_string(c.limit_seconds) + " s");
    }
    if (!error.empty()) note("no exception, got: " + error);
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL",
                c.number, c.title, elapsed);
    for (const std::string& n : g_notes)
      std::printf("       - %s\n", n.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %d criteria passed\n",
                static_cast<int>(criteria.size()));
  else
    std::printf("%d of %d criteria failed\n", failures,
                static_cast<int>(criteria.size()));
  return failures;
}
