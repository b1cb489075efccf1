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

#include "respgap/verify.hpp"

#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "respgap/classify.hpp"
#include "respgap/responsibility.hpp"
#include "respgap/text.hpp"

namespace respgap {

long long VerificationReport::failed() const {
  long long total = 0;
  for (const PropertyTally& t : properties) total += t.failed;
  return total;
}

namespace {

constexpr size_t kBatch = 2048;

struct Sink {
  std::vector<PropertyTally> tallies;
  std::vector<Counterexample> ces;

  explicit Sink(const std::vector<std::string>& props) {
    for (const std::string& p : props) tallies.push_back({p, 0, 0, 0});
  }

  void record(int prop, bool pass, const Mechanism& m,
              const std::string& explanation) {
    PropertyTally& t = tallies[prop];
    ++t.checked;
    if (pass) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (ces.size() < kMaxCounterexamples)
      ces.push_back({t.property, serialize(m), explanation});
  }

  void merge(const Sink& o) {
    for (size_t i = 0; i < tallies.size(); ++i) {
      tallies[i].checked += o.tallies[i].checked;
      tallies[i].passed += o.tallies[i].passed;
      tallies[i].failed += o.tallies[i].failed;
    }
    for (const Counterexample& ce : o.ces) {
      if (ces.size() >= kMaxCounterexamples) break;
      ces.push_back(ce);
    }
  }
};

using CheckFn = std::function<void(const Mechanism&, Sink&)>;

// Generation is serial; checks run on contiguous batch slices and merge in
// slice order, so the report is identical for any worker count.
VerificationReport drive(const std::string& name,
                         const EnumerationConfig& cfg, int jobs,
                         const std::vector<std::string>& props,
                         const CheckFn& check,
                         const std::function<void(Sink&)>& epilogue) {
  auto start = std::chrono::steady_clock::now();
  if (jobs < 1) jobs = 1;
  VerificationReport rep;
  rep.name = name;
  rep.config = cfg;
  Sink global(props);

  std::vector<Mechanism> batch;
  batch.reserve(kBatch);
  auto flush = [&] {
    if (batch.empty()) return;
    int n = static_cast<int>(batch.size());
    int slices = std::min(jobs, n);
    std::vector<Sink> sinks(slices, Sink(props));
    std::vector<std::thread> workers;
    for (int s = 0; s < slices; ++s) {
      int lo = static_cast<int>(static_cast<long long>(n) * s / slices);
      int hi = static_cast<int>(static_cast<long long>(n) * (s + 1) / slices);
      workers.emplace_back([&, s, lo, hi] {
        for (int i = lo; i < hi; ++i) check(batch[i], sinks[s]);
      });
    }
    for (std::thread& t : workers) t.join();
    for (const Sink& s : sinks) global.merge(s);
    batch.clear();
  };

  rep.mechanisms = enumerate(cfg, [&](const Mechanism& m) {
    batch.push_back(m);
    if (batch.size() >= kBatch) flush();
    return true;
  });
  flush();
  if (epilogue) epilogue(global);

  rep.properties = global.tallies;
  rep.counterexamples = global.ces;
  rep.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::string yn(bool b) { return b ? "true" : "false"; }

}  // namespace

VerificationReport verify_theorem1(const EnumerationConfig& config,
                                   int jobs) {
  return drive(
      "theorem-1", config, jobs, {"gap-free-iff-elected-dictatorship"},
      [](const Mechanism& m, Sink& sink) {
        bool gf = analyze(m, RespSemantics::Counterfactual).gap_free();
        bool el = classify(m).elected_kind(DictatorKind::Plain);
        sink.record(0, gf == el, m,
                    "gap-free=" + yn(gf) + " elected-dictatorship=" + yn(el));
      },
      nullptr);
}

VerificationReport verify_theorem2(const EnumerationConfig& config,
                                   int jobs) {
  return drive(
      "theorem-2", config, jobs,
      {"elected-epistemic-dictatorship-implies-epistemic-gap-free",
       "converse-fails-on-bundled-mechanism-M"},
      [](const Mechanism& m, Sink& sink) {
        bool el = classify(m).elected_kind(DictatorKind::Epistemic);
        bool gf = !el || analyze(m, RespSemantics::Epistemic).gap_free();
        sink.record(0, gf, m,
                    "elected-epistemic-dictatorship=true "
                    "epistemic-gap-free=false");
      },
      [](Sink& sink) {
        Mechanism m = example("mechanism-M");
        bool gf = analyze(m, RespSemantics::Epistemic).gap_free();
        bool el = classify(m).elected_kind(DictatorKind::Epistemic);
        sink.record(1, gf && !el, m,
                    "expected epistemic-gap-free without an elected "
                    "epistemic dictatorship; got gap-free=" +
                        yn(gf) + " elected=" + yn(el));
      });
}

VerificationReport verify_theorem3(const EnumerationConfig& config,
                                   int jobs) {
  return drive(
      "theorem-3", config, jobs,
      {"epistemic-gap-free-implies-elected-semi-epistemic-dictatorship",
       "inclusion-strict-on-bundled-mechanism-N"},
      [](const Mechanism& m, Sink& sink) {
        bool gf = analyze(m, RespSemantics::Epistemic).gap_free();
        bool el =
            !gf || classify(m).elected_kind(DictatorKind::SemiEpistemic);
        sink.record(0, el, m,
                    "epistemic-gap-free=true "
                    "elected-semi-epistemic-dictatorship=false");
      },
      [](Sink& sink) {
        Mechanism m = example("mechanism-N");
        bool el = classify(m).elected_kind(DictatorKind::SemiEpistemic);
        bool gf = analyze(m, RespSemantics::Epistemic).gap_free();
        sink.record(1, el && !gf, m,
                    "expected an elected semi-epistemic dictatorship that "
                    "is not epistemic-gap-free; got elected=" +
                        yn(el) + " gap-free=" + yn(gf));
      });
}

VerificationReport verify_lemmas(const EnumerationConfig& config, int jobs) {
  std::vector<std::string> props = {
      "uwin-subset-of-ewin", "ewin-subset-of-win",  "two-hares-disjointness",
      "base",                "next-all",            "next-exists",
      "step-down",           "step-up",             "perfect-info-collapse",
  };
  return drive(
      "lemmas", config, jobs, props,
      [](const Mechanism& m, Sink& sink) {
        int agents = m.agent_count();
        const Outcome outs[2] = {Outcome::Yes, Outcome::No};
        std::vector<std::vector<StrategySet>> win(agents), uwin(agents),
            ewin(agents);
        for (int a = 0; a < agents; ++a)
          for (Outcome o : outs) {
            win[a].push_back(solve(m, a, o, Semantics::Win));
            uwin[a].push_back(solve(m, a, o, Semantics::UWin));
            ewin[a].push_back(solve(m, a, o, Semantics::EWin));
          }
        auto node = [&](int v) { return m.node_name(v); };

        auto subset_check = [&](int prop,
                                const std::vector<std::vector<StrategySet>>&
                                    small,
                                const std::vector<std::vector<StrategySet>>&
                                    big, const char* names) {
          for (int a = 0; a < agents; ++a)
            for (int oi = 0; oi < 2; ++oi)
              for (int v : small[a][oi].nodes)
                if (!big[a][oi].contains(v)) {
                  sink.record(prop, false, m,
                              std::string(names) + " broken at " + node(v) +
                                  " for agent " + m.agent_name(a));
                  return;
                }
          sink.record(prop, true, m, "");
        };
        subset_check(0, uwin, ewin, "uwin within ewin");
        subset_check(1, ewin, win, "ewin within win");

        bool ok = true;
        std::string why;
        for (int a = 0; a < agents && ok; ++a)
          for (int b = 0; b < agents && ok; ++b) {
            if (a == b) continue;
            for (int oi = 0; oi < 2 && ok; ++oi)
              for (int v : win[a][oi].nodes)
                if (win[b][1 - oi].contains(v)) {
                  ok = false;
                  why = node(v) + " lies in both opposing win sets of " +
                        m.agent_name(a) + " and " + m.agent_name(b);
                  break;
                }
          }
        sink.record(2, ok, m, why);

        ok = true;
        why.clear();
        for (int a = 0; a < agents && ok; ++a)
          for (int oi = 0; oi < 2 && ok; ++oi)
            for (int v : ewin[a][oi].nodes)
              if (m.is_leaf(v) && m.label(v) != outs[oi]) {
                ok = false;
                why = "leaf " + node(v) + " mislabeled inside ewin";
                break;
              }
        sink.record(3, ok, m, why);

        ok = true;
        why.clear();
        for (int a = 0; a < agents && ok; ++a)
          for (int oi = 0; oi < 2 && ok; ++oi)
            for (int v : ewin[a][oi].nodes) {
              if (m.is_leaf(v)) continue;
              bool some = false;
              for (int d = 0; d < m.action_count(v, a) && !some; ++d) {
                some = true;
                for (int u : m.next(a, d, v))
                  if (!ewin[a][oi].contains(u)) some = false;
              }
              if (!some) {
                ok = false;
                why = "no action keeps ewin at " + node(v);
                break;
              }
            }
        sink.record(4, ok, m, why);

        ok = true;
        why.clear();
        for (int a = 0; a < agents && ok; ++a)
          for (int oi = 0; oi < 2 && ok; ++oi)
            for (int v : m.decision_nodes()) {
              if (win[a][oi].contains(v)) continue;
              for (int d = 0; d < m.action_count(v, a); ++d) {
                bool inside = true;
                for (int u : m.next(a, d, v))
                  if (!win[a][oi].contains(u)) inside = false;
                if (inside) {
                  ok = false;
                  why = "action " + m.action_name(v, a, d) + " at " +
                        node(v) + " forces win from outside it";
                  break;
                }
              }
              if (!ok) break;
            }
        sink.record(5, ok, m, why);

        ok = true;
        why.clear();
        for (int a = 0; a < agents && ok; ++a)
          for (int oi = 0; oi < 2 && ok; ++oi)
            for (int v : ewin[a][oi].nodes) {
              if (m.is_leaf(v)) continue;
              if (win[a][1 - oi].contains(v)) continue;
              bool some = false;
              for (int u : m.children(v))
                if (ewin[a][oi].contains(u) && !win[a][1 - oi].contains(u))
                  some = true;
              if (!some) {
                ok = false;
                why = "no child of " + node(v) + " keeps the step-down pair";
                break;
              }
            }
        sink.record(6, ok, m, why);

        if (analyze(m, RespSemantics::Epistemic).gap_free()) {
          ok = true;
          why.clear();
          for (int a = 0; a < agents && ok; ++a)
            for (int oi = 0; oi < 2 && ok; ++oi)
              for (int v : ewin[a][oi].nodes) {
                if (win[a][1 - oi].contains(v)) continue;
                bool some = false;
                for (int u : m.decision_path(v)) {
                  if (u == v) continue;
                  for (int b = 0; b < agents; ++b)
                    if (ewin[b][1 - oi].contains(u)) some = true;
                }
                if (!some) {
                  ok = false;
                  why = "no strict ancestor of " + node(v) +
                        " carries the opposite ewin membership";
                  break;
                }
              }
          sink.record(7, ok, m, why);
        }

        if (m.perfect_information()) {
          ok = true;
          why.clear();
          for (int a = 0; a < agents && ok; ++a)
            for (int oi = 0; oi < 2; ++oi)
              if (win[a][oi].nodes != uwin[a][oi].nodes ||
                  win[a][oi].nodes != ewin[a][oi].nodes) {
                ok = false;
                why = "win, uwin, ewin differ for agent " + m.agent_name(a);
                break;
              }
          sink.record(8, ok, m, why);
        }
      },
      nullptr);
}

VerificationReport verify_oracles(const EnumerationConfig& config, int jobs) {
  return drive(
      "oracles", config, jobs,
      {"win-matches-assignment-oracle", "uwin-matches-assignment-oracle"},
      [](const Mechanism& m, Sink& sink) {
        if (m.node_count() > 12) return;
        const Outcome outs[2] = {Outcome::Yes, Outcome::No};
        for (int prop = 0; prop < 2; ++prop) {
          bool ok = true;
          std::string why;
          for (int a = 0; a < m.agent_count() && ok; ++a)
            for (Outcome o : outs) {
              Semantics s = prop == 0 ? Semantics::Win : Semantics::UWin;
              std::vector<int> got = solve(m, a, o, s).nodes;
              std::vector<int> want = prop == 0 ? oracle_win(m, a, o)
                                                : oracle_uwin(m, a, o);
              if (got != want) {
                ok = false;
                why = "solver and oracle disagree for agent " +
                      m.agent_name(a) + " outcome " + to_string(o);
                break;
              }
            }
          sink.record(prop, ok, m, why);
        }
      },
      nullptr);
}

EnumerationConfig default_theorem1_config() {
  EnumerationConfig c;
  c.agent_count = 2;
  c.max_depth = 2;
  c.max_children = 2;
  c.max_actions = 2;
  c.max_decision_nodes = 5;
  c.partition_mode = PartitionMode::PerfectOnly;
  c.mode = EnumerationMode::Exhaustive;
  return c;
}

EnumerationConfig default_partition_config() {
  EnumerationConfig c = default_theorem1_config();
  c.partition_mode = PartitionMode::ExhaustivePartitions;
  return c;
}

EnumerationConfig default_sampled_config() {
  EnumerationConfig c;
  c.agent_count = 3;
  c.max_depth = 3;
  c.max_children = 3;
  c.max_actions = 3;
  c.max_decision_nodes = 7;
  c.partition_mode = PartitionMode::SampledPartitions;
  c.mode = EnumerationMode::Sampled;
  c.sample_count = 10000;
  c.seed = 1;
  return c;
}

namespace {

const char* partition_mode_name(PartitionMode p) {
  switch (p) {
    case PartitionMode::PerfectOnly:
      return "perfect-only";
    case PartitionMode::ExhaustivePartitions:
      return "exhaustive-partitions";
    case PartitionMode::SampledPartitions:
      return "sampled-partitions";
  }
  return "?";
}

}  // namespace

std::string report_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  for (const VerificationReport& r : reports) {
    out << "report: " << r.name << " (bounded verification, not a proof)\n";
    out << "  mechanisms: " << r.mechanisms << "\n";
    for (const PropertyTally& t : r.properties)
      out << "  property: " << t.property << "\n    checked: " << t.checked
          << "  passed: " << t.passed << "  failed: " << t.failed << "\n";
    if (r.counterexamples.empty()) {
      out << "  counterexamples: none\n";
    } else {
      for (const Counterexample& ce : r.counterexamples)
        out << "  counterexample (" << ce.property << "): " << ce.explanation
            << "\n" << ce.mechanism;
    }
  }
  return out.str();
}

std::string report_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json doc;
  doc["note"] =
      "bounded verification over a finite population; evidence, not proof";
  doc["reports"] = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) {
    nlohmann::ordered_json jr;
    jr["name"] = r.name;
    jr["config"] = {
        {"agent-count", r.config.agent_count},
        {"max-depth", r.config.max_depth},
        {"max-children", r.config.max_children},
        {"max-actions", r.config.max_actions},
        {"max-decision-nodes", r.config.max_decision_nodes},
        {"partition-mode", partition_mode_name(r.config.partition_mode)},
        {"mode", r.config.mode == EnumerationMode::Exhaustive ? "exhaustive"
                                                              : "sampled"},
        {"sample-count", r.config.sample_count},
        {"seed", r.config.seed},
        {"budget", r.config.budget},
    };
    jr["mechanisms"] = r.mechanisms;
    jr["properties"] = nlohmann::ordered_json::array();
    for (const PropertyTally& t : r.properties)
      jr["properties"].push_back({{"property", t.property},
                                  {"checked", t.checked},
                                  {"passed", t.passed},
                                  {"failed", t.failed}});
    jr["counterexamples"] = nlohmann::ordered_json::array();
    for (const Counterexample& ce : r.counterexamples)
      jr["counterexamples"].push_back({{"property", ce.property},
                                       {"mechanism", ce.mechanism},
                                       {"explanation", ce.explanation}});
    doc["reports"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

}  // namespace respgap
