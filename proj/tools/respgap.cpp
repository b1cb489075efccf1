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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "respgap/classify.hpp"
#include "respgap/responsibility.hpp"
#include "respgap/solver.hpp"
#include "respgap/text.hpp"
#include "respgap/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace respgap;

constexpr int kExitFindings = 1;
constexpr int kExitInputError = 2;

struct InputSource {
  std::string path;     // file path or "-"
  std::string example;  // bundled example name
};

void add_input(CLI::App* cmd, InputSource& in) {
  cmd->add_option("input", in.path, "mechanism file, or - for stdin");
  cmd->add_option("--example", in.example, "bundled example name");
}

std::string read_source(const InputSource& in) {
  if (in.path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(in.path);
  if (!file) throw Error("InputError", "cannot read " + in.path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// Loads from exactly one source; parse or validation failures abort with
// exit code 2.
Mechanism load(const InputSource& in) {
  if (in.path.empty() == in.example.empty())
    throw Error("InputError",
                "provide exactly one of a file path, -, or --example");
  if (!in.example.empty()) return example(in.example);
  ParseResult parsed = parse(read_source(in));
  if (!parsed.ok()) {
    for (const ParseError& e : parsed.errors)
      std::cerr << "line " << e.line << ": " << e.code << ": " << e.message
                << "\n";
    throw Error("InputError", "mechanism text does not parse");
  }
  ValidationResult vr = validate(*parsed.document);
  if (!vr.ok()) {
    for (const ValidationError& e : vr.errors)
      std::cerr << e.code << " at " << e.where << ": " << e.message << "\n";
    throw Error("InputError", "mechanism does not validate");
  }
  return *std::move(vr.mechanism);
}

Outcome parse_outcome(const std::string& s) {
  if (s == "Yes") return Outcome::Yes;
  if (s == "No") return Outcome::No;
  throw Error("InputError", "outcome must be Yes or No, got " + s);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

int run_validate(const InputSource& in, const std::string& format) {
  // load() already prints diagnostics and exits 2 via the caller.
  Mechanism m = load(in);
  if (format == "json") {
    ordered_json doc;
    doc["valid"] = true;
    doc["name"] = "";
    doc["nodes"] = m.node_count();
    doc["agents"] = m.agent_count();
    doc["perfect-information"] = m.perfect_information();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ok: " << m.node_count() << " nodes, " << m.agent_count()
              << " agents, "
              << (m.perfect_information() ? "perfect" : "imperfect")
              << " information\n";
  }
  return 0;
}

int run_solve(const InputSource& in, const std::string& format,
              const std::string& agent, const std::string& outcome,
              const std::string& semantics) {
  Mechanism m = load(in);
  Semantics sem;
  if (semantics == "win")
    sem = Semantics::Win;
  else if (semantics == "uwin")
    sem = Semantics::UWin;
  else if (semantics == "ewin")
    sem = Semantics::EWin;
  else
    throw Error("InputError", "semantics must be win, uwin or ewin");
  StrategySet s = solve(m, agent, parse_outcome(outcome), sem);
  if (format == "json") {
    ordered_json doc;
    doc["agent"] = agent;
    doc["outcome"] = outcome;
    doc["semantics"] = semantics;
    doc["nodes"] = m.names(s.nodes);
    doc["witnesses"] = ordered_json::array();
    for (size_t i = 0; i < s.nodes.size(); ++i) {
      ordered_json w;
      w["node"] = m.node_name(s.nodes[i]);
      if (s.witness[i] >= 0)
        w["action"] = m.action_name(s.nodes[i], s.agent, s.witness[i]);
      else
        w["action"] = nullptr;
      doc["witnesses"].push_back(std::move(w));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << semantics << "_" << agent << "(" << outcome << ") = {"
              << join(m.names(s.nodes)) << "}\n";
    for (size_t i = 0; i < s.nodes.size(); ++i)
      if (s.witness[i] >= 0)
        std::cout << "  " << m.node_name(s.nodes[i]) << ": "
                  << m.action_name(s.nodes[i], s.agent, s.witness[i]) << "\n";
  }
  return 0;
}

int run_gaps(const InputSource& in, const std::string& format,
             const std::string& semantics, bool strict) {
  Mechanism m = load(in);
  RespSemantics sem;
  if (semantics == "counterfactual")
    sem = RespSemantics::Counterfactual;
  else if (semantics == "epistemic")
    sem = RespSemantics::Epistemic;
  else
    throw Error("InputError",
                "semantics must be counterfactual or epistemic");
  Report r = analyze(m, sem);
  if (format == "json") {
    ordered_json doc;
    doc["semantics"] = semantics;
    doc["verdicts"] = ordered_json::array();
    for (const Verdict& v : r.verdicts) {
      ordered_json jv;
      jv["leaf"] = m.node_name(v.leaf);
      jv["agent"] = m.agent_name(v.agent);
      jv["responsible"] = v.responsible;
      if (v.witness >= 0)
        jv["witness"] = m.node_name(v.witness);
      else
        jv["witness"] = nullptr;
      doc["verdicts"].push_back(std::move(jv));
    }
    doc["gap"] = m.names(r.gap);
    doc["gap-free"] = r.gap_free();
    std::cout << doc.dump(2) << "\n";
  } else {
    for (int leaf : m.leaves()) {
      std::vector<std::string> who;
      for (int a = 0; a < m.agent_count(); ++a) {
        const Verdict& v = r.at(leaf, a);
        if (v.responsible)
          who.push_back(m.agent_name(a) + " @ " + m.node_name(v.witness));
      }
      std::cout << "leaf " << m.node_name(leaf) << " ("
                << to_string(m.label(leaf)) << "): "
                << (who.empty() ? "nobody responsible" : join(who)) << "\n";
    }
    if (r.gap_free())
      std::cout << "gap: none\n";
    else
      std::cout << "gap: {" << join(m.names(r.gap)) << "}\n";
  }
  return strict && !r.gap_free() ? kExitFindings : 0;
}

int run_classify(const InputSource& in, const std::string& format) {
  Mechanism m = load(in);
  Classification c = classify(m);
  const DictatorKind kinds[3] = {DictatorKind::Plain, DictatorKind::Epistemic,
                                 DictatorKind::SemiEpistemic};
  const char* labels[3] = {"elected dictatorship",
                           "elected epistemic dictatorship",
                           "elected semi-epistemic dictatorship"};
  ordered_json doc;
  for (int k = 0; k < 3; ++k) {
    std::vector<std::string> witnesses;
    for (const Classification::PathWitness& w :
         c.paths[static_cast<size_t>(k)]) {
      if (w.node < 0) continue;
      std::string s = m.agent_name(w.agent) + " @ " + m.node_name(w.node);
      if (std::find(witnesses.begin(), witnesses.end(), s) == witnesses.end())
        witnesses.push_back(s);
    }
    if (format == "json") {
      ordered_json jk;
      jk["kind"] = to_string(kinds[k]);
      jk["elected"] = c.elected_kind(kinds[k]);
      jk["witnesses"] = witnesses;
      ordered_json nodes = ordered_json::object();
      for (int v : m.decision_nodes()) {
        std::vector<std::string> who;
        for (int a : c.at(v, kinds[k])) who.push_back(m.agent_name(a));
        if (!who.empty()) nodes[m.node_name(v)] = who;
      }
      jk["dictators"] = std::move(nodes);
      doc["classifications"].push_back(std::move(jk));
    } else {
      std::cout << labels[k] << ": "
                << (c.elected_kind(kinds[k]) ? "yes" : "no");
      if (c.elected_kind(kinds[k]) && !witnesses.empty())
        std::cout << " (" << join(witnesses) << ")";
      std::cout << "\n";
      for (int v : m.decision_nodes()) {
        std::vector<std::string> who;
        for (int a : c.at(v, kinds[k])) who.push_back(m.agent_name(a));
        if (!who.empty())
          std::cout << "  " << to_string(kinds[k]) << " at "
                    << m.node_name(v) << ": " << join(who) << "\n";
      }
    }
  }
  if (format == "json") std::cout << doc.dump(2) << "\n";
  return 0;
}

struct VerifyFlags {
  std::string theorem = "all";
  int max_depth = -1;
  int max_children = -1;
  int agents = -1;
  int max_actions = -1;
  int max_decision_nodes = -1;
  std::string partitions;
  std::string mode;
  long long samples = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  long long budget = -1;
  int jobs = 1;
};

EnumerationConfig apply_flags(EnumerationConfig cfg, const VerifyFlags& f) {
  if (f.max_depth >= 0) cfg.max_depth = f.max_depth;
  if (f.max_children >= 0) cfg.max_children = f.max_children;
  if (f.agents >= 0) cfg.agent_count = f.agents;
  if (f.max_actions >= 0) cfg.max_actions = f.max_actions;
  if (f.max_decision_nodes >= 0)
    cfg.max_decision_nodes = f.max_decision_nodes;
  if (f.samples >= 0) cfg.sample_count = f.samples;
  if (f.seed_set) cfg.seed = f.seed;
  if (f.budget >= 0) cfg.budget = f.budget;
  if (!f.partitions.empty()) {
    if (f.partitions == "perfect")
      cfg.partition_mode = PartitionMode::PerfectOnly;
    else if (f.partitions == "exhaustive")
      cfg.partition_mode = PartitionMode::ExhaustivePartitions;
    else if (f.partitions == "sampled")
      cfg.partition_mode = PartitionMode::SampledPartitions;
    else
      throw Error("InputError",
                  "partitions must be perfect, exhaustive or sampled");
  }
  if (!f.mode.empty()) {
    if (f.mode == "exhaustive")
      cfg.mode = EnumerationMode::Exhaustive;
    else if (f.mode == "sampled")
      cfg.mode = EnumerationMode::Sampled;
    else
      throw Error("InputError", "mode must be exhaustive or sampled");
  }
  return cfg;
}

int run_verify(const VerifyFlags& f, const std::string& format, bool strict) {
  EnumerationConfig base;
  if (f.theorem == "1")
    base = default_theorem1_config();
  else if (f.mode == "sampled")
    base = default_sampled_config();
  else
    base = default_partition_config();
  EnumerationConfig cfg = apply_flags(base, f);

  std::vector<VerificationReport> reports;
  if (f.theorem == "1") {
    reports.push_back(verify_theorem1(cfg, f.jobs));
  } else if (f.theorem == "2") {
    reports.push_back(verify_theorem2(cfg, f.jobs));
  } else if (f.theorem == "3") {
    reports.push_back(verify_theorem3(cfg, f.jobs));
  } else if (f.theorem == "lemmas") {
    reports.push_back(verify_lemmas(cfg, f.jobs));
  } else if (f.theorem == "oracles") {
    reports.push_back(verify_oracles(cfg, f.jobs));
  } else if (f.theorem == "all") {
    EnumerationConfig t1 = apply_flags(default_theorem1_config(), f);
    reports.push_back(verify_theorem1(t1, f.jobs));
    reports.push_back(verify_theorem2(cfg, f.jobs));
    reports.push_back(verify_theorem3(cfg, f.jobs));
    reports.push_back(verify_lemmas(cfg, f.jobs));
    reports.push_back(verify_oracles(t1, f.jobs));
  } else {
    throw Error("InputError",
                "--theorem must be 1, 2, 3, lemmas, oracles or all");
  }

  if (format == "json")
    std::cout << report_to_json(reports);
  else
    std::cout << report_to_text(reports);
  long long failed = 0;
  for (const VerificationReport& r : reports) failed += r.failed();
  return strict && failed > 0 ? kExitFindings : 0;
}

int run_examples(const std::string& action, const std::string& name,
                 const std::string& format) {
  if (action == "list") {
    if (format == "json") {
      ordered_json doc;
      doc["examples"] = example_names();
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const std::string& n : example_names()) std::cout << n << "\n";
    }
    return 0;
  }
  if (action == "show") {
    if (name.empty())
      throw Error("InputError", "examples show requires a name");
    std::cout << example_text(name);
    return 0;
  }
  throw Error("InputError", "examples action must be list or show");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of binary-outcome decision-making mechanisms"};
  app.require_subcommand(1);
  // Let --format appear after the subcommand as well.
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  InputSource in;
  std::string agent, outcome, solve_sem, gaps_sem = "counterfactual";
  bool strict = false;
  VerifyFlags vf;
  std::string ex_action = "list", ex_name;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a mechanism");
  add_input(validate_cmd, in);

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "compute a strategic-ability set");
  add_input(solve_cmd, in);
  solve_cmd->add_option("--agent", agent)->required();
  solve_cmd->add_option("--outcome", outcome)->required();
  solve_cmd->add_option("--semantics", solve_sem)->required();

  CLI::App* gaps_cmd =
      app.add_subcommand("gaps", "responsibility verdicts and the gap");
  add_input(gaps_cmd, in);
  gaps_cmd->add_option("--semantics", gaps_sem);
  gaps_cmd->add_flag("--strict", strict, "exit 1 when a gap exists");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "dictatorship classification");
  add_input(classify_cmd, in);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "bounded verification runs");
  verify_cmd->add_option("--theorem", vf.theorem,
                         "1, 2, 3, lemmas, oracles or all");
  verify_cmd->add_option("--max-depth", vf.max_depth);
  verify_cmd->add_option("--max-children", vf.max_children);
  verify_cmd->add_option("--agents", vf.agents);
  verify_cmd->add_option("--max-actions", vf.max_actions);
  verify_cmd->add_option("--max-decision-nodes", vf.max_decision_nodes);
  verify_cmd->add_option("--partitions", vf.partitions,
                         "perfect, exhaustive or sampled");
  verify_cmd->add_option("--mode", vf.mode, "exhaustive or sampled");
  verify_cmd->add_option("--samples", vf.samples);
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", vf.seed);
  verify_cmd->add_option("--budget", vf.budget);
  verify_cmd->add_option("--jobs", vf.jobs);
  verify_cmd->add_flag("--strict", strict, "exit 1 on any failed property");

  CLI::App* examples_cmd =
      app.add_subcommand("examples", "bundled example mechanisms");
  examples_cmd->add_option("action", ex_action, "list or show");
  examples_cmd->add_option("name", ex_name);

  CLI::App* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  add_input(dot_cmd, in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitInputError;
  }

  vf.seed_set = seed_opt->count() > 0;
  try {
    if (validate_cmd->parsed()) return run_validate(in, format);
    if (solve_cmd->parsed())
      return run_solve(in, format, agent, outcome, solve_sem);
    if (gaps_cmd->parsed()) return run_gaps(in, format, gaps_sem, strict);
    if (classify_cmd->parsed()) return run_classify(in, format);
    if (verify_cmd->parsed()) return run_verify(vf, format, strict);
    if (examples_cmd->parsed()) return run_examples(ex_action, ex_name, format);
    if (dot_cmd->parsed()) {
      std::cout << export_dot(load(in));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
