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

#include <functional>

#include "respgap/mechanism.hpp"

namespace respgap {

/// PerfectOnly emits trivial partitions, ExhaustivePartitions every
/// admissible partition combination per agent, SampledPartitions a random
/// one per draw.
enum class PartitionMode : std::uint8_t {
  PerfectOnly,
  ExhaustivePartitions,
  SampledPartitions,
};

enum class EnumerationMode : std::uint8_t { Exhaustive, Sampled };

struct EnumerationConfig {
  int agent_count = 2;
  int max_depth = 2;
  int max_children = 2;
  int max_actions = 2;        // per decider
  int max_decision_nodes = 5;
  PartitionMode partition_mode = PartitionMode::PerfectOnly;
  EnumerationMode mode = EnumerationMode::Exhaustive;
  long long sample_count = 10000;
  std::uint64_t seed = 1;
  long long budget = 10'000'000;  // candidate visits before BudgetExceeded
};

/// Streams mechanisms from the configured space and returns how many were
/// emitted. Exhaustive mode walks every mechanism once up to relabeling of
/// nodes and actions (and, with partitions, up to automorphisms of the
/// underlying mechanism); sampled mode draws seed-deterministically from the
/// same space. Stops early when the callback returns false. Throws
/// BudgetExceeded when the candidate walk outgrows config.budget.
long long enumerate(const EnumerationConfig& config,
                    const std::function<bool(const Mechanism&)>& yield);

struct PropertyTally {
  std::string property;
  long long checked = 0;
  long long passed = 0;
  long long failed = 0;
};

struct Counterexample {
  std::string property;
  std::string mechanism;  // canonical text form
  std::string explanation;
};

inline constexpr int kMaxCounterexamples = 10;

/// Outcome of one bounded verification run. Holds per-property tallies plus
/// up to kMaxCounterexamples offending mechanisms in enumeration order.
/// These runs check finitely many bounded instances; they are evidence, not
/// proofs.
struct VerificationReport {
  std::string name;
  EnumerationConfig config;
  long long mechanisms = 0;
  std::vector<PropertyTally> properties;
  std::vector<Counterexample> counterexamples;
  double wall_time_seconds = 0;  // never serialized; reports stay
                                 // byte-identical across runs

  long long failed() const;
  bool ok() const { return failed() == 0; }
};

/// Gap-free iff elected dictatorship over a perfect-information population.
VerificationReport verify_theorem1(const EnumerationConfig& config,
                                   int jobs = 1);
/// Elected epistemic dictatorship implies epistemic-gap-free; the converse
/// is falsified on the bundled mechanism-M.
VerificationReport verify_theorem2(const EnumerationConfig& config,
                                   int jobs = 1);
/// Epistemic-gap-free implies elected semi-epistemic dictatorship; the
/// inclusion is strict, witnessed by the bundled mechanism-N.
VerificationReport verify_theorem3(const EnumerationConfig& config,
                                   int jobs = 1);
/// Universally quantified structural properties of the three ability sets:
/// containments, two-hares disjointness, base, next-all, next-exists,
/// step-down, step-up (on epistemic-gap-free instances only) and the
/// perfect-information collapse ewin = uwin = win.
VerificationReport verify_lemmas(const EnumerationConfig& config,
                                 int jobs = 1);
/// Cross-checks solve() against the assignment-sweep oracles on every
/// enumerated mechanism with at most 12 nodes.
VerificationReport verify_oracles(const EnumerationConfig& config,
                                  int jobs = 1);

/// Default populations; see the acceptance tests for the intended pairing.
EnumerationConfig default_theorem1_config();
EnumerationConfig default_partition_config();
EnumerationConfig default_sampled_config();

std::string report_to_text(const std::vector<VerificationReport>& reports);
std::string report_to_json(const std::vector<VerificationReport>& reports);

}  // namespace respgap
