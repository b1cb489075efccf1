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

#include <array>
#include <utility>

#include "respgap/text.hpp"

namespace respgap {

namespace {

// Two parties must cooperate before the outcome can happen: P opens the
// gate, then A and B must both act. Nobody can force Yes alone.
const char* kTwoPersonRule = R"(mechanism "two-person-rule"
agents: P, A, B
root: u1
decision u1
  deciders: P
  actions: P = [Left, Right]
  map: [Left] -> v1 ; [Right] -> u2
decision u2
  deciders: A, B
  actions: A = [Left, Right] ; B = [Left, Right]
  map: [Left,Left] -> v2 ; [Left,Right] -> v2 ; [Right,Left] -> v2 ; [Right,Right] -> v3
leaf v1 = No
leaf v2 = No
leaf v3 = Yes
)";

// Two voters; on a tie a chairperson V decides.
const char* kSenate = R"(mechanism "senate"
agents: R, D, V
root: u1
decision u1
  deciders: R, D
  actions: R = [Yes, No] ; D = [Yes, No]
  map: [Yes,Yes] -> v4 ; [Yes,No] -> u2 ; [No,Yes] -> u2 ; [No,No] -> v1
decision u2
  deciders: V
  actions: V = [Yes, No]
  map: [Yes] -> v3 ; [No] -> v2
leaf v1 = No
leaf v2 = No
leaf v3 = Yes
leaf v4 = Yes
)";

// A dean either decides directly or delegates to a majority-vote committee.
const char* kAcademic = R"(mechanism "academic"
agents: D, A, B, C
root: u1
decision u1
  deciders: D
  actions: D = [Yes, Delegate, No]
  map: [Yes] -> v1 ; [Delegate] -> u2 ; [No] -> v4
decision u2
  deciders: A, B, C
  actions: A = [Yes, No] ; B = [Yes, No] ; C = [Yes, No]
  map: [Yes,Yes,Yes] -> v2 ; [Yes,Yes,No] -> v2 ; [Yes,No,Yes] -> v2 ; [No,Yes,Yes] -> v2 ; [Yes,No,No] -> v3 ; [No,Yes,No] -> v3 ; [No,No,Yes] -> v3 ; [No,No,No] -> v3
leaf v1 = Yes
leaf v2 = Yes
leaf v3 = No
leaf v4 = No
)";

// Single agent who can steer herself into (and out of) states where she can
// no longer tell where she is. From u4 she cannot uniformly force Yes, yet
// every route out of the confusion at u6 passes through u7 where she can.
const char* kConfusion = R"(mechanism "confusion"
agents: A
root: u1
decision u1
  deciders: A
  actions: A = [0, 1, 2]
  map: [0] -> v1 ; [1] -> u5 ; [2] -> u4
decision u5
  deciders: A
  actions: A = [0, 1, 2]
  map: [0] -> v2 ; [1] -> v2 ; [2] -> v2
decision u4
  deciders: A
  actions: A = [0, 1, 2]
  map: [0] -> v3 ; [1] -> v4 ; [2] -> u6
decision u6
  deciders: A
  actions: A = [0, 1, 2]
  map: [0] -> u7 ; [1] -> u7 ; [2] -> u7
decision u7
  deciders: A
  actions: A = [0, 1, 2]
  map: [0] -> v5 ; [1] -> v5 ; [2] -> v6
leaf v1 = No
leaf v2 = No
leaf v3 = No
leaf v4 = No
leaf v5 = No
leaf v6 = Yes
indist A: {u5, u6}
)";

// Alice hides a short and a long straw; Bob picks left or right without
// knowing which is which.
const char* kDrawingStraws = R"(mechanism "drawing-straws"
agents: A, B
root: u1
decision u1
  deciders: A
  actions: A = [0, 1]
  map: [0] -> u2 ; [1] -> u3
decision u2
  deciders: B
  actions: B = [0, 1]
  map: [0] -> v1 ; [1] -> v2
decision u3
  deciders: B
  actions: B = [0, 1]
  map: [0] -> v3 ; [1] -> v4
leaf v1 = Yes
leaf v2 = No
leaf v3 = No
leaf v4 = Yes
indist B: {u2, u3}
)";

// Epistemic-gap-free, yet the path u1-u2-v1 carries no epistemic dictator.
// B cannot tell u2 from u4, which blocks B's knowing route to Yes at u2
// while still leaving B a knowing route to No through u5.
const char* kMechanismM = R"(mechanism "mechanism-M"
agents: A, B, C
root: u1
decision u1
  deciders: A
  actions: A = [0, 1]
  map: [0] -> u2 ; [1] -> u3
decision u2
  deciders: B
  actions: B = [0, 1, 2]
  map: [0] -> u5 ; [1] -> v1 ; [2] -> u6
decision u3
  deciders: C
  actions: C = [0, 1]
  map: [0] -> v7 ; [1] -> v8
decision u5
  deciders: B
  actions: B = [0, 1]
  map: [0] -> v3 ; [1] -> v4
decision u6
  deciders: C
  actions: C = [0, 1]
  map: [0] -> u4 ; [1] -> v5
decision u4
  deciders: B
  actions: B = [0, 1, 2]
  map: [0] -> v2 ; [1] -> v6 ; [2] -> v2
leaf v1 = Yes
leaf v2 = No
leaf v3 = No
leaf v4 = Yes
leaf v5 = Yes
leaf v6 = No
leaf v7 = Yes
leaf v8 = No
indist B: {u2, u4}
)";

// Drawing straws where B may also concede (action 2). An elected
// semi-epistemic dictatorship that is not epistemic-gap-free: nobody is
// epistemically responsible at v2.
const char* kMechanismN = R"(mechanism "mechanism-N"
agents: A, B
root: u1
decision u1
  deciders: A
  actions: A = [0, 1]
  map: [0] -> u2 ; [1] -> u3
decision u2
  deciders: B
  actions: B = [0, 1, 2]
  map: [0] -> v1 ; [1] -> v2 ; [2] -> v2
decision u3
  deciders: B
  actions: B = [0, 1, 2]
  map: [0] -> v3 ; [1] -> v4 ; [2] -> v3
leaf v1 = Yes
leaf v2 = No
leaf v3 = No
leaf v4 = Yes
indist B: {u2, u3}
)";

const std::array<std::pair<const char*, const char*>, 7> kCatalog = {{
    {"two-person-rule", kTwoPersonRule},
    {"senate", kSenate},
    {"academic", kAcademic},
    {"confusion", kConfusion},
    {"drawing-straws", kDrawingStraws},
    {"mechanism-M", kMechanismM},
    {"mechanism-N", kMechanismN},
}};

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : kCatalog) names.push_back(name);
  return names;
}

const std::string& example_text(const std::string& name) {
  static const std::array<std::string, 7>* texts = [] {
    auto* t = new std::array<std::string, 7>;
    for (size_t i = 0; i < kCatalog.size(); ++i) (*t)[i] = kCatalog[i].second;
    return t;
  }();
  for (size_t i = 0; i < kCatalog.size(); ++i)
    if (name == kCatalog[i].first) return (*texts)[i];
  throw Error("UnknownExample", name);
}

Mechanism example(const std::string& name) {
  ParseResult parsed = parse(example_text(name));
  if (!parsed.ok()) throw Error("UnknownExample", name + ": does not parse");
  ValidationResult v = validate(*parsed.document);
  if (!v.ok()) throw Error("UnknownExample", name + ": does not validate");
  return *std::move(v.mechanism);
}

}  // namespace respgap
