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

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "respgap/text.hpp"

namespace testutil {

// Parses and validates or throws; test inputs are expected to be well formed.
inline respgap::Mechanism from_text(const std::string& text) {
  respgap::ParseResult p = respgap::parse(text);
  if (!p.ok()) throw respgap::Error("TestInput", "text does not parse");
  respgap::ValidationResult v = respgap::validate(*p.document);
  if (!v.ok()) throw respgap::Error("TestInput", "text does not validate");
  return *std::move(v.mechanism);
}

inline std::vector<std::string> sorted_names(const respgap::Mechanism& m,
                                             const std::vector<int>& ids) {
  std::vector<std::string> out = m.names(ids);
  std::sort(out.begin(), out.end());
  return out;
}

// Validation error codes for a syntactically well-formed description.
inline std::multiset<std::string> validation_codes(const std::string& text) {
  respgap::ParseResult p = respgap::parse(text);
  if (!p.ok()) throw respgap::Error("TestInput", "text does not parse");
  std::multiset<std::string> codes;
  for (const respgap::ValidationError& e :
       respgap::validate(*p.document).errors)
    codes.insert(e.code);
  return codes;
}

}  // namespace testutil
