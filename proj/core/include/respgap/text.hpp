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

#include <optional>
#include <string>
#include <vector>

#include "respgap/mechanism.hpp"

namespace respgap {

struct ParseError {
  int line = 0;  // 1-based
  std::string code;  // SyntaxError, DuplicateDeclaration
  std::string message;
};

struct ParseResult {
  std::optional<Document> document;
  std::vector<ParseError> errors;
  bool ok() const { return document.has_value(); }
};

/// Parses the line-oriented mechanism text format. Purely syntactic;
/// cross-references are checked by validate().
ParseResult parse(const std::string& text);

/// Canonical text form: agents as declared, nodes in preorder from the root,
/// map entries in tuple lexicographic order, multi-member indist cells only.
/// parse(serialize(d)) validates to an equal mechanism.
std::string serialize(const Document& doc);
std::string serialize(const Mechanism& m);

/// Rebuilds the raw description from a validated mechanism.
Document to_document(const Mechanism& m);

/// Names of the bundled example mechanisms.
std::vector<std::string> example_names();

/// Source text of a bundled example.
const std::string& example_text(const std::string& name);  // UnknownExample

/// Parsed and validated bundled example.
Mechanism example(const std::string& name);  // UnknownExample

/// Graphviz export: decision nodes as circles, leaves as boxes labelled with
/// their outcome, tree edges labelled with the selecting action tuples, and
/// indistinguishability classes as dashed undirected edges.
std::string export_dot(const Mechanism& m);

}  // namespace respgap
