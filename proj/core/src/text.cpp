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

#include "respgap/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace respgap {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(strip(cur));
  return parts;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

struct Parser {
  ParseResult result;
  Document doc;
  Document::Decision* current = nullptr;
  bool have_agents = false;
  bool have_root = false;
  bool have_name = false;

  void error(int line, std::string code, std::string message) {
    result.errors.push_back({line, std::move(code), std::move(message)});
  }

  // "[a, b]" -> {"a","b"}; reports via return.
  std::optional<std::vector<std::string>> bracket_list(int line,
                                                       const std::string& s) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
      error(line, "SyntaxError", "expected [..] list: " + s);
      return std::nullopt;
    }
    std::vector<std::string> items = split(t.substr(1, t.size() - 2), ',');
    for (const auto& item : items) {
      if (!valid_identifier(item)) {
        error(line, "SyntaxError", "bad identifier '" + item + "'");
        return std::nullopt;
      }
    }
    return items;
  }

  void finish_decision(int line) {
    if (!current) return;
    if (current->choice.empty())
      error(line, "SyntaxError", "decision " + current->id + " has no map");
    if (current->deciders.empty())
      error(line, "SyntaxError",
            "decision " + current->id + " has no deciders");
    if (current->actions.empty())
      error(line, "SyntaxError",
            "decision " + current->id + " has no actions");
    current = nullptr;
  }

  void run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = strip(strip_comment(raw));
      if (line.empty()) continue;

      if (starts_with(line, "mechanism")) {
        finish_decision(lineno);
        std::string rest = strip(line.substr(9));
        if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"') {
          error(lineno, "SyntaxError", "expected mechanism \"<name>\"");
          continue;
        }
        if (have_name) {
          error(lineno, "DuplicateDeclaration", "second mechanism line");
          continue;
        }
        have_name = true;
        doc.name = rest.substr(1, rest.size() - 2);
      } else if (starts_with(line, "agents:")) {
        finish_decision(lineno);
        if (have_agents) {
          error(lineno, "DuplicateDeclaration", "second agents line");
          continue;
        }
        have_agents = true;
        for (const auto& a : split(line.substr(7), ',')) {
          if (!valid_identifier(a)) {
            error(lineno, "SyntaxError", "bad agent identifier '" + a + "'");
            continue;
          }
          doc.agents.push_back(a);
        }
      } else if (starts_with(line, "root:")) {
        finish_decision(lineno);
        if (have_root) {
          error(lineno, "DuplicateDeclaration", "second root line");
          continue;
        }
        have_root = true;
        std::string r = strip(line.substr(5));
        if (!valid_identifier(r)) {
          error(lineno, "SyntaxError", "bad root identifier '" + r + "'");
          continue;
        }
        doc.root = r;
      } else if (starts_with(line, "decision ")) {
        finish_decision(lineno);
        std::string id = strip(line.substr(9));
        if (!valid_identifier(id)) {
          error(lineno, "SyntaxError", "bad node identifier '" + id + "'");
          continue;
        }
        doc.decisions.push_back({});
        current = &doc.decisions.back();
        current->id = id;
      } else if (starts_with(line, "leaf ")) {
        finish_decision(lineno);
        auto parts = split(line.substr(5), '=');
        if (parts.size() != 2) {
          error(lineno, "SyntaxError", "expected leaf <id> = Yes|No");
          continue;
        }
        Document::Leaf leaf;
        leaf.id = parts[0];
        if (!valid_identifier(leaf.id)) {
          error(lineno, "SyntaxError", "bad node identifier '" + leaf.id + "'");
          continue;
        }
        if (parts[1] == "Yes") {
          leaf.label = Outcome::Yes;
        } else if (parts[1] == "No") {
          leaf.label = Outcome::No;
        } else {
          error(lineno, "SyntaxError", "leaf label must be Yes or No");
          continue;
        }
        doc.leaves.push_back(leaf);
      } else if (starts_with(line, "deciders:")) {
        if (!current) {
          error(lineno, "SyntaxError", "deciders outside a decision block");
          continue;
        }
        if (!current->deciders.empty()) {
          error(lineno, "DuplicateDeclaration",
                "second deciders line at " + current->id);
          continue;
        }
        for (const auto& a : split(line.substr(9), ',')) {
          if (!valid_identifier(a)) {
            error(lineno, "SyntaxError", "bad agent identifier '" + a + "'");
            continue;
          }
          current->deciders.push_back(a);
        }
      } else if (starts_with(line, "actions:")) {
        if (!current) {
          error(lineno, "SyntaxError", "actions outside a decision block");
          continue;
        }
        for (const auto& part : split(line.substr(8), ';')) {
          auto kv = split(part, '=');
          if (kv.size() != 2) {
            error(lineno, "SyntaxError", "expected <agent> = [..]");
            continue;
          }
          auto list = bracket_list(lineno, kv[1]);
          if (!list) continue;
          if (!valid_identifier(kv[0])) {
            error(lineno, "SyntaxError", "bad agent identifier '" + kv[0] + "'");
            continue;
          }
          current->actions.emplace_back(kv[0], *list);
        }
      } else if (starts_with(line, "map:")) {
        if (!current) {
          error(lineno, "SyntaxError", "map outside a decision block");
          continue;
        }
        for (const auto& part : split(line.substr(4), ';')) {
          size_t arrow = part.find("->");
          if (arrow == std::string::npos) {
            error(lineno, "SyntaxError", "expected [..] -> <node>");
            continue;
          }
          auto tuple = bracket_list(lineno, part.substr(0, arrow));
          if (!tuple) continue;
          std::string target = strip(part.substr(arrow + 2));
          if (!valid_identifier(target)) {
            error(lineno, "SyntaxError", "bad node identifier '" + target + "'");
            continue;
          }
          current->choice.emplace_back(*tuple, target);
        }
      } else if (starts_with(line, "indist ")) {
        finish_decision(lineno);
        auto parts = split(line.substr(7), ':');
        if (parts.size() != 2) {
          error(lineno, "SyntaxError", "expected indist <agent>: {..}");
          continue;
        }
        std::string set = parts[1];
        if (set.size() < 2 || set.front() != '{' || set.back() != '}') {
          error(lineno, "SyntaxError", "expected {..} node set");
          continue;
        }
        Document::Indist cell;
        cell.agent = parts[0];
        if (!valid_identifier(cell.agent)) {
          error(lineno, "SyntaxError",
                "bad agent identifier '" + cell.agent + "'");
          continue;
        }
        bool ok = true;
        for (const auto& n : split(set.substr(1, set.size() - 2), ',')) {
          if (!valid_identifier(n)) {
            error(lineno, "SyntaxError", "bad node identifier '" + n + "'");
            ok = false;
            break;
          }
          cell.nodes.push_back(n);
        }
        if (ok) doc.indist.push_back(std::move(cell));
      } else {
        error(lineno, "SyntaxError", "unrecognised line: " + line);
      }
    }
    finish_decision(lineno + 1);
    if (result.errors.empty()) result.document = std::move(doc);
  }
};

std::string join(const std::vector<std::string>& items,
                 const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

ParseResult parse(const std::string& text) {
  Parser p;
  p.run(text);
  return p.result;
}

std::string serialize(const Document& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "mechanism \"" << doc.name << "\"\n";
  out << "agents: " << join(doc.agents, ", ") << "\n";
  out << "root: " << doc.root << "\n";

  // Preorder over declarations, children in tuple lexicographic order.
  std::vector<std::string> order;
  {
    auto find_decision = [&](const std::string& id) -> const Document::Decision* {
      for (const auto& d : doc.decisions)
        if (d.id == id) return &d;
      return nullptr;
    };
    std::vector<std::string> stack{doc.root};
    std::vector<std::string> seen;
    while (!stack.empty()) {
      std::string id = stack.back();
      stack.pop_back();
      if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
      seen.push_back(id);
      order.push_back(id);
      const Document::Decision* d = find_decision(id);
      if (!d) continue;
      auto entries = d->choice;
      std::sort(entries.begin(), entries.end());
      std::vector<std::string> kids;
      for (const auto& [tuple, target] : entries)
        if (std::find(kids.begin(), kids.end(), target) == kids.end())
          kids.push_back(target);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    // Declarations not reachable from the root still serialize, after the
    // reachable part, in declaration order.
    for (const auto& d : doc.decisions)
      if (std::find(order.begin(), order.end(), d.id) == order.end())
        order.push_back(d.id);
    for (const auto& l : doc.leaves)
      if (std::find(order.begin(), order.end(), l.id) == order.end())
        order.push_back(l.id);
  }

  for (const auto& id : order) {
    const Document::Decision* d = nullptr;
    for (const auto& dd : doc.decisions)
      if (dd.id == id) d = &dd;
    if (d) {
      out << "decision " << d->id << "\n";
      out << "  deciders: " << join(d->deciders, ", ") << "\n";
      std::vector<std::string> acts;
      for (const auto& ag : d->deciders) {
        for (const auto& [a, list] : d->actions)
          if (a == ag) acts.push_back(a + " = [" + join(list, ", ") + "]");
      }
      out << "  actions: " << join(acts, " ; ") << "\n";
      // Entries in tuple lexicographic order over the declared action order.
      std::vector<std::pair<std::vector<int>, size_t>> keyed;
      for (size_t i = 0; i < d->choice.size(); ++i) {
        std::vector<int> key;
        for (size_t j = 0; j < d->choice[i].first.size(); ++j) {
          int pos = -1;
          if (j < d->deciders.size()) {
            for (const auto& [a, list] : d->actions) {
              if (a != d->deciders[j]) continue;
              auto it = std::find(list.begin(), list.end(), d->choice[i].first[j]);
              if (it != list.end()) pos = static_cast<int>(it - list.begin());
            }
          }
          key.push_back(pos);
        }
        keyed.emplace_back(std::move(key), i);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<std::string> entries;
      for (const auto& [key, i] : keyed)
        entries.push_back("[" + join(d->choice[i].first, ",") + "] -> " +
                          d->choice[i].second);
      out << "  map: " << join(entries, " ; ") << "\n";
    } else {
      for (const auto& l : doc.leaves)
        if (l.id == id)
          out << "leaf " << l.id << " = " << to_string(l.label) << "\n";
    }
  }

  for (const auto& agent : doc.agents) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& cell : doc.indist)
      if (cell.agent == agent && cell.nodes.size() > 1)
        cells.push_back(cell.nodes);
    auto rank = [&](const std::string& id) {
      auto it = std::find(order.begin(), order.end(), id);
      return it - order.begin();
    };
    for (auto& cell : cells)
      std::sort(cell.begin(), cell.end(),
                [&](const auto& x, const auto& y) { return rank(x) < rank(y); });
    std::sort(cells.begin(), cells.end(),
              [&](const auto& x, const auto& y) {
                return rank(x[0]) < rank(y[0]);
              });
    for (const auto& cell : cells)
      out << "indist " << agent << ": {" << join(cell, ", ") << "}\n";
  }
  return out.str();
}

Document to_document(const Mechanism& m) {
  Document doc;
  doc.agents = m.agents();
  doc.root = m.node_name(m.root());
  for (int v = 0; v < m.node_count(); ++v) {
    if (m.is_leaf(v)) {
      doc.leaves.push_back({m.node_name(v), m.label(v)});
      continue;
    }
    Document::Decision d;
    d.id = m.node_name(v);
    const auto& node = m.node(v);
    for (int a : node.deciders) {
      d.deciders.push_back(m.agent_name(a));
      d.actions.emplace_back(m.agent_name(a), node.actions[a]);
    }
    int profiles = m.profile_count(v);
    for (int p = 0; p < profiles; ++p) {
      std::vector<std::string> tuple;
      int rem = p;
      int radix = profiles;
      for (int a : node.deciders) {
        int arity = static_cast<int>(node.actions[a].size());
        radix /= arity;
        tuple.push_back(node.actions[a][(rem / radix) % arity]);
        rem %= radix;
      }
      d.choice.emplace_back(std::move(tuple), m.node_name(m.choice(v, p)));
    }
    doc.decisions.push_back(std::move(d));
  }
  for (int a = 0; a < m.agent_count(); ++a) {
    for (const auto& cell : m.classes(a)) {
      if (cell.size() < 2) continue;
      Document::Indist ind;
      ind.agent = m.agent_name(a);
      for (int v : cell) ind.nodes.push_back(m.node_name(v));
      doc.indist.push_back(std::move(ind));
    }
  }
  return doc;
}

std::string serialize(const Mechanism& m) { return serialize(to_document(m)); }

std::string export_dot(const Mechanism& m) {
  std::ostringstream out;
  out << "digraph mechanism {\n";
  for (int v = 0; v < m.node_count(); ++v) {
    if (m.is_leaf(v)) {
      out << "  " << m.node_name(v) << " [shape=box, label=\""
          << m.node_name(v) << "\\n" << to_string(m.label(v)) << "\"];\n";
    } else {
      out << "  " << m.node_name(v) << " [shape=circle];\n";
    }
  }
  for (int v : m.decision_nodes()) {
    const auto& node = m.node(v);
    int profiles = m.profile_count(v);
    for (int c : node.children) {
      std::vector<std::string> tuples;
      for (int p = 0; p < profiles; ++p) {
        if (m.choice(v, p) != c) continue;
        std::vector<std::string> tuple;
        int rem = p;
        int radix = profiles;
        for (int a : node.deciders) {
          int arity = static_cast<int>(node.actions[a].size());
          radix /= arity;
          tuple.push_back(node.actions[a][(rem / radix) % arity]);
          rem %= radix;
        }
        tuples.push_back("[" + join(tuple, ",") + "]");
      }
      out << "  " << m.node_name(v) << " -> " << m.node_name(c)
          << " [label=\"" << join(tuples, "\\n") << "\"];\n";
    }
  }
  for (int a = 0; a < m.agent_count(); ++a) {
    for (const auto& cell : m.classes(a)) {
      for (size_t i = 0; i + 1 < cell.size(); ++i)
        out << "  " << m.node_name(cell[i]) << " -> "
            << m.node_name(cell[i + 1]) << " [style=dashed, dir=none, label=\""
            << m.agent_name(a) << "\", constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace respgap
