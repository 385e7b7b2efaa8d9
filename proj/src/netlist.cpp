// Copyright 2026 The segrover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "segrover/circuit.hpp"
#include "segrover/errors.hpp"

namespace segrover {

std::string writeNetlist(const Circuit& c) {
  std::ostringstream out;
  for (const Wire& w : c.wires()) {
    out << "WIRE " << w.name << ' ' << roleName(w.role) << '\n';
  }
  for (const Gate& g : c.gates()) {
    switch (g.kind()) {
      case GateKind::Not: out << "X"; break;
      case GateKind::Cnot: out << "CX"; break;
      case GateKind::Toffoli: out << "CCX"; break;
      case GateKind::Mcx: out << "MCX"; break;
    }
    for (const Control& ctl : g.controls) {
      out << ' ' << (ctl.positive ? "" : "~") << c.wires()[ctl.wire].name;
    }
    out << ' ' << c.wires()[g.target].name << '\n';
  }
  return out.str();
}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

}  // namespace

Circuit parseNetlist(std::string_view text) {
  Circuit c;
  std::unordered_map<std::string, WireId> byName;
  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineNo;
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::string_view op = tokens[0].text;
    if (op == "WIRE") {
      if (tokens.size() != 3) {
        throw ParseError("WIRE takes a name and a role", lineNo, tokens[0].column);
      }
      const auto role = roleFromName(tokens[2].text);
      if (!role) throw ParseError("unknown wire role", lineNo, tokens[2].column);
      std::string name(tokens[1].text);
      if (name.front() == '~' || byName.count(name)) {
        throw ParseError("bad or duplicate wire name", lineNo, tokens[1].column);
      }
      byName[name] = c.addWire(name, *role);
    } else {
      std::size_t arity;
      if (op == "X") {
        arity = 0;
      } else if (op == "CX") {
        arity = 1;
      } else if (op == "CCX") {
        arity = 2;
      } else if (op == "MCX") {
        if (tokens.size() < 5) {
          throw ParseError("MCX needs at least three controls", lineNo,
                           tokens[0].column);
        }
        arity = tokens.size() - 2;
      } else {
        throw ParseError("unknown gate '" + std::string(op) + "'", lineNo,
                         tokens[0].column);
      }
      if (tokens.size() != arity + 2) {
        throw ParseError("wrong operand count", lineNo, tokens[0].column);
      }
      auto lookup = [&](const Token& t, std::string_view name) {
        auto it = byName.find(std::string(name));
        if (it == byName.end()) {
          throw ParseError("unknown wire '" + std::string(name) + "'", lineNo,
                           t.column);
        }
        return it->second;
      };
      Gate g;
      for (std::size_t i = 1; i <= arity; ++i) {
        std::string_view name = tokens[i].text;
        bool positive = true;
        if (name.front() == '~') {
          positive = false;
          name.remove_prefix(1);
        }
        g.controls.push_back({lookup(tokens[i], name), positive});
      }
      const Token& t = tokens.back();
      if (t.text.front() == '~') {
        throw ParseError("target cannot be negated", lineNo, t.column);
      }
      g.target = lookup(t, t.text);
      try {
        c.append(std::move(g));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineNo, tokens[0].column);
      }
    }
    if (eol == text.size()) break;
  }
  return c;
}

}  // namespace segrover
