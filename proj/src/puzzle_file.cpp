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

#include "segrover/puzzle_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "segrover/errors.hpp"

namespace segrover {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Field {
  std::string value;
  int line;
  int column;
};

struct Shape {
  std::vector<SegmentCode> displays;
  Op op = Op::Plus;
  int left = 0;
  int right = 0;
  int result = 0;
};

Shape parseEquation(const Field& f) {
  Shape s;
  int stage = 0;
  for (std::size_t i = 0; i < f.value.size(); ++i) {
    const char ch = f.value[i];
    const int col = f.column + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      s.displays.push_back(encodeDigit(ch - '0'));
      (stage == 0 ? s.left : stage == 1 ? s.right : s.result)++;
    } else if (ch == '=' && stage == 1) {
      stage = 2;
    } else if (const auto op = opFromSymbol(ch); op && stage == 0 && ch != '=') {
      s.op = *op;
      stage = 1;
    } else {
      throw ParseError(std::string("unexpected '") + ch + "' in equation", f.line,
                       col);
    }
  }
  if (stage != 2 || s.left == 0 || s.right == 0 || s.result == 0) {
    throw ParseError("equation must read 'digits op digits = digits'", f.line,
                     f.column);
  }
  return s;
}

Shape parseSegments(const Field& f) {
  Shape s;
  int stage = 0;
  std::size_t i = 0;
  const std::string& v = f.value;
  while (i < v.size()) {
    if (std::isspace(static_cast<unsigned char>(v[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < v.size() && !std::isspace(static_cast<unsigned char>(v[j]))) ++j;
    const std::string tok = v.substr(i, j - i);
    const int col = f.column + static_cast<int>(i);
    if (tok.size() == 1 && tok[0] == '=' && stage == 1) {
      stage = 2;
    } else if (tok.size() == 1 && stage == 0 && opFromSymbol(tok[0]) &&
               tok[0] != '=') {
      s.op = *opFromSymbol(tok[0]);
      stage = 1;
    } else {
      try {
        s.displays.push_back(SegmentCode::fromString(tok));
      } catch (const DomainError&) {
        throw ParseError("bad segment code '" + tok + "'", f.line, col);
      }
      (stage == 0 ? s.left : stage == 1 ? s.right : s.result)++;
    }
    i = j;
  }
  if (stage != 2 || s.left == 0 || s.right == 0 || s.result == 0) {
    throw ParseError("segments must read 'codes op codes = codes'", f.line,
                     f.column);
  }
  return s;
}

int parseInt(const Field& f, int lo, int hi) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(f.value, &used);
    if (used == f.value.size() && v >= lo && v <= hi) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("expected an integer in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]",
                   f.line, f.column);
}

bool parseBool(const Field& f) {
  if (f.value == "true") return true;
  if (f.value == "false") return false;
  throw ParseError("expected true or false", f.line, f.column);
}

OperatorEncoding parseOperators(const Field& f) {
  std::istringstream in(f.value);
  std::string tok;
  int width = -1;
  std::map<std::uint32_t, Op> entries;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || tok.size() != eq + 2) {
      throw ParseError("operator entries look like 01=-", f.line, f.column);
    }
    const std::string bits = tok.substr(0, eq);
    if (width >= 0 && static_cast<int>(bits.size()) != width) {
      throw ParseError("operator codes differ in width", f.line, f.column);
    }
    width = static_cast<int>(bits.size());
    if (width > 8 || bits.find_first_not_of("01") != std::string::npos) {
      throw ParseError("bad operator code '" + bits + "'", f.line, f.column);
    }
    const auto op = opFromSymbol(tok[eq + 1]);
    if (!op) {
      throw ParseError(std::string("unknown operator '") + tok[eq + 1] + "'",
                       f.line, f.column);
    }
    const auto code = static_cast<std::uint32_t>(std::stoul(bits, nullptr, 2));
    if (!entries.emplace(code, *op).second) {
      throw ParseError("operator code " + bits + " listed twice", f.line,
                       f.column);
    }
  }
  if (width < 0) throw ParseError("empty operator table", f.line, f.column);
  std::vector<std::optional<Op>> table(std::size_t{1} << width);
  for (const auto& [code, op] : entries) table[code] = op;
  try {
    return OperatorEncoding(width, table);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), f.line, f.column);
  }
}

}  // namespace

bool Puzzle::operator==(const Puzzle& other) const {
  return config == other.config && digitForm == other.digitForm &&
         renderPuzzleFile(*this) == renderPuzzleFile(other);
}

Puzzle parsePuzzle(std::string_view text) {
  static const char* const kKeys[] = {"equation", "segments", "k",
                                      "k_mode",   "hd_factor", "conserve",
                                      "k_search", "operators"};
  std::map<std::string, Field> fields;
  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    ++lineNo;
    pos = nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value'", lineNo, 1);
    }
    const std::string key = trim(line.substr(0, colon));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ParseError("unknown key '" + key + "'", lineNo, 1);
    }
    std::size_t vstart = colon + 1;
    while (vstart < line.size() &&
           std::isspace(static_cast<unsigned char>(line[vstart]))) {
      ++vstart;
    }
    Field f{trim(line.substr(colon + 1)), lineNo, static_cast<int>(vstart) + 1};
    if (!fields.emplace(key, f).second) {
      throw ParseError("duplicate key '" + key + "'", lineNo, 1);
    }
  }

  const bool hasEq = fields.count("equation") > 0;
  const bool hasSeg = fields.count("segments") > 0;
  if (!hasEq && !hasSeg) {
    throw ParseError("missing equation: or segments:", 1, 1);
  }
  if (hasEq && hasSeg) {
    throw ParseError("give only one of equation: or segments:",
                     std::max(fields["equation"].line, fields["segments"].line), 1);
  }
  const Shape shape =
      hasEq ? parseEquation(fields["equation"]) : parseSegments(fields["segments"]);

  Puzzle p;
  p.digitForm = hasEq;
  p.config.displays = shape.displays;
  p.config.operators = {shape.op};
  if (auto it = fields.find("k"); it != fields.end()) {
    p.config.kBudget = parseInt(it->second, 0, 7);
  }
  if (auto it = fields.find("k_mode"); it != fields.end()) {
    if (it->second.value == "exact") {
      p.config.kMode = KMode::Exact;
    } else if (it->second.value == "at_most") {
      p.config.kMode = KMode::AtMost;
    } else {
      throw ParseError("k_mode is exact or at_most", it->second.line,
                       it->second.column);
    }
  }
  if (auto it = fields.find("conserve"); it != fields.end()) {
    p.config.conserveMatchsticks = parseBool(it->second);
  }
  int hdFactor = 1;
  if (auto it = fields.find("hd_factor"); it != fields.end()) {
    hdFactor = parseInt(it->second, 1, 2);
  }
  bool searchK = false;
  if (auto it = fields.find("k_search"); it != fields.end()) {
    searchK = parseBool(it->second);
  }
  p.spec = equationConstraints(p.config, shape.left, shape.right, shape.result,
                               hdFactor, searchK);
  if (auto it = fields.find("operators"); it != fields.end()) {
    p.spec.encoding = parseOperators(it->second);
    p.spec.allowedOps.clear();
    for (const auto& op : p.spec.encoding.table()) {
      if (op && *op != Op::Equal) p.spec.allowedOps.push_back(*op);
    }
  }
  if (!p.spec.encoding.encode(shape.op)) {
    const Field& f = hasEq ? fields["equation"] : fields["segments"];
    throw ParseError(std::string("operator '") + opSymbol(shape.op) +
                         "' has no code",
                     f.line, f.column);
  }
  return p;
}

Puzzle loadPuzzle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parsePuzzle(ss.str());
}

std::string renderPuzzleFile(const Puzzle& p) {
  std::ostringstream os;
  bool digits = p.digitForm && p.spec.art;
  for (SegmentCode sc : p.config.displays) digits = digits && isValidSC(sc);
  if (digits) {
    os << "equation: " << renderPuzzle(p.config, p.spec) << "\n";
  } else {
    os << "segments:";
    const auto& a = *p.spec.art;
    for (int j : a.left) os << " " << p.config.displays[j].toString();
    os << " " << opSymbol(p.config.operators.at(a.operatorSlot));
    for (int j : a.right) os << " " << p.config.displays[j].toString();
    os << " =";
    for (int j : a.result) os << " " << p.config.displays[j].toString();
    os << "\n";
  }
  os << "k: " << p.config.kBudget << "\n";
  os << "k_mode: " << (p.config.kMode == KMode::Exact ? "exact" : "at_most")
     << "\n";
  os << "hd_factor: " << p.spec.gamid.hdFactor << "\n";
  os << "conserve: " << (p.config.conserveMatchsticks ? "true" : "false")
     << "\n";
  os << "k_search: " << (p.spec.gamid.searchK ? "true" : "false") << "\n";
  os << "operators:";
  const auto& enc = p.spec.encoding;
  for (std::uint32_t code = 0; code < enc.table().size(); ++code) {
    if (const auto op = enc.decode(code)) {
      os << " " << BitVector::fromInteger(code, enc.width()).toString() << "="
         << opSymbol(*op);
    }
  }
  os << "\n";
  return os.str();
}

}  // namespace segrover
