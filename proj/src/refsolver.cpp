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

#include "segrover/refsolver.hpp"

#include <algorithm>
#include <sstream>

#include "segrover/errors.hpp"

namespace segrover {

std::vector<std::string> SolutionSet::equations() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.equation);
  return out;
}

Restriction fixDisplays(const PuzzleConfig& puzzle,
                        const std::vector<int>& displays) {
  Restriction r;
  for (int j : displays) {
    if (j < 0 || j >= static_cast<int>(puzzle.displays.size())) {
      throw DomainError("no display " + std::to_string(j));
    }
    for (int v = 0; v < kSegments; ++v) {
      r.push_back({j * kSegments + v, puzzle.displays[j].lit(v)});
    }
  }
  return r;
}

namespace {

bool allowed(const ConstraintSpec& spec, const std::optional<Op>& op) {
  return op && std::find(spec.allowedOps.begin(), spec.allowedOps.end(), *op) !=
                   spec.allowedOps.end();
}

int number(const DecodedCandidate& d, const std::vector<int>& group) {
  int n = 0;
  for (int j : group) n = 10 * n + *decodeSegment(d.displays[j]);
  return n;
}

// Every check except the changed-segment budget and conservation.
bool structural(const ConstraintSpec& spec, const DecodedCandidate& d) {
  for (int j : spec.gin.displays) {
    if (!isValidSC(d.displays.at(j))) return false;
  }
  for (std::size_t s = 0; s < d.operators.size(); ++s) {
    const bool needed = spec.gin.checkOperators ||
                        (spec.art && spec.art->operatorSlot == static_cast<int>(s));
    if (needed && !allowed(spec, d.operators[s])) return false;
  }
  if (!spec.art) return true;
  const auto& a = *spec.art;
  const int l = number(d, a.left);
  const int r = number(d, a.right);
  const int res = number(d, a.result);
  switch (*d.operators.at(a.operatorSlot)) {
    case Op::Plus:
      return l + r == res;
    case Op::Minus:
      return l >= r && l - r == res;
    default:
      return false;
  }
}

int distance(const PuzzleConfig& puzzle, const ConstraintSpec& spec,
             const DecodedCandidate& d) {
  int hd = 0;
  for (std::size_t j = 0; j < d.displays.size(); ++j) {
    hd += hammingDistance(d.displays[j], puzzle.displays[j]);
  }
  for (std::size_t s = 0; s < d.operators.size(); ++s) {
    if (allowed(spec, d.operators[s])) {
      hd += opDistance(*d.operators[s], puzzle.operators[s]);
    }
  }
  return hd;
}

int matchsticks(const ConstraintSpec& spec, const DecodedCandidate& d) {
  int n = 0;
  for (SegmentCode sc : d.displays) n += sc.litCount();
  for (const auto& op : d.operators) {
    if (allowed(spec, op)) n += opMatchsticks(*op);
  }
  return n;
}

// Changed-segment budget and matchstick conservation.
bool budgeted(const PuzzleConfig& puzzle, const ConstraintSpec& spec,
              const DecodedCandidate& d) {
  const auto& g = spec.gamid;
  if (g.enabled) {
    const int hd = distance(puzzle, spec, d);
    int target = g.hdFactor * g.kBudget;
    if (g.searchK) {
      if (*d.k > g.kBudget) return false;
      target = g.hdFactor * *d.k;
    }
    if (g.mode == KMode::Exact ? hd != target : hd > target) return false;
  }
  if (spec.extras.conserveMatchsticks &&
      matchsticks(spec, d) != puzzle.matchsticks()) {
    return false;
  }
  return true;
}

// Bit patterns a field of the candidate may take, honouring the restriction.
std::vector<BitVector> fieldOptions(std::vector<std::uint64_t> values, int pos,
                                    int width, const Restriction& restriction) {
  std::vector<BitVector> out;
  for (std::uint64_t v : values) {
    BitVector b = BitVector::fromInteger(v, width);
    bool ok = true;
    for (const auto& [p, bit] : restriction) {
      if (p >= pos && p < pos + width && b.get(p - pos) != bit) ok = false;
    }
    if (ok) out.push_back(b);
  }
  return out;
}

void checkRestriction(int width, const Restriction& restriction) {
  for (const auto& [p, bit] : restriction) {
    if (p < 0 || p >= width) {
      throw DomainError("restriction position " + std::to_string(p) +
                        " is outside the candidate register");
    }
  }
}

}  // namespace

bool satisfies(const PuzzleConfig& puzzle, const BitVector& candidate,
               const ConstraintSpec& spec) {
  const DecodedCandidate d = decodeCandidate(puzzle, spec, candidate);
  return structural(spec, d) && budgeted(puzzle, spec, d);
}

SolutionEntry makeEntry(const PuzzleConfig& puzzle, const ConstraintSpec& spec,
                        const BitVector& candidate) {
  const DecodedCandidate d = decodeCandidate(puzzle, spec, candidate);
  SolutionEntry e;
  e.candidate = candidate;
  e.config = puzzle;
  e.config.displays = d.displays;
  for (std::size_t s = 0; s < d.operators.size(); ++s) {
    if (d.operators[s]) e.config.operators[s] = *d.operators[s];
  }
  e.equation = renderCandidate(puzzle, spec, candidate);
  e.hd = distance(puzzle, spec, d);
  const int f = spec.gamid.hdFactor;
  e.k = d.k ? *d.k : (e.hd + f - 1) / f;
  return e;
}

SolutionSet solveClassical(const PuzzleConfig& puzzle,
                           const ConstraintSpec& spec,
                           const Restriction& restriction) {
  checkRestriction(inputWidth(puzzle, spec), restriction);
  std::vector<std::vector<BitVector>> fields;
  int pos = 0;
  std::vector<std::uint64_t> all128(128);
  for (std::uint64_t i = 0; i < 128; ++i) all128[i] = i;
  std::vector<std::uint64_t> digits;
  for (const auto& row : digitTable()) digits.push_back(row.segments.bits());
  for (std::size_t j = 0; j < puzzle.displays.size(); ++j) {
    const bool checked =
        std::find(spec.gin.displays.begin(), spec.gin.displays.end(),
                  static_cast<int>(j)) != spec.gin.displays.end();
    fields.push_back(fieldOptions(checked ? digits : all128, pos, kSegments,
                                  restriction));
    pos += kSegments;
  }
  const int w = spec.encoding.width();
  for (std::size_t s = 0; s < puzzle.operators.size(); ++s) {
    std::vector<std::uint64_t> codes;
    for (std::uint32_t code = 0; code < (1u << w); ++code) codes.push_back(code);
    fields.push_back(fieldOptions(codes, pos, w, restriction));
    pos += w;
  }
  if (spec.gamid.enabled && spec.gamid.searchK) {
    fields.push_back(fieldOptions({0, 1, 2, 3, 4, 5, 6, 7}, pos, 3, restriction));
  }

  SolutionSet set;
  for (const auto& f : fields) {
    if (f.empty()) return set;
  }
  std::vector<std::size_t> at(fields.size(), 0);
  bool done = false;
  while (!done) {
    BitVector cand;
    for (std::size_t i = 0; i < fields.size(); ++i) cand.append(fields[i][at[i]]);
    if (satisfies(puzzle, cand, spec)) {
      set.entries.push_back(makeEntry(puzzle, spec, cand));
    }
    done = true;
    for (std::size_t i = fields.size(); i-- > 0;) {
      if (++at[i] < fields[i].size()) {
        done = false;
        break;
      }
      at[i] = 0;
    }
  }
  std::sort(set.entries.begin(), set.entries.end(),
            [](const SolutionEntry& a, const SolutionEntry& b) {
              return a.candidate < b.candidate;
            });
  return set;
}

SolutionSet solveNaive(const PuzzleConfig& puzzle, const ConstraintSpec& spec,
                       const Restriction& restriction) {
  const int width = inputWidth(puzzle, spec);
  checkRestriction(width, restriction);
  BitVector base(width);
  std::vector<bool> pinned(width, false);
  for (const auto& [p, bit] : restriction) {
    base.set(p, bit);
    pinned[p] = true;
  }
  std::vector<int> free;
  for (int p = 0; p < width; ++p) {
    if (!pinned[p]) free.push_back(p);
  }
  if (free.size() > 32) {
    throw CapacityError("naive sweep over " + std::to_string(free.size()) +
                        " free bits");
  }
  SolutionSet set;
  const std::uint64_t n = std::uint64_t{1} << free.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    BitVector cand = base;
    for (std::size_t b = 0; b < free.size(); ++b) {
      cand.set(free[b], (i >> (free.size() - 1 - b)) & 1u);
    }
    if (satisfies(puzzle, cand, spec)) {
      set.entries.push_back(makeEntry(puzzle, spec, cand));
    }
  }
  return set;
}

std::pair<std::optional<int>, SolutionSet> minimalKSolutions(
    PuzzleConfig puzzle, ConstraintSpec spec) {
  spec.gamid.enabled = true;
  spec.gamid.searchK = false;
  for (int k = 0; k <= 7; ++k) {
    puzzle.kBudget = k;
    spec.gamid.kBudget = k;
    SolutionSet set = solveClassical(puzzle, spec);
    if (!set.empty()) {
      set.minimalK = k;
      return {k, set};
    }
  }
  return {std::nullopt, SolutionSet{}};
}

std::optional<PuzzleConfig> inverseSearch(
    const PuzzleConfig& templ, const ConstraintSpec& specIn,
    const std::vector<int>& variedDisplays,
    const std::vector<std::string>& targetEquations) {
  if (!specIn.art) throw DomainError("inverse search needs an equation");
  ConstraintSpec spec = specIn;
  spec.gamid.enabled = true;
  spec.gamid.searchK = false;
  std::vector<std::string> target = targetEquations;
  std::sort(target.begin(), target.end());

  // Valid, correct equations do not depend on the initial state.
  ConstraintSpec open = spec;
  open.gamid.enabled = false;
  open.extras.conserveMatchsticks = false;
  const SolutionSet structuralSet = solveClassical(templ, open);
  std::vector<DecodedCandidate> decoded;
  std::vector<std::string> rendered;
  for (const auto& e : structuralSet.entries) {
    decoded.push_back(decodeCandidate(templ, spec, e.candidate));
    rendered.push_back(e.equation);
  }

  std::vector<Op> ops;
  for (std::uint32_t code = 0; code < spec.encoding.table().size(); ++code) {
    const auto op = spec.encoding.decode(code);
    if (allowed(spec, op)) ops.push_back(*op);
  }
  const int slot = spec.art->operatorSlot;
  const std::size_t nv = variedDisplays.size();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < nv; ++i) combos *= 128;

  PuzzleConfig p = templ;
  for (std::uint64_t c = 0; c < combos; ++c) {
    for (std::size_t i = 0; i < nv; ++i) {
      p.displays[variedDisplays[i]] = SegmentCode(
          static_cast<std::uint8_t>((c >> (7 * (nv - 1 - i))) & 0x7F));
    }
    for (Op op : ops) {
      p.operators[slot] = op;
      for (int k = 0; k <= 7; ++k) {
        p.kBudget = k;
        spec.gamid.kBudget = k;
        std::vector<std::string> hits;
        for (std::size_t i = 0; i < decoded.size(); ++i) {
          if (budgeted(p, spec, decoded[i])) hits.push_back(rendered[i]);
        }
        if (hits.empty()) continue;
        std::sort(hits.begin(), hits.end());
        if (hits == target) return p;
        break;
      }
    }
  }
  return std::nullopt;
}

std::string formatSolutionSet(const SolutionSet& set) {
  std::ostringstream os;
  if (set.minimalK) os << "minimal_k\t" << *set.minimalK << "\n";
  os << "candidate\tequation\thd\tk\n";
  for (const auto& e : set.entries) {
    os << e.candidate.toString() << "\t" << e.equation << "\t" << e.hd << "\t"
       << e.k << "\n";
  }
  return os.str();
}

}  // namespace segrover
