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
#include <bit>
#include <set>
#include <tuple>

#include "segrover/errors.hpp"
#include "segrover/synth.hpp"

namespace segrover {
namespace {

constexpr std::uint8_t kAbcd = 0b1111000;
constexpr std::uint8_t kEfg = 0b0000111;

std::uint8_t varBit(int v) { return static_cast<std::uint8_t>(1u << (6 - v)); }

int diff(SegmentCode a, SegmentCode b, std::uint8_t mask) {
  return std::popcount(static_cast<std::uint8_t>((a.bits() ^ b.bits()) & mask));
}

Cube commonCube(std::span<const Minterm> group) {
  std::uint8_t agree = 0x7F;
  for (const Minterm& m : group) {
    agree &= static_cast<std::uint8_t>(~(m.code.bits() ^ group[0].code.bits()));
  }
  agree &= 0x7F;
  return {agree, static_cast<std::uint8_t>(group[0].code.bits() & agree)};
}

std::set<int> labelsOf(std::span<const Minterm> group) {
  std::set<int> s;
  for (const Minterm& m : group) s.insert(m.label);
  return s;
}

bool tapCompatible(const std::set<int>& group,
                   const std::vector<std::vector<int>>& taps) {
  for (const auto& tap : taps) {
    const std::set<int> t(tap.begin(), tap.end());
    bool meets = false;
    bool inside = true;
    for (int l : group) {
      if (t.count(l)) {
        meets = true;
      } else {
        inside = false;
      }
    }
    if (meets && !inside) return false;
  }
  return true;
}

bool equalsTap(const std::set<int>& group,
               const std::vector<std::vector<int>>& taps) {
  for (const auto& tap : taps) {
    if (group == std::set<int>(tap.begin(), tap.end())) return true;
  }
  return false;
}

Cube chooseStepOutput(const Cube& common, const std::optional<Cube>& previous,
                      const OccurrenceTally& tally, int width) {
  std::vector<Literal> lits = common.literals();
  auto key = [&](const Literal& l) {
    const bool overlap = previous && previous->hasVar(l.var);
    const int count = l.positive ? tally.positive[l.var] : tally.negative[l.var];
    return std::make_tuple(overlap ? 0 : 1, -count, l.var);
  };
  std::stable_sort(lits.begin(), lits.end(),
                   [&](const Literal& x, const Literal& y) {
                     return key(x) < key(y);
                   });
  if (static_cast<int>(lits.size()) > width) lits.resize(width);
  return Cube::of(lits);
}

}  // namespace

Cube Cube::of(std::span<const Literal> literals) {
  Cube c;
  for (const Literal& l : literals) {
    c.mask |= varBit(l.var);
    if (l.positive) c.value |= varBit(l.var);
  }
  return c;
}

int Cube::size() const { return std::popcount(mask); }

std::vector<Literal> Cube::literals() const {
  std::vector<Literal> r;
  for (int v = 0; v < kSegments; ++v) {
    if (hasVar(v)) r.push_back({v, polarity(v)});
  }
  return r;
}

std::string Cube::toString() const {
  std::string s;
  for (const Literal& l : literals()) {
    s += static_cast<char>('a' + l.var);
    if (!l.positive) s += '\'';
  }
  return s.empty() ? "1" : s;
}

bool CsesTerm::matches(SegmentCode sc) const {
  if (!cube.matches(sc)) return false;
  if (xorFirst < 0) return true;
  return (sc.lit(xorFirst) != sc.lit(xorSecond)) == xorParity;
}

std::vector<Minterm> digitMinterms() {
  std::vector<Minterm> r;
  for (const auto& row : digitTable()) r.push_back({row.segments, row.digit});
  return r;
}

OccurrenceTally countOccurrences(std::span<const Minterm> minterms) {
  if (minterms.empty()) throw DomainError("no minterms to count");
  OccurrenceTally t;
  for (const Minterm& m : minterms) {
    for (int v = 0; v < kSegments; ++v) {
      if (m.code.lit(v)) {
        ++t.positive[v];
      } else {
        ++t.negative[v];
      }
    }
  }
  return t;
}

Minterm initialMinterm(const OccurrenceTally& tally) {
  std::uint8_t bits = 0;
  for (int v = 0; v < kSegments; ++v) {
    if (tally.positive[v] >= tally.negative[v]) bits |= varBit(v);
  }
  return {SegmentCode(bits), -1};
}

std::vector<Minterm> sequenceMinterms(const Minterm& start,
                                      std::vector<Minterm> rest) {
  std::vector<Minterm> seq{start};
  Minterm prev = start;
  while (!rest.empty()) {
    auto key = [&](const Minterm& m) {
      return std::make_tuple(diff(prev.code, m.code, kAbcd),
                             diff(prev.code, m.code, kEfg),
                             -m.code.litCount(), m.label);
    };
    auto best = std::min_element(rest.begin(), rest.end(),
                                 [&](const Minterm& x, const Minterm& y) {
                                   return key(x) < key(y);
                                 });
    prev = *best;
    seq.push_back(prev);
    rest.erase(best);
  }
  return seq;
}

std::vector<CsesTerm> factorGroup(std::span<const Minterm> group) {
  std::vector<CsesTerm> terms;
  std::size_t i = 0;
  while (i < group.size()) {
    const Minterm& m = group[i];
    if (i + 1 < group.size()) {
      const Minterm& n = group[i + 1];
      const std::uint8_t delta = (m.code.bits() ^ n.code.bits()) & 0x7F;
      const int d = std::popcount(delta);
      if (d == 1 || d == 2) {
        CsesTerm t;
        t.cube = commonCube(group.subspan(i, 2));
        t.labels = {m.label, n.label};
        if (d == 2) {
          std::vector<int> vars;
          for (int v = 0; v < kSegments; ++v) {
            if (delta & varBit(v)) vars.push_back(v);
          }
          t.xorFirst = vars[0];
          t.xorSecond = vars[1];
          t.xorParity = m.code.lit(vars[0]) != m.code.lit(vars[1]);
        }
        terms.push_back(std::move(t));
        i += 2;
        continue;
      }
    }
    CsesTerm t;
    t.cube = Cube::full(m.code);
    t.labels = {m.label};
    terms.push_back(std::move(t));
    ++i;
  }
  return terms;
}

int groupCost(std::span<const Minterm> group) {
  const auto terms = factorGroup(group);
  int flat = 0;
  for (const CsesTerm& t : terms) flat += ladderToffolis(t.controlCount());
  if (terms.size() < 2) return flat;
  const Cube common = commonCube(group);
  const int c = common.size();
  if (c < 2) return flat;
  int shared = 2 * ladderToffolis(c);
  for (const CsesTerm& t : terms) {
    shared += ladderToffolis(1 + t.controlCount() - c);
  }
  return std::min(flat, shared);
}

Cses mergeMinterms(std::span<const Minterm> seq, const MergeOptions& options) {
  Cses cses;
  cses.sequence.assign(seq.begin(), seq.end());
  std::vector<Minterm> cur;
  for (const Minterm& m : seq) {
    if (cur.empty()) {
      cur.push_back(m);
      continue;
    }
    std::vector<Minterm> merged = cur;
    merged.push_back(m);
    const bool closed = equalsTap(labelsOf(cur), options.preserveTaps);
    const bool allowed =
        !closed && tapCompatible(labelsOf(merged), options.preserveTaps);
    const std::vector<Minterm> single{m};
    if (allowed && groupCost(merged) < groupCost(cur) + groupCost(single)) {
      cur = std::move(merged);
    } else {
      cses.groups.push_back(std::move(cur));
      cur = {m};
    }
  }
  if (!cur.empty()) cses.groups.push_back(std::move(cur));

  if (seq.empty()) return cses;
  const OccurrenceTally tally = countOccurrences(seq);
  std::optional<Cube> current;
  for (const auto& group : cses.groups) {
    const Cube common = commonCube(group);
    if (common.size() == 0) {
      cses.stepOutputs.push_back(std::nullopt);
      continue;
    }
    if (!current || !current->within(common)) {
      current = chooseStepOutput(common, current, tally,
                                 options.stepOutputWidth);
    }
    cses.stepOutputs.push_back(current);
  }
  return cses;
}

std::vector<Cube> Cses::stepOutputSchedule() const {
  std::vector<Cube> r;
  for (const auto& s : stepOutputs) {
    if (s && (r.empty() || r.back() != *s)) r.push_back(*s);
  }
  return r;
}

std::vector<CsesTerm> Cses::groupTerms(std::size_t group) const {
  return factorGroup(groups.at(group));
}

bool Cses::evaluate(SegmentCode sc) const {
  bool v = false;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const CsesTerm& t : groupTerms(g)) v ^= t.matches(sc);
  }
  return v;
}

Cses digitCses() {
  const auto minterms = digitMinterms();
  const Minterm init = initialMinterm(countOccurrences(minterms));
  std::vector<Minterm> rest;
  std::optional<Minterm> start;
  for (const Minterm& m : minterms) {
    if (!start && m.code == init.code) {
      start = m;
    } else {
      rest.push_back(m);
    }
  }
  std::vector<Minterm> seq;
  if (start) {
    seq = sequenceMinterms(*start, rest);
  } else {
    seq = sequenceMinterms(init, rest);
    seq.erase(seq.begin());
  }
  MergeOptions options;
  options.preserveTaps = {{9, 8}, {3, 2}, {6, 5}};
  return mergeMinterms(seq, options);
}

namespace {

class NetworkEmitter {
 public:
  NetworkEmitter(Circuit& c, const Cses& cses, std::span<const WireId> seg,
                 WireId anc, WireId v1, std::span<const DecoderTap> taps)
      : c_(c), cses_(cses), seg_(seg), anc_(anc), v1_(v1), taps_(taps) {
    if (seg.size() != kSegments) throw DomainError("need 7 segment wires");
    local_.assign(seg.begin(), seg.end());
    local_.push_back(anc);
    local_.push_back(v1);
    for (const DecoderTap& t : taps) local_.push_back(t.wire);
  }

  void run() {
    const std::size_t n = cses_.groups.size();
    // Per tap: which groups ride on the v1 prefix, and which owned codes
    // need a direct correction.
    std::vector<std::vector<bool>> include(taps_.size(), std::vector<bool>(n));
    for (std::size_t t = 0; t < taps_.size(); ++t) {
      const std::set<int> want(taps_[t].labels.begin(), taps_[t].labels.end());
      for (std::size_t g = 0; g < n; ++g) {
        int in = 0;
        for (const Minterm& m : cses_.groups[g]) in += want.count(m.label);
        include[t][g] = 2 * in > static_cast<int>(cses_.groups[g].size());
      }
    }

    std::optional<Cube> cur;
    for (std::size_t g = 0; g < n; ++g) {
      const auto& target = cses_.stepOutputs[g];
      if (target && target != cur) {
        transition(cur, target);
        cur = target;
      }
      const std::optional<Cube> held = target ? target : std::nullopt;
      for (const CsesTerm& term : cses_.groupTerms(g)) emitTerm(term, held);
      for (std::size_t t = 0; t < taps_.size(); ++t) {
        const std::set<int> want(taps_[t].labels.begin(),
                                 taps_[t].labels.end());
        std::vector<SegmentCode> on;
        for (const Minterm& m : cses_.groups[g]) {
          if ((want.count(m.label) > 0) != include[t][g]) on.push_back(m.code);
        }
        if (!on.empty()) emitCorrection(taps_[t].wire, on, held);
      }
      for (std::size_t t = 0; t < taps_.size(); ++t) {
        const bool next = g + 1 < n ? include[t][g + 1] : false;
        if (include[t][g] != next) c_.cx({v1_}, taps_[t].wire);
      }
    }
    transition(cur, std::nullopt);
  }

 private:
  std::vector<WireId> spare(const std::vector<Control>& controls,
                            WireId target) const {
    std::vector<WireId> r;
    for (WireId w : local_) {
      if (w == target) continue;
      bool used = false;
      for (const Control& ctl : controls) used |= ctl.wire == w;
      if (!used) r.push_back(w);
    }
    return r;
  }

  void mcx(std::vector<Control> controls, WireId target) {
    const auto pool = spare(controls, target);
    appendMcx(c_, std::move(controls), target, {}, pool);
  }

  std::vector<Control> literalControls(const Cube& cube,
                                       const std::optional<Cube>& skip) const {
    std::vector<Control> r;
    for (const Literal& l : cube.literals()) {
      if (skip && skip->hasVar(l.var)) continue;
      r.push_back({seg_[l.var], l.positive});
    }
    return r;
  }

  static int dirtyCost(int controls) { return mcxToffoliCost(controls, 0); }

  void transition(const std::optional<Cube>& from,
                  const std::optional<Cube>& to) {
    if (!from && !to) return;
    if (!from || !to) {
      mcx(literalControls(from ? *from : *to, std::nullopt), anc_);
      return;
    }
    const Cube& s = *from;
    const Cube& t = *to;
    int best = dirtyCost(s.size()) + dirtyCost(t.size());
    int choice = 0;
    // Same variables, one polarity flipped: anc ^= common part.
    if (s.mask == t.mask &&
        std::popcount(static_cast<std::uint8_t>(s.value ^ t.value)) == 1) {
      const int cost = dirtyCost(s.size() - 1);
      if (cost <= best) {
        best = cost;
        choice = 1;
      }
    }
    // One literal swapped for another: anc ^= R (x ^ y).
    const std::uint8_t shared =
        static_cast<std::uint8_t>(s.mask & t.mask & ~(s.value ^ t.value));
    const std::uint8_t onlyS = s.mask & static_cast<std::uint8_t>(~shared);
    const std::uint8_t onlyT = t.mask & static_cast<std::uint8_t>(~shared);
    const bool swap = s.size() == t.size() && std::popcount(onlyS) == 1 &&
                      std::popcount(onlyT) == 1 && onlyS != onlyT &&
                      !(onlyS & t.mask) && !(onlyT & s.mask);
    if (swap && dirtyCost(s.size()) <= best) {
      best = dirtyCost(s.size());
      choice = 2;
    }

    if (choice == 0) {
      mcx(literalControls(s, std::nullopt), anc_);
      mcx(literalControls(t, std::nullopt), anc_);
    } else if (choice == 1) {
      const Cube common{static_cast<std::uint8_t>(s.mask & ~(s.value ^ t.value)),
                        static_cast<std::uint8_t>(s.value & ~(s.value ^ t.value))};
      mcx(literalControls(common, std::nullopt), anc_);
    } else {
      const int x = 6 - std::countr_zero(onlyS);
      const int y = 6 - std::countr_zero(onlyT);
      const bool p = s.polarity(x);
      const bool q = t.polarity(y);
      const Cube r{shared, static_cast<std::uint8_t>(s.value & shared)};
      auto controls = literalControls(r, std::nullopt);
      controls.push_back({seg_[x], p == q});
      c_.cx({seg_[y]}, seg_[x]);
      mcx(std::move(controls), anc_);
      c_.cx({seg_[y]}, seg_[x]);
    }
  }

  void emitTerm(const CsesTerm& term, const std::optional<Cube>& held) {
    std::vector<Control> controls;
    if (held) controls.push_back({anc_, true});
    auto lits = literalControls(term.cube, held);
    controls.insert(controls.end(), lits.begin(), lits.end());
    if (term.xorFirst >= 0) {
      const WireId u = seg_[term.xorFirst];
      const WireId v = seg_[term.xorSecond];
      c_.cx({u}, v);
      controls.push_back({v, term.xorParity});
      mcx(std::move(controls), v1_);
      c_.cx({u}, v);
      return;
    }
    mcx(std::move(controls), v1_);
  }

  // Toggles wire for the codes in `on` (all owned by the current group),
  // leaving every other code of the set that satisfies the held cube alone.
  void emitCorrection(WireId wire, const std::vector<SegmentCode>& on,
                      const std::optional<Cube>& held) {
    std::vector<SegmentCode> off;
    for (const Minterm& m : cses_.sequence) {
      if (held && !held->matches(m.code)) continue;
      if (std::find(on.begin(), on.end(), m.code) == on.end()) {
        off.push_back(m.code);
      }
    }
    const std::uint8_t freeMask =
        static_cast<std::uint8_t>(0x7F & ~(held ? held->mask : 0));

    auto search = [&](const std::vector<SegmentCode>& cover,
                      const std::vector<SegmentCode>& avoid)
        -> std::optional<Cube> {
      std::optional<Cube> best;
      auto score = [](const Cube& c) {
        return std::make_pair(c.size(),
                              std::popcount(static_cast<std::uint8_t>(
                                  c.mask & ~c.value)));
      };
      for (unsigned mask = 0; mask < 128; ++mask) {
        if (mask & ~freeMask) continue;
        const std::uint8_t m = static_cast<std::uint8_t>(mask);
        const Cube cube{m, static_cast<std::uint8_t>(cover[0].bits() & m)};
        bool ok = true;
        for (SegmentCode sc : cover) ok &= cube.matches(sc);
        for (SegmentCode sc : avoid) ok &= !cube.matches(sc);
        if (ok && (!best || score(cube) < score(*best))) best = cube;
      }
      return best;
    };

    auto emit = [&](const Cube& cube) {
      std::vector<Control> controls;
      if (held) controls.push_back({anc_, true});
      auto lits = literalControls(cube, std::nullopt);
      controls.insert(controls.end(), lits.begin(), lits.end());
      if (controls.empty()) {
        c_.x(wire);
      } else {
        mcx(std::move(controls), wire);
      }
    };

    if (auto cube = search(on, off)) {
      emit(*cube);
      return;
    }
    for (SegmentCode sc : on) {
      std::vector<SegmentCode> avoid = off;
      for (SegmentCode other : on) {
        if (other != sc) avoid.push_back(other);
      }
      auto cube = search({sc}, avoid);
      if (!cube) throw InternalError("no separating cube for a correction");
      emit(*cube);
    }
  }

  Circuit& c_;
  const Cses& cses_;
  std::span<const WireId> seg_;
  WireId anc_;
  WireId v1_;
  std::span<const DecoderTap> taps_;
  std::vector<WireId> local_;
};

}  // namespace

void appendCsesNetwork(Circuit& c, const Cses& cses,
                       std::span<const WireId> segments, WireId stepOutput,
                       WireId v1, std::span<const DecoderTap> taps) {
  NetworkEmitter(c, cses, segments, stepOutput, v1, taps).run();
}

void appendScVerifier(Circuit& c, std::span<const WireId> segments,
                      WireId stepOutput, WireId v1) {
  static const Cses cses = digitCses();
  appendCsesNetwork(c, cses, segments, stepOutput, v1, {});
}

void appendScBcd(Circuit& c, std::span<const WireId> segments,
                 WireId stepOutput, WireId v1, const Register& x) {
  if (x.size() != 4) throw DomainError("decoder needs 4 output wires");
  static const Cses cses = digitCses();
  std::vector<DecoderTap> taps;
  for (int bit = 0; bit < 4; ++bit) {
    DecoderTap t{x[bit], {}};
    for (int d = 0; d < 10; ++d) {
      if ((d >> bit) & 1) t.labels.push_back(d);
    }
    taps.push_back(std::move(t));
  }
  // Highest bit first, matching x4 x3 x2 x1.
  std::reverse(taps.begin(), taps.end());
  appendCsesNetwork(c, cses, segments, stepOutput, v1, taps);
}

}  // namespace segrover
