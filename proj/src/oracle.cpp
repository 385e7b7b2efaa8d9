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

#include "segrover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "json.hpp"
#include "segrover/errors.hpp"
#include "segrover/synth.hpp"

namespace segrover {

ConstraintSpec equationConstraints(const PuzzleConfig& puzzle, int leftDigits,
                                   int rightDigits, int resultDigits,
                                   int hdFactor, bool searchK) {
  const int total = leftDigits + rightDigits + resultDigits;
  if (total != static_cast<int>(puzzle.displays.size())) {
    throw DomainError("equation shape does not match the display count");
  }
  ConstraintSpec spec;
  ConstraintSpec::Art art;
  for (int i = 0; i < total; ++i) {
    spec.gin.displays.push_back(i);
    if (i < leftDigits) {
      art.left.push_back(i);
    } else if (i < leftDigits + rightDigits) {
      art.right.push_back(i);
    } else {
      art.result.push_back(i);
    }
  }
  spec.art = art;
  spec.gamid.mode = puzzle.kMode;
  spec.gamid.kBudget = puzzle.kBudget;
  spec.gamid.hdFactor = hdFactor;
  spec.gamid.searchK = searchK;
  spec.extras.conserveMatchsticks = puzzle.conserveMatchsticks;
  return spec;
}

int inputWidth(const PuzzleConfig& puzzle, const ConstraintSpec& spec) {
  return kSegments * static_cast<int>(puzzle.displays.size()) +
         spec.encoding.width() * static_cast<int>(puzzle.operators.size()) +
         (spec.gamid.enabled && spec.gamid.searchK ? 3 : 0);
}

DecodedCandidate decodeCandidate(const PuzzleConfig& puzzle,
                                 const ConstraintSpec& spec,
                                 const BitVector& candidate) {
  if (static_cast<int>(candidate.size()) != inputWidth(puzzle, spec)) {
    throw DomainError("candidate width does not match the input register");
  }
  DecodedCandidate d;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < puzzle.displays.size(); ++j) {
    d.displays.push_back(
        SegmentCode(static_cast<std::uint8_t>(candidate.slice(pos, 7).toInteger())));
    pos += 7;
  }
  const int w = spec.encoding.width();
  for (std::size_t s = 0; s < puzzle.operators.size(); ++s) {
    const auto code = static_cast<std::uint32_t>(candidate.slice(pos, w).toInteger());
    d.operatorCodes.push_back(code);
    d.operators.push_back(spec.encoding.decode(code));
    pos += w;
  }
  if (spec.gamid.enabled && spec.gamid.searchK) {
    d.k = static_cast<int>(candidate.slice(pos, 3).toInteger());
  }
  return d;
}

BitVector encodeCandidate(const PuzzleConfig& puzzle,
                          const ConstraintSpec& spec,
                          std::span<const SegmentCode> displays,
                          std::span<const std::uint32_t> operatorCodes,
                          std::optional<int> k) {
  if (displays.size() != puzzle.displays.size() ||
      operatorCodes.size() != puzzle.operators.size()) {
    throw DomainError("candidate arity does not match the puzzle");
  }
  BitVector v;
  for (SegmentCode sc : displays) v.append(sc.toBitVector());
  for (std::uint32_t code : operatorCodes) {
    v.append(BitVector::fromInteger(code, spec.encoding.width()));
  }
  if (spec.gamid.enabled && spec.gamid.searchK) {
    v.append(BitVector::fromInteger(static_cast<std::uint64_t>(k.value_or(0)), 3));
  }
  return v;
}

namespace {

std::string renderDisplays(const std::vector<SegmentCode>& displays,
                           const std::vector<std::optional<Op>>& ops,
                           const ConstraintSpec& spec) {
  auto digit = [&](int j) {
    const auto d = decodeSegment(displays[j]);
    return d ? static_cast<char>('0' + *d) : '?';
  };
  std::string s;
  if (!spec.art) {
    for (std::size_t j = 0; j < displays.size(); ++j) s += digit(static_cast<int>(j));
    return s;
  }
  for (int j : spec.art->left) s += digit(j);
  const auto& op = ops.at(spec.art->operatorSlot);
  s += op ? opSymbol(*op) : '?';
  for (int j : spec.art->right) s += digit(j);
  s += '=';
  for (int j : spec.art->result) s += digit(j);
  return s;
}

}  // namespace

std::string renderCandidate(const PuzzleConfig& puzzle,
                            const ConstraintSpec& spec,
                            const BitVector& candidate) {
  const DecodedCandidate d = decodeCandidate(puzzle, spec, candidate);
  return renderDisplays(d.displays, d.operators, spec);
}

std::string renderPuzzle(const PuzzleConfig& puzzle,
                         const ConstraintSpec& spec) {
  std::vector<std::optional<Op>> ops(puzzle.operators.begin(),
                                     puzzle.operators.end());
  return renderDisplays(puzzle.displays, ops, spec);
}

namespace {

// Free list of ancilla wires, handed back only in the all-zero state.
class AncillaPool {
 public:
  explicit AncillaPool(Circuit& c) : c_(c) {}

  WireId take() {
    if (!free_.empty()) {
      const WireId w = free_.back();
      free_.pop_back();
      return w;
    }
    return c_.addWire("anc" + std::to_string(created_++), WireRole::Ancilla);
  }
  Register take(int n) {
    Register r;
    for (int i = 0; i < n; ++i) r.push_back(take());
    return r;
  }
  void give(WireId w) { free_.push_back(w); }
  void give(const Register& r) {
    for (auto it = r.rbegin(); it != r.rend(); ++it) give(*it);
  }

 private:
  Circuit& c_;
  std::vector<WireId> free_;
  int created_ = 0;
};

int bitWidth(std::uint64_t v) { return std::max(1, static_cast<int>(std::bit_width(v))); }

class OracleCompiler {
 public:
  OracleCompiler(const PuzzleConfig& puzzle, const ConstraintSpec& spec)
      : puzzle_(puzzle), spec_(spec), pool_(c_) {}

  OracleArtifact compile(const CompileOptions& options) {
    validate();
    declareInputs();
    out_ = c_.addWire("out", WireRole::Output);

    const std::size_t start = c_.gateCount();
    stageDisplays();
    stageOperators();
    if (spec_.art) stageEquation();
    if (spec_.gamid.enabled) stageDistance();
    if (spec_.extras.conserveMatchsticks) stageConservation();
    const std::size_t end = c_.gateCount();

    const Register clean = pool_.take(std::max(0, static_cast<int>(final_.size()) - 2));
    appendMcx(c_, final_, out_, clean, {});
    pool_.give(clean);
    c_.appendReversed(start, end);

    OracleArtifact art;
    art.inputWires = inputs_;
    art.ancillaWires = c_.wiresWithRole(WireRole::Ancilla);
    if (options.ancillaBudget >= 0 &&
        static_cast<int>(art.ancillaWires.size()) > options.ancillaBudget) {
      throw CapacityError("oracle needs " +
                          std::to_string(art.ancillaWires.size()) +
                          " ancillas, budget is " +
                          std::to_string(options.ancillaBudget));
    }
    art.outputWire = out_;
    art.cost = cost(c_);
    art.initialState = puzzle_;
    art.spec = spec_;
    art.circuit = std::move(c_);
    return art;
  }

 private:
  void validate() {
    const int m = static_cast<int>(puzzle_.displays.size());
    std::set<int> gin(spec_.gin.displays.begin(), spec_.gin.displays.end());
    for (int j : gin) {
      if (j < 0 || j >= m) throw DomainError("constraint names a missing display");
    }
    for (Op op : spec_.allowedOps) {
      if (op != Op::Plus && op != Op::Minus) {
        throw UnsupportedFeatureError(std::string("no circuit builder for '") +
                                      opSymbol(op) + "'");
      }
    }
    for (Op op : puzzle_.operators) {
      if (!spec_.encoding.encode(op)) {
        throw DomainError(std::string("operator '") + opSymbol(op) +
                          "' has no code");
      }
    }
    if (spec_.art) {
      const auto& a = *spec_.art;
      if (a.operatorSlot < 0 ||
          a.operatorSlot >= static_cast<int>(puzzle_.operators.size())) {
        throw DomainError("equation operator slot is missing");
      }
      for (const auto* group : {&a.left, &a.right, &a.result}) {
        if (group->empty() || group->size() > 2) {
          throw UnsupportedFeatureError("operands must have one or two digits");
        }
        for (int j : *group) {
          if (!gin.count(j)) {
            throw DomainError("equation display is not validity-checked");
          }
        }
      }
    }
    if (spec_.gamid.hdFactor != 1 && spec_.gamid.hdFactor != 2) {
      throw DomainError("hd factor must be 1 or 2");
    }
    if (spec_.gamid.kBudget < 0 || spec_.gamid.kBudget > 7) {
      throw DomainError("K budget must be in [0, 7]");
    }
  }

  void declareInputs() {
    for (std::size_t j = 0; j < puzzle_.displays.size(); ++j) {
      std::vector<WireId> seg;
      for (int v = 0; v < kSegments; ++v) {
        seg.push_back(c_.addWire(std::string(1, static_cast<char>('a' + v)) +
                                     std::to_string(j),
                                 WireRole::Input));
      }
      inputs_.insert(inputs_.end(), seg.begin(), seg.end());
      segments_.push_back(seg);
    }
    const int w = spec_.encoding.width();
    for (std::size_t s = 0; s < puzzle_.operators.size(); ++s) {
      Register reg(w);
      for (int b = w - 1; b >= 0; --b) {
        reg[b] = c_.addWire("op" + std::to_string(s) + "_" + std::to_string(b),
                            WireRole::Input);
        inputs_.push_back(reg[b]);
      }
      operators_.push_back(reg);
    }
    if (spec_.gamid.enabled && spec_.gamid.searchK) {
      k_.resize(3);
      for (int b = 2; b >= 0; --b) {
        k_[b] = c_.addWire("k" + std::to_string(b), WireRole::Input);
        inputs_.push_back(k_[b]);
      }
    }
  }

  // target ^= AND(controls), borrowing clean wires from the pool.
  void mcx(std::vector<Control> controls, WireId target) {
    const Register clean =
        pool_.take(std::max(0, static_cast<int>(controls.size()) - 2));
    appendMcx(c_, std::move(controls), target, clean, {});
    pool_.give(clean);
  }

  void equalsConstant(const Register& reg, std::uint64_t value, WireId out) {
    if (reg.size() < 64 && (value >> reg.size()) != 0) return;
    std::vector<Control> controls;
    for (std::size_t i = 0; i < reg.size(); ++i) {
      controls.push_back({reg[i], ((value >> i) & 1u) != 0});
    }
    mcx(std::move(controls), out);
  }

  // reg ^= table[code] over the codes of an operator register.
  Register lookup(const Register& opReg, const std::vector<std::uint64_t>& table) {
    std::uint64_t top = 0;
    for (std::uint64_t v : table) top = std::max(top, v);
    const Register out = pool_.take(bitWidth(top));
    for (std::uint32_t code = 0; code < table.size(); ++code) {
      for (std::size_t b = 0; b < out.size(); ++b) {
        if ((table[code] >> b) & 1u) equalsConstant(opReg, code, out[b]);
      }
    }
    return out;
  }

  bool allowed(Op op) const {
    return std::find(spec_.allowedOps.begin(), spec_.allowedOps.end(), op) !=
           spec_.allowedOps.end();
  }

  void stageDisplays() {
    std::set<int> decode;
    if (spec_.art) {
      for (const auto* g : {&spec_.art->left, &spec_.art->right, &spec_.art->result}) {
        decode.insert(g->begin(), g->end());
      }
    }
    digits_.resize(puzzle_.displays.size());
    std::set<int> gin(spec_.gin.displays.begin(), spec_.gin.displays.end());
    for (int j : gin) {
      const WireId v1 = pool_.take();
      const WireId step = pool_.take();
      if (decode.count(j)) {
        digits_[j] = pool_.take(4);
        appendScBcd(c_, segments_[j], step, v1, digits_[j]);
      } else {
        appendScVerifier(c_, segments_[j], step, v1);
      }
      pool_.give(step);
      final_.push_back({v1, true});
    }
  }

  void stageOperators() {
    const std::size_t codes = std::size_t{1} << spec_.encoding.width();
    for (std::size_t s = 0; s < puzzle_.operators.size(); ++s) {
      const bool needed = spec_.gin.checkOperators ||
                          (spec_.art && spec_.art->operatorSlot == static_cast<int>(s));
      if (!needed) continue;
      const WireId ok = pool_.take();
      for (std::uint32_t code = 0; code < codes; ++code) {
        const auto op = spec_.encoding.decode(code);
        if (op && allowed(*op)) equalsConstant(operators_[s], code, ok);
      }
      final_.push_back({ok, true});
    }
  }

  Register number(const std::vector<int>& group) {
    if (group.size() == 1) return digits_[group[0]];
    const Register z = pool_.take(8);
    const WireId anc = pool_.take();
    appendTdn(c_, digits_[group[0]], digits_[group[1]], z, anc);
    pool_.give(anc);
    return z;
  }

  void stageEquation() {
    const auto& a = *spec_.art;
    Register left = number(a.left);
    Register right = number(a.right);
    const Register result = number(a.result);
    const std::size_t w = std::max(left.size(), right.size());
    while (left.size() < w) left.push_back(pool_.take());
    while (right.size() < w) right.push_back(pool_.take());
    const Register sum = pool_.take(static_cast<int>(w) + 1);
    const Register& opReg = operators_[a.operatorSlot];
    const bool plus = allowed(Op::Plus);
    const bool minus = allowed(Op::Minus);
    if (plus && minus) {
      const WireId isMinus = pool_.take();
      equalsConstant(opReg, *spec_.encoding.encode(Op::Minus), isMinus);
      appendAddSub(c_, left, right, sum, {isMinus});
      const WireId borrow = pool_.take();
      c_.ccx({isMinus}, {sum.back()}, borrow);
      final_.push_back({borrow, false});
    } else if (minus) {
      appendSubtractor(c_, left, right, sum);
      final_.push_back({sum.back(), false});
    } else {
      appendAdder(c_, left, right, sum);
    }
    const WireId eq = pool_.take();
    const Register clean = pool_.take(std::max<int>(
        0, static_cast<int>(std::max(sum.size(), result.size())) - 2));
    appendEqVerifier(c_, sum, result, eq, clean, {});
    pool_.give(clean);
    final_.push_back({eq, true});
  }

  // Sum of the registers via an adder tree.
  Register total(std::vector<Register> regs) {
    while (regs.size() > 1) {
      Register a = regs[0];
      Register b = regs[1];
      regs.erase(regs.begin(), regs.begin() + 2);
      if (a.size() < b.size()) std::swap(a, b);
      const Register s = pool_.take(static_cast<int>(a.size()) + 1);
      appendAdder(c_, a, b, s);
      regs.push_back(s);
    }
    return regs.front();
  }

  Register popcounts(bool againstInitial) {
    std::vector<Register> regs;
    for (std::size_t j = 0; j < puzzle_.displays.size(); ++j) {
      const SegmentCode init = puzzle_.displays[j];
      if (againstInitial) {
        for (int v = 0; v < kSegments; ++v) {
          if (init.lit(v)) c_.x(segments_[j][v]);
        }
      }
      const Register cnt = pool_.take(3);
      const Register anc = pool_.take(2);
      appendPopcount7(c_, segments_[j], anc, cnt);
      pool_.give(anc);
      if (againstInitial) {
        for (int v = 0; v < kSegments; ++v) {
          if (init.lit(v)) c_.x(segments_[j][v]);
        }
      }
      regs.push_back(cnt);
    }
    const std::size_t codes = std::size_t{1} << spec_.encoding.width();
    for (std::size_t s = 0; s < puzzle_.operators.size(); ++s) {
      std::vector<std::uint64_t> table(codes, 0);
      for (std::uint32_t code = 0; code < codes; ++code) {
        const auto op = spec_.encoding.decode(code);
        if (!op || !allowed(*op)) continue;
        table[code] = static_cast<std::uint64_t>(
            againstInitial ? opDistance(*op, puzzle_.operators[s])
                           : opMatchsticks(*op));
      }
      regs.push_back(lookup(operators_[s], table));
    }
    return total(std::move(regs));
  }

  void stageDistance() {
    const auto& g = spec_.gamid;
    Register hd = popcounts(true);
    if (g.searchK) {
      Register target = k_;
      if (g.hdFactor == 2) target.insert(target.begin(), pool_.take());
      if (g.mode == KMode::Exact) {
        const WireId ok = pool_.take();
        const Register clean = pool_.take(std::max<int>(
            0, static_cast<int>(std::max(hd.size(), target.size())) - 2));
        appendEqVerifier(c_, hd, target, ok, clean, {});
        pool_.give(clean);
        final_.push_back({ok, true});
      } else {
        while (hd.size() < target.size()) hd.push_back(pool_.take());
        while (target.size() < hd.size()) target.push_back(pool_.take());
        const Register scratch = pool_.take(static_cast<int>(hd.size()) + 1);
        const WireId over = pool_.take();
        appendLessThan(c_, target, hd, over, scratch);
        pool_.give(scratch);
        final_.push_back({over, false});
      }
      if (g.kBudget < 7) {
        const Register bound = pool_.take(3);
        for (int b = 0; b < 3; ++b) {
          if ((g.kBudget >> b) & 1) c_.x(bound[b]);
        }
        const Register scratch = pool_.take(4);
        const WireId over = pool_.take();
        appendLessThan(c_, bound, k_, over, scratch);
        pool_.give(scratch);
        for (int b = 0; b < 3; ++b) {
          if ((g.kBudget >> b) & 1) c_.x(bound[b]);
        }
        pool_.give(bound);
        final_.push_back({over, false});
      }
      return;
    }
    const std::uint64_t t = static_cast<std::uint64_t>(g.hdFactor * g.kBudget);
    const WireId ok = pool_.take();
    if (g.mode == KMode::Exact) {
      equalsConstant(hd, t, ok);
    } else {
      if (t + 1 >= (std::uint64_t{1} << hd.size())) {
        c_.x(ok);
      } else {
        const Register bound = pool_.take(static_cast<int>(hd.size()));
        for (std::size_t b = 0; b < bound.size(); ++b) {
          if (((t + 1) >> b) & 1) c_.x(bound[b]);
        }
        const Register scratch = pool_.take(static_cast<int>(hd.size()) + 1);
        appendLessThan(c_, hd, bound, ok, scratch);
        pool_.give(scratch);
        for (std::size_t b = 0; b < bound.size(); ++b) {
          if (((t + 1) >> b) & 1) c_.x(bound[b]);
        }
        pool_.give(bound);
      }
    }
    final_.push_back({ok, true});
  }

  void stageConservation() {
    const Register lit = popcounts(false);
    const WireId ok = pool_.take();
    equalsConstant(lit, static_cast<std::uint64_t>(puzzle_.matchsticks()), ok);
    final_.push_back({ok, true});
  }

  const PuzzleConfig& puzzle_;
  const ConstraintSpec& spec_;
  Circuit c_;
  AncillaPool pool_;
  std::vector<WireId> inputs_;
  std::vector<std::vector<WireId>> segments_;
  std::vector<Register> operators_;
  Register k_;
  std::vector<Register> digits_;
  std::vector<Control> final_;
  WireId out_ = 0;
};

}  // namespace

OracleArtifact compileOracle(const PuzzleConfig& puzzle,
                             const ConstraintSpec& spec,
                             const CompileOptions& options) {
  return OracleCompiler(puzzle, spec).compile(options);
}

OracleArtifact oracleFromCircuit(Circuit circuit) {
  const auto outputs = circuit.wiresWithRole(WireRole::Output);
  if (outputs.size() != 1) throw DomainError("oracle needs exactly one output");
  OracleArtifact art;
  art.inputWires = circuit.wiresWithRole(WireRole::Input);
  for (std::size_t i = 0; i < circuit.wireCount(); ++i) {
    const WireRole r = circuit.wires()[i].role;
    if (r == WireRole::Ancilla || r == WireRole::StepOutput) {
      art.ancillaWires.push_back(static_cast<WireId>(i));
    }
  }
  art.outputWire = outputs[0];
  art.cost = cost(circuit);
  art.spec.art.reset();
  art.spec.gamid.enabled = false;
  art.circuit = std::move(circuit);
  return art;
}

bool evaluateOracle(const OracleArtifact& art, const BitVector& candidate) {
  if (candidate.size() != art.inputWires.size()) {
    throw DomainError("candidate width does not match the input register");
  }
  BitVector state(art.circuit.wireCount());
  for (std::size_t i = 0; i < art.inputWires.size(); ++i) {
    state.set(art.inputWires[i], candidate.get(i));
  }
  const BitVector out = applyToBasisState(art.circuit, state);
  for (WireId w : art.ancillaWires) {
    if (out.get(w)) {
      throw InternalError("ancilla " + art.circuit.wires()[w].name +
                          " not restored");
    }
  }
  return out.get(art.outputWire);
}

std::string oracleSidecarJson(const OracleArtifact& art) {
  using nlohmann::ordered_json;
  ordered_json j;
  auto names = [&](const std::vector<WireId>& ws) {
    ordered_json a = ordered_json::array();
    for (WireId w : ws) a.push_back(art.circuit.wires()[w].name);
    return a;
  };
  j["wires"]["inputs"] = names(art.inputWires);
  j["wires"]["ancillas"] = names(art.ancillaWires);
  j["wires"]["output"] = art.circuit.wires()[art.outputWire].name;
  const QuantumCost& q = art.cost;
  j["cost"] = {{"in", q.nInput},         {"anc", q.nAncilla},
               {"out", q.nOutput},       {"qubits", q.nTotalQubits},
               {"ccx", q.nToffoli},      {"cx", q.nCnot},
               {"x", q.nNot},            {"gates", q.nTotalGates}};
  ordered_json p;
  ordered_json displays = ordered_json::array();
  for (SegmentCode sc : art.initialState.displays) displays.push_back(sc.toString());
  p["displays"] = displays;
  ordered_json ops = ordered_json::array();
  for (Op op : art.initialState.operators) ops.push_back(std::string(1, opSymbol(op)));
  p["operators"] = ops;
  if (art.spec.art) p["equation"] = renderPuzzle(art.initialState, art.spec);
  p["k"] = art.spec.gamid.kBudget;
  p["k_mode"] = art.spec.gamid.mode == KMode::Exact ? "exact" : "at_most";
  p["hd_factor"] = art.spec.gamid.hdFactor;
  p["k_search"] = art.spec.gamid.searchK;
  p["conserve"] = art.spec.extras.conserveMatchsticks;
  j["puzzle"] = p;
  return j.dump(2) + "\n";
}

}  // namespace segrover
