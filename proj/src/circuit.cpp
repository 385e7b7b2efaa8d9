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

#include "segrover/circuit.hpp"

#include <algorithm>
#include <set>

#include "segrover/errors.hpp"

namespace segrover {

std::string_view roleName(WireRole role) {
  switch (role) {
    case WireRole::Input: return "input";
    case WireRole::Ancilla: return "ancilla";
    case WireRole::StepOutput: return "step_output";
    case WireRole::Output: return "output";
  }
  return "?";
}

std::optional<WireRole> roleFromName(std::string_view name) {
  if (name == "input") return WireRole::Input;
  if (name == "ancilla") return WireRole::Ancilla;
  if (name == "step_output") return WireRole::StepOutput;
  if (name == "output") return WireRole::Output;
  return std::nullopt;
}

GateKind Gate::kind() const {
  switch (controls.size()) {
    case 0: return GateKind::Not;
    case 1: return GateKind::Cnot;
    case 2: return GateKind::Toffoli;
    default: return GateKind::Mcx;
  }
}

WireId Circuit::addWire(std::string name, WireRole role) {
  wires_.push_back({std::move(name), role});
  return static_cast<WireId>(wires_.size() - 1);
}

std::vector<WireId> Circuit::addRegister(const std::string& prefix, int width,
                                         WireRole role) {
  std::vector<WireId> r;
  for (int i = 0; i < width; ++i) {
    r.push_back(addWire(prefix + std::to_string(i), role));
  }
  return r;
}

void Circuit::append(Gate gate) {
  if (gate.target >= wires_.size()) throw DomainError("gate target out of range");
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    const WireId w = gate.controls[i].wire;
    if (w >= wires_.size()) throw DomainError("gate control out of range");
    if (w == gate.target) throw DomainError("gate control equals target");
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.controls[j].wire == w) throw DomainError("repeated control");
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::appendGates(std::span<const Gate> gates) {
  for (const Gate& g : gates) append(g);
}

void Circuit::appendReversed(std::size_t first, std::size_t last) {
  for (std::size_t i = last; i > first; --i) gates_.push_back(gates_[i - 1]);
}

std::optional<WireId> Circuit::findWire(std::string_view name) const {
  for (std::size_t i = 0; i < wires_.size(); ++i) {
    if (wires_[i].name == name) return static_cast<WireId>(i);
  }
  return std::nullopt;
}

std::vector<WireId> Circuit::wiresWithRole(WireRole role) const {
  std::vector<WireId> r;
  for (std::size_t i = 0; i < wires_.size(); ++i) {
    if (wires_[i].role == role) r.push_back(static_cast<WireId>(i));
  }
  return r;
}

int ladderToffolis(int controls) {
  if (controls <= 1) return 0;
  if (controls == 2) return 1;
  return 2 * (controls - 2) + 1;
}

BitVector applyToBasisState(const Circuit& c, const BitVector& state) {
  if (state.size() != c.wireCount()) {
    throw DomainError("basis state width differs from wire count");
  }
  BitVector s = state;
  for (const Gate& g : c.gates()) {
    bool fire = true;
    for (const Control& ctl : g.controls) {
      if (s.get(ctl.wire) != ctl.positive) {
        fire = false;
        break;
      }
    }
    if (fire) s.flip(g.target);
  }
  return s;
}

Circuit inverse(const Circuit& c) {
  Circuit r;
  for (const Wire& w : c.wires()) r.addWire(w.name, w.role);
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) r.append(*it);
  return r;
}

namespace {

bool compatible(WireRole inA, WireRole inB) {
  switch (inB) {
    case WireRole::Input:
      return true;
    case WireRole::Ancilla:
    case WireRole::StepOutput:
      return inA == WireRole::Ancilla || inA == WireRole::StepOutput;
    case WireRole::Output:
      return inA == WireRole::Output || inA == WireRole::Ancilla;
  }
  return false;
}

}  // namespace

Circuit compose(const Circuit& a, const Circuit& b, const WireMap& wireMap) {
  std::set<WireId> used;
  for (const auto& [wb, wa] : wireMap) {
    if (wb >= b.wireCount() || wa >= a.wireCount()) {
      throw CompositionError("wire map refers to a missing wire");
    }
    if (!used.insert(wa).second) {
      throw CompositionError("wire map is not injective");
    }
    if (!compatible(a.wires()[wa].role, b.wires()[wb].role)) {
      throw CompositionError("incompatible roles for " + b.wires()[wb].name +
                             " -> " + a.wires()[wa].name);
    }
  }
  Circuit r = a;
  std::vector<WireId> remap(b.wireCount());
  for (std::size_t i = 0; i < b.wireCount(); ++i) {
    const WireId wb = static_cast<WireId>(i);
    auto it = wireMap.find(wb);
    if (it != wireMap.end()) {
      remap[i] = it->second;
      continue;
    }
    std::string name = b.wires()[i].name;
    while (r.findWire(name)) name += "'";
    remap[i] = r.addWire(name, b.wires()[i].role);
  }
  for (const Gate& g : b.gates()) {
    Gate m = g;
    m.target = remap[g.target];
    for (Control& ctl : m.controls) ctl.wire = remap[ctl.wire];
    r.append(std::move(m));
  }
  return r;
}

Circuit lowerNegativeControls(const Circuit& c) {
  std::vector<Gate> expanded;
  expanded.reserve(c.gateCount() * 2);
  for (const Gate& g : c.gates()) {
    std::vector<WireId> negs;
    for (const Control& ctl : g.controls) {
      if (!ctl.positive) negs.push_back(ctl.wire);
    }
    for (WireId w : negs) expanded.push_back({{}, w});
    Gate p = g;
    for (Control& ctl : p.controls) ctl.positive = true;
    expanded.push_back(std::move(p));
    for (WireId w : negs) expanded.push_back({{}, w});
  }

  // Two X gates on a wire cancel when no gate in between touches that wire.
  std::vector<bool> removed(expanded.size(), false);
  std::vector<std::int64_t> pending(c.wireCount(), -1);
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    const Gate& g = expanded[i];
    if (g.controls.empty()) {
      std::int64_t& p = pending[g.target];
      if (p >= 0) {
        removed[static_cast<std::size_t>(p)] = true;
        removed[i] = true;
        p = -1;
      } else {
        p = static_cast<std::int64_t>(i);
      }
      continue;
    }
    pending[g.target] = -1;
    for (const Control& ctl : g.controls) pending[ctl.wire] = -1;
  }

  Circuit r;
  for (const Wire& w : c.wires()) r.addWire(w.name, w.role);
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    if (!removed[i]) r.append(std::move(expanded[i]));
  }
  return r;
}

QuantumCost cost(const Circuit& c) {
  QuantumCost q;
  for (const Wire& w : c.wires()) {
    switch (w.role) {
      case WireRole::Input: ++q.nInput; break;
      case WireRole::Ancilla:
      case WireRole::StepOutput: ++q.nAncilla; break;
      case WireRole::Output: ++q.nOutput; break;
    }
  }
  q.nTotalQubits = q.nInput + q.nAncilla + q.nOutput;
  const Circuit lowered = lowerNegativeControls(c);
  for (const Gate& g : lowered.gates()) {
    switch (g.kind()) {
      case GateKind::Not: ++q.nNot; break;
      case GateKind::Cnot: ++q.nCnot; break;
      case GateKind::Toffoli: ++q.nToffoli; break;
      case GateKind::Mcx:
        q.nToffoli += ladderToffolis(static_cast<int>(g.controls.size()));
        break;
    }
  }
  q.nTotalGates = q.nToffoli + q.nCnot + q.nNot;
  return q;
}

Circuit decomposeMCX(int controls, int availableAncilla, int keepStepOutputs) {
  if (controls < 3) throw DomainError("decomposeMCX needs at least 3 controls");
  const int rungs = controls - 2;
  if (availableAncilla < rungs) {
    throw CapacityError("MCX with " + std::to_string(controls) +
                        " controls needs " + std::to_string(rungs) +
                        " ancillas");
  }
  if (keepStepOutputs < 0 || keepStepOutputs > rungs) {
    throw DomainError("cannot keep more step-outputs than ladder rungs");
  }
  Circuit c;
  const auto ctl = c.addRegister("c", controls, WireRole::Input);
  std::vector<WireId> anc;
  for (int i = 0; i < rungs; ++i) {
    anc.push_back(c.addWire("anc" + std::to_string(i),
                            i < keepStepOutputs ? WireRole::StepOutput
                                                : WireRole::Ancilla));
  }
  const WireId t = c.addWire("t", WireRole::Output);
  c.ccx({ctl[0]}, {ctl[1]}, anc[0]);
  for (int i = 1; i < rungs; ++i) c.ccx({anc[i - 1]}, {ctl[i + 1]}, anc[i]);
  c.ccx({anc[rungs - 1]}, {ctl[controls - 1]}, t);
  for (int i = rungs - 1; i >= keepStepOutputs; --i) {
    if (i == 0) {
      c.ccx({ctl[0]}, {ctl[1]}, anc[0]);
    } else {
      c.ccx({anc[i - 1]}, {ctl[i + 1]}, anc[i]);
    }
  }
  return c;
}

namespace {

// target ^= AND(x) with x.size() >= 3, borrowing d (x.size() - 2 wires in
// any state). 4 (m - 2) Toffolis.
void dirtyMcx(Circuit& c, const std::vector<WireId>& x, WireId t,
              const std::vector<WireId>& d) {
  const int m = static_cast<int>(x.size());
  auto half = [&] {
    c.ccx({x[m - 1]}, {d[m - 3]}, t);
    for (int j = m - 3; j >= 1; --j) c.ccx({x[j + 1]}, {d[j - 1]}, d[j]);
    c.ccx({x[0]}, {x[1]}, d[0]);
    for (int j = 1; j <= m - 3; ++j) c.ccx({x[j + 1]}, {d[j - 1]}, d[j]);
  };
  half();
  half();
}

}  // namespace

int mcxToffoliCost(int controls, int clean) {
  if (controls <= 2) return controls == 2 ? 1 : 0;
  if (clean >= controls - 2) return ladderToffolis(controls);
  const int reduced = controls - clean;
  return 2 * clean + 4 * (reduced - 2);
}

void appendMcx(Circuit& c, std::vector<Control> controls, WireId target,
               std::span<const WireId> clean, std::span<const WireId> dirty) {
  const int m = static_cast<int>(controls.size());
  for (const Control& ctl : controls) {
    if (ctl.wire == target) throw DomainError("MCX control equals target");
  }
  if (m <= 2) {
    c.append({std::move(controls), target});
    return;
  }
  std::vector<WireId> negs;
  std::vector<WireId> x;
  for (const Control& ctl : controls) {
    if (!ctl.positive) negs.push_back(ctl.wire);
    x.push_back(ctl.wire);
  }
  for (WireId w : negs) c.x(w);

  if (static_cast<int>(clean.size()) >= m - 2) {
    const int rungs = m - 2;
    c.ccx({x[0]}, {x[1]}, clean[0]);
    for (int i = 1; i < rungs; ++i) c.ccx({clean[i - 1]}, {x[i + 1]}, clean[i]);
    c.ccx({clean[rungs - 1]}, {x[m - 1]}, target);
    for (int i = rungs - 1; i >= 1; --i) {
      c.ccx({clean[i - 1]}, {x[i + 1]}, clean[i]);
    }
    c.ccx({x[0]}, {x[1]}, clean[0]);
  } else {
    const int r = static_cast<int>(clean.size());
    std::vector<WireId> reduced;
    std::vector<WireId> pool(dirty.begin(), dirty.end());
    if (r > 0) {
      c.ccx({x[0]}, {x[1]}, clean[0]);
      for (int i = 1; i < r; ++i) c.ccx({clean[i - 1]}, {x[i + 1]}, clean[i]);
      reduced.push_back(clean[r - 1]);
      for (int i = r + 1; i < m; ++i) reduced.push_back(x[i]);
      for (int i = 0; i <= r; ++i) pool.push_back(x[i]);
      for (int i = 0; i + 1 < r; ++i) pool.push_back(clean[i]);
    } else {
      reduced = x;
    }
    const int need = static_cast<int>(reduced.size()) - 2;
    if (static_cast<int>(pool.size()) < need) {
      throw CapacityError("MCX with " + std::to_string(m) +
                          " controls lacks spare wires");
    }
    pool.resize(need);
    dirtyMcx(c, reduced, target, pool);
    for (int i = r - 1; i >= 1; --i) c.ccx({clean[i - 1]}, {x[i + 1]}, clean[i]);
    if (r > 0) c.ccx({x[0]}, {x[1]}, clean[0]);
  }

  for (WireId w : negs) c.x(w);
}

}  // namespace segrover
