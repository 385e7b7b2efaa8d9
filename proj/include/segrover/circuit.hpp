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

#ifndef SEGROVER_CIRCUIT_HPP_
#define SEGROVER_CIRCUIT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segrover/bitvector.hpp"

namespace segrover {

using WireId = std::uint32_t;

enum class WireRole { Input, Ancilla, StepOutput, Output };

std::string_view roleName(WireRole role);
std::optional<WireRole> roleFromName(std::string_view name);

struct Wire {
  std::string name;
  WireRole role;
  bool operator==(const Wire&) const = default;
};

struct Control {
  WireId wire;
  bool positive = true;
  bool operator==(const Control&) const = default;
};

enum class GateKind { Not, Cnot, Toffoli, Mcx };

// NOT-family gate: target ^= AND of the controls. Negative controls fire on 0.
struct Gate {
  std::vector<Control> controls;
  WireId target;

  GateKind kind() const;
  bool operator==(const Gate&) const = default;
};

class Circuit {
 public:
  WireId addWire(std::string name, WireRole role);
  // Wires prefix0, prefix1, ... ; element 0 is the least significant bit.
  std::vector<WireId> addRegister(const std::string& prefix, int width,
                                  WireRole role);

  void append(Gate gate);
  void x(WireId t) { append({{}, t}); }
  void cx(Control c, WireId t) { append({{c}, t}); }
  void ccx(Control c1, Control c2, WireId t) { append({{c1, c2}, t}); }
  void mcx(std::vector<Control> controls, WireId t) {
    append({std::move(controls), t});
  }
  void appendGates(std::span<const Gate> gates);
  // Appends the gates of [first, last) in reverse order.
  void appendReversed(std::size_t first, std::size_t last);

  std::size_t wireCount() const { return wires_.size(); }
  const std::vector<Wire>& wires() const { return wires_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t gateCount() const { return gates_.size(); }
  std::optional<WireId> findWire(std::string_view name) const;
  std::vector<WireId> wiresWithRole(WireRole role) const;
  void setRole(WireId w, WireRole role) { wires_.at(w).role = role; }

  bool operator==(const Circuit&) const = default;

 private:
  std::vector<Wire> wires_;
  std::vector<Gate> gates_;
};

struct QuantumCost {
  int nInput = 0;
  int nAncilla = 0;
  int nOutput = 0;
  int nTotalQubits = 0;
  int nToffoli = 0;
  int nCnot = 0;
  int nNot = 0;
  int nTotalGates = 0;

  bool operator==(const QuantumCost&) const = default;
};

// Toffoli count charged for an undecomposed MCX with n controls.
int ladderToffolis(int controls);

BitVector applyToBasisState(const Circuit& c, const BitVector& state);

Circuit inverse(const Circuit& c);

// Wires of b listed in wireMap are identified with wires of a; the rest are
// appended. Gates of a run first.
using WireMap = std::map<WireId, WireId>;
Circuit compose(const Circuit& a, const Circuit& b, const WireMap& wireMap);

// Expands negative controls into X sandwiches and cancels X pairs that
// nothing separates.
Circuit lowerNegativeControls(const Circuit& c);

QuantumCost cost(const Circuit& c);

// Standalone MCX over c0..c{n-1} -> t using a V-shaped clean-ancilla ladder.
// The first keepStepOutputs rungs are left computed as StepOutput wires.
Circuit decomposeMCX(int controls, int availableAncilla,
                     int keepStepOutputs = 0);

// Appends target ^= AND(controls). Uses the clean ladder when enough clean
// wires are supplied, otherwise spends the clean ones as rungs and borrows
// dirty wires for the remainder. Clean wires are returned to 0; dirty wires
// are returned to their original values.
void appendMcx(Circuit& c, std::vector<Control> controls, WireId target,
               std::span<const WireId> clean, std::span<const WireId> dirty);

// Toffoli count appendMcx would emit.
int mcxToffoliCost(int controls, int clean);

std::string writeNetlist(const Circuit& c);
Circuit parseNetlist(std::string_view text);

}  // namespace segrover

#endif  // SEGROVER_CIRCUIT_HPP_
