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

#include <sstream>

#include "segrover/errors.hpp"
#include "segrover/synth.hpp"

namespace segrover {
namespace {

void maj(Circuit& c, WireId carry, WireId b, WireId a) {
  c.cx({a}, b);
  c.cx({a}, carry);
  c.ccx({carry}, {b}, a);
}

void uma(Circuit& c, WireId carry, WireId b, WireId a) {
  c.ccx({carry}, {b}, a);
  c.cx({a}, carry);
  c.cx({carry}, b);
}

// t ^= MAJ(a, b, c); b <- a ^ b; c <- a ^ b ^ c.
void fullAdder(Circuit& c, WireId a, WireId b, WireId s, WireId t) {
  c.ccx({a}, {b}, t);
  c.cx({a}, b);
  c.ccx({b}, {s}, t);
  c.cx({b}, s);
}

void fullAdderInverse(Circuit& c, WireId a, WireId b, WireId s, WireId t) {
  c.cx({b}, s);
  c.ccx({b}, {s}, t);
  c.cx({a}, b);
  c.ccx({a}, {b}, t);
}

std::vector<WireId> concat(std::initializer_list<std::span<const WireId>> parts) {
  std::vector<WireId> r;
  for (auto p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

}  // namespace

void appendTdn(Circuit& c, const Register& x, const Register& y,
               const Register& z, WireId anc) {
  if (x.size() != 4 || y.size() != 4 || z.size() != 8) {
    throw DomainError("TDN generator needs 4 + 4 inputs and 8 outputs");
  }
  // z <- 10x = 2x + 8x.
  c.cx({x[0]}, z[1]);
  c.cx({x[1]}, z[2]);
  c.cx({x[2]}, z[3]);
  c.cx({x[0]}, z[3]);
  c.ccx({x[2]}, {x[0]}, anc);
  c.cx({x[3]}, z[4]);
  c.cx({x[1]}, z[4]);
  c.ccx({anc}, {z[4]}, z[5]);
  c.ccx({x[3]}, {x[1]}, z[5]);
  c.cx({anc}, z[4]);
  c.ccx({x[2]}, {z[5]}, z[6]);
  c.cx({x[2]}, z[5]);
  c.cx({x[3]}, z[6]);
  c.ccx({x[2]}, {x[0]}, anc);

  // z += y: z1 takes y1 directly, bits 2..4 ripple, the carry then
  // increments z5..z7.
  c.cx({y[0]}, z[0]);
  maj(c, anc, z[1], y[1]);
  maj(c, y[1], z[2], y[2]);
  maj(c, y[2], z[3], y[3]);
  const std::vector<WireId> dirty{x[0]};
  appendMcx(c, {{y[3]}, {z[4]}, {z[5]}}, z[6], {}, dirty);
  c.ccx({y[3]}, {z[4]}, z[5]);
  c.cx({y[3]}, z[4]);
  uma(c, y[2], z[3], y[3]);
  uma(c, y[1], z[2], y[2]);
  uma(c, anc, z[1], y[1]);
}

void appendAdder(Circuit& c, const Register& a, const Register& b,
                 const Register& s) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() > n || s.size() != n + 1) {
    throw DomainError("adder needs |a| >= |b| and |s| = |a| + 1");
  }
  if (!b.empty()) {
    c.ccx({a[0]}, {b[0]}, s[1]);
    c.cx({a[0]}, s[0]);
    c.cx({b[0]}, s[0]);
  } else {
    c.cx({a[0]}, s[0]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (i < b.size()) {
      c.ccx({a[i]}, {b[i]}, s[i + 1]);
      c.cx({a[i]}, b[i]);
      c.ccx({b[i]}, {s[i]}, s[i + 1]);
      c.cx({b[i]}, s[i]);
      c.cx({a[i]}, b[i]);
    } else {
      c.ccx({a[i]}, {s[i]}, s[i + 1]);
      c.cx({a[i]}, s[i]);
    }
  }
}

void appendSubtractor(Circuit& c, const Register& a, const Register& b,
                      const Register& s) {
  if (a.size() != b.size()) throw DomainError("subtractor operands differ");
  for (WireId w : a) c.x(w);
  appendAdder(c, a, b, s);
  for (WireId w : a) c.x(w);
  for (std::size_t i = 0; i < a.size(); ++i) c.x(s[i]);
}

void appendAddSub(Circuit& c, const Register& a, const Register& b,
                  const Register& s, Control minus) {
  if (a.size() != b.size()) throw DomainError("add/sub operands differ");
  for (WireId w : a) c.cx(minus, w);
  appendAdder(c, a, b, s);
  for (WireId w : a) c.cx(minus, w);
  for (std::size_t i = 0; i < a.size(); ++i) c.cx(minus, s[i]);
}

void appendEqVerifier(Circuit& c, const Register& a, const Register& b,
                      WireId out, std::span<const WireId> clean,
                      std::span<const WireId> dirty) {
  const Register& lo = a.size() <= b.size() ? a : b;
  const Register& hi = a.size() <= b.size() ? b : a;
  for (std::size_t i = 0; i < lo.size(); ++i) c.cx({lo[i]}, hi[i]);
  std::vector<Control> controls;
  for (WireId w : hi) controls.push_back({w, false});
  const auto pool = concat({dirty, lo});
  appendMcx(c, controls, out, clean, pool);
  for (std::size_t i = lo.size(); i > 0; --i) c.cx({lo[i - 1]}, hi[i - 1]);
}

void appendEqualsConstant(Circuit& c, const Register& reg, std::uint64_t value,
                          WireId out, std::span<const WireId> clean,
                          std::span<const WireId> dirty) {
  if (reg.size() < 64 && (value >> reg.size()) != 0) return;
  std::vector<Control> controls;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    controls.push_back({reg[i], ((value >> i) & 1u) != 0});
  }
  appendMcx(c, controls, out, clean, dirty);
}

void appendLessThan(Circuit& c, const Register& a, const Register& b,
                    WireId out, const Register& scratch) {
  if (a.size() != b.size() || scratch.size() != a.size() + 1) {
    throw DomainError("comparator needs equal operands and |a| + 1 scratch");
  }
  // b > a exactly when (~a + b) carries out.
  for (WireId w : a) c.x(w);
  const std::size_t first = c.gateCount();
  appendAdder(c, a, b, scratch);
  const std::size_t last = c.gateCount();
  c.cx({scratch.back()}, out);
  c.appendReversed(first, last);
  for (WireId w : a) c.x(w);
}

void appendPopcount7(Circuit& c, std::span<const WireId> q,
                     std::span<const WireId> anc, const Register& out) {
  if (q.size() != 7 || anc.size() != 2 || out.size() != 3) {
    throw DomainError("popcount7 needs 7 inputs, 2 ancillas, 3 outputs");
  }
  fullAdder(c, q[0], q[1], q[2], anc[0]);
  fullAdder(c, q[3], q[4], q[5], anc[1]);
  fullAdder(c, q[2], q[5], q[6], out[1]);
  c.cx({q[6]}, out[0]);
  // Weight-2 column: three carries summed into out[1] (twos) and out[2].
  c.ccx({anc[0]}, {anc[1]}, out[2]);
  c.cx({anc[0]}, anc[1]);
  c.ccx({anc[1]}, {out[1]}, out[2]);
  c.cx({anc[1]}, out[1]);
  c.cx({anc[0]}, anc[1]);
  c.cx({q[5]}, q[6]);
  c.cx({q[2]}, q[5]);
  fullAdderInverse(c, q[3], q[4], q[5], anc[1]);
  fullAdderInverse(c, q[0], q[1], q[2], anc[0]);
}

namespace {

std::vector<WireId> segmentInputs(Circuit& c, const std::string& suffix) {
  std::vector<WireId> seg;
  for (int v = 0; v < kSegments; ++v) {
    seg.push_back(c.addWire(std::string(1, static_cast<char>('a' + v)) + suffix,
                            WireRole::Input));
  }
  return seg;
}

}  // namespace

Circuit buildScVerifier() {
  Circuit c;
  const auto seg = segmentInputs(c, "");
  const WireId anc = c.addWire("step", WireRole::StepOutput);
  const WireId v1 = c.addWire("v1", WireRole::Output);
  appendScVerifier(c, seg, anc, v1);
  return c;
}

Circuit buildScBcd() {
  Circuit c;
  const auto seg = segmentInputs(c, "");
  const WireId anc = c.addWire("step", WireRole::StepOutput);
  const WireId v1 = c.addWire("v1", WireRole::Output);
  Register x(4);
  for (int i = 3; i >= 0; --i) {
    x[i] = c.addWire("x" + std::to_string(i + 1), WireRole::Output);
  }
  appendScBcd(c, seg, anc, v1, x);
  return c;
}

Circuit buildTdnGenerator() {
  Circuit c;
  Register x;
  Register y;
  Register z;
  for (int i = 1; i <= 4; ++i) x.push_back(c.addWire("x" + std::to_string(i), WireRole::Input));
  for (int i = 1; i <= 4; ++i) y.push_back(c.addWire("y" + std::to_string(i), WireRole::Input));
  const WireId anc = c.addWire("anc", WireRole::Ancilla);
  for (int i = 1; i <= 8; ++i) z.push_back(c.addWire("z" + std::to_string(i), WireRole::Output));
  appendTdn(c, x, y, z, anc);
  return c;
}

Circuit buildAdder(int width) {
  if (width < 1) throw DomainError("adder width must be positive");
  Circuit c;
  const auto a = c.addRegister("a", width, WireRole::Input);
  const auto b = c.addRegister("b", width, WireRole::Input);
  const auto s = c.addRegister("s", width + 1, WireRole::Output);
  appendAdder(c, a, b, s);
  return c;
}

Circuit buildSubtractor(int width) {
  if (width < 1) throw DomainError("subtractor width must be positive");
  Circuit c;
  const auto a = c.addRegister("a", width, WireRole::Input);
  const auto b = c.addRegister("b", width, WireRole::Input);
  const auto s = c.addRegister("s", width + 1, WireRole::Output);
  appendSubtractor(c, a, b, s);
  return c;
}

Circuit buildAddSub(int width) {
  if (width < 1) throw DomainError("add/sub width must be positive");
  Circuit c;
  const auto a = c.addRegister("a", width, WireRole::Input);
  const auto b = c.addRegister("b", width, WireRole::Input);
  const auto op = c.addRegister("op", 2, WireRole::Input);
  const WireId minus = c.addWire("minus", WireRole::Ancilla);
  const auto s = c.addRegister("s", width + 1, WireRole::Output);
  // Standard encoding: '-' is 01, op1 op0 with op0 the low bit.
  const auto code = *OperatorEncoding::standard().encode(Op::Minus);
  const Control c0{op[0], (code & 1u) != 0};
  const Control c1{op[1], (code & 2u) != 0};
  c.ccx(c1, c0, minus);
  appendAddSub(c, a, b, s, {minus});
  c.ccx(c1, c0, minus);
  return c;
}

Circuit buildEqVerifier(int width) { return buildEqVerifier(width, width); }

Circuit buildEqVerifier(int widthA, int widthB) {
  if (widthA < 1 || widthB < 1) throw DomainError("widths must be positive");
  Circuit c;
  const auto a = c.addRegister("a", widthA, WireRole::Input);
  const auto b = c.addRegister("b", widthB, WireRole::Input);
  const WireId anc = c.addWire("anc", WireRole::Ancilla);
  const WireId out = c.addWire("eq", WireRole::Output);
  const std::vector<WireId> clean{anc};
  appendEqVerifier(c, a, b, out, clean, {});
  return c;
}

Circuit buildComparator(int width) {
  if (width < 1) throw DomainError("comparator width must be positive");
  Circuit c;
  const auto a = c.addRegister("a", width, WireRole::Input);
  const auto b = c.addRegister("b", width, WireRole::Input);
  const auto scratch = c.addRegister("t", width + 1, WireRole::Ancilla);
  const WireId lt = c.addWire("lt", WireRole::Output);
  const WireId gt = c.addWire("gt", WireRole::Output);
  appendLessThan(c, a, b, lt, scratch);
  appendLessThan(c, b, a, gt, scratch);
  return c;
}

Circuit buildHdCounter() {
  Circuit c;
  const auto p = segmentInputs(c, "0");
  const auto q = segmentInputs(c, "1");
  const auto anc = c.addRegister("anc", 2, WireRole::Ancilla);
  const auto out = c.addRegister("hd", 3, WireRole::Output);
  for (int i = 0; i < kSegments; ++i) c.cx({p[i]}, q[i]);
  appendPopcount7(c, q, anc, out);
  for (int i = kSegments - 1; i >= 0; --i) c.cx({p[i]}, q[i]);
  return c;
}

namespace {

QuantumCost target(int in, int anc, int out, int t, int cx, int x) {
  return {in, anc, out, in + anc + out, t, cx, x, t + cx + x};
}

}  // namespace

std::vector<ComponentReport> componentTable() {
  std::vector<ComponentReport> rows;
  rows.push_back({"SC verifier", cost(buildScVerifier()),
                  target(7, 1, 1, 68, 4, 16), true});
  rows.push_back({"SC verifier + SC-BCD", cost(buildScBcd()),
                  target(7, 1, 5, 104, 16, 24), false});
  rows.push_back({"Adder / Subtractor", cost(buildAddSub(4)),
                  target(10, 1, 5, 9, 24, 2), false});
  rows.push_back({"TDN generator", cost(buildTdnGenerator()),
                  target(8, 1, 8, 16, 27, 0), true});
  rows.push_back({"Eq verifier", cost(buildEqVerifier(5, 8)),
                  target(13, 1, 1, 16, 10, 16), false});
  rows.push_back({"SC-HDC", cost(buildHdCounter()),
                  target(14, 2, 3, 14, 22, 2), false});
  rows.push_back({"4-bit adder", cost(buildAdder(4)),
                  target(8, 0, 5, 7, 11, 0), true});
  return rows;
}

std::string formatComponentTable(const std::vector<ComponentReport>& rows,
                                 char delimiter) {
  std::ostringstream out;
  const char d = delimiter;
  out << "name" << d << "in" << d << "anc" << d << "out" << d << "qubits" << d
      << "ccx" << d << "cx" << d << "x" << d << "gates" << d << "target_qubits"
      << d << "target_ccx" << d << "target_cx" << d << "target_x" << d
      << "target_gates" << d << "delta_gates" << d << "delta_pct\n";
  for (const ComponentReport& r : rows) {
    const QuantumCost& m = r.measured;
    const QuantumCost& t = r.target;
    const int delta = m.nTotalGates - t.nTotalGates;
    const double pct = 100.0 * delta / t.nTotalGates;
    char pctText[32];
    std::snprintf(pctText, sizeof pctText, "%+.1f", pct);
    out << r.name << d << m.nInput << d << m.nAncilla << d << m.nOutput << d
        << m.nTotalQubits << d << m.nToffoli << d << m.nCnot << d << m.nNot
        << d << m.nTotalGates << d << t.nTotalQubits << d << t.nToffoli << d
        << t.nCnot << d << t.nNot << d << t.nTotalGates << d << delta << d
        << pctText << '\n';
  }
  return out.str();
}

}  // namespace segrover
