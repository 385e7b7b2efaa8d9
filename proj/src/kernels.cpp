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

#include "segrover/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

#include "segrover/errors.hpp"

namespace segrover::kernels {
namespace {

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void checkWidth(const Circuit& c, const SweepSpec& spec) {
  if (spec.freeWires.size() > 40) {
    throw CapacityError("sweep register wider than 40 bits");
  }
  for (WireId w : spec.freeWires) {
    if (w >= c.wireCount()) throw DomainError("free wire out of range");
  }
}

std::uint64_t validMask(std::uint64_t total, std::uint64_t batch) {
  const std::uint64_t start = batch << 6;
  const std::uint64_t n = std::min<std::uint64_t>(64, total - start);
  return n == 64 ? ~0ull : ((1ull << n) - 1);
}

}  // namespace

SlicedProgram::SlicedProgram(const Circuit& c) : wireCount_(c.wireCount()) {
  steps_.reserve(c.gateCount());
  for (const Gate& g : c.gates()) {
    Step s{g.target, static_cast<std::uint32_t>(controlWire_.size()),
           static_cast<std::uint32_t>(g.controls.size())};
    for (const Control& ctl : g.controls) {
      controlWire_.push_back(ctl.wire);
      controlFlip_.push_back(ctl.positive ? 0 : ~0ull);
    }
    steps_.push_back(s);
  }
}

void SlicedProgram::run(std::uint64_t* lanes) const {
  for (const Step& s : steps_) {
    std::uint64_t m = ~0ull;
    for (std::uint32_t i = s.first; i < s.first + s.count; ++i) {
      m &= lanes[controlWire_[i]] ^ controlFlip_[i];
    }
    lanes[s.target] ^= m;
  }
}

std::uint64_t countMarks(const MarkTable& m) {
  std::uint64_t n = 0;
  for (std::uint64_t w : m) n += std::popcount(w);
  return n;
}

MarkTable sweepSerial(const Circuit& c, const SweepSpec& spec) {
  checkWidth(c, spec);
  const int n = static_cast<int>(spec.freeWires.size());
  const std::uint64_t total = 1ull << n;
  MarkTable marks((total + 63) / 64, 0);
  BitVector base(c.wireCount());
  for (const auto& [w, v] : spec.fixed) base.set(w, v);
  for (std::uint64_t i = 0; i < total; ++i) {
    BitVector s = base;
    for (int k = 0; k < n; ++k) s.set(spec.freeWires[k], (i >> (n - 1 - k)) & 1u);
    const BitVector out = applyToBasisState(c, s);
    for (WireId w : spec.mustRestore) {
      if (out.get(w)) {
        throw InternalError("wire " + c.wires()[w].name + " not restored");
      }
    }
    if (out.get(spec.output)) marks[i >> 6] |= 1ull << (i & 63);
  }
  return marks;
}

MarkTable sweepSliced(const Circuit& c, const SweepSpec& spec) {
  checkWidth(c, spec);
  const SlicedProgram program(c);
  const int n = static_cast<int>(spec.freeWires.size());
  const std::uint64_t total = 1ull << n;
  const std::int64_t batches = static_cast<std::int64_t>((total + 63) / 64);
  MarkTable marks(static_cast<std::size_t>(batches), 0);
  std::atomic<std::int64_t> dirtyWire{-1};

#pragma omp parallel
  {
    std::vector<std::uint64_t> lanes(c.wireCount());
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < batches; ++b) {
      std::fill(lanes.begin(), lanes.end(), 0);
      for (const auto& [w, v] : spec.fixed) lanes[w] = v ? ~0ull : 0;
      for (int k = 0; k < n; ++k) {
        const int p = n - 1 - k;
        if (p < 6) {
          lanes[spec.freeWires[k]] = kLanePattern[p];
        } else {
          lanes[spec.freeWires[k]] = ((b >> (p - 6)) & 1) ? ~0ull : 0;
        }
      }
      program.run(lanes.data());
      const std::uint64_t valid = validMask(total, static_cast<std::uint64_t>(b));
      for (WireId w : spec.mustRestore) {
        if (lanes[w] & valid) dirtyWire = static_cast<std::int64_t>(w);
      }
      marks[b] = lanes[spec.output] & valid;
    }
  }
  if (dirtyWire >= 0) {
    throw InternalError("wire " + c.wires()[dirtyWire].name + " not restored");
  }
  return marks;
}

MarkTable evaluateIndices(const SlicedProgram& p, const SweepSpec& spec,
                          std::span<const std::uint64_t> indices) {
  const int n = static_cast<int>(spec.freeWires.size());
  const std::int64_t batches =
      static_cast<std::int64_t>((indices.size() + 63) / 64);
  MarkTable marks(static_cast<std::size_t>(batches), 0);
  std::atomic<std::int64_t> dirtyWire{-1};

#pragma omp parallel
  {
    std::vector<std::uint64_t> lanes(p.wireCount());
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < batches; ++b) {
      std::fill(lanes.begin(), lanes.end(), 0);
      for (const auto& [w, v] : spec.fixed) lanes[w] = v ? ~0ull : 0;
      const std::size_t start = static_cast<std::size_t>(b) * 64;
      const std::size_t count = std::min<std::size_t>(64, indices.size() - start);
      for (std::size_t j = 0; j < count; ++j) {
        const std::uint64_t idx = indices[start + j];
        for (int k = 0; k < n; ++k) {
          if ((idx >> (n - 1 - k)) & 1u) lanes[spec.freeWires[k]] |= 1ull << j;
        }
      }
      p.run(lanes.data());
      const std::uint64_t valid = count == 64 ? ~0ull : ((1ull << count) - 1);
      for (WireId w : spec.mustRestore) {
        if (lanes[w] & valid) dirtyWire = static_cast<std::int64_t>(w);
      }
      marks[b] = lanes[spec.output] & valid;
    }
  }
  if (dirtyWire >= 0) {
    throw InternalError("wire " + std::to_string(dirtyWire) + " not restored");
  }
  return marks;
}

void configureThreadsFromEnv() {
  if (const char* v = std::getenv("SEGROVER_THREADS")) {
    const int n = std::atoi(v);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace segrover::kernels
