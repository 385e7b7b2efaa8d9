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

#ifndef SEGROVER_KERNELS_HPP_
#define SEGROVER_KERNELS_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "segrover/circuit.hpp"

namespace segrover::kernels {

// Circuit flattened for bit-sliced simulation: every wire holds 64 basis
// states at once, one per bit lane.
class SlicedProgram {
 public:
  explicit SlicedProgram(const Circuit& c);

  std::size_t wireCount() const { return wireCount_; }
  void run(std::uint64_t* lanes) const;

 private:
  struct Step {
    std::uint32_t target;
    std::uint32_t first;
    std::uint32_t count;
  };
  std::size_t wireCount_;
  std::vector<Step> steps_;
  std::vector<std::uint32_t> controlWire_;
  std::vector<std::uint64_t> controlFlip_;
};

// Describes an oracle sweep. Free wires enumerate indices 0..2^n-1 with free
// wire 0 as the most significant bit; fixed wires take constants; all other
// wires start at 0. Wires in mustRestore must end at 0 (InternalError
// otherwise).
struct SweepSpec {
  std::vector<WireId> freeWires;
  std::vector<std::pair<WireId, bool>> fixed;
  std::vector<WireId> mustRestore;
  WireId output = 0;
};

// Bit-packed mark table: bit (i & 63) of word (i >> 6) is the output for
// index i.
using MarkTable = std::vector<std::uint64_t>;

inline bool marked(const MarkTable& m, std::uint64_t i) {
  return (m[i >> 6] >> (i & 63)) & 1u;
}
std::uint64_t countMarks(const MarkTable& m);

// Reference: one applyToBasisState per index.
MarkTable sweepSerial(const Circuit& c, const SweepSpec& spec);
// Bit-sliced, OpenMP over 64-index batches.
MarkTable sweepSliced(const Circuit& c, const SweepSpec& spec);

// Output bits for arbitrary free-register indices, bit-packed in input order.
MarkTable evaluateIndices(const SlicedProgram& p, const SweepSpec& spec,
                          std::span<const std::uint64_t> indices);

template <class T>
void phaseFlipSerial(std::span<T> amps, const MarkTable& marks) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (marked(marks, i)) amps[i] = -amps[i];
  }
}

template <class T>
void phaseFlipParallel(std::span<T> amps, const MarkTable& marks) {
  const std::int64_t n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    if (marked(marks, static_cast<std::uint64_t>(i))) amps[i] = -amps[i];
  }
}

// Inversion about the mean: a_i <- 2<a> - a_i.
template <class T>
void diffuseSerial(std::span<T> amps) {
  T sum{};
  for (const T& a : amps) sum += a;
  const T twiceMean = sum * (2.0 / static_cast<double>(amps.size()));
  for (T& a : amps) a = twiceMean - a;
}

template <class T>
void diffuseParallel(std::span<T> amps) {
  const std::int64_t n = static_cast<std::int64_t>(amps.size());
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<T, double>) {
      re += amps[i];
    } else {
      re += amps[i].real();
      im += amps[i].imag();
    }
  }
  T sum;
  if constexpr (std::is_same_v<T, double>) {
    sum = re;
  } else {
    sum = T(re, im);
  }
  const T twiceMean = sum * (2.0 / static_cast<double>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) amps[i] = twiceMean - amps[i];
}

inline double norm2(double a) { return a * a; }
inline double norm2(const std::complex<double>& a) { return std::norm(a); }

template <class T>
double markedProbability(std::span<const T> amps, const MarkTable& marks) {
  double p = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (marked(marks, i)) p += norm2(amps[i]);
  }
  return p;
}

// Applies SEGROVER_THREADS to the OpenMP runtime when set.
void configureThreadsFromEnv();

}  // namespace segrover::kernels

#endif  // SEGROVER_KERNELS_HPP_
