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

#include "segrover/grover.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include "segrover/errors.hpp"

namespace segrover {

BitVector SearchRegister::candidate(std::uint64_t index) const {
  BitVector c = base;
  const std::size_t n = freePositions.size();
  for (std::size_t b = 0; b < n; ++b) {
    c.set(freePositions[b], (index >> (n - 1 - b)) & 1u);
  }
  return c;
}

std::uint64_t SearchRegister::index(const BitVector& candidate) const {
  std::uint64_t i = 0;
  for (int p : freePositions) i = (i << 1) | (candidate.get(p) ? 1u : 0u);
  return i;
}

SearchRegister makeSearchRegister(const OracleArtifact& art,
                                  const Restriction& restriction) {
  const int width = art.inputWidth();
  SearchRegister reg;
  reg.base = BitVector(width);
  std::vector<bool> pinned(width, false);
  for (const auto& [p, bit] : restriction) {
    if (p < 0 || p >= width) {
      throw DomainError("restriction position " + std::to_string(p) +
                        " is outside the candidate register");
    }
    reg.base.set(p, bit);
    pinned[p] = true;
  }
  for (int p = 0; p < width; ++p) {
    if (!pinned[p]) reg.freePositions.push_back(p);
  }
  return reg;
}

kernels::MarkTable markTable(const OracleArtifact& art,
                             const SearchRegister& reg, bool parallel) {
  kernels::SweepSpec spec;
  for (int p : reg.freePositions) spec.freeWires.push_back(art.inputWires[p]);
  for (int p = 0; p < art.inputWidth(); ++p) {
    if (std::find(reg.freePositions.begin(), reg.freePositions.end(), p) ==
        reg.freePositions.end()) {
      spec.fixed.push_back({art.inputWires[p], reg.base.get(p)});
    }
  }
  spec.mustRestore = art.ancillaWires;
  spec.output = art.outputWire;
  return parallel ? kernels::sweepSliced(art.circuit, spec)
                  : kernels::sweepSerial(art.circuit, spec);
}

int optimalIterations(int n, std::uint64_t solutionCount) {
  if (solutionCount == 0) return 0;
  const double N = std::ldexp(1.0, n);
  if (static_cast<double>(solutionCount) >= N) return 0;
  return static_cast<int>(std::floor(
      std::numbers::pi / 4.0 * std::sqrt(N / static_cast<double>(solutionCount))));
}

namespace {

template <class T>
GroverRun simulate(const kernels::MarkTable& marks, int n, int r,
                   bool parallel) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<T> amps(size, T(1.0 / std::sqrt(static_cast<double>(size))));
  std::span<T> view(amps);
  GroverRun run;
  run.iterations = r;
  run.registerWidth = n;
  run.markedCount = kernels::countMarks(marks);
  run.history.push_back(kernels::markedProbability<T>(amps, marks));
  for (int i = 0; i < r; ++i) {
    if (parallel) {
      kernels::phaseFlipParallel(view, marks);
      kernels::diffuseParallel(view);
    } else {
      kernels::phaseFlipSerial(view, marks);
      kernels::diffuseSerial(view);
    }
    run.history.push_back(kernels::markedProbability<T>(amps, marks));
  }
  run.probabilities.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    run.probabilities[i] = kernels::norm2(amps[i]);
  }
  return run;
}

void checkCapacity(int n, const GroverOptions& options) {
  if (n > options.capacity) {
    throw CapacityError("search register of " + std::to_string(n) +
                        " qubits exceeds the simulator capacity of " +
                        std::to_string(options.capacity));
  }
}

std::string render(const OracleArtifact& art, const BitVector& cand) {
  if (art.spec.art) return renderCandidate(art.initialState, art.spec, cand);
  return cand.toString();
}

}  // namespace

GroverRun runGrover(const kernels::MarkTable& marks, int n, int r,
                    const GroverOptions& options) {
  checkCapacity(n, options);
  if (r < 0) throw DomainError("iteration count must be non-negative");
  if (marks.size() * 64 < (std::size_t{1} << n)) {
    throw DomainError("mark table is smaller than the register");
  }
  return options.complexAmplitudes
             ? simulate<std::complex<double>>(marks, n, r, options.parallel)
             : simulate<double>(marks, n, r, options.parallel);
}

GroverRun runGrover(const OracleArtifact& art, int r,
                    const Restriction& restriction,
                    const GroverOptions& options) {
  const SearchRegister reg = makeSearchRegister(art, restriction);
  checkCapacity(reg.width(), options);
  return runGrover(markTable(art, reg, options.parallel), reg.width(), r,
                   options);
}

QuantumSolution solveQuantum(const OracleArtifact& art,
                             const Restriction& restriction,
                             const GroverOptions& options) {
  const SearchRegister reg = makeSearchRegister(art, restriction);
  checkCapacity(reg.width(), options);
  const kernels::MarkTable marks = markTable(art, reg, options.parallel);
  const std::uint64_t m = kernels::countMarks(marks);
  QuantumSolution q;
  q.run = runGrover(marks, reg.width(), optimalIterations(reg.width(), m),
                    options);
  const auto [lo, hi] = std::minmax_element(q.run.probabilities.begin(),
                                            q.run.probabilities.end());
  q.threshold = (*lo + *hi) / 2.0;
  std::vector<std::uint64_t> picked;
  if (*hi - *lo < 1e-12) {
    // Flat distribution: either nothing or everything is marked.
    if (m > 0) {
      picked.resize(q.run.probabilities.size());
      std::iota(picked.begin(), picked.end(), std::uint64_t{0});
    }
  } else {
    for (std::uint64_t i = 0; i < q.run.probabilities.size(); ++i) {
      if (q.run.probabilities[i] > q.threshold) picked.push_back(i);
    }
  }
  for (std::uint64_t i : picked) {
    const BitVector cand = reg.candidate(i);
    if (art.spec.art) {
      q.solutions.entries.push_back(makeEntry(art.initialState, art.spec, cand));
    } else {
      q.solutions.entries.push_back({cand, {}, cand.toString(), 0, 0});
    }
  }
  std::sort(q.solutions.entries.begin(), q.solutions.entries.end(),
            [](const SolutionEntry& a, const SolutionEntry& b) {
              return a.candidate < b.candidate;
            });
  q.noSolution = q.solutions.empty();
  return q;
}

std::string formatHistogram(const OracleArtifact& art,
                            const SearchRegister& reg, const GroverRun& run,
                            std::size_t limit, char delimiter) {
  std::vector<std::uint64_t> order(run.probabilities.size());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) {
                     return run.probabilities[a] > run.probabilities[b];
                   });
  std::ostringstream os;
  os << "candidate" << delimiter << "equation" << delimiter << "probability\n";
  for (std::size_t i = 0; i < std::min(limit, order.size()); ++i) {
    const BitVector cand = reg.candidate(order[i]);
    char p[32];
    std::snprintf(p, sizeof p, "%.6f", run.probabilities[order[i]]);
    os << cand.toString() << delimiter << render(art, cand) << delimiter << p
       << "\n";
  }
  return os.str();
}

}  // namespace segrover
