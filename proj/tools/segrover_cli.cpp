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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "segrover/errors.hpp"
#include "segrover/grover.hpp"
#include "segrover/kernels.hpp"
#include "segrover/oracle.hpp"
#include "segrover/puzzle_file.hpp"
#include "segrover/refsolver.hpp"
#include "segrover/synth.hpp"

namespace {

using namespace segrover;

enum Exit { kOk = 0, kNoSolution = 1, kUsage = 2, kCapacity = 3, kInternal = 4 };

std::vector<int> parseDisplayList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw DomainError("bad display index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

int runSolve(const std::string& file, const std::string& engine,
             const std::string& fix, const std::string& histogramPath,
             std::size_t histogramLimit, int capacity) {
  const Puzzle p = loadPuzzle(file);
  const Restriction r = fixDisplays(p.config, parseDisplayList(fix));
  SolutionSet set;
  if (engine == "classical") {
    set = solveClassical(p.config, p.spec, r);
  } else {
    const OracleArtifact art = compileOracle(p.config, p.spec);
    GroverOptions opts;
    opts.capacity = capacity;
    const QuantumSolution q = solveQuantum(art, r, opts);
    char line[160];
    std::snprintf(line, sizeof line,
                  "grover: register %d qubits, %llu marked, %d iterations, "
                  "success %.6f, threshold %.6g\n",
                  q.run.registerWidth,
                  static_cast<unsigned long long>(q.run.markedCount),
                  q.run.iterations, q.run.successProbability(), q.threshold);
    std::cerr << line;
    if (!histogramPath.empty()) {
      const SearchRegister reg = makeSearchRegister(art, r);
      writeFile(histogramPath,
                formatHistogram(art, reg, q.run, histogramLimit, '\t'));
    }
    set = q.solutions;
  }
  std::cout << formatSolutionSet(set);
  if (set.empty()) {
    std::cerr << "no solution\n";
    return kNoSolution;
  }
  return kOk;
}

int runCompile(const std::string& file, const std::string& netlistPath,
               const std::string& sidecarPath, bool costReport,
               int ancillaBudget) {
  const Puzzle p = loadPuzzle(file);
  CompileOptions opts;
  opts.ancillaBudget = ancillaBudget;
  const OracleArtifact art = compileOracle(p.config, p.spec, opts);
  if (!netlistPath.empty()) writeFile(netlistPath, writeNetlist(art.circuit));
  if (!sidecarPath.empty()) writeFile(sidecarPath, oracleSidecarJson(art));
  if (costReport) {
    const QuantumCost& c = art.cost;
    std::cout << "metric\tmeasured\treference\n"
              << "in\t" << c.nInput << "\t33\n"
              << "anc\t" << c.nAncilla << "\t30\n"
              << "out\t" << c.nOutput << "\t1\n"
              << "qubits\t" << c.nTotalQubits << "\t64\n"
              << "ccx\t" << c.nToffoli << "\t640\n"
              << "cx\t" << c.nCnot << "\t216\n"
              << "x\t" << c.nNot << "\t154\n"
              << "gates\t" << c.nTotalGates << "\t1010\n";
  }
  return kOk;
}

int runVerify(const std::string& file, const std::string& fix,
              std::uint64_t samples) {
  const Puzzle p = loadPuzzle(file);
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const Restriction r = fixDisplays(p.config, parseDisplayList(fix));
  const SearchRegister reg = makeSearchRegister(art, r);
  std::uint64_t checked = 0;
  std::uint64_t marked = 0;
  std::uint64_t mismatches = 0;
  auto compare = [&](std::uint64_t index, bool oracle) {
    const BitVector cand = reg.candidate(index);
    const bool ref = satisfies(p.config, cand, p.spec);
    ++checked;
    marked += oracle ? 1 : 0;
    if (oracle != ref) {
      if (mismatches++ < 10) {
        std::cerr << "mismatch " << cand.toString() << " oracle " << oracle
                  << " reference " << ref << "\n";
      }
    }
  };
  if (reg.width() <= 22) {
    const kernels::MarkTable marks = markTable(art, reg, true);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << reg.width()); ++i) {
      compare(i, kernels::marked(marks, i));
    }
  } else {
    std::mt19937_64 rng(0x5e6d15);
    std::vector<std::uint64_t> idx(samples);
    const std::uint64_t mask = reg.width() >= 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << reg.width()) - 1;
    for (auto& v : idx) v = rng() & mask;
    kernels::SweepSpec spec;
    for (int pos : reg.freePositions) spec.freeWires.push_back(art.inputWires[pos]);
    for (const auto& [pos, bit] : r) spec.fixed.push_back({art.inputWires[pos], bit});
    spec.mustRestore = art.ancillaWires;
    spec.output = art.outputWire;
    const kernels::SlicedProgram prog(art.circuit);
    const kernels::MarkTable marks = kernels::evaluateIndices(prog, spec, idx);
    for (std::size_t i = 0; i < idx.size(); ++i) compare(idx[i], kernels::marked(marks, i));
  }
  std::cout << "mode\t" << (reg.width() <= 22 ? "exhaustive" : "sampled") << "\n"
            << "free_bits\t" << reg.width() << "\n"
            << "checked\t" << checked << "\n"
            << "marked\t" << marked << "\n"
            << "mismatches\t" << mismatches << "\n";
  return mismatches == 0 ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  kernels::configureThreadsFromEnv();
  CLI::App app{"segrover: seven-segment puzzles as reversible oracles"};
  app.require_subcommand(1);

  std::string file;
  std::string engine = "classical";
  std::string fix;
  std::string histogram;
  std::size_t histogramLimit = 32;
  int capacity = 26;
  auto* solve = app.add_subcommand("solve", "Solve a puzzle file");
  solve->add_option("file", file, "Puzzle file")->required();
  solve->add_option("--engine", engine, "classical or grover")
      ->check(CLI::IsMember({"classical", "grover"}));
  solve->add_option("--fix-displays", fix,
                    "Comma-separated displays frozen to their initial codes");
  solve->add_option("--histogram", histogram, "Write a measurement histogram");
  solve->add_option("--histogram-limit", histogramLimit, "Histogram rows");
  solve->add_option("--capacity", capacity, "Largest simulated register");

  std::string netlist;
  std::string sidecar;
  bool costReport = false;
  int ancillaBudget = -1;
  auto* compile = app.add_subcommand("compile", "Compile a puzzle oracle");
  compile->add_option("file", file, "Puzzle file")->required();
  compile->add_option("--emit-netlist", netlist, "Netlist output path");
  compile->add_option("--sidecar", sidecar, "JSON sidecar output path");
  compile->add_flag("--cost-report", costReport, "Print the oracle cost");
  compile->add_option("--ancilla-budget", ancillaBudget, "Maximum ancillas");

  std::uint64_t samples = 1000000;
  auto* verify = app.add_subcommand("verify", "Compare oracle and reference");
  verify->add_option("file", file, "Puzzle file")->required();
  verify->add_option("--samples", samples, "Random probes above 22 free bits");
  verify->add_option("--fix-displays", fix, "Displays frozen to initial codes");

  bool table = false;
  auto* components = app.add_subcommand("components", "Component costs");
  components->add_flag("--table", table, "Print the cost table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return runSolve(file, engine, fix, histogram, histogramLimit, capacity);
    if (*compile) return runCompile(file, netlist, sidecar, costReport, ancillaBudget);
    if (*verify) return runVerify(file, fix, samples);
    if (*components) {
      std::cout << formatComponentTable(componentTable(), '\t');
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedFeatureError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
