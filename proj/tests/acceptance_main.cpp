// Copyright 2026 The phasecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//   acceptance_test <path-to-phasecomp-cli>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phasecomp/cost.hpp"
#include "phasecomp/dynamics.hpp"
#include "phasecomp/errors.hpp"
#include "phasecomp/machine.hpp"
#include "phasecomp/quantum.hpp"
#include "phasecomp/tokens.hpp"
#include "test_support.hpp"
#include "token_oracles.hpp"

using namespace phasecomp;
namespace pt = phasecomp::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Direct interpreter and Hamiltonian dynamics agree exactly at every step.
Outcome theorem_commutation() {
  constexpr int kPrograms = 1000;
  constexpr std::uint64_t kSteps = 200;
  constexpr double kBudgetSeconds = 10.0;
  Outcome out;
  std::mt19937_64 rng(1);
  const auto start = Clock::now();
  int clean = 0, filtered = 0, attempts = 0;
  std::uint64_t compared_steps = 0;
  while (clean < kPrograms && attempts < 100 * kPrograms) {
    ++attempts;
    const Program prog = pt::random_classical_program(rng, 20);
    const TapeState tape = pt::random_tape(rng, 16, 16);
    const EquivalenceReport r = check_equivalence(prog, tape, 1, kSteps);
    out.require(r.pass, "divergence: " + r.detail + "\n" + format_program(prog));
    if (r.direct.status == RunStatus::error) {
      ++filtered;
      continue;
    }
    ++clean;
    compared_steps += r.steps;
    // Independent re-check of the encoding against the positional oracle.
    TapeState final_tape;
    run_direct(prog, tape, 1, kSteps, {}, &final_tape);
    out.require(pt::tape_value(final_tape) == pt::value_of(r.dynamics.rows.back().q), "final tape value mismatch");
  }
  const double elapsed = seconds_since(start);
  out.require(clean >= kPrograms, "only " + std::to_string(clean) + " violation-free programmes");
  out.require(elapsed < kBudgetSeconds, "took " + std::to_string(elapsed) + " s");
  if (out.pass) {
    out.detail = std::to_string(clean) + " programmes, " + std::to_string(compared_steps) + " steps compared, " +
                 std::to_string(filtered) + " strict-write cases filtered, " + std::to_string(elapsed) + " s";
  }
  return out;
}

// 2. Every table row reproduced by the compiled field.
Outcome table_fidelity() {
  Outcome out;
  const Dyadic q = parse_dyadic("110.1");
  const Dyadic odd(7);
  const HamiltonianField field(Program({Instruction::left(), Instruction::right(), Instruction::mark(),
                                        Instruction::unmark(), Instruction::jmp(5), Instruction::jif(1)}));
  const HamiltonianField literal(
      Program({Instruction::halt(), Instruction::halt(), Instruction::jif(1)}), JifMode::literal);
  int rows = 0;
  auto row = [&](bool ok, const std::string& name) {
    ++rows;
    out.require(ok, name);
  };
  // Head to the left: -q/2.
  row(field.dp_h(q, 1) == SignedDyadic::minus(Dyadic(BigInt(13), 2)), "head left: -q/2");
  // Head to the right: q.
  row(field.dp_h(q, 2) == SignedDyadic::plus(q), "head right: q");
  // Replace 0 by 1: +1.
  row(field.dp_h(q, 3) == SignedDyadic::plus(Dyadic(1)), "replace 0 by 1: +1");
  // Replace 1 by 0: -1.
  row(field.dp_h(odd, 4) == SignedDyadic::minus(Dyadic(1)), "replace 1 by 0: -1");
  // Next instruction: -1 on every tape row; go to p1: p0 - p1.
  bool next = true;
  for (InstrIndex p = 1; p <= 4; ++p) next = next && field.dq_h(q, p) == -1;
  row(next && field.dq_h(q, 5) == 0 &&
          HamiltonianField(Program({Instruction::halt(), Instruction::jmp(5), Instruction::halt(),
                                    Instruction::halt(), Instruction::halt()}))
                  .dq_h(q, 2) == -3,
      "next instruction -1, go to p1: p0 - p1");
  // If cell is 1 go to p1: p0 - p1 when [q] = 1 mod 2; printed +1 otherwise
  // (literal mode), -1 in the default mode.
  row(literal.dq_h(odd, 3) == 3 - 1 && literal.dq_h(q, 3) == 1 && field.dq_h(odd, 6) == 6 - 1 &&
          field.dq_h(q, 6) == -1,
      "conditional jump");
  out.require(rows == 6, "row count");
  if (out.pass) out.detail = "6 rows; JIF false branch +1 in literal mode, -1 (advance) by default";
  return out;
}

// 3. Collision-free gate programmes preserve the norm.
Outcome quantum_norm() {
  constexpr int kPrograms = 100;
  constexpr std::uint64_t kSteps = 10000;
  constexpr std::size_t kTerms = 1u << 12;
  constexpr double kTolerance = 1e-9;
  Outcome out;
  std::mt19937_64 rng(3);
  int qualifying = 0, superposed = 0, attempts = 0;
  double worst = 0.0;
  while (qualifying < kPrograms && attempts < 100 * kPrograms) {
    ++attempts;
    const Program prog = pt::random_gate_program(rng, 12);
    const QuantumRun run =
        run_quantum(prog, init_state(encode(pt::random_tape(rng, 8, 8)), 1), kSteps, attempts, {}, kTerms);
    if (run.status == RunStatus::term_limit || run.stats.collisions != 0) continue;
    ++qualifying;
    if (run.stats.peak_terms > 1) ++superposed;
    worst = std::max(worst, std::abs(run.stats.final_norm - 1.0));
  }
  out.require(qualifying >= kPrograms, "only " + std::to_string(qualifying) + " collision-free runs");
  out.require(worst <= kTolerance, "norm drift " + std::to_string(worst));
  out.require(superposed > kPrograms / 4, "too few runs reached a superposition");
  if (out.pass) {
    std::ostringstream os;
    os << qualifying << " runs (" << superposed << " superposed), max |norm-1| = " << worst;
    out.detail = os.str();
  }
  return out;
}

// 4. H^2 = I, FLIP^2 = I, HZH = X.
Outcome gate_algebra() {
  constexpr double kTolerance = 1e-12;
  Outcome out;
  auto final_state = [](const char* src, const Dyadic& q0) {
    return run_quantum(parse_program(src), init_state(q0, 1), 100, 0).state;
  };
  double worst = 0.0;
  for (const Dyadic& q0 : {Dyadic(0), Dyadic(1), parse_dyadic("110.1"), parse_dyadic("111.")}) {
    const int bit = q0.current_bit();
    const QuantumState hh = final_state("HAD\nHAD\nHALT", q0);
    out.require(hh.size() == 1, "H^2 left extra terms");
    worst = std::max(worst, std::abs(hh.amplitude(q0, 3) - 1.0));

    const QuantumState ff = final_state("FLIP\nFLIP\nHALT", q0);
    out.require(ff.size() == 1, "FLIP^2 left extra terms");
    worst = std::max(worst, std::abs(ff.amplitude(q0, 3) - 1.0));

    const QuantumState hzh = final_state("HAD\nPHASE 1/2\nHAD\nHALT", q0);
    const Dyadic flipped = bit == 0 ? q0.add_one() : q0.sub_one();
    out.require(hzh.size() == 1, "HZH left extra terms");
    worst = std::max(worst, std::abs(std::abs(hzh.amplitude(flipped, 4)) - 1.0));
  }
  out.require(worst <= kTolerance, "deviation " + std::to_string(worst));
  if (out.pass) {
    std::ostringstream os;
    os << "max deviation " << worst;
    out.detail = os.str();
  }
  return out;
}

// 5. Basis-state quantum runs of classical programmes follow the dynamics exactly.
Outcome classical_embedding() {
  constexpr int kPrograms = 200;
  Outcome out;
  std::mt19937_64 rng(5);
  int checked = 0;
  std::uint64_t steps = 0;
  while (checked < kPrograms) {
    const Program prog = pt::random_classical_program(rng, 20);
    const Dyadic q0 = encode(pt::random_tape(rng, 16, 16));
    const Trace dyn = run_dynamics(HamiltonianField(prog), {q0, 1}, 200);
    if (dyn.status == RunStatus::error) continue;
    ++checked;
    QuantumState s = init_state(q0, 1);
    for (std::size_t t = 1; t < dyn.rows.size() && out.pass; ++t) {
      s = q_step(prog, s);
      const auto& row = dyn.rows[t];
      const InstrIndex expected_p = prog.contains(row.p) ? row.p : kHalted;
      out.require(s.size() == 1 && s.amplitude(row.q, expected_p) == Amplitude(1.0),
                  "mismatch at t=" + std::to_string(t) + "\n" + format_program(prog));
      ++steps;
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " programmes, " + std::to_string(steps) + " steps";
  return out;
}

// 6. Token and binomial identities, exact, n <= 10.
Outcome token_identities() {
  constexpr std::size_t kMaxN = 10;
  constexpr double kBudgetSeconds = 5.0;
  Outcome out;
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::vector<Rational>>> families = {
      {"exponential-monomial", {}}, {"falling-factorial", {}}, {"rising-factorial", {}}, {"abel", {Rational(1)}}};
  for (const auto& [family, params] : families) {
    const PolySeq seq = standard_token(family, kMaxN, params);
    const VerificationReport token = verify_token_identity(seq, kMaxN);
    const VerificationReport binom = verify_binomial_identity(binomial_from_token(seq), kMaxN);
    out.require(token.pass, family + " token identity");
    out.require(binom.pass, family + " binomial identity");
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < kBudgetSeconds, "took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = "4 families, n <= 10, " + std::to_string(elapsed) + " s";
  return out;
}

// 7. Linear coefficients equal the product-rule derivative at 0.
Outcome h_symbol() {
  constexpr std::size_t kMaxK = 8;
  Outcome out;
  for (const std::string family : {"exponential-monomial", "falling-factorial"}) {
    const HSymbol h = h_symbol_coeffs(standard_token(family, kMaxK), kMaxK);
    out.require(h.truncation == kMaxK && h.coeffs.size() == kMaxK + 1, family + " truncation");
    for (std::size_t k = 0; k <= kMaxK; ++k) {
      out.require(h.coeffs[k] == pt::factored_token(family, k).derivative_at(0),
                  family + " k=" + std::to_string(k));
    }
  }
  if (out.pass) out.detail = "2 families, k <= 8";
  return out;
}

// 8. Repeated CLI invocations give byte-identical outputs.
Outcome determinism(const std::string& cli) {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / ("phasecomp_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name, std::ios::binary) << text;
    return (dir / name).string();
  };
  auto read = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const auto classical = write("c.post", "1: JIF 3\n2: MARK\n3: RIGHT\n4: JIF 3\n5: LEFT\n6: HALT\n");
  const auto quantum = write("q.post", "HAD\nRIGHT\nHAD\nPHASE 1/3\nLEFT\nJIF 8\nMEASURE\nMEASURE\nHALT\n");
  const auto weights = write("w.json", R"({"gate_apply": "7/3", "measure": "5"})");
  const auto table = write("t.csv", "0,1\n1,0,1\n2,0,-1/2,1/2\n");

  // '@' marks where the output path goes.
  const std::vector<std::string> commands = {
      "run " + classical + " --tape 110.1 --trace @",
      "dyn " + classical + " --tape 110.1 --trace @",
      "check " + classical + " --tape 110.1 --report @",
      "quantum " + quantum + " --tape 10.1 --seed 42 --dump-state @",
      "quantum " + quantum + " --tape 10.1 --seed 7 --stats @",
      "tokens verify --family abel --param 1 --degree 8 --out @",
      "tokens verify --table " + table + " --degree 2 --out @",
      "tokens h --family falling-factorial --degree 8 --out @",
      "cost --classical " + classical + " --quantum " + quantum + " --tape 110.1 --seed 3 --weights " + weights +
          " --out @",
  };
  int index = 0;
  std::vector<std::string> first_outputs;
  for (const auto& args : commands) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path file = dir / ("out" + std::to_string(index) + "_" + std::to_string(rep));
      std::string cmd = args;
      cmd.replace(cmd.find('@'), 1, file.string());
      const fs::path captured = file.string() + ".stdout";
      const int status = std::system((cli + " " + cmd + " > " + captured.string() + " 2>/dev/null").c_str());
      out.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "exit status of: " + cmd);
      outputs[rep] = read(file) + read(captured);
      out.require(!outputs[rep].empty(), "no output from: " + cmd);
    }
    out.require(outputs[0] == outputs[1], "outputs differ: " + args);
    first_outputs.push_back(outputs[0]);
    ++index;
  }
  out.require(first_outputs[0] == first_outputs[1], "run and dyn traces differ");
  fs::remove_all(dir);
  if (out.pass) out.detail = std::to_string(commands.size()) + " invocations, each repeated; run/dyn traces equal";
  return out;
}

// 9. Instrumentation is transparent and ledgers add up.
Outcome cost_consistency() {
  constexpr int kCases = 100;
  Outcome out;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(0, 50), den(1, 12);
  for (int i = 0; i < kCases; ++i) {
    CostWeights w;
    for (CostEvent e : kAllCostEvents) w.set(e, Rational(num(rng), den(rng)));

    const bool quantum = i % 2 == 1;
    const Program prog = quantum ? pt::random_gate_program(rng, 10) : pt::random_classical_program(rng, 16);
    RunInput input;
    input.tape = encode(pt::random_tape(rng, 8, 8));
    input.max_steps = 200;
    input.seed = static_cast<std::uint64_t>(i);
    input.max_terms = 1u << 12;

    std::vector<CostLedger> ledgers;
    if (quantum) {
      const auto run = instrument_run(Engine::quantum, prog, input, w);
      const QuantumRun plain =
          run_quantum(prog, init_state(input.tape, input.p0), input.max_steps, input.seed, {}, input.max_terms);
      const auto& inst = std::get<QuantumRun>(run.result);
      out.require(inst.state.terms() == plain.state.terms() && inst.status == plain.status &&
                      inst.stats.steps == plain.stats.steps && inst.stats.measurements == plain.stats.measurements,
                  "quantum run changed by instrumentation");
      out.require(run.ledger.count(CostEvent::circuit_assemble) == prog.size(), "circuit_assemble count");
      ledgers.push_back(run.ledger);
    } else {
      for (Engine engine : {Engine::direct, Engine::dynamics}) {
        const auto run = instrument_run(engine, prog, input, w);
        const Trace plain = engine == Engine::direct
                                ? run_direct(prog, decode(input.tape), input.p0, input.max_steps)
                                : run_dynamics(HamiltonianField(prog), {input.tape, input.p0}, input.max_steps);
        const auto& inst = std::get<Trace>(run.result);
        out.require(inst.rows == plain.rows && inst.status == plain.status, "trace changed by instrumentation");
        out.require(run.ledger.count(CostEvent::classical_step) == plain.steps(), "classical_step count");
        ledgers.push_back(run.ledger);
      }
    }
    for (const auto& ledger : ledgers) {
      Rational sum = 0;
      for (CostEvent e : kAllCostEvents) {
        out.require(ledger.subtotal(e) == w[e] * Rational(ledger.count(e)), "subtotal");
        sum += ledger.subtotal(e);
      }
      out.require(sum == ledger.total(), "breakdown does not sum to total");
    }
  }
  if (out.pass) out.detail = std::to_string(kCases) + " weighted cases";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_test <phasecomp-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 theorem commutation", theorem_commutation},
      {"2 table fidelity", table_fidelity},
      {"3 quantum norm", quantum_norm},
      {"4 gate algebra", gate_algebra},
      {"5 classical embedding", classical_embedding},
      {"6 token identities", token_identities},
      {"7 h-symbol coefficients", h_symbol},
      {"8 determinism", [&cli] { return determinism(cli); }},
      {"9 cost consistency", cost_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
