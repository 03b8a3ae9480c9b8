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

// Command-line front end: run, dyn, check, quantum, tokens, cost.
//
// Exit status: 0 success, 1 semantic failure (divergence, identity failure,
// engine error), 2 usage or input errors. Data goes to files or stdout;
// diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phasecomp/cost.hpp"
#include "phasecomp/dynamics.hpp"
#include "phasecomp/errors.hpp"
#include "phasecomp/json_io.hpp"
#include "phasecomp/machine.hpp"
#include "phasecomp/quantum.hpp"
#include "phasecomp/tokens.hpp"

namespace {

using namespace phasecomp;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

/// Input problems that map to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string program_path;
  std::string tape = "0.";
  InstrIndex start = 1;
  std::uint64_t max_steps = 10000;
  std::uint64_t seed = 0;
  bool paper_literal = false;
  double prune_epsilon = QuantumState::kDefaultPruneEpsilon;
  std::size_t max_terms = 1u << 20;
  std::string output;  // trace / report / stats path, "" for stdout
  std::string dump_state;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program load(const std::string& path) {
  return parse_program(read_file(path), path.substr(path.find_last_of('/') + 1));
}

Dyadic tape_of(const RunConfig& cfg) {
  try {
    return parse_dyadic(cfg.tape);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--tape: ") + e.what() + " (column " + std::to_string(e.position()) + ")");
  }
}

std::string trace_csv(const Trace& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

int report_trace(const Trace& trace) {
  std::cerr << "status: " << to_string(trace.status) << " after " << trace.steps() << " steps\n";
  if (trace.status == RunStatus::error) {
    std::cerr << "error at step " << *trace.error_step << ": " << trace.error << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_run(const RunConfig& cfg) {
  const Program prog = load(cfg.program_path);
  const Trace trace = run_direct(prog, decode(tape_of(cfg)), cfg.start, cfg.max_steps);
  emit(cfg.output, trace_csv(trace));
  return report_trace(trace);
}

int cmd_dyn(const RunConfig& cfg) {
  const Program prog = load(cfg.program_path);
  const HamiltonianField field(prog, cfg.paper_literal ? JifMode::literal : JifMode::advance);
  const Trace trace = run_dynamics(field, {tape_of(cfg), cfg.start}, cfg.max_steps);
  emit(cfg.output, trace_csv(trace));
  return report_trace(trace);
}

int cmd_check(const RunConfig& cfg) {
  const Program prog = load(cfg.program_path);
  const EquivalenceReport report = check_equivalence(prog, decode(tape_of(cfg)), cfg.start, cfg.max_steps,
                                                     cfg.paper_literal ? JifMode::literal : JifMode::advance);
  emit(cfg.output, to_text(report_json(report)));
  if (!report.pass) {
    std::cerr << "divergence: " << report.detail << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_quantum(const RunConfig& cfg) {
  const Program prog = load(cfg.program_path);
  const QuantumRun run =
      run_quantum(prog, init_state(tape_of(cfg), cfg.start, cfg.prune_epsilon), cfg.max_steps, cfg.seed, {}, cfg.max_terms);
  if (!cfg.dump_state.empty()) emit(cfg.dump_state, to_text(state_json(run.state)));
  emit(cfg.output, to_text(stats_json(run.stats)));
  std::cerr << "status: " << to_string(run.status) << " after " << run.stats.steps << " steps, "
            << run.state.size() << " terms\n";
  return kOk;
}

struct TokensConfig {
  std::string family;
  std::vector<std::string> params;
  std::size_t degree = 6;
  std::string table;
  bool binomial = false;
  std::string output;
};

PolySeq tokens_sequence(const TokensConfig& cfg) {
  if (!cfg.table.empty()) {
    return parse_coefficient_table(read_file(cfg.table), cfg.family.empty() ? "table" : cfg.family);
  }
  if (cfg.family.empty()) throw UsageError("--family or --table is required");
  std::vector<Rational> params;
  for (const auto& p : cfg.params) params.push_back(parse_rational(p));
  try {
    return standard_token(cfg.family, cfg.degree, std::move(params));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_tokens_verify(const TokensConfig& cfg) {
  const PolySeq seq = tokens_sequence(cfg);
  if (seq.max_degree() < cfg.degree) throw UsageError("table holds degrees up to " + std::to_string(seq.max_degree()));
  const VerificationReport report = cfg.binomial ? verify_binomial_identity(binomial_from_token(seq), cfg.degree)
                                                 : verify_token_identity(seq, cfg.degree);
  emit(cfg.output, to_text(report_json(report)));
  return report.pass ? kOk : kFailure;
}

int cmd_tokens_h(const TokensConfig& cfg) {
  const PolySeq seq = tokens_sequence(cfg);
  if (seq.max_degree() < cfg.degree) throw UsageError("table holds degrees up to " + std::to_string(seq.max_degree()));
  emit(cfg.output, to_text(h_symbol_json(seq.family, h_symbol_coeffs(seq, cfg.degree))));
  return kOk;
}

struct CostConfig {
  std::string classical;
  std::string quantum;
  std::string classical_engine = "direct";
  std::string weights;
  RunConfig run;
};

int cmd_cost(const CostConfig& cfg) {
  if (cfg.classical.empty() && cfg.quantum.empty()) throw UsageError("give --classical and/or --quantum");
  CostWeights weights;
  if (!cfg.weights.empty()) {
    try {
      weights = weights_from_json(Json::parse(read_file(cfg.weights)));
    } catch (const Json::exception& e) {
      throw UsageError(cfg.weights + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(cfg.weights + ": " + e.what());
    }
  }
  RunInput input{tape_of(cfg.run), cfg.run.start, cfg.run.max_steps, cfg.run.seed, cfg.run.prune_epsilon,
                 cfg.run.max_terms};
  Engine classical_engine = Engine::direct;
  try {
    classical_engine = parse_engine(cfg.classical_engine);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (classical_engine == Engine::quantum) throw UsageError("--engine must be classical");

  std::optional<CostLedger> classical, quantum;
  if (!cfg.classical.empty()) classical = instrument_run(classical_engine, load(cfg.classical), input, weights).ledger;
  if (!cfg.quantum.empty()) quantum = instrument_run(Engine::quantum, load(cfg.quantum), input, weights).ledger;

  if (classical && quantum) {
    emit(cfg.run.output, to_text(report_json(compare_report(*classical, *quantum))));
  } else {
    emit(cfg.run.output, to_text(ledger_json(classical ? *classical : *quantum)));
  }
  return kOk;
}

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("program", cfg.program_path, "Assembly source (.post)")->required();
  cmd->add_option("--tape", cfg.tape, "Initial tape as a binary literal; the head is the digit left of the point")
      ->capture_default_str();
  cmd->add_option("--start", cfg.start, "Initial instruction index")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--max-steps", cfg.max_steps, "Step limit")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post machines as discrete phase-space dynamics"};
  app.require_subcommand(1);
  int status = kOk;

  RunConfig run_cfg;
  auto* run = app.add_subcommand("run", "Run the direct tape interpreter and write a t,p,q trace");
  add_run_options(run, run_cfg);
  run->add_option("--trace", run_cfg.output, "Trace CSV path (default stdout)");

  RunConfig dyn_cfg;
  auto* dyn = app.add_subcommand("dyn", "Iterate the compiled Hamiltonian field and write a t,p,q trace");
  add_run_options(dyn, dyn_cfg);
  dyn->add_option("--trace", dyn_cfg.output, "Trace CSV path (default stdout)");
  dyn->add_flag("--paper-literal", dyn_cfg.paper_literal, "JIF false branch uses the printed +1 increment");

  RunConfig check_cfg;
  auto* check = app.add_subcommand("check", "Run both engines in lockstep and report agreement");
  add_run_options(check, check_cfg);
  check->add_option("--report", check_cfg.output, "Report JSON path (default stdout)");
  check->add_flag("--paper-literal", check_cfg.paper_literal, "JIF false branch uses the printed +1 increment");

  RunConfig q_cfg;
  auto* quantum = app.add_subcommand("quantum", "Evolve a superposition of phase points");
  add_run_options(quantum, q_cfg);
  quantum->add_option("--seed", q_cfg.seed, "Measurement RNG seed")->capture_default_str();
  quantum->add_option("--prune-epsilon", q_cfg.prune_epsilon, "Drop terms with |amplitude| at or below this")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  quantum->add_option("--max-terms", q_cfg.max_terms, "Stop once the state holds more terms (0: no limit)")
      ->capture_default_str();
  quantum->add_option("--dump-state", q_cfg.dump_state, "Final state JSON path");
  quantum->add_option("--stats", q_cfg.output, "Run statistics JSON path (default stdout)");

  TokensConfig tok_cfg;
  auto* tokens = app.add_subcommand("tokens", "Polynomial token sequences");
  tokens->require_subcommand(1);
  auto add_token_options = [&tok_cfg](CLI::App* cmd) {
    cmd->add_option("--family", tok_cfg.family,
                    "exponential-monomial, falling-factorial, rising-factorial or abel");
    cmd->add_option("--param", tok_cfg.params, "Family parameter as a/b (abel takes one)");
    cmd->add_option("--degree", tok_cfg.degree, "Highest degree N")->capture_default_str();
    cmd->add_option("--table", tok_cfg.table, "Coefficient table CSV n,c0,c1,... instead of a family");
    cmd->add_option("--out", tok_cfg.output, "Output JSON path (default stdout)");
  };
  auto* verify = tokens->add_subcommand("verify", "Check the token convolution identity exactly");
  add_token_options(verify);
  verify->add_flag("--binomial", tok_cfg.binomial, "Check the binomial-type identity on n! q_n instead");
  auto* hsym = tokens->add_subcommand("h", "Linear coefficients q_k'(0) for k <= degree");
  add_token_options(hsym);

  CostConfig cost_cfg;
  auto* cost = app.add_subcommand("cost", "Weighted event ledger for classical and quantum runs");
  cost->add_option("--classical", cost_cfg.classical, "Classical programme");
  cost->add_option("--quantum", cost_cfg.quantum, "Quantum programme");
  cost->add_option("--engine", cost_cfg.classical_engine, "Engine for the classical programme: direct or dyn")
      ->capture_default_str();
  cost->add_option("--weights", cost_cfg.weights, "Weights JSON with \"a/b\" strings");
  cost->add_option("--tape", cost_cfg.run.tape, "Initial tape")->capture_default_str();
  cost->add_option("--start", cost_cfg.run.start, "Initial instruction index")->capture_default_str();
  cost->add_option("--max-steps", cost_cfg.run.max_steps, "Step limit")->capture_default_str();
  cost->add_option("--seed", cost_cfg.run.seed, "Measurement RNG seed for the quantum run")->capture_default_str();
  cost->add_option("--out", cost_cfg.run.output, "Report JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) status = cmd_run(run_cfg);
    else if (*dyn) status = cmd_dyn(dyn_cfg);
    else if (*check) status = cmd_check(check_cfg);
    else if (*quantum) status = cmd_quantum(q_cfg);
    else if (*verify) status = cmd_tokens_verify(tok_cfg);
    else if (*hsym) status = cmd_tokens_h(tok_cfg);
    else if (*cost) status = cmd_cost(cost_cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return status;
}
