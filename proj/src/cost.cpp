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

#include "phasecomp/cost.hpp"

#include <stdexcept>

#include "phasecomp/dynamics.hpp"

namespace phasecomp {

CostWeights::CostWeights() { weights_.fill(Rational(1)); }

void CostWeights::set(CostEvent e, Rational w) {
  if (w < 0) throw std::invalid_argument("weight for " + std::string(to_string(e)) + " is negative");
  weights_[static_cast<std::size_t>(e)] = std::move(w);
}

CostWeights CostWeights::zero() {
  CostWeights w;
  w.weights_.fill(Rational(0));
  return w;
}

Rational CostLedger::total() const {
  Rational sum = 0;
  for (CostEvent e : kAllCostEvents) sum += subtotal(e);
  return sum;
}

CostLedger& CostLedger::merge(const CostLedger& other) {
  if (!(weights_ == other.weights_)) throw std::invalid_argument("cannot merge ledgers priced with different weights");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

EventSink CostLedger::sink() {
  return [this](CostEvent e, std::uint64_t n) { record(e, n); };
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::direct: return "direct";
    case Engine::dynamics: return "dynamics";
    case Engine::quantum: return "quantum";
  }
  return "?";
}

Engine parse_engine(std::string_view name) {
  if (name == "direct" || name == "run") return Engine::direct;
  if (name == "dynamics" || name == "dyn") return Engine::dynamics;
  if (name == "quantum") return Engine::quantum;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

InstrumentedRun instrument_run(Engine engine, const Program& prog, const RunInput& input,
                               const CostWeights& weights) {
  CostLedger ledger(weights);
  const EventSink sink = ledger.sink();
  switch (engine) {
    case Engine::direct: {
      Trace trace = run_direct(prog, decode(input.tape), input.p0, input.max_steps, sink);
      return {ledger, std::move(trace)};
    }
    case Engine::dynamics: {
      Trace trace = run_dynamics(HamiltonianField(prog), {input.tape, input.p0}, input.max_steps, sink);
      return {ledger, std::move(trace)};
    }
    case Engine::quantum: {
      QuantumRun run = run_quantum(prog, init_state(input.tape, input.p0, input.prune_epsilon), input.max_steps,
                                   input.seed, sink, input.max_terms);
      return {ledger, std::move(run)};
    }
  }
  throw std::invalid_argument("unknown engine");
}

ComparisonReport compare_report(const CostLedger& classical, const CostLedger& quantum) {
  if (!(classical.weights() == quantum.weights())) {
    throw std::invalid_argument("ledgers were priced with different weights");
  }
  return {classical, quantum, classical.total() - quantum.total()};
}

}  // namespace phasecomp
