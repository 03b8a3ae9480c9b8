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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "phasecomp/dyadic.hpp"
#include "phasecomp/events.hpp"
#include "phasecomp/machine.hpp"
#include "phasecomp/quantum.hpp"
#include "phasecomp/rational.hpp"

namespace phasecomp {

/// Nonnegative weight per event class; unit weights by default.
class CostWeights {
 public:
  CostWeights();

  const Rational& operator[](CostEvent e) const { return weights_[static_cast<std::size_t>(e)]; }
  /// Throws std::invalid_argument on a negative weight.
  void set(CostEvent e, Rational w);

  static CostWeights zero();

  friend bool operator==(const CostWeights&, const CostWeights&) = default;

 private:
  std::array<Rational, kAllCostEvents.size()> weights_;
};

/// Event counters plus the weights they are priced with.
class CostLedger {
 public:
  explicit CostLedger(CostWeights weights = {}) : weights_(std::move(weights)) {}

  void record(CostEvent e, std::uint64_t count = 1) { counts_[static_cast<std::size_t>(e)] += count; }
  std::uint64_t count(CostEvent e) const { return counts_[static_cast<std::size_t>(e)]; }
  Rational subtotal(CostEvent e) const { return weights_[e] * Rational(count(e)); }
  Rational total() const;
  const CostWeights& weights() const noexcept { return weights_; }

  /// Adds the other ledger's counters. Throws std::invalid_argument if the
  /// weights differ.
  CostLedger& merge(const CostLedger& other);

  /// A sink that records into this ledger; the ledger must outlive it.
  EventSink sink();

 private:
  CostWeights weights_;
  std::array<std::uint64_t, kAllCostEvents.size()> counts_{};
};

enum class Engine { direct, dynamics, quantum };
std::string_view to_string(Engine e);
/// Accepts "direct"/"run", "dynamics"/"dyn", "quantum". Throws std::invalid_argument.
Engine parse_engine(std::string_view name);

struct RunInput {
  Dyadic tape;
  InstrIndex p0 = 1;
  std::uint64_t max_steps = 1000;
  std::uint64_t seed = 0;
  double prune_epsilon = QuantumState::kDefaultPruneEpsilon;
  std::size_t max_terms = 0;
};

struct InstrumentedRun {
  CostLedger ledger;
  /// Trace for direct and dynamics runs, QuantumRun for quantum runs.
  std::variant<Trace, QuantumRun> result;
};

/// Runs the engine with a ledger attached. Classical runs count one
/// classical_step per step; quantum runs count circuit_assemble (programme
/// length), prepare_qubit (cells of the initial register), gate_apply (per
/// branch per instruction) and measure (per barrier).
InstrumentedRun instrument_run(Engine engine, const Program& prog, const RunInput& input,
                               const CostWeights& weights);

struct ComparisonReport {
  CostLedger classical;
  CostLedger quantum;
  /// classical total - quantum total.
  Rational margin;
};

/// Throws std::invalid_argument when the ledgers use different weights.
ComparisonReport compare_report(const CostLedger& classical, const CostLedger& quantum);

}  // namespace phasecomp
