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

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "phasecomp/dyadic.hpp"
#include "phasecomp/events.hpp"
#include "phasecomp/machine.hpp"

namespace phasecomp {

using Amplitude = std::complex<double>;

/// Instruction index of a branch whose control left the programme.
inline constexpr InstrIndex kHalted = std::numeric_limits<InstrIndex>::max();

struct PhaseKey {
  Dyadic q;
  InstrIndex p = 1;

  friend bool operator==(const PhaseKey&, const PhaseKey&) = default;
  friend auto operator<=>(const PhaseKey& a, const PhaseKey& b) {
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.p <=> b.p;
  }
};

/// Sparse superposition of phase points. Both the tape coordinate and the
/// instruction index of a branch may differ between terms.
class QuantumState {
 public:
  static constexpr double kDefaultPruneEpsilon = 1e-15;

  explicit QuantumState(double prune_epsilon = kDefaultPruneEpsilon);

  /// Adds `amp` to the term at `key`. Returns true if the key was already
  /// present, i.e. two branches interfered.
  bool accumulate(const PhaseKey& key, Amplitude amp);
  /// Drops terms with |amplitude| <= prune_epsilon.
  void prune();

  const std::map<PhaseKey, Amplitude>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  double prune_epsilon() const noexcept { return prune_epsilon_; }
  /// Sum of |amplitude|^2.
  double norm() const;
  /// Amplitude at (q, p), zero if absent.
  Amplitude amplitude(const Dyadic& q, InstrIndex p) const;

 private:
  std::map<PhaseKey, Amplitude> terms_;
  double prune_epsilon_;
};

/// The basis state |q0, p0> with amplitude 1.
QuantumState init_state(const Dyadic& q0, InstrIndex p0, double prune_epsilon = QuantumState::kDefaultPruneEpsilon);

/// A branch is done when it sits on HALT or has left the programme.
bool is_halted(const Program& prog, InstrIndex p);

struct StepStats {
  std::uint64_t collisions = 0;
  std::uint64_t applications = 0;
};

/// Advances every live term by the instruction at its own p. HAD, FLIP and
/// PHASE act on the current cell; classical opcodes apply their reversible
/// map. Terms on HALT, off the programme, or waiting at MEASURE are carried
/// unchanged. Colliding terms are summed, then pruned.
///
/// Throws StrictWriteError naming the offending branch.
QuantumState q_step(const Program& prog, const QuantumState& s, StepStats* stats = nullptr);

/// Outcome probabilities of the current cell without collapsing.
std::pair<double, double> measure_distribution(const QuantumState& s);

/// Samples the current cell, discards the other outcome and renormalizes.
/// Throws std::invalid_argument on an empty or zero-norm state.
std::pair<int, QuantumState> measure(const QuantumState& s, std::mt19937_64& rng);
std::pair<int, QuantumState> measure(const QuantumState& s, std::uint64_t seed);

struct RunStats {
  std::uint64_t steps = 0;
  std::uint64_t peak_terms = 0;
  std::uint64_t collisions = 0;
  double final_norm = 0.0;
  /// Some step held terms at two or more distinct instruction indices.
  bool pointer_superposition = false;
  std::vector<int> measurements;
};

struct QuantumRun {
  QuantumState state;
  RunStats stats;
  RunStatus status = RunStatus::step_limit;
};

/// Iterates q_step until every term is halted or the step limit is hit. When
/// all live terms wait at a MEASURE the whole state is measured once and
/// those terms move past it; the barrier counts as one step. A nonzero
/// `max_terms` stops the run with RunStatus::term_limit once the state holds
/// more terms than that.
QuantumRun run_quantum(const Program& prog, const QuantumState& s0, std::uint64_t max_steps, std::uint64_t seed,
                       const EventSink& sink = {}, std::size_t max_terms = 0);

}  // namespace phasecomp
