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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phasecomp/dyadic.hpp"
#include "phasecomp/events.hpp"
#include "phasecomp/machine.hpp"

namespace phasecomp {

/// A point (q, p) of the phase space: tape coordinate and instruction index.
struct PhasePoint {
  Dyadic q;
  InstrIndex p = 1;
  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// How JIF evaluates its increment when the current cell is 0.
///   advance: -1, i.e. fall through to the next instruction.
///   literal: +1, the printed table value, which steps back to p - 1.
enum class JifMode { advance, literal };

/// A programme compiled to its pair of finite differences. For the
/// instruction at p, `dp_h(q, p)` is the signed tape increment and
/// `dq_h(q, p)` the integer whose negation moves the instruction pointer:
///
///   q' = q + dp_h(q, p),   p' = p - dq_h(q, p).
///
/// Tape-acting rows carry dq_h = -1 and jump rows carry dp_h = 0. HALT
/// compiles to (0, 0) and is flagged terminal.
class HamiltonianField {
 public:
  /// Throws WrongEngineError on quantum opcodes.
  explicit HamiltonianField(const Program& prog, JifMode jif_mode = JifMode::advance);

  std::size_t size() const noexcept { return rows_.size(); }
  bool contains(InstrIndex p) const noexcept { return p >= 1 && p <= static_cast<InstrIndex>(rows_.size()); }
  JifMode jif_mode() const noexcept { return jif_mode_; }

  /// Throws StrictWriteError when MARK/UNMARK find the wrong current bit.
  SignedDyadic dp_h(const Dyadic& q, InstrIndex p) const;
  std::int64_t dq_h(const Dyadic& q, InstrIndex p) const;
  bool is_terminal(InstrIndex p) const;

 private:
  struct Row {
    Opcode op;
    InstrIndex target;
  };
  const Row& row(InstrIndex p) const;

  std::vector<Row> rows_;
  JifMode jif_mode_;
};

inline HamiltonianField compile_hamiltonian(const Program& prog, JifMode mode = JifMode::advance) {
  return HamiltonianField(prog, mode);
}

/// One iteration of the difference equations; both increments are taken at
/// the old point.
PhasePoint dynamics_step(const HamiltonianField& field, const PhasePoint& s);

/// Iterates dynamics_step until a terminal row, p leaving 1..n, an error or
/// the step limit. Rows share the layout of the direct trace.
Trace run_dynamics(const HamiltonianField& field, const PhasePoint& s0, std::uint64_t max_steps,
                   const EventSink& sink = {});

struct EquivalenceReport {
  bool pass = false;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> divergence_step;
  std::string detail;
  Trace direct;
  Trace dynamics;
};

/// Runs both engines from the same start and compares encode(tape_t) with q_t
/// and the instruction indices at every t, plus the terminal status.
EquivalenceReport check_equivalence(const Program& prog, const TapeState& tape0, InstrIndex p0,
                                    std::uint64_t max_steps, JifMode mode = JifMode::advance);

struct EquivalenceCase {
  const Program* program;
  TapeState tape;
  InstrIndex p0 = 1;
  std::uint64_t max_steps = 0;
};

/// check_equivalence over many cases on `threads` workers. Results are in
/// input order regardless of scheduling.
std::vector<EquivalenceReport> check_equivalence_batch(std::span<const EquivalenceCase> cases,
                                                       unsigned threads = 0);

}  // namespace phasecomp
