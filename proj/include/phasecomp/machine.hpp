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
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "phasecomp/dyadic.hpp"
#include "phasecomp/events.hpp"

namespace phasecomp {

/// 1-based instruction index. Values outside [1, n] mean control left the
/// programme.
using InstrIndex = std::int64_t;

using Turn = boost::multiprecision::cpp_rational;

enum class Opcode {
  left,
  right,
  mark,
  unmark,
  jmp,
  jif,
  halt,
  // Quantum extensions. Parsed everywhere, executed only by the quantum engine.
  had,
  flip,
  phase,
  measure,
};

std::string_view mnemonic(Opcode op);
bool is_quantum(Opcode op);

struct Instruction {
  Opcode op = Opcode::halt;
  InstrIndex target = 0;  // jmp / jif
  Turn turn = 0;          // phase: multiplier e^{2 pi i turn} on the bit-1 cell

  static Instruction left() { return {Opcode::left}; }
  static Instruction right() { return {Opcode::right}; }
  static Instruction mark() { return {Opcode::mark}; }
  static Instruction unmark() { return {Opcode::unmark}; }
  static Instruction jmp(InstrIndex k) { return {Opcode::jmp, k}; }
  static Instruction jif(InstrIndex k) { return {Opcode::jif, k}; }
  static Instruction halt() { return {Opcode::halt}; }
  static Instruction had() { return {Opcode::had}; }
  static Instruction flip() { return {Opcode::flip}; }
  static Instruction phase(Turn r) { return {Opcode::phase, 0, std::move(r)}; }
  static Instruction measure() { return {Opcode::measure}; }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

std::string to_string(const Instruction& instr);

/// A validated, nonempty instruction list indexed 1..n.
class Program {
 public:
  /// Throws std::invalid_argument if empty or a jump target is outside 1..n.
  explicit Program(std::vector<Instruction> instructions, std::string name = "");

  std::size_t size() const noexcept { return instructions_.size(); }
  bool contains(InstrIndex p) const noexcept {
    return p >= 1 && p <= static_cast<InstrIndex>(instructions_.size());
  }
  /// Requires contains(p).
  const Instruction& at(InstrIndex p) const { return instructions_.at(static_cast<std::size_t>(p - 1)); }
  const std::vector<Instruction>& instructions() const noexcept { return instructions_; }
  const std::string& name() const noexcept { return name_; }
  bool is_classical() const;

 private:
  std::vector<Instruction> instructions_;
  std::string name_;
};

/// Assembles `.post` source: one instruction per line, optional `k:` label
/// equal to the instruction's position, `;` comments, case-insensitive
/// mnemonics. Throws ParseError with the 1-based source line.
Program parse_program(std::string_view text, std::string name = "");
Program load_program(const std::string& path);
std::string format_program(const Program& prog);

/// A tape with finitely many marked cells and a reading head.
struct TapeState {
  std::set<std::int64_t> marks;
  std::int64_t head = 0;

  bool cell() const { return marks.contains(head); }
  TapeState translated(std::int64_t offset) const;
  friend bool operator==(const TapeState&, const TapeState&) = default;
};

/// Reads the tape as a binary fraction whose point sits right of the head.
Dyadic encode(const TapeState& tape);
/// Inverse of encode with the head at cell 0.
TapeState decode(const Dyadic& q);
/// True if the two tapes differ only by a translation.
bool same_up_to_translation(const TapeState& a, const TapeState& b);

struct MachineState {
  TapeState tape;
  InstrIndex p = 1;
};

/// Executes the instruction at `p`. Returns nullopt on HALT. Throws
/// StrictWriteError on MARK over a 1 or UNMARK over a 0, WrongEngineError on
/// quantum opcodes and std::out_of_range if `p` is not in the programme.
std::optional<MachineState> direct_step(const Program& prog, const MachineState& state);

enum class RunStatus { halted, fell_off, step_limit, term_limit, error };
std::string_view to_string(RunStatus s);

struct TraceRow {
  std::uint64_t t = 0;
  InstrIndex p = 0;
  Dyadic q;
  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Rows (t, p, q) from t = 0 until the run stops. `error_step` is the t at
/// which the failing instruction was about to execute.
struct Trace {
  std::vector<TraceRow> rows;
  RunStatus status = RunStatus::step_limit;
  std::optional<std::uint64_t> error_step;
  std::string error;

  std::uint64_t steps() const { return rows.empty() ? 0 : rows.back().t; }
};

/// Iterates direct_step. `final_tape`, if given, receives the last tape.
Trace run_direct(const Program& prog, const TapeState& tape, InstrIndex p0,
                 std::uint64_t max_steps, const EventSink& sink = {},
                 TapeState* final_tape = nullptr);

/// CSV with header `t,p,q`, one row per step including t = 0.
void write_trace_csv(std::ostream& out, const Trace& trace);

}  // namespace phasecomp
