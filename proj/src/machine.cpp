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

#include "phasecomp/machine.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "phasecomp/errors.hpp"

namespace phasecomp {

std::string_view mnemonic(Opcode op) {
  switch (op) {
    case Opcode::left: return "LEFT";
    case Opcode::right: return "RIGHT";
    case Opcode::mark: return "MARK";
    case Opcode::unmark: return "UNMARK";
    case Opcode::jmp: return "JMP";
    case Opcode::jif: return "JIF";
    case Opcode::halt: return "HALT";
    case Opcode::had: return "HAD";
    case Opcode::flip: return "FLIP";
    case Opcode::phase: return "PHASE";
    case Opcode::measure: return "MEASURE";
  }
  return "?";
}

bool is_quantum(Opcode op) {
  return op == Opcode::had || op == Opcode::flip || op == Opcode::phase || op == Opcode::measure;
}

std::string to_string(const Instruction& instr) {
  std::string s(mnemonic(instr.op));
  if (instr.op == Opcode::jmp || instr.op == Opcode::jif) s += " " + std::to_string(instr.target);
  if (instr.op == Opcode::phase) {
    s += " " + numerator(instr.turn).str() + "/" + denominator(instr.turn).str();
  }
  return s;
}

Program::Program(std::vector<Instruction> instructions, std::string name)
    : instructions_(std::move(instructions)), name_(std::move(name)) {
  if (instructions_.empty()) throw std::invalid_argument("a programme needs at least one instruction");
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    const auto& instr = instructions_[i];
    if ((instr.op == Opcode::jmp || instr.op == Opcode::jif) && !contains(instr.target)) {
      throw std::invalid_argument("instruction " + std::to_string(i + 1) + ": jump target " +
                                  std::to_string(instr.target) + " outside 1.." +
                                  std::to_string(instructions_.size()));
    }
  }
}

bool Program::is_classical() const {
  return std::none_of(instructions_.begin(), instructions_.end(),
                      [](const Instruction& i) { return is_quantum(i.op); });
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::int64_t parse_index(const std::string& s, std::size_t line) {
  if (!all_digits(s) || s.size() > 18) throw ParseError("line " + std::to_string(line) + ": bad number '" + s + "'", line);
  return std::stoll(s);
}

Turn parse_turn(const std::string& s, std::size_t line) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  auto slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("line " + std::to_string(line) + ": bad phase '" + s + "', expected a/b", line);
  }
  BigInt d(den);
  if (d.is_zero()) throw ParseError("line " + std::to_string(line) + ": zero denominator in phase", line);
  Turn r(BigInt(num), d);
  return negative ? Turn(-r) : r;
}

}  // namespace

Program parse_program(std::string_view text, std::string name) {
  std::vector<Instruction> out;
  std::vector<std::size_t> source_lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto c = raw.find(';'); c != std::string::npos) raw.resize(c);
    std::string body = trim(raw);
    if (body.empty()) continue;

    const auto position = static_cast<std::int64_t>(out.size() + 1);
    if (auto colon = body.find(':'); colon != std::string::npos) {
      const std::string label = trim(std::string_view(body).substr(0, colon));
      if (parse_index(label, line) != position) {
        throw ParseError("line " + std::to_string(line) + ": label " + label +
                             " does not match instruction position " + std::to_string(position),
                         line);
      }
      body = trim(std::string_view(body).substr(colon + 1));
    }

    std::istringstream words(body);
    std::string op, operand, extra;
    words >> op >> operand >> extra;
    if (!extra.empty()) throw ParseError("line " + std::to_string(line) + ": trailing text '" + extra + "'", line);
    op = upper(op);

    auto no_operand = [&](Instruction instr) {
      if (!operand.empty()) throw ParseError("line " + std::to_string(line) + ": " + op + " takes no operand", line);
      return instr;
    };
    auto with_target = [&](Instruction instr) {
      if (operand.empty()) throw ParseError("line " + std::to_string(line) + ": " + op + " needs a target", line);
      instr.target = parse_index(operand, line);
      return instr;
    };

    Instruction instr;
    if (op == "LEFT") instr = no_operand(Instruction::left());
    else if (op == "RIGHT") instr = no_operand(Instruction::right());
    else if (op == "MARK") instr = no_operand(Instruction::mark());
    else if (op == "UNMARK") instr = no_operand(Instruction::unmark());
    else if (op == "HALT") instr = no_operand(Instruction::halt());
    else if (op == "HAD") instr = no_operand(Instruction::had());
    else if (op == "FLIP") instr = no_operand(Instruction::flip());
    else if (op == "MEASURE") instr = no_operand(Instruction::measure());
    else if (op == "JMP") instr = with_target(Instruction::jmp(0));
    else if (op == "JIF") instr = with_target(Instruction::jif(0));
    else if (op == "PHASE") {
      if (operand.empty()) throw ParseError("line " + std::to_string(line) + ": PHASE needs a turn a/b", line);
      instr = Instruction::phase(parse_turn(operand, line));
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown mnemonic '" + op + "'", line);
    }
    out.push_back(std::move(instr));
    source_lines.push_back(line);
  }
  if (out.empty()) throw ParseError("programme has no instructions", line == 0 ? 1 : line);
  const auto n = static_cast<std::int64_t>(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& instr = out[i];
    if ((instr.op == Opcode::jmp || instr.op == Opcode::jif) && (instr.target < 1 || instr.target > n)) {
      throw ParseError("line " + std::to_string(source_lines[i]) + ": jump target " +
                           std::to_string(instr.target) + " out of range 1.." + std::to_string(n),
                       source_lines[i]);
    }
  }
  return Program(std::move(out), std::move(name));
}

Program load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open programme " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name.resize(dot);
  return parse_program(buf.str(), name);
}

std::string format_program(const Program& prog) {
  std::string out;
  for (std::size_t i = 0; i < prog.size(); ++i) {
    out += std::to_string(i + 1) + ": " + to_string(prog.instructions()[i]) + "\n";
  }
  return out;
}

TapeState TapeState::translated(std::int64_t offset) const {
  TapeState t;
  t.head = head + offset;
  for (auto m : marks) t.marks.insert(m + offset);
  return t;
}

Dyadic encode(const TapeState& tape) {
  if (tape.marks.empty()) return Dyadic();
  // Cell i carries weight 2^(head - i); rescale so the rightmost mark is bit 0.
  const std::int64_t rightmost = *tape.marks.rbegin();
  const std::int64_t scale = std::max<std::int64_t>(0, rightmost - tape.head);
  BigInt num = 0;
  for (auto i : tape.marks) bit_set(num, static_cast<unsigned>(scale + tape.head - i));
  return Dyadic(std::move(num), static_cast<std::uint64_t>(scale));
}

TapeState decode(const Dyadic& q) {
  TapeState t;
  if (q.is_zero()) return t;
  const auto scale = static_cast<std::int64_t>(q.scale());
  const unsigned top = boost::multiprecision::msb(q.num());
  for (unsigned j = 0; j <= top; ++j) {
    if (bit_test(q.num(), j)) t.marks.insert(scale - static_cast<std::int64_t>(j));
  }
  return t;
}

bool same_up_to_translation(const TapeState& a, const TapeState& b) {
  return a.translated(-a.head) == b.translated(-b.head);
}

std::optional<MachineState> direct_step(const Program& prog, const MachineState& state) {
  if (!prog.contains(state.p)) throw std::out_of_range("instruction index " + std::to_string(state.p) + " outside programme");
  const Instruction& instr = prog.at(state.p);
  MachineState next = state;
  next.p = state.p + 1;
  switch (instr.op) {
    case Opcode::left:
      --next.tape.head;
      break;
    case Opcode::right:
      ++next.tape.head;
      break;
    case Opcode::mark:
      if (state.tape.cell()) {
        throw StrictWriteError("MARK at instruction " + std::to_string(state.p) + " on a marked cell");
      }
      next.tape.marks.insert(state.tape.head);
      break;
    case Opcode::unmark:
      if (!state.tape.cell()) {
        throw StrictWriteError("UNMARK at instruction " + std::to_string(state.p) + " on an empty cell");
      }
      next.tape.marks.erase(state.tape.head);
      break;
    case Opcode::jmp:
      next.p = instr.target;
      break;
    case Opcode::jif:
      if (state.tape.cell()) next.p = instr.target;
      break;
    case Opcode::halt:
      return std::nullopt;
    default:
      throw WrongEngineError(std::string(mnemonic(instr.op)) + " at instruction " +
                             std::to_string(state.p) + " needs the quantum engine");
  }
  return next;
}

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::halted: return "halted";
    case RunStatus::fell_off: return "fell-off-programme";
    case RunStatus::step_limit: return "step-limit";
    case RunStatus::term_limit: return "term-limit";
    case RunStatus::error: return "error";
  }
  return "?";
}

Trace run_direct(const Program& prog, const TapeState& tape, InstrIndex p0, std::uint64_t max_steps,
                 const EventSink& sink, TapeState* final_tape) {
  Trace trace;
  MachineState state{tape, p0};
  std::uint64_t t = 0;
  trace.rows.push_back({t, state.p, encode(state.tape)});
  while (true) {
    if (!prog.contains(state.p)) {
      trace.status = RunStatus::fell_off;
      break;
    }
    if (prog.at(state.p).op == Opcode::halt) {
      trace.status = RunStatus::halted;
      break;
    }
    if (t == max_steps) {
      trace.status = RunStatus::step_limit;
      break;
    }
    try {
      state = *direct_step(prog, state);
    } catch (const std::exception& e) {
      trace.status = RunStatus::error;
      trace.error_step = t;
      trace.error = e.what();
      break;
    }
    ++t;
    if (sink) sink(CostEvent::classical_step, 1);
    trace.rows.push_back({t, state.p, encode(state.tape)});
  }
  if (final_tape) *final_tape = std::move(state.tape);
  return trace;
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << "t,p,q\n";
  for (const auto& row : trace.rows) out << row.t << ',' << row.p << ',' << format_dyadic(row.q) << '\n';
}

}  // namespace phasecomp
