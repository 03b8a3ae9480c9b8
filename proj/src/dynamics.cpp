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

#include "phasecomp/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "phasecomp/errors.hpp"

namespace phasecomp {

HamiltonianField::HamiltonianField(const Program& prog, JifMode jif_mode) : jif_mode_(jif_mode) {
  rows_.reserve(prog.size());
  for (std::size_t i = 0; i < prog.size(); ++i) {
    const Instruction& instr = prog.instructions()[i];
    if (is_quantum(instr.op)) {
      throw WrongEngineError(std::string(mnemonic(instr.op)) + " at instruction " + std::to_string(i + 1) +
                             " has no classical Hamiltonian");
    }
    rows_.push_back({instr.op, instr.target});
  }
}

const HamiltonianField::Row& HamiltonianField::row(InstrIndex p) const {
  if (!contains(p)) throw std::out_of_range("instruction index " + std::to_string(p) + " outside programme");
  return rows_[static_cast<std::size_t>(p - 1)];
}

SignedDyadic HamiltonianField::dp_h(const Dyadic& q, InstrIndex p) const {
  const Row& r = row(p);
  switch (r.op) {
    case Opcode::left:
      return SignedDyadic::minus(q.halve());
    case Opcode::right:
      return SignedDyadic::plus(q);
    case Opcode::mark:
      if (q.current_bit() != 0) {
        throw StrictWriteError("MARK at instruction " + std::to_string(p) + " with current bit 1 at q=" +
                               format_dyadic(q));
      }
      return SignedDyadic::plus(Dyadic(1));
    case Opcode::unmark:
      if (q.current_bit() != 1) {
        throw StrictWriteError("UNMARK at instruction " + std::to_string(p) + " with current bit 0 at q=" +
                               format_dyadic(q));
      }
      return SignedDyadic::minus(Dyadic(1));
    default:
      return {};
  }
}

std::int64_t HamiltonianField::dq_h(const Dyadic& q, InstrIndex p) const {
  const Row& r = row(p);
  switch (r.op) {
    case Opcode::jmp:
      return p - r.target;
    case Opcode::jif:
      if (q.current_bit() == 1) return p - r.target;
      return jif_mode_ == JifMode::literal ? 1 : -1;
    case Opcode::halt:
      return 0;
    default:
      return -1;
  }
}

bool HamiltonianField::is_terminal(InstrIndex p) const { return row(p).op == Opcode::halt; }

PhasePoint dynamics_step(const HamiltonianField& field, const PhasePoint& s) {
  SignedDyadic dq = field.dp_h(s.q, s.p);
  const std::int64_t dp = field.dq_h(s.q, s.p);
  return {dq.apply_to(s.q), s.p - dp};
}

Trace run_dynamics(const HamiltonianField& field, const PhasePoint& s0, std::uint64_t max_steps,
                   const EventSink& sink) {
  Trace trace;
  PhasePoint s = s0;
  std::uint64_t t = 0;
  trace.rows.push_back({t, s.p, s.q});
  while (true) {
    if (!field.contains(s.p)) {
      trace.status = RunStatus::fell_off;
      break;
    }
    if (field.is_terminal(s.p)) {
      trace.status = RunStatus::halted;
      break;
    }
    if (t == max_steps) {
      trace.status = RunStatus::step_limit;
      break;
    }
    try {
      s = dynamics_step(field, s);
    } catch (const std::exception& e) {
      trace.status = RunStatus::error;
      trace.error_step = t;
      trace.error = e.what();
      break;
    }
    ++t;
    if (sink) sink(CostEvent::classical_step, 1);
    trace.rows.push_back({t, s.p, s.q});
  }
  return trace;
}

EquivalenceReport check_equivalence(const Program& prog, const TapeState& tape0, InstrIndex p0,
                                    std::uint64_t max_steps, JifMode mode) {
  EquivalenceReport report;
  report.direct = run_direct(prog, tape0, p0, max_steps);
  report.dynamics = run_dynamics(HamiltonianField(prog, mode), {encode(tape0), p0}, max_steps);

  const auto& a = report.direct.rows;
  const auto& b = report.dynamics.rows;
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i].p != b[i].p || a[i].q != b[i].q) {
      report.divergence_step = a[i].t;
      report.detail = "t=" + std::to_string(a[i].t) + ": direct (" + std::to_string(a[i].p) + ", " +
                      format_dyadic(a[i].q) + ") vs dynamics (" + std::to_string(b[i].p) + ", " +
                      format_dyadic(b[i].q) + ")";
      report.steps = a[i].t;
      return report;
    }
  }
  report.steps = common == 0 ? 0 : a[common - 1].t;
  if (a.size() != b.size() || report.direct.status != report.dynamics.status ||
      report.direct.error_step != report.dynamics.error_step) {
    report.divergence_step = report.steps + (a.size() != b.size() ? 1 : 0);
    report.detail = "terminal status differs: direct " + std::string(to_string(report.direct.status)) +
                    " vs dynamics " + std::string(to_string(report.dynamics.status));
    return report;
  }
  report.pass = true;
  return report;
}

std::vector<EquivalenceReport> check_equivalence_batch(std::span<const EquivalenceCase> cases, unsigned threads) {
  std::vector<EquivalenceReport> out(cases.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const auto& c = cases[i];
      out[i] = check_equivalence(*c.program, c.tape, c.p0, c.max_steps);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  return out;
}

}  // namespace phasecomp
