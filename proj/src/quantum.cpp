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

#include "phasecomp/quantum.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "phasecomp/errors.hpp"

namespace phasecomp {

QuantumState::QuantumState(double prune_epsilon) : prune_epsilon_(prune_epsilon) {
  if (!(prune_epsilon >= 0.0)) throw std::invalid_argument("prune epsilon must be nonnegative");
}

bool QuantumState::accumulate(const PhaseKey& key, Amplitude amp) {
  auto [it, inserted] = terms_.try_emplace(key, amp);
  if (!inserted) it->second += amp;
  return !inserted;
}

void QuantumState::prune() {
  std::erase_if(terms_, [this](const auto& kv) { return std::abs(kv.second) <= prune_epsilon_; });
}

double QuantumState::norm() const {
  double total = 0.0;
  for (const auto& [key, amp] : terms_) total += std::norm(amp);
  return total;
}

Amplitude QuantumState::amplitude(const Dyadic& q, InstrIndex p) const {
  auto it = terms_.find(PhaseKey{q, p});
  return it == terms_.end() ? Amplitude{} : it->second;
}

QuantumState init_state(const Dyadic& q0, InstrIndex p0, double prune_epsilon) {
  QuantumState s(prune_epsilon);
  s.accumulate({q0, p0}, 1.0);
  return s;
}

bool is_halted(const Program& prog, InstrIndex p) {
  return !prog.contains(p) || prog.at(p).op == Opcode::halt;
}

namespace {

// e^{2 pi i r}, exact on quarter turns.
Amplitude phase_factor(const Turn& r) {
  Turn frac = r - Turn(numerator(r) / denominator(r));
  if (frac < 0) frac += 1;
  if (frac == 0) return {1.0, 0.0};
  if (frac == Turn(1, 4)) return {0.0, 1.0};
  if (frac == Turn(1, 2)) return {-1.0, 0.0};
  if (frac == Turn(3, 4)) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * frac.convert_to<double>());
}

std::string describe(const PhaseKey& key, Amplitude amp) {
  std::ostringstream os;
  os << "branch (q=" << format_dyadic(key.q) << ", p=" << key.p << ") with amplitude " << amp.real()
     << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i";
  return os.str();
}

InstrIndex next_index(const Program& prog, InstrIndex p) { return prog.contains(p + 1) ? p + 1 : kHalted; }

}  // namespace

QuantumState q_step(const Program& prog, const QuantumState& s, StepStats* stats) {
  QuantumState out(s.prune_epsilon());
  StepStats local;
  auto emit = [&](const PhaseKey& key, Amplitude amp) {
    if (out.accumulate(key, amp)) ++local.collisions;
  };
  constexpr double kInvSqrt2 = 0.70710678118654752440;

  for (const auto& [key, amp] : s.terms()) {
    if (is_halted(prog, key.p) || prog.at(key.p).op == Opcode::measure) {
      emit(key, amp);
      continue;
    }
    const Instruction& instr = prog.at(key.p);
    const Dyadic& q = key.q;
    const int bit = q.current_bit();
    const InstrIndex next = next_index(prog, key.p);
    ++local.applications;
    switch (instr.op) {
      case Opcode::left:
        emit({q.halve(), next}, amp);
        break;
      case Opcode::right:
        emit({q.twice(), next}, amp);
        break;
      case Opcode::mark:
        if (bit != 0) throw StrictWriteError("MARK on a marked cell in " + describe(key, amp));
        emit({q.add_one(), next}, amp);
        break;
      case Opcode::unmark:
        if (bit != 1) throw StrictWriteError("UNMARK on an empty cell in " + describe(key, amp));
        emit({q.sub_one(), next}, amp);
        break;
      case Opcode::jmp:
        emit({q, instr.target}, amp);
        break;
      case Opcode::jif:
        emit({q, bit == 1 ? instr.target : next}, amp);
        break;
      case Opcode::had: {
        const Dyadic zero = bit == 0 ? q : q.sub_one();
        const Dyadic one = bit == 0 ? q.add_one() : q;
        emit({zero, next}, amp * kInvSqrt2);
        emit({one, next}, bit == 0 ? amp * kInvSqrt2 : -amp * kInvSqrt2);
        break;
      }
      case Opcode::flip:
        emit({bit == 0 ? q.add_one() : q.sub_one(), next}, amp);
        break;
      case Opcode::phase:
        emit({q, next}, bit == 1 ? amp * phase_factor(instr.turn) : amp);
        break;
      case Opcode::halt:
      case Opcode::measure:
        break;
    }
  }
  out.prune();
  if (stats) {
    stats->collisions += local.collisions;
    stats->applications += local.applications;
  }
  return out;
}

std::pair<double, double> measure_distribution(const QuantumState& s) {
  double p0 = 0.0, p1 = 0.0;
  for (const auto& [key, amp] : s.terms()) (key.q.current_bit() == 0 ? p0 : p1) += std::norm(amp);
  const double total = p0 + p1;
  if (total == 0.0) throw std::invalid_argument("cannot measure an empty state");
  return {p0 / total, p1 / total};
}

std::pair<int, QuantumState> measure(const QuantumState& s, std::mt19937_64& rng) {
  const auto [p0, p1] = measure_distribution(s);
  // 53 uniform bits; independent of the standard library's distributions.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const int bit = u < p0 ? 0 : 1;
  QuantumState out(s.prune_epsilon());
  double kept = 0.0;
  for (const auto& [key, amp] : s.terms()) {
    if (key.q.current_bit() == bit) kept += std::norm(amp);
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (const auto& [key, amp] : s.terms()) {
    if (key.q.current_bit() == bit) out.accumulate(key, amp * scale);
  }
  return {bit, std::move(out)};
}

std::pair<int, QuantumState> measure(const QuantumState& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return measure(s, rng);
}

namespace {

std::uint64_t register_cells(const QuantumState& s) {
  std::uint64_t integer_cells = 1, fraction_cells = 0;
  for (const auto& [key, amp] : s.terms()) {
    const BigInt whole = key.q.floor();
    const std::uint64_t digits = whole.is_zero() ? 1 : boost::multiprecision::msb(whole) + 1;
    integer_cells = std::max(integer_cells, digits);
    fraction_cells = std::max(fraction_cells, key.q.scale());
  }
  return integer_cells + fraction_cells;
}

}  // namespace

QuantumRun run_quantum(const Program& prog, const QuantumState& s0, std::uint64_t max_steps, std::uint64_t seed,
                       const EventSink& sink, std::size_t max_terms) {
  QuantumRun run{s0, {}, RunStatus::step_limit};
  std::mt19937_64 rng(seed);
  if (sink) {
    sink(CostEvent::circuit_assemble, prog.size());
    sink(CostEvent::prepare_qubit, register_cells(s0));
  }
  auto observe = [&run] {
    run.stats.peak_terms = std::max<std::uint64_t>(run.stats.peak_terms, run.state.size());
    std::set<InstrIndex> pointers;
    for (const auto& [key, amp] : run.state.terms()) pointers.insert(key.p);
    if (pointers.size() > 1) run.stats.pointer_superposition = true;
  };
  observe();

  while (true) {
    bool any_live = false, all_waiting = true;
    for (const auto& [key, amp] : run.state.terms()) {
      if (is_halted(prog, key.p)) continue;
      any_live = true;
      if (prog.at(key.p).op != Opcode::measure) all_waiting = false;
    }
    if (!any_live) {
      run.status = RunStatus::halted;
      break;
    }
    if (max_terms != 0 && run.state.size() > max_terms) {
      run.status = RunStatus::term_limit;
      break;
    }
    if (run.stats.steps == max_steps) {
      run.status = RunStatus::step_limit;
      break;
    }
    if (all_waiting) {
      auto [bit, collapsed] = measure(run.state, rng);
      run.stats.measurements.push_back(bit);
      QuantumState advanced(collapsed.prune_epsilon());
      for (const auto& [key, amp] : collapsed.terms()) {
        const bool waiting = !is_halted(prog, key.p);
        if (advanced.accumulate({key.q, waiting ? next_index(prog, key.p) : key.p}, amp)) ++run.stats.collisions;
      }
      run.state = std::move(advanced);
      if (sink) sink(CostEvent::measure, 1);
    } else {
      StepStats step;
      run.state = q_step(prog, run.state, &step);
      run.stats.collisions += step.collisions;
      if (sink && step.applications > 0) sink(CostEvent::gate_apply, step.applications);
    }
    ++run.stats.steps;
    observe();
  }
  run.stats.final_norm = run.state.norm();
  return run;
}

}  // namespace phasecomp
