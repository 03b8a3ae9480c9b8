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
#include <functional>
#include <string_view>

namespace phasecomp {

/// Observable events that cost accounting attaches weights to.
enum class CostEvent { prepare_qubit, gate_apply, measure, circuit_assemble, classical_step };

inline constexpr std::array<CostEvent, 5> kAllCostEvents = {
    CostEvent::circuit_assemble, CostEvent::classical_step, CostEvent::gate_apply,
    CostEvent::measure, CostEvent::prepare_qubit};

constexpr std::string_view to_string(CostEvent e) {
  switch (e) {
    case CostEvent::prepare_qubit: return "prepare_qubit";
    case CostEvent::gate_apply: return "gate_apply";
    case CostEvent::measure: return "measure";
    case CostEvent::circuit_assemble: return "circuit_assemble";
    case CostEvent::classical_step: return "classical_step";
  }
  return "?";
}

/// Optional observer handed to the engines. An empty sink is never called.
using EventSink = std::function<void(CostEvent, std::uint64_t count)>;

}  // namespace phasecomp
