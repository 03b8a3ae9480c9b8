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

#include <string>

#include "json.hpp"

#include "phasecomp/cost.hpp"
#include "phasecomp/dynamics.hpp"
#include "phasecomp/quantum.hpp"
#include "phasecomp/tokens.hpp"

namespace phasecomp {

using Json = nlohmann::ordered_json;

/// {pass, steps, divergence_step|null}
Json report_json(const EquivalenceReport& report);

/// [{q, p, re, im}] sorted by (q literal, p); p is "halted" for branches that
/// left the programme.
Json state_json(const QuantumState& state);
/// {steps, peak_terms, collisions, final_norm, pointer_superposition, measurements}
Json stats_json(const RunStats& stats);

/// {family, n_max, pass, failures: [{n, monomial, lhs, rhs}]}
Json report_json(const VerificationReport& report);
Json h_symbol_json(const std::string& family, const HSymbol& h);

/// Missing classes keep their unit default. Throws std::invalid_argument on
/// unknown keys, non-string values or negative weights.
CostWeights weights_from_json(const Json& j);
Json weights_json(const CostWeights& w);
/// {classes: {name: {count, weight, subtotal}}, total}
Json ledger_json(const CostLedger& ledger);
Json report_json(const ComparisonReport& report);

/// Two-space indented dump with a trailing newline.
std::string to_text(const Json& j);

}  // namespace phasecomp
