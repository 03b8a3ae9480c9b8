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

#include "phasecomp/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace phasecomp {

Json report_json(const EquivalenceReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["steps"] = report.steps;
  j["divergence_step"] = report.divergence_step ? Json(*report.divergence_step) : Json(nullptr);
  return j;
}

Json state_json(const QuantumState& state) {
  struct Row {
    std::string q;
    InstrIndex p;
    Amplitude amp;
  };
  std::vector<Row> rows;
  rows.reserve(state.size());
  for (const auto& [key, amp] : state.terms()) rows.push_back({format_dyadic(key.q), key.p, amp});
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return std::tie(a.q, a.p) < std::tie(b.q, b.p); });
  Json out = Json::array();
  for (const auto& r : rows) {
    Json term;
    term["q"] = r.q;
    term["p"] = r.p == kHalted ? Json("halted") : Json(r.p);
    term["re"] = r.amp.real();
    term["im"] = r.amp.imag();
    out.push_back(std::move(term));
  }
  return out;
}

Json stats_json(const RunStats& stats) {
  Json j;
  j["steps"] = stats.steps;
  j["peak_terms"] = stats.peak_terms;
  j["collisions"] = stats.collisions;
  j["final_norm"] = stats.final_norm;
  j["pointer_superposition"] = stats.pointer_superposition;
  j["measurements"] = stats.measurements;
  return j;
}

Json report_json(const VerificationReport& report) {
  Json j;
  j["family"] = report.family;
  j["n_max"] = report.n_max;
  j["pass"] = report.pass;
  j["failures"] = Json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back(
        {{"n", f.n}, {"monomial", f.monomial}, {"lhs", format_rational(f.lhs)}, {"rhs", format_rational(f.rhs)}});
  }
  return j;
}

Json h_symbol_json(const std::string& family, const HSymbol& h) {
  Json j;
  j["family"] = family;
  j["truncation"] = h.truncation;
  j["coeffs"] = Json::array();
  for (const auto& c : h.coeffs) j["coeffs"].push_back(format_rational(c));
  return j;
}

CostWeights weights_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("weights must be a JSON object");
  CostWeights w;
  for (const auto& [key, value] : j.items()) {
    auto it = std::find_if(kAllCostEvents.begin(), kAllCostEvents.end(),
                           [&key](CostEvent e) { return to_string(e) == key; });
    if (it == kAllCostEvents.end()) throw std::invalid_argument("unknown weight class '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("weight '" + key + "' must be an \"a/b\" string");
    w.set(*it, parse_rational(value.get<std::string>()));
  }
  return w;
}

Json weights_json(const CostWeights& w) {
  Json j;
  for (CostEvent e : kAllCostEvents) j[std::string(to_string(e))] = format_rational(w[e]);
  return j;
}

Json ledger_json(const CostLedger& ledger) {
  Json j;
  Json classes;
  for (CostEvent e : kAllCostEvents) {
    classes[std::string(to_string(e))] = {{"count", ledger.count(e)},
                                          {"weight", format_rational(ledger.weights()[e])},
                                          {"subtotal", format_rational(ledger.subtotal(e))}};
  }
  j["classes"] = std::move(classes);
  j["total"] = format_rational(ledger.total());
  return j;
}

Json report_json(const ComparisonReport& report) {
  Json j;
  j["classical"] = ledger_json(report.classical);
  j["quantum"] = ledger_json(report.quantum);
  j["margin"] = format_rational(report.margin);
  return j;
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace phasecomp
