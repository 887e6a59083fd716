// Copyright 2025 The bicirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <json.hpp>

#include "bicirc/errors.hpp"
#include "bicirc/json_io.hpp"

#include <algorithm>

namespace bicirc {

using nlohmann::json;

const char* to_string(StrategyTag tag) {
  switch (tag) {
    case StrategyTag::SmallM: return "SmallM";
    case StrategyTag::ExceptionFamily: return "ExceptionFamily";
    case StrategyTag::HaarConnected: return "HaarConnected";
    case StrategyTag::HalfTurn: return "HalfTurn";
    case StrategyTag::UniformGrid: return "UniformGrid";
    case StrategyTag::NonUniformExtension: return "NonUniformExtension";
    case StrategyTag::CongruentOdd_EqualTypes: return "CongruentOdd_EqualTypes";
    case StrategyTag::CongruentOdd_General: return "CongruentOdd_General";
    case StrategyTag::CongruentEven_Brick: return "CongruentEven_Brick";
    case StrategyTag::TwoHooked: return "TwoHooked";
    case StrategyTag::TypeIIRecursion: return "TypeIIRecursion";
    case StrategyTag::ThreeSpokeReduction: return "ThreeSpokeReduction";
    case StrategyTag::ImportedBaseSearch: return "ImportedBaseSearch";
    case StrategyTag::ComponentSplit: return "ComponentSplit";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Hamiltonian: return "Hamiltonian";
    case Verdict::NonHamiltonianException: return "NonHamiltonianException";
    case Verdict::NoStrategyApplies: return "NoStrategyApplies";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Disconnected: return "Disconnected";
  }
  return "?";
}

bool SolveReport::resolved() const {
  switch (verdict) {
    case Verdict::Hamiltonian: return witness.has_value();
    case Verdict::NonHamiltonianException: return true;
    case Verdict::Disconnected:
      return !components.empty() &&
             std::all_of(components.begin(), components.end(), [](const SolveReport& c) { return c.resolved(); });
    default: return false;
  }
}

namespace {

json spec_json(const BicirculantSpec& s) {
  return {{"m", s.m}, {"R", s.R}, {"S", s.S}, {"T", s.T}, {"text", format_spec(s)}};
}

json witness_obj(const HamiltonWitness& w) {
  json seq = json::array();
  for (const auto& v : w.sequence) seq.push_back(to_string(v));
  json j{{"kind", w.is_cycle() ? "cycle" : "path"}, {"sequence", seq}};
  if (!w.is_cycle() && !w.sequence.empty()) {
    j["start"] = to_string(w.start());
    j["end"] = to_string(w.end());
  }
  return j;
}

json node_json(const StrategyNode& n) {
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(node_json(c));
  json j{{"tag", to_string(n.tag)}, {"spec", format_spec(n.spec)}, {"succeeded", n.succeeded}};
  if (!n.note.empty()) j["note"] = n.note;
  if (!kids.empty()) j["children"] = kids;
  return j;
}

json report_obj(const SolveReport& r) {
  json tree = json::array();
  for (const auto& n : r.strategy_tree) tree.push_back(node_json(n));
  json j{{"spec", spec_json(r.spec)},
         {"normalized", spec_json(r.normalized)},
         {"shift", r.shift},
         {"verdict", to_string(r.verdict)},
         {"strategy_tree", tree},
         {"seconds", r.seconds}};
  if (r.witness) j["witness"] = witness_obj(*r.witness);
  if (r.exception) j["exception"] = to_string(*r.exception);
  if (!r.components.empty()) {
    json comps = json::array();
    for (const auto& c : r.components) comps.push_back(report_obj(c));
    j["components"] = comps;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string report_to_json(const SolveReport& report, int indent) { return report_obj(report).dump(indent); }

std::string witness_to_json(const HamiltonWitness& w) { return witness_obj(w).dump(); }

std::string spec_to_json(const BicirculantSpec& spec) { return spec_json(spec).dump(); }

HamiltonWitness witness_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    HamiltonWitness w;
    const json* seq = &j;
    if (j.is_object()) {
      if (j.contains("witness")) return witness_from_json(j.at("witness").dump());
      w.kind = j.value("kind", std::string("cycle")) == "path" ? HamiltonWitness::Kind::Path
                                                               : HamiltonWitness::Kind::Cycle;
      seq = &j.at("sequence");
    }
    if (!seq->is_array()) throw ParseError("witness sequence must be an array", 0);
    for (const auto& v : *seq) w.sequence.push_back(parse_vertex(v.get<std::string>()));
    return w;
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace bicirc
