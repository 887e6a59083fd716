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

// bicirc: Hamilton cycles in bicirculant graphs.
//
//   bicirc solve "B(24;1,23;0,12;4,20)" [--emit-dot out.dot]
//   bicirc params "B(30;1,29;0,15;7,23)" [--a 1 --b 7]
//   bicirc oracle "B(5;1,4;0;2,3)"
//   bicirc verify SPEC WITNESS_JSON|@file
//   bicirc census --m-max 8 [--sample N] [--out lines.jsonl]
//   bicirc export SPEC --format dot|json-edges [--out FILE]
//
// Exit codes: 0 solved or exception confirmed, 1 witness violation,
// 2 unresolved, 3 usage or parse error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "bicirc/constructions.hpp"
#include "bicirc/errors.hpp"
#include "bicirc/json_io.hpp"
#include "bicirc/verify.hpp"
#include "census.hpp"

namespace {

using namespace bicirc;

enum class Level { Error, Info, Debug };

Level log_level() {
  const char* env = std::getenv("BICIRC_LOG");
  std::string v = env ? env : "error";
  if (v == "debug") return Level::Debug;
  if (v == "info") return Level::Info;
  return Level::Error;
}

void log(Level at, const std::string& msg) {
  static const Level level = log_level();
  if (at <= level) std::cerr << "bicirc: " << msg << "\n";
}

struct Globals {
  std::uint64_t nodes = 20'000'000;
  double seconds = 60.0;
  int workers = 1;
  std::uint64_t seed = 1;
  bool json = false;

  SearchBudget budget() const {
    SearchBudget b;
    b.node_limit = nodes;
    b.time_limit = seconds;
    b.seed = seed;
    return b;
  }
};

std::string read_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::runtime_error("cannot open " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* edge_class(EdgeClass c) {
  switch (c) {
    case EdgeClass::Outer: return "outer";
    case EdgeClass::Inner: return "inner";
    default: return "spoke";
  }
}

void write_dot(std::ostream& os, const BicirculantSpec& spec, const HamiltonWitness* w) {
  std::set<std::pair<Vertex, Vertex>> used;
  if (w) {
    const auto& s = w->sequence;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) used.insert(std::minmax(s[i], s[i + 1]));
    if (w->is_cycle() && s.size() > 2) used.insert(std::minmax(s.back(), s.front()));
  }
  os << "graph \"" << format_spec(spec) << "\" {\n  layout=circo;\n";
  for (const char* layer : {"outer", "inner"}) {
    os << "  subgraph cluster_" << layer << " {\n    label=" << layer << ";\n";
    for (int i = 0; i < spec.m; ++i)
      os << "    " << (layer[0] == 'o' ? "u" : "v") << i << ";\n";
    os << "  }\n";
  }
  for (const Edge& e : edges(spec)) {
    os << "  " << to_string(e.a) << " -- " << to_string(e.b) << " [kind=" << edge_class(e.kind.cls)
       << ", type=" << e.kind.type;
    if (used.count(std::minmax(e.a, e.b))) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
}

int cmd_solve(const Globals& g, const std::string& text, const std::string& dot) {
  BicirculantSpec spec = parse_spec(text);
  DispatchOptions opts;
  opts.budget = g.budget();
  opts.total_seconds = g.seconds;
  log(Level::Info, "solving " + format_spec(spec));
  SolveReport r = dispatch_solve(spec, opts);
  std::cout << report_to_json(r, g.json ? -1 : 2) << "\n";
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw std::runtime_error("cannot write " + dot);
    write_dot(out, spec, r.witness ? &*r.witness : nullptr);
  }
  log(Level::Info, std::string("verdict ") + to_string(r.verdict));
  return r.resolved() ? 0 : 2;
}

int cmd_params(const Globals& g, const std::string& text, std::optional<int> a, std::optional<int> b) {
  auto [spec, shift] = normalize(parse_spec(text));
  if (spec.R.empty() || spec.T.empty()) throw PreconditionViolated("R and T must be nonempty");
  const int x = a.value_or(spec.R.front()), y = b.value_or(spec.T.front());
  const int G = spoke_gcd(spec.m, spec.S);
  GridRepresentation rep = gcd(G, y) > 1 ? uniform_params(spec.m, spec.S, x, y)
                                         : nonuniform_params(spec.m, spec.S, x, y);
  nlohmann::json cells = nlohmann::json::array();
  std::vector<std::vector<int>> grid(rep.mu + 1);
  for (std::size_t k = 0; k < rep.cell_of_component.size(); ++k) {
    auto [i, j] = rep.cell_of_component[k];
    cells.push_back({i, j});
    if (static_cast<int>(grid[i].size()) <= j) grid[i].resize(j + 1, -1);
    grid[i][j] = static_cast<int>(k);
  }
  nlohmann::json j{{"spec", format_spec(spec)},
                   {"shift", shift},
                   {"kind", rep.kind == GridRepresentation::Kind::Uniform ? "uniform" : "non-uniform"},
                   {"a", rep.a},
                   {"b", rep.b},
                   {"b_negated", rep.b_negated},
                   {"gcd_m_S", rep.g_plus_1},
                   {"h", rep.h},
                   {"h_star", rep.h_star},
                   {"lambda", rep.lambda},
                   {"mu", rep.mu},
                   {"rho", rep.rho},
                   {"cell_of_component", cells},
                   {"grid", grid}};
  TypeResult t = classify_type(spec, spec.S.size() == 3 ? 3 : 4);
  j["type"] = t.kind == TypeResult::Kind::TypeI ? "I" : t.kind == TypeResult::Kind::TypeII ? "II" : "n/a";
  std::cout << j.dump(g.json ? -1 : 2) << "\n";
  return 0;
}

int cmd_oracle(const Globals& g, const std::string& text) {
  BicirculantSpec spec = parse_spec(text);
  OracleAnswer a = oracle_is_hamiltonian(spec, g.budget());
  const char* kind = a.kind == OracleAnswer::Kind::Yes ? "Yes" : a.kind == OracleAnswer::Kind::No ? "No" : "Inconclusive";
  nlohmann::json j{{"spec", format_spec(spec)}, {"answer", kind}};
  if (a.witness) j["witness"] = nlohmann::json::parse(witness_to_json(*a.witness));
  std::cout << j.dump(g.json ? -1 : 2) << "\n";
  return a.kind == OracleAnswer::Kind::Inconclusive ? 2 : 0;
}

int cmd_verify(const std::string& text, const std::string& witness) {
  BicirculantSpec spec = parse_spec(text);
  HamiltonWitness w = witness_from_json(read_arg(witness));
  if (auto v = check_witness(spec, w)) {
    std::cout << "Violation " << to_string(v->kind) << " at " << v->position << ": " << v->detail << "\n";
    return 1;
  }
  std::cout << "Ok\n";
  return 0;
}

int cmd_census(const Globals& g, census::CensusConfig cfg, const std::string& out) {
  cfg.budget = g.budget();
  cfg.workers = g.workers;
  cfg.seed = g.seed == 1 ? cfg.seed : g.seed;
  std::ofstream file;
  std::ostream* lines = nullptr;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::runtime_error("cannot write " + out);
    lines = &file;
  } else if (g.json) {
    lines = &std::cout;
  }
  census::CensusSummary s = census::run(cfg, lines);
  census::print_summary(s, g.json && out.empty() ? std::cerr : std::cout);
  return s.discrepancies == 0 ? 0 : 2;
}

int cmd_export(const std::string& text, const std::string& format, const std::string& out) {
  BicirculantSpec spec = parse_spec(text);
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::runtime_error("cannot write " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;
  if (format == "dot") {
    write_dot(os, spec, nullptr);
  } else {
    nlohmann::json edges_json = nlohmann::json::array();
    for (const Edge& e : edges(spec))
      edges_json.push_back({to_string(e.a), to_string(e.b), std::string(edge_class(e.kind.cls)) + ":" + std::to_string(e.kind.type)});
    os << nlohmann::json{{"spec", nlohmann::json::parse(spec_to_json(spec))}, {"edges", edges_json}}.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles in bicirculant graphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget-nodes", g.nodes, "search node limit per base search");
  app.add_option("--budget-seconds", g.seconds, "time limit per solve");
  app.add_option("--workers", g.workers, "census worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");
  app.add_flag("--json", g.json, "compact JSON output");

  std::string spec_text, dot, witness, format = "dot", out;
  std::optional<int> pa, pb;

  auto* solve = app.add_subcommand("solve", "construct a Hamilton cycle");
  solve->add_option("spec", spec_text)->required();
  solve->add_option("--emit-dot", dot, "write DOT with the witness highlighted");

  auto* params = app.add_subcommand("params", "grid representation of B(m;a,S,b)");
  params->add_option("spec", spec_text)->required();
  params->add_option("--a", pa);
  params->add_option("--b", pb);

  auto* oracle = app.add_subcommand("oracle", "exhaustive Hamiltonicity search");
  oracle->add_option("spec", spec_text)->required();

  auto* verify = app.add_subcommand("verify", "check a witness");
  verify->add_option("spec", spec_text)->required();
  verify->add_option("witness", witness, "JSON text or @file")->required();

  census::CensusConfig cfg;
  std::uint64_t sample = 0;
  bool no_check = false;
  auto* census_cmd = app.add_subcommand("census", "run the dispatcher over many specs");
  census_cmd->add_option("--m-min", cfg.m_min)->check(CLI::PositiveNumber);
  census_cmd->add_option("--m-max", cfg.m_max)->check(CLI::PositiveNumber);
  census_cmd->add_option("--max-spokes", cfg.max_spokes);
  census_cmd->add_option("--max-rt-types", cfg.max_rt_types);
  census_cmd->add_option("--sample", sample, "random sample size instead of exhaustive");
  census_cmd->add_option("--seconds-per-spec", cfg.seconds_per_spec);
  census_cmd->add_flag("--no-cross-check", no_check);
  census_cmd->add_option("--out", out, "JSON lines file");

  auto* exp = app.add_subcommand("export", "write the graph");
  exp->add_option("spec", spec_text)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"dot", "json-edges"}));
  exp->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*solve) return cmd_solve(g, spec_text, dot);
    if (*params) return cmd_params(g, spec_text, pa, pb);
    if (*oracle) return cmd_oracle(g, spec_text);
    if (*verify) return cmd_verify(spec_text, witness);
    if (*census_cmd) {
      cfg.sample = sample > 0;
      cfg.count = sample;
      cfg.cross_check = !no_check;
      // The oracle is exact up to 24 vertices; enumeration grows too fast past 20.
      if (!cfg.sample && (cfg.m_max > 20 || (cfg.cross_check && cfg.m_max > 12))) {
        std::cerr << "bicirc: exhaustive census needs m <= 12 (m <= 20 with --no-cross-check)\n";
        return 3;
      }
      return cmd_census(g, cfg, out);
    }
    if (*exp) return cmd_export(spec_text, format, out);
  } catch (const ParseError& e) {
    std::cerr << "bicirc: parse error at " << e.position << ": " << e.what() << "\n";
    return 3;
  } catch (const SpecError& e) {
    std::cerr << "bicirc: invalid spec: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionViolated& e) {
    std::cerr << "bicirc: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "bicirc: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
