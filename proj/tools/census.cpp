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

#include "census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <json.hpp>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "bicirc/constructions.hpp"
#include "bicirc/json_io.hpp"
#include "bicirc/verify.hpp"

namespace bicirc::census {

namespace {

// Symmetric subsets of Z_m \ {0}, one bit per class {x, -x}, 1 <= x <= m/2.
std::vector<int> symmetric_set(int m, std::uint32_t mask) {
  std::vector<int> out;
  for (int x = 1; 2 * x <= m; ++x)
    if (mask >> (x - 1) & 1) {
      out.push_back(x);
      if (2 * x != m) out.push_back(m - x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool canonical_spokes(int m, const std::vector<int>& S) {
  for (int c : S) {
    std::vector<int> t;
    for (int x : S) t.push_back(static_cast<int>(mod(x - c, m)));
    std::sort(t.begin(), t.end());
    if (t < S) return false;
  }
  return true;
}

bool admissible(const CensusConfig& cfg, const BicirculantSpec& s) {
  if (cfg.max_spokes > 0 && static_cast<int>(s.S.size()) > cfg.max_spokes) return false;
  if (cfg.max_rt_types > 0 &&
      (static_cast<int>(s.R.size()) > cfg.max_rt_types || static_cast<int>(s.T.size()) > cfg.max_rt_types))
    return false;
  return s.outer_degree() == s.inner_degree() && is_connected(s) && canonical_spokes(s.m, s.S);
}

std::string fired(const SolveReport& r) {
  for (const auto& n : r.strategy_tree)
    if (n.succeeded) return to_string(n.tag);
  return r.strategy_tree.empty() ? "none" : "unresolved";
}

}  // namespace

std::vector<BicirculantSpec> enumerate(const CensusConfig& cfg) {
  std::vector<BicirculantSpec> out;
  if (cfg.sample) {
    std::mt19937_64 rng(cfg.seed);
    std::set<std::string> seen;
    std::uint64_t guard = 0;
    while (out.size() < cfg.count && guard++ < cfg.count * 10000 + 100000) {
      const int m = std::uniform_int_distribution<int>(cfg.m_min, cfg.m_max)(rng);
      BicirculantSpec s;
      s.m = m;
      const int ks = std::uniform_int_distribution<int>(1, std::max(1, cfg.max_spokes > 0 ? cfg.max_spokes : 4))(rng);
      std::set<int> S{0};
      while (static_cast<int>(S.size()) < std::min(ks, m)) S.insert(std::uniform_int_distribution<int>(0, m - 1)(rng));
      s.S.assign(S.begin(), S.end());
      // Same number of classes {x,-x} (m/2 excluded) on both sides keeps the graph regular.
      const int classes = (m - 1) / 2;
      const int limit = cfg.max_rt_types > 0 ? cfg.max_rt_types / 2 : 2;
      const int k = std::uniform_int_distribution<int>(0, std::min(limit, classes))(rng);
      auto pick = [&] {
        std::uint32_t mask = 0;
        while (std::popcount(mask) < k) mask |= 1u << std::uniform_int_distribution<int>(0, std::min(classes, 31) - 1)(rng);
        return symmetric_set(m, mask);
      };
      s.R = pick();
      s.T = pick();
      BicirculantSpec norm = s;
      for (int x : s.S) {
        std::vector<int> t;
        for (int y : s.S) t.push_back(static_cast<int>(mod(y - x, m)));
        std::sort(t.begin(), t.end());
        if (t < norm.S) norm.S = t;
      }
      if (!admissible(cfg, norm) || !seen.insert(format_spec(norm)).second) continue;
      out.push_back(norm);
    }
    return out;
  }
  for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
    const int half = m / 2;
    const std::uint32_t sym = 1u << half;
    for (std::uint32_t smask = 0; smask < (1u << (m - 1)); ++smask) {
      std::vector<int> S{0};
      for (int x = 1; x < m; ++x)
        if (smask >> (x - 1) & 1) S.push_back(x);
      if (cfg.max_spokes > 0 && static_cast<int>(S.size()) > cfg.max_spokes) continue;
      if (!canonical_spokes(m, S)) continue;
      for (std::uint32_t r = 0; r < sym; ++r)
        for (std::uint32_t t = 0; t < sym; ++t) {
          BicirculantSpec s;
          s.m = m;
          s.S = S;
          s.R = symmetric_set(m, r);
          s.T = symmetric_set(m, t);
          if (admissible(cfg, s)) out.push_back(s);
        }
    }
  }
  return out;
}

CensusSummary run(const CensusConfig& cfg, std::ostream* lines) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<BicirculantSpec> specs = enumerate(cfg);
  CensusSummary sum;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
      const BicirculantSpec& s = specs[i];
      DispatchOptions opts;
      opts.budget = cfg.budget;
      opts.total_seconds = cfg.seconds_per_spec;
      SolveReport r = dispatch_solve(s, opts);
      Agreement ag;
      if (cfg.cross_check) {
        ag = cross_validate(s, r, cfg.budget);
      } else if (r.witness) {
        if (auto v = check_witness(s, *r.witness)) ag = {false, false, v->detail};
      }
      nlohmann::json j{{"spec", format_spec(s)},
                       {"verdict", to_string(r.verdict)},
                       {"strategy", fired(r)},
                       {"agree", ag.agree},
                       {"oracle", ag.oracle_consulted},
                       {"seconds", r.seconds}};
      if (!ag.detail.empty()) j["detail"] = ag.detail;
      if (r.exception) j["exception"] = to_string(*r.exception);
      std::lock_guard<std::mutex> lock(mu);
      ++sum.total;
      ++sum.verdicts[to_string(r.verdict)];
      ++sum.strategies[fired(r)];
      if (!ag.agree) {
        ++sum.discrepancies;
        sum.problems.push_back(format_spec(s) + ": " + ag.detail);
      }
      if (r.verdict == Verdict::NonHamiltonianException)
        sum.exceptions.push_back(format_spec(s) + " " + (r.exception ? to_string(*r.exception) : ""));
      if (lines) *lines << j.dump() << std::endl;
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, cfg.workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(sum.exceptions.begin(), sum.exceptions.end());
  std::sort(sum.problems.begin(), sum.problems.end());
  sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

void print_summary(const CensusSummary& s, std::ostream& os) {
  os << "specs: " << s.total << "  discrepancies: " << s.discrepancies << "  seconds: " << s.seconds << "\n";
  os << "verdicts:\n";
  for (const auto& [k, v] : s.verdicts) os << "  " << k << " " << v << "\n";
  os << "strategies:\n";
  for (const auto& [k, v] : s.strategies) os << "  " << k << " " << v << "\n";
  os << "exceptions (" << s.exceptions.size() << "):\n";
  for (const auto& e : s.exceptions) os << "  " << e << "\n";
  for (const auto& p : s.problems) os << "problem: " << p << "\n";
}

}  // namespace bicirc::census
