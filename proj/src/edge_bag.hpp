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

#pragma once

#include <array>
#include <string>
#include <vector>

#include "bicirc/errors.hpp"
#include "bicirc/graph_core.hpp"

namespace bicirc::detail {

// Edge set with maximum degree 2 over the 2m vertices of a bicirculant;
// constructions assemble cycles here and trace them at the end.
class EdgeBag {
 public:
  explicit EdgeBag(int m) : m_(m), adj_(2 * static_cast<std::size_t>(m), {-1, -1}) {}

  int id(const Vertex& v) const { return v.layer == Layer::Outer ? v.index : m_ + v.index; }
  Vertex vertex(int id) const { return id < m_ ? outer(id) : inner(id - m_); }

  void add(const Vertex& a, const Vertex& b) {
    int x = id(a), y = id(b);
    if (x == y) fail("loop at " + to_string(a));
    if (has(x, y)) fail("duplicate edge " + to_string(a) + "-" + to_string(b));
    put(x, y);
    put(y, x);
  }
  void remove(const Vertex& a, const Vertex& b) {
    int x = id(a), y = id(b);
    if (!has(x, y)) fail("missing edge " + to_string(a) + "-" + to_string(b));
    drop(x, y);
    drop(y, x);
  }
  bool has(const Vertex& a, const Vertex& b) const { return has(id(a), id(b)); }
  int degree(const Vertex& v) const {
    const auto& s = adj_[id(v)];
    return (s[0] >= 0) + (s[1] >= 0);
  }
  // Adds the path v0-v1-...-vk.
  void add_path(const std::vector<Vertex>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) add(p[i], p[i + 1]);
  }

  std::vector<Vertex> trace_cycle(const Vertex& start, std::size_t expected) const {
    auto seq = walk(id(start), -1);
    if (seq.size() != expected || !closes(seq) || covered() != expected)
      fail("edges do not form a single cycle of length " + std::to_string(expected) + " (walk " +
           std::to_string(seq.size()) + ", covered " + std::to_string(covered()) + ")");
    std::vector<Vertex> out;
    out.reserve(seq.size());
    for (int x : seq) out.push_back(vertex(x));
    return out;
  }

  std::vector<Vertex> trace_path(const Vertex& start, const Vertex& end, std::size_t expected) const {
    if (degree(start) != 1 || degree(end) != 1) fail("path endpoints must have degree 1");
    auto seq = walk(id(start), -1);
    if (seq.size() != expected || seq.back() != id(end) || covered() != expected)
      fail("edges do not form a single path of length " + std::to_string(expected));
    std::vector<Vertex> out;
    for (int x : seq) out.push_back(vertex(x));
    return out;
  }

  // Every covered vertex has degree 2 and the edges form exactly one cycle.
  bool single_cycle(std::size_t expected) const {
    for (const auto& s : adj_)
      if ((s[0] >= 0) != (s[1] >= 0)) return false;
    int start = -1;
    for (std::size_t i = 0; i < adj_.size(); ++i)
      if (adj_[i][0] >= 0) {
        start = static_cast<int>(i);
        break;
      }
    if (start < 0) return false;
    auto seq = walk(start, -1);
    return seq.size() == expected && closes(seq) && covered() == expected;
  }

 private:
  [[noreturn]] static void fail(const std::string& what) { throw ConstructionFailed(what); }
  bool has(int x, int y) const { return adj_[x][0] == y || adj_[x][1] == y; }
  void put(int x, int y) {
    auto& s = adj_[x];
    if (s[0] < 0)
      s[0] = y;
    else if (s[1] < 0)
      s[1] = y;
    else
      fail("degree exceeds 2 at " + to_string(vertex(x)));
  }
  void drop(int x, int y) {
    auto& s = adj_[x];
    if (s[0] == y)
      s[0] = s[1], s[1] = -1;
    else
      s[1] = -1;
  }
  std::vector<int> walk(int start, int prev) const {
    std::vector<int> seq{start};
    int cur = start;
    while (true) {
      const auto& s = adj_[cur];
      int next = (s[0] >= 0 && s[0] != prev) ? s[0] : ((s[1] >= 0 && s[1] != prev) ? s[1] : -1);
      // A 2-cycle cannot occur in a simple edge set, so prev disambiguates.
      if (next < 0 || next == start) break;
      if (seq.size() > adj_.size()) break;
      seq.push_back(next);
      prev = cur;
      cur = next;
    }
    return seq;
  }
  bool closes(const std::vector<int>& seq) const {
    return seq.size() >= 3 && has(seq.back(), seq.front());
  }
  std::size_t covered() const {
    std::size_t c = 0;
    for (const auto& s : adj_) c += s[0] >= 0;
    return c;
  }

  int m_;
  std::vector<std::array<int, 2>> adj_;
};

}  // namespace bicirc::detail
