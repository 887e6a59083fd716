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

#include <cctype>
#include <json.hpp>

#include "bicirc/errors.hpp"
#include "bicirc/graph_core.hpp"

namespace bicirc {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer", start);
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > (std::int64_t{1} << 40)) throw ParseError("integer too large", start);
    }
    return neg ? -v : v;
  }
  // Comma list terminated by `end`; may be empty.
  std::vector<std::int64_t> list(char end) {
    std::vector<std::int64_t> out;
    if (peek(end)) return out;
    out.push_back(integer());
    while (peek(',')) {
      ++pos_;
      out.push_back(integer());
    }
    return out;
  }
  bool done() {
    skip();
    return pos_ == s_.size();
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::int64_t> json_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::int64_t>>();
}

}  // namespace

BicirculantSpec parse_spec(std::string_view text) {
  Lexer lx(text);
  if (lx.peek('{')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON spec: ") + e.what(), e.byte);
    }
    try {
      RawSpec raw{j.at("m").get<std::int64_t>(), json_list(j, "R"), json_list(j, "S"),
                  json_list(j, "T")};
      return validate_spec(raw);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON spec: ") + e.what(), 0);
    }
  }
  lx.expect('B');
  lx.expect('(');
  RawSpec raw;
  raw.m = lx.integer();
  lx.expect(';');
  raw.R = lx.list(';');
  lx.expect(';');
  raw.S = lx.list(';');
  lx.expect(';');
  raw.T = lx.list(')');
  lx.expect(')');
  if (!lx.done()) throw ParseError("trailing characters", lx.pos());
  return validate_spec(raw);
}

std::string format_spec(const BicirculantSpec& spec) {
  auto join = [](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(xs[i]);
    }
    return out;
  };
  return "B(" + std::to_string(spec.m) + ";" + join(spec.R) + ";" + join(spec.S) + ";" +
         join(spec.T) + ")";
}

}  // namespace bicirc
