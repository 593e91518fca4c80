// Copyright 2026 The nltool Authors.
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


#include "nltool/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <sstream>
#include <vector>

namespace nltool {

namespace {

class AnfParser {
 public:
  AnfParser(std::string_view text, int n) : text_(text), n_(n) {}

  F2Polynomial parse() {
    F2Polynomial poly(n_);
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty ANF expression", pos_);
    poly.toggle(term());
    skip_space();
    while (pos_ < text_.size()) {
      expect('+');
      poly.toggle(term());
      skip_space();
    }
    return poly;
  }

 private:
  std::size_t term() {
    std::size_t mask = factor();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      mask |= factor();
      skip_space();
    }
    return mask;
  }

  std::size_t factor() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("expected a term", pos_);
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return 0;
    }
    if (c != 'x') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    const std::size_t start = pos_++;
    int index = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_++] - '0');
      if (index > kMaxVars + 1) break;
      ++digits;
    }
    if (digits == 0) throw ParseError("variable without index", start);
    if (index < 1 || index > n_) throw ParseError("unknown variable x" + std::to_string(index), start);
    return std::size_t{1} << (index - 1);
  }

  void expect(char c) {
    if (text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::size_t hex_digits(int n) { return (table_size(n) + 3) / 4; }

std::string monomial_text(std::size_t mask, char var, int first_index) {
  std::string out;
  for (std::size_t rest = mask; rest; rest &= rest - 1) {
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(std::countr_zero(rest) + first_index);
  }
  return out;
}

std::vector<std::size_t> deglex_descending(std::size_t count) {
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
    const int da = std::popcount(a);
    const int db = std::popcount(b);
    return da != db ? da > db : a > b;
  });
  return order;
}

}  // namespace

BooleanFunction parse_anf(std::string_view text, int n) {
  if (n < 1 || n > kMaxVars) throw ParseError("variable count out of range", 0);
  return function_of(AnfParser(text, n).parse());
}

BooleanFunction parse_tt_hex(std::string_view text, int n) {
  if (n < 1 || n > kMaxVars) throw ParseError("variable count out of range", 0);
  const std::size_t digits = hex_digits(n);
  if (text.size() != digits)
    throw ParseError("expected " + std::to_string(digits) + " hex digits, got " + std::to_string(text.size()), 0);
  BitVector table(table_size(n));
  for (std::size_t i = 0; i < digits; ++i) {
    const char c = text[digits - 1 - i];
    const int v = hex_value(c);
    if (v < 0) throw ParseError(std::string("invalid hex digit '") + c + "'", digits - 1 - i);
    for (std::size_t b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const std::size_t bit = 4 * i + b;
      if (bit >= table.size()) throw ParseError("truth table value exceeds 2^n bits", digits - 1 - i);
      table.set(bit);
    }
  }
  return {n, std::move(table)};
}

std::string format_tt_hex(const BooleanFunction& f) {
  const std::size_t digits = hex_digits(f.num_vars());
  std::string out(digits, '0');
  static constexpr char kHex[] = "0123456789abcdef";
  for (std::size_t i = 0; i < digits; ++i) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t bit = 4 * i + b;
      if (bit < f.size() && f[bit]) v |= 1 << b;
    }
    out[digits - 1 - i] = kHex[v];
  }
  return out;
}

BooleanFunction parse_function_spec(std::string_view spec, int n) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("function spec needs a tt:, anf: or random: prefix", 0);
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  try {
    if (kind == "tt") return parse_tt_hex(body, n);
    if (kind == "anf") return parse_anf(body, n);
  } catch (const ParseError& e) {
    throw ParseError(std::string(kind) + ": " + e.what(), colon + 1 + e.position());
  }
  if (kind == "random") {
    std::uint64_t seed = 0;
    if (body.empty()) throw ParseError("random: missing seed", colon + 1);
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(body[i]))) throw ParseError("random: seed must be decimal", colon + 1 + i);
      seed = seed * 10 + static_cast<std::uint64_t>(body[i] - '0');
    }
    if (n < 1 || n > kMaxVars) throw ParseError("variable count out of range", 0);
    std::mt19937_64 rng(seed);
    return BooleanFunction::random(n, rng);
  }
  throw ParseError("unknown function spec kind '" + std::string(kind) + "'", 0);
}

std::string format_anf(const F2Polynomial& p, char var) {
  std::string out;
  for (std::size_t mask : deglex_descending(p.coeffs().size())) {
    if (!p.coeff(mask)) continue;
    if (!out.empty()) out += " + ";
    out += mask == 0 ? "1" : monomial_text(mask, var, 1);
  }
  return out.empty() ? "0" : out;
}

std::string format_polynomial(const IntPolynomial& p, char var, int first_index) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t mask : deglex_descending(static_cast<std::size_t>(p.coeffs.size()))) {
    const std::int64_t c = p.coeff(mask);
    if (c == 0) continue;
    const std::uint64_t magnitude = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mask == 0)
      out << magnitude;
    else if (magnitude == 1)
      out << monomial_text(mask, var, first_index);
    else
      out << magnitude << '*' << monomial_text(mask, var, first_index);
  }
  return first ? "0" : out.str();
}

nlohmann::json polynomial_to_json(const IntPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t mask : deglex_descending(static_cast<std::size_t>(p.coeffs.size()))) {
    const std::int64_t c = p.coeff(mask);
    if (c == 0) continue;
    std::vector<int> vars;
    for (std::size_t rest = mask; rest; rest &= rest - 1) vars.push_back(std::countr_zero(rest));
    terms.push_back({{"coeff", c}, {"vars", vars}});
  }
  return {{"num_vars", p.num_vars}, {"terms", terms}, {"text", format_polynomial(p)}};
}

}  // namespace nltool
