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


#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "nltool/boolean_function.hpp"
#include "nltool/nl_poly.hpp"
#include "nltool/polynomial.hpp"

namespace nltool {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an ANF expression such as "x1*x2 + x3 + 1". Terms are joined by
/// '+', a term is '1' or x<k> factors joined by '*', whitespace is ignored.
/// Repeated terms cancel over F2.
BooleanFunction parse_anf(std::string_view text, int n);

/// Truth table as ceil(2^n / 4) hex digits of one integer, most significant
/// digit first; bit i of that integer is f(op_{i+1}).
BooleanFunction parse_tt_hex(std::string_view text, int n);
std::string format_tt_hex(const BooleanFunction& f);

/// Input selector used by the command line: "tt:<hex>", "anf:<expr>" or
/// "random:<seed>".
BooleanFunction parse_function_spec(std::string_view spec, int n);

std::string format_anf(const F2Polynomial& p, char var = 'x');

/// Terms in deglex descending order with explicit signs, variables named
/// <var><index> with indices starting at `first_index`.
std::string format_polynomial(const IntPolynomial& p, char var = 'a', int first_index = 0);

nlohmann::json polynomial_to_json(const IntPolynomial& p);

}  // namespace nltool
