/*
   Copyright 2026 cmdefect contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <string_view>

#include "cmdefect/polynomial.hpp"

namespace cmdefect {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Parses `term (('+'|'-') term)*` with integer coefficients, `*`, `^`,
/// parentheses, and implicit multiplication by juxtaposition. Whitespace is
/// insignificant. The result is in canonical sorted form.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace cmdefect
