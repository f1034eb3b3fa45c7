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

#include "cmdefect/ring.hpp"

#include <set>

namespace cmdefect {

PolyRing::PolyRing(std::vector<std::string> variables, CoefficientField field, MonomialOrder order)
    : variables_(std::move(variables)), field_(field), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
}

std::optional<std::size_t> PolyRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

}  // namespace cmdefect
