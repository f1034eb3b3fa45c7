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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmdefect/field.hpp"
#include "cmdefect/monomial.hpp"

namespace cmdefect {

/// Ambient polynomial ring k[x_1..x_m] with a fixed monomial order.
/// Standard grading throughout: every variable has degree 1.
///
/// User-declared rings have m >= 1; internal constructions (localization at
/// the generic point) may produce the zero-variable ring, which every
/// operation handles degenerately.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, CoefficientField field, MonomialOrder order);

  std::size_t var_count() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable_name(std::size_t i) const { return variables_[i]; }
  std::optional<std::size_t> variable_index(const std::string& name) const;

  const CoefficientField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  bool same_as(const PolyRing& o) const {
    return variables_ == o.variables_ && field_ == o.field_ && order_ == o.order_;
  }

 private:
  std::vector<std::string> variables_;
  CoefficientField field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> variables, CoefficientField field,
                         MonomialOrder order = MonomialOrder{}) {
  return std::make_shared<const PolyRing>(std::move(variables), field, order);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b)) throw std::invalid_argument("operands live in different rings");
}

}  // namespace cmdefect
