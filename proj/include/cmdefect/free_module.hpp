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

#include <vector>

#include "cmdefect/polynomial.hpp"

namespace cmdefect {

/// Graded free module F = ⊕_k R(-d_k), recorded by the generator degrees d_k.
/// Twists follow the usual convention: twist a means the summand R(a), whose
/// generator sits in degree -a.
struct GradedFreeModule {
  RingPtr ring;
  std::vector<long> degrees;

  GradedFreeModule() = default;
  GradedFreeModule(RingPtr r, std::vector<long> degs)
      : ring(std::move(r)), degrees(std::move(degs)) {}
  static GradedFreeModule free_of_rank(RingPtr r, std::size_t rank) {
    return GradedFreeModule(std::move(r), std::vector<long>(rank, 0));
  }
  static GradedFreeModule from_twists(RingPtr r, const std::vector<long>& twists) {
    std::vector<long> d(twists.size());
    for (std::size_t i = 0; i < twists.size(); ++i) d[i] = -twists[i];
    return GradedFreeModule(std::move(r), std::move(d));
  }

  std::size_t rank() const { return degrees.size(); }
  std::vector<long> twists() const {
    std::vector<long> t(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) t[i] = -degrees[i];
    return t;
  }
  /// Dual module Hom(F, R): generator degrees are negated.
  GradedFreeModule dual() const {
    std::vector<long> d(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) d[i] = -degrees[i];
    return GradedFreeModule(ring, std::move(d));
  }
};

/// Homogeneous map of graded free modules, stored as a target.rank x
/// source.rank matrix: entry (i, j) is zero or homogeneous of degree
/// source.degrees[j] - target.degrees[i].
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(GradedFreeModule source, GradedFreeModule target,
            std::vector<std::vector<Polynomial>> entries);

  static ModuleMap zero_map(GradedFreeModule source, GradedFreeModule target);
  /// Presentation row for a cyclic quotient R/I; generators must be
  /// homogeneous.
  static ModuleMap cyclic_presentation(const RingPtr& ring, const std::vector<Polynomial>& gens);

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  const RingPtr& ring() const { return target_.ring; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Polynomial>>& entries() const { return entries_; }

  std::vector<Polynomial> column(std::size_t j) const;
  bool column_is_zero(std::size_t j) const;
  bool is_zero_map() const;
  bool has_unit_entry() const;
  /// Every entry zero or a single term (scalar times monomial)?
  bool entries_single_term() const;

  ModuleMap transpose() const;
  /// this ∘ other (other's target must equal this source).
  ModuleMap compose(const ModuleMap& other) const;

 private:
  GradedFreeModule source_, target_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// A degree-zero entry of a homogeneous map is a unit scalar.
inline bool is_unit_entry(const Polynomial& p) { return !p.is_zero() && p.is_constant(); }

}  // namespace cmdefect
