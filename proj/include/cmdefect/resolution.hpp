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

#include <map>

#include "cmdefect/presented.hpp"

namespace cmdefect {

/// Graded free resolution F_0 <- F_1 <- ... ; maps[i] is phi_{i+1}: F_{i+1} -> F_i.
/// Maps with rank-zero source are never stored, so length() == pd for nonzero
/// modules. Minimal means no map has a unit entry.
struct Resolution {
  std::vector<GradedFreeModule> modules;
  std::vector<ModuleMap> maps;
  bool minimal = true;

  std::size_t length() const { return maps.size(); }
};

struct BettiTable {
  // (homological index i, internal degree j) -> count
  std::map<std::pair<long, long>, unsigned long> entries;

  unsigned long total(long i) const;
  unsigned long at(long i, long j) const;
};

/// Hilbert series numerator over (1-t)^denominator_power. Generator degrees
/// can be negative (duals), so the numerator is a Laurent polynomial in t.
struct HilbertSeries {
  std::map<long, mpz_class> numerator;
  long denominator_power = 0;

  bool numerator_is_zero() const;
  /// Order of the pole at t = 1; kMinusInfinity when the numerator vanishes.
  long pole_order() const;
  /// Cancels all (1-t) factors shared with the denominator.
  HilbertSeries reduced() const;
  std::string to_string() const;
};

/// Splits off trivial summands: repeatedly pivots on unit entries and deletes
/// the corresponding generator/relation pair. The cokernel is unchanged.
ModuleMap minimalize_presentation(ModuleMap phi);

/// Prunes the columns to a minimal generating set of the image (graded greedy
/// by degree). The image, and hence the cokernel, is unchanged.
ModuleMap prune_columns(const ModuleMap& phi);

/// Generators of ker(phi), via a module Groebner basis of the graph module
/// with the Schreyer order on the lifted slots. The returned map psi satisfies
/// phi ∘ psi = 0 and im(psi) = ker(phi).
ModuleMap syzygy_module(const ModuleMap& phi);

/// Minimal graded free resolution by iterated syzygies, pruning each step to
/// minimal generators. Cached on the module.
const Resolution& free_resolution_minimal(const PresentedModule& M);

BettiTable betti_table(const PresentedModule& M);

/// Length of the minimal resolution; kMinusInfinity for the zero module.
long projective_dimension(const PresentedModule& M);

HilbertSeries hilbert_series(const PresentedModule& M);

/// Checks composition-to-zero, minimality, and the length bound; throws with
/// a description on violation.
void verify_resolution(const Resolution& res, std::size_t var_count);

}  // namespace cmdefect
