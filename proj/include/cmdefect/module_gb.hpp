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

#include <optional>
#include <set>

#include "cmdefect/free_module.hpp"

namespace cmdefect {

/// One term of a free-module element: coefficient, monomial, component index.
struct ModTerm {
  mpq_class coeff;
  Monomial mono;
  int comp;
};

/// Free-module element as a term list kept strictly descending in the active
/// module order.
using ModVec = std::vector<ModTerm>;

/// Module term order. Components below `split` are the ambient free module,
/// compared with the configured extension of the base order; components at or
/// above `split` are syzygy bookkeeping slots, compared by the Schreyer order
/// induced by the tracked columns (image leading term first, then position).
/// Every ambient term is greater than every syzygy term.
class ModOrder {
 public:
  ModOrder(const RingPtr& ring, int split, ModuleExtension ambient_extension)
      : ring_(ring), split_(split), ambient_ext_(ambient_extension) {}

  void add_schreyer_lead(Monomial lead_mono, int lead_comp) {
    schreyer_.emplace_back(std::move(lead_mono), lead_comp);
  }

  int split() const { return split_; }
  const RingPtr& ring() const { return ring_; }

  /// -1, 0, +1 for (ma, ca) <,=,> (mb, cb).
  int cmp(const Monomial& ma, int ca, const Monomial& mb, int cb) const;

 private:
  int cmp_ambient(const Monomial& ma, int ca, const Monomial& mb, int cb) const;

  RingPtr ring_;
  int split_;
  ModuleExtension ambient_ext_;
  std::vector<std::pair<Monomial, int>> schreyer_;
};

ModVec modvec_normalize(ModVec v, const ModOrder& ord, const CoefficientField& field);
ModVec modvec_add(const ModVec& a, const ModVec& b, const ModOrder& ord,
                  const CoefficientField& field);
ModVec modvec_scale(const ModVec& a, const mpq_class& c, const Monomial& m,
                    const CoefficientField& field);
ModVec modvec_negate(const ModVec& a, const CoefficientField& field);

ModVec modvec_from_column(const std::vector<Polynomial>& column, const ModOrder& ord);
std::vector<Polynomial> modvec_to_column(const ModVec& v, const RingPtr& ring, std::size_t rank,
                                         int comp_offset = 0);

/// Buchberger for submodules of free modules, with incremental insertion.
/// Pairs are formed only between elements whose leading terms share a
/// component; the chain criterion is applied but the coprime criterion is not
/// (it is unsound for modules).
class IncrementalModuleGB {
 public:
  explicit IncrementalModuleGB(ModOrder ord);

  /// Adds v to the generating set and completes the basis. Returns false if
  /// v already lies in the module generated so far (basis unchanged).
  bool add(const ModVec& v);

  bool contains(const ModVec& v) const;
  const std::vector<ModVec>& basis() const { return basis_; }
  const ModOrder& order() const { return ord_; }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t lcm_degree;
  };

  void push_pairs_with(std::size_t j);
  void complete();

  ModOrder ord_;
  CoefficientField field_;
  std::vector<ModVec> basis_;
  std::vector<Pair> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

std::vector<ModVec> buchberger_module(std::vector<ModVec> gens, const ModOrder& ord,
                                      const CoefficientField& field);

/// Full normal form against a basis (deterministic first-divisor rule).
ModVec modvec_normal_form(ModVec v, const std::vector<ModVec>& basis, const ModOrder& ord,
                          const CoefficientField& field);

/// Groebner data for the graph module F ⊕ R^s built on the columns of a map,
/// supporting image membership, lifting, and syzygy extraction with one GB.
class ModuleGraphGB {
 public:
  explicit ModuleGraphGB(const ModuleMap& phi);

  const ModuleMap& map() const { return phi_; }

  /// Is v (an element of the target F) in the image of the map?
  bool in_image(const std::vector<Polynomial>& v) const;

  /// Coefficients w with phi * w = v, if v lies in the image.
  std::optional<std::vector<Polynomial>> lift(const std::vector<Polynomial>& v) const;

  /// Generators of the syzygy module of the columns (kernel of the map),
  /// as coefficient columns of length source.rank.
  std::vector<std::vector<Polynomial>> syzygy_columns() const;

 private:
  ModuleMap phi_;
  ModOrder order_;
  std::vector<int> graph_comp_;  // original column -> graph slot (-1 for zero columns)
  std::vector<std::size_t> zero_columns_;
  std::vector<ModVec> basis_;
};

}  // namespace cmdefect
