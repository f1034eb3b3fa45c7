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

#include "cmdefect/free_module.hpp"

namespace cmdefect {

ModuleMap::ModuleMap(GradedFreeModule source, GradedFreeModule target,
                     std::vector<std::vector<Polynomial>> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  require_same_ring(source_.ring, target_.ring);
  if (entries_.size() != target_.rank())
    throw std::invalid_argument("module map: row count must equal target rank");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != source_.rank())
      throw std::invalid_argument("module map: column count must equal source rank");
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      const Polynomial& p = entries_[i][j];
      if (p.is_zero()) continue;
      require_same_ring(p.ring(), target_.ring);
      auto d = p.homogeneous_degree();
      const long want = source_.degrees[j] - target_.degrees[i];
      if (!d || static_cast<long>(*d) != want)
        throw std::invalid_argument("module map entry is not homogeneous of the required degree");
    }
  }
}

ModuleMap ModuleMap::zero_map(GradedFreeModule source, GradedFreeModule target) {
  std::vector<std::vector<Polynomial>> rows(
      target.rank(), std::vector<Polynomial>(source.rank(), Polynomial::zero(target.ring)));
  return ModuleMap(std::move(source), std::move(target), std::move(rows));
}

ModuleMap ModuleMap::cyclic_presentation(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens) {
  std::vector<long> src_degs;
  std::vector<Polynomial> row;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = g.homogeneous_degree();
    if (!d) throw std::invalid_argument("cyclic presentation requires homogeneous generators");
    src_degs.push_back(static_cast<long>(*d));
    row.push_back(g);
  }
  GradedFreeModule target = GradedFreeModule::free_of_rank(ring, 1);
  GradedFreeModule source(ring, std::move(src_degs));
  return ModuleMap(std::move(source), std::move(target), {std::move(row)});
}

std::vector<Polynomial> ModuleMap::column(std::size_t j) const {
  std::vector<Polynomial> col;
  col.reserve(target_.rank());
  for (std::size_t i = 0; i < target_.rank(); ++i) col.push_back(entries_[i][j]);
  return col;
}

bool ModuleMap::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < target_.rank(); ++i)
    if (!entries_[i][j].is_zero()) return false;
  return true;
}

bool ModuleMap::is_zero_map() const {
  for (std::size_t j = 0; j < source_.rank(); ++j)
    if (!column_is_zero(j)) return false;
  return true;
}

bool ModuleMap::has_unit_entry() const {
  for (const auto& row : entries_)
    for (const auto& p : row)
      if (is_unit_entry(p)) return true;
  return false;
}

bool ModuleMap::entries_single_term() const {
  for (const auto& row : entries_)
    for (const auto& p : row)
      if (p.term_count() > 1) return false;
  return true;
}

ModuleMap ModuleMap::transpose() const {
  std::vector<std::vector<Polynomial>> rows(
      source_.rank(), std::vector<Polynomial>(target_.rank(), Polynomial::zero(ring())));
  for (std::size_t i = 0; i < target_.rank(); ++i)
    for (std::size_t j = 0; j < source_.rank(); ++j) rows[j][i] = entries_[i][j];
  return ModuleMap(target_.dual(), source_.dual(), std::move(rows));
}

ModuleMap ModuleMap::compose(const ModuleMap& other) const {
  if (source_.rank() != other.target_.rank())
    throw std::invalid_argument("module map composition rank mismatch");
  std::vector<std::vector<Polynomial>> rows(
      target_.rank(), std::vector<Polynomial>(other.source_.rank(), Polynomial::zero(ring())));
  for (std::size_t i = 0; i < target_.rank(); ++i)
    for (std::size_t j = 0; j < other.source_.rank(); ++j) {
      Polynomial acc = Polynomial::zero(ring());
      for (std::size_t k = 0; k < source_.rank(); ++k)
        acc = acc + entries_[i][k] * other.entries_[k][j];
      rows[i][j] = acc;
    }
  return ModuleMap(other.source_, target_, std::move(rows));
}

}  // namespace cmdefect
