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

#include "cmdefect/presented.hpp"

#include "cmdefect/resolution.hpp"
#include "derived_slots.hpp"

namespace cmdefect {

PresentedModule::PresentedModule(ModuleMap presentation, std::string label)
    : presentation_(minimalize_presentation(std::move(presentation))),
      label_(std::move(label)),
      derived_(std::make_shared<DerivedSlots>()) {}

PresentedModule PresentedModule::cyclic(const Ideal& I, std::string label) {
  return PresentedModule(ModuleMap::cyclic_presentation(I.ring(), I.generators()),
                         std::move(label));
}

PresentedModule PresentedModule::zero_module(const RingPtr& ring) {
  GradedFreeModule none(ring, {});
  return PresentedModule(ModuleMap::zero_map(none, none), "0");
}

PresentedModule PresentedModule::free_module(const RingPtr& ring, std::size_t rank,
                                             std::vector<long> degrees) {
  if (degrees.empty()) degrees.assign(rank, 0);
  if (degrees.size() != rank) throw std::invalid_argument("free module degree count mismatch");
  GradedFreeModule target(ring, std::move(degrees));
  GradedFreeModule source(ring, {});
  return PresentedModule(ModuleMap::zero_map(std::move(source), std::move(target)));
}

Ideal PresentedModule::cyclic_ideal() const {
  if (!is_cyclic()) throw std::logic_error("cyclic_ideal() on a non-cyclic module");
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < presentation_.source().rank(); ++j)
    gens.push_back(presentation_.entry(0, j));
  return Ideal(ring(), std::move(gens));
}

}  // namespace cmdefect
