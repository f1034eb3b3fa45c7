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

#include "cmdefect/free_module.hpp"
#include "cmdefect/ideal.hpp"

namespace cmdefect {

struct DerivedSlots;  // lazily computed resolution/profile caches (internal)

/// Finitely presented graded module M = coker(presentation). The stored
/// presentation is normalized at construction: unit entries are split off, so
/// the zero module is always represented with a rank-zero target.
class PresentedModule {
 public:
  explicit PresentedModule(ModuleMap presentation, std::string label = "");

  /// Cyclic quotient R/I (generators must be homogeneous).
  static PresentedModule cyclic(const Ideal& I, std::string label = "");
  static PresentedModule zero_module(const RingPtr& ring);
  static PresentedModule free_module(const RingPtr& ring, std::size_t rank,
                                     std::vector<long> degrees = {});

  const ModuleMap& presentation() const { return presentation_; }
  const RingPtr& ring() const { return presentation_.target().ring; }
  const std::string& label() const { return label_; }

  bool is_zero() const { return presentation_.target().rank() == 0; }
  bool is_cyclic() const { return presentation_.target().rank() == 1; }

  /// Generators of I when M = R/I was built cyclically (after normalization).
  Ideal cyclic_ideal() const;

  DerivedSlots& derived() const { return *derived_; }

 private:
  ModuleMap presentation_;
  std::string label_;
  std::shared_ptr<DerivedSlots> derived_;
};

}  // namespace cmdefect
