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
#include <mutex>
#include <optional>

#include "cmdefect/invariants.hpp"
#include "cmdefect/resolution.hpp"

namespace cmdefect {

/// Lazily computed data attached to a PresentedModule and shared between
/// copies. Slots are single-assignment: compute outside the lock, store under
/// it, first writer wins (results are pure functions of the module).
struct DerivedSlots {
  std::mutex mu;
  std::optional<Resolution> resolution;
  std::optional<std::optional<FineGrading>> fine_grading;
  std::optional<std::vector<LocalProfile>> monomial_profiles;   // all 2^m primes
  std::optional<ExtSupportTable> ext_support;
  std::map<long, PresentedModule> ext_against_ring;             // i -> Ext^i(M, R)
};

template <typename T, typename Compute>
const T& slot_get(DerivedSlots& slots, std::optional<T>& slot, Compute compute) {
  {
    std::lock_guard<std::mutex> lock(slots.mu);
    if (slot) return *slot;
  }
  T value = compute();
  std::lock_guard<std::mutex> lock(slots.mu);
  if (!slot) slot = std::move(value);
  return *slot;
}

}  // namespace cmdefect
