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

#include <cstdint>
#include <vector>

#include "cmdefect/polynomial.hpp"

namespace cmdefect::testutil {

// splitmix64; fixed constants so expected values frozen in tests never move.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  long int_in(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }
};

inline Monomial random_monomial(Rng& rng, std::size_t vars, std::uint32_t max_deg) {
  std::vector<std::uint32_t> e(vars, 0);
  const auto d = rng.below(max_deg + 1);
  for (std::uint64_t i = 0; i < d; ++i) e[rng.below(vars)]++;
  return Monomial(std::move(e));
}

inline Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::size_t max_terms,
                                    std::uint32_t max_deg, long coeff_bound = 9) {
  std::vector<Term> terms;
  const auto n = rng.below(max_terms + 1);
  for (std::uint64_t i = 0; i < n; ++i) {
    long c = rng.int_in(-coeff_bound, coeff_bound);
    terms.push_back(Term{mpq_class(c), random_monomial(rng, ring->var_count(), max_deg)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace cmdefect::testutil
