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

#include <limits>
#include <mutex>
#include <optional>
#include <vector>

#include "cmdefect/polynomial.hpp"

namespace cmdefect {

class Ideal;

/// Reduced Groebner basis: monic elements, leading terms pairwise indivisible,
/// no term of any element divisible by another element's leading term. Unique
/// for a given (ideal, order) and stored sorted by descending leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  MonomialOrder order;
  std::vector<Polynomial> source_generators;  // the ideal this basis came from

  bool is_unit_ideal() const {
    return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
  }
};

/// Ideal of a polynomial ring, given by generators. The reduced Groebner
/// basis is computed once on demand and shared between copies.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal from_strings(const RingPtr& ring, const std::vector<std::string>& gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_generators() const { return !gens_.empty(); }

  /// All generators single-term (so the ideal is monomial as given)?
  bool is_monomial() const;

  const GroebnerBasis& groebner() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<GroebnerBasis> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// any divisor's leading term. Deterministic: the first divisor whose leading
/// term divides is always used.
DivisionResult divide_with_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Buchberger with the normal pair-selection strategy and the coprime-lcm and
/// chain criteria; output is the reduced basis.
GroebnerBasis buchberger_reduced(const Ideal& I);

bool ideal_membership(const Polynomial& f, const Ideal& I);

bool ideal_equal(const Ideal& I, const Ideal& J);

enum class IdealOp { sum, product, power, intersection };

Ideal ideal_combine(const Ideal& I, const Ideal& J, IdealOp op, unsigned power_exponent = 1);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned k);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// Removes generators divisible by another generator (monomial ideals).
std::vector<Polynomial> minimalize_monomial_generators(const RingPtr& ring,
                                                       std::vector<Polynomial> gens);

constexpr long kMinusInfinity = std::numeric_limits<long>::min();

/// Krull dimension of R/I: the size of the largest subset U of the variables
/// with in(I) ∩ k[U] = 0; kMinusInfinity for the unit ideal.
long krull_dimension_ideal(const Ideal& I);

}  // namespace cmdefect
