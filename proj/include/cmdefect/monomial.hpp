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
#include <stdexcept>
#include <vector>

namespace cmdefect {

/// Dense exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t var_count) : e_(var_count, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  std::size_t var_count() const { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e_) if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / o; requires o.divides-style componentwise bound.
  Monomial quotient_by(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

enum class OrderKind { lex, grlex, grevlex };
enum class ModuleExtension { term_over_position, position_over_term, schreyer };

/// A multiplicative total well-order on monomials plus the convention used
/// to extend it to free-module terms.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  ModuleExtension module_extension = ModuleExtension::term_over_position;

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && module_extension == o.module_extension;
  }
};

enum class Cmp { less, equal, greater };

Cmp monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

inline bool monomial_less(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
  return monomial_compare(a, b, o) == Cmp::less;
}
inline bool monomial_greater(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
  return monomial_compare(a, b, o) == Cmp::greater;
}

}  // namespace cmdefect
