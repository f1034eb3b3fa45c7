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
#include <string>
#include <vector>

#include "cmdefect/ring.hpp"

namespace cmdefect {

struct Term {
  mpq_class coeff;
  Monomial mono;
};

/// Exact multivariate polynomial in canonical form: terms strictly descending
/// in the ring's monomial order, no zero coefficients, empty term list iff
/// the polynomial is zero. Values are immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }
  static Polynomial constant(RingPtr ring, const mpq_class& c);
  static Polynomial constant(RingPtr ring, long c) { return constant(ring, mpq_class(c)); }
  static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1);
  static Polynomial term(RingPtr ring, const mpq_class& c, Monomial m);
  /// Sorts, merges duplicates, and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const mpq_class& leading_coeff() const { return leading_term().coeff; }

  std::uint64_t total_degree() const;  // degree of the leading term's grading; 0 for zero poly
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Degree if homogeneous; nullopt for the zero polynomial or mixed degrees.
  std::optional<std::uint64_t> homogeneous_degree() const;
  bool is_single_term() const { return terms_.size() == 1; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const mpq_class& c) const;
  Polynomial times_term(const mpq_class& c, const Monomial& m) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class RingOp { add, sub, mul };

/// Spec-level entry point; the operators above are the idiomatic surface.
Polynomial ring_arithmetic(const Polynomial& f, const Polynomial& g, RingOp op);

}  // namespace cmdefect
