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
#include <string>

#include <gmpxx.h>

namespace cmdefect {

enum class FieldKind { rationals, prime_field };

/// Exact coefficient arithmetic over Q or F_p.
///
/// Rationals are arbitrary-precision and always stored reduced (GMP keeps
/// mpq_class canonical). Elements of F_p are stored as the least non-negative
/// residue, held in the integer part of an mpq_class so one coefficient type
/// serves both fields. There is no floating point anywhere.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(FieldKind::rationals, 0); }
  static CoefficientField prime_field(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return characteristic_; }

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }
  mpq_class from_long(long v) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const { return canonical(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return canonical(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return canonical(a * b); }
  mpq_class neg(const mpq_class& a) const { return canonical(-a); }
  mpq_class div(const mpq_class& a, const mpq_class& b) const;
  mpq_class invert(const mpq_class& a) const;

  /// Reduces a raw value into canonical field form (mod-p residue for F_p).
  mpq_class canonical(const mpq_class& a) const;

  std::string to_string(const mpq_class& a) const { return a.get_str(); }

  bool operator==(const CoefficientField& o) const {
    return kind_ == o.kind_ && characteristic_ == o.characteristic_;
  }
  bool operator!=(const CoefficientField& o) const { return !(*this == o); }

 private:
  CoefficientField(FieldKind k, std::uint32_t p) : kind_(k), characteristic_(p) {}

  FieldKind kind_;
  std::uint32_t characteristic_;
};

}  // namespace cmdefect
