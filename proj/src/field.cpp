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

#include "cmdefect/field.hpp"

namespace cmdefect {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  mpz_class z(p);
  // 2^31 bound keeps this deterministic for mpz_probab_prime_p.
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace

CoefficientField CoefficientField::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("prime_field: characteristic must be a prime < 2^31");
  return CoefficientField(FieldKind::prime_field, p);
}

mpq_class CoefficientField::from_long(long v) const { return canonical(mpq_class(v)); }

mpq_class CoefficientField::canonical(const mpq_class& a) const {
  if (kind_ == FieldKind::rationals) {
    mpq_class r = a;
    r.canonicalize();
    return r;
  }
  // F_p: the denominator of any reachable value is +/-1; fold it into the
  // numerator, then take the least non-negative residue.
  mpz_class num = a.get_num() * a.get_den();
  mpz_class p(characteristic_);
  mpz_class r = num % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class CoefficientField::invert(const mpq_class& a) const {
  if (a == 0) throw std::invalid_argument("field inverse of zero");
  if (kind_ == FieldKind::rationals) return mpq_class(1) / a;
  mpz_class num = canonical(a).get_num();
  mpz_class p(characteristic_);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::invalid_argument("field inverse does not exist");
  return mpq_class(inv);
}

mpq_class CoefficientField::div(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == FieldKind::rationals) {
    if (b == 0) throw std::invalid_argument("division by zero");
    mpq_class r = a / b;
    r.canonicalize();
    return r;
  }
  return mul(a, invert(b));
}

}  // namespace cmdefect
