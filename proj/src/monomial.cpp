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

#include "cmdefect/monomial.hpp"

namespace cmdefect {

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count())
    throw std::invalid_argument("monomials over different variable counts");
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  require_same_size(*this, o);
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
  require_same_size(*this, o);
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial quotient does not exist");
    r[i] = e_[i] - o.e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& o) const {
  require_same_size(*this, o);
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& o) const {
  require_same_size(*this, o);
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::min(e_[i], o.e_[i]);
  return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

Cmp monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.var_count() != b.var_count())
    throw std::invalid_argument("monomial_compare: mismatched variable counts");
  const std::size_t n = a.var_count();

  auto lex_scan = [&]() -> Cmp {
    for (std::size_t i = 0; i < n; ++i) {
      if (a.exponent(i) > b.exponent(i)) return Cmp::greater;
      if (a.exponent(i) < b.exponent(i)) return Cmp::less;
    }
    return Cmp::equal;
  };

  switch (order.kind) {
    case OrderKind::lex:
      return lex_scan();
    case OrderKind::grlex: {
      const auto da = a.degree(), db = b.degree();
      if (da != db) return da > db ? Cmp::greater : Cmp::less;
      return lex_scan();
    }
    case OrderKind::grevlex: {
      const auto da = a.degree(), db = b.degree();
      if (da != db) return da > db ? Cmp::greater : Cmp::less;
      for (std::size_t i = n; i-- > 0;) {
        if (a.exponent(i) != b.exponent(i))
          return a.exponent(i) < b.exponent(i) ? Cmp::greater : Cmp::less;
      }
      return Cmp::equal;
    }
  }
  throw std::logic_error("unreachable monomial order kind");
}

}  // namespace cmdefect
