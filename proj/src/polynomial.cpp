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

#include "cmdefect/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cmdefect {

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
  const mpq_class cc = ring->field().canonical(c);
  if (cc == 0) return zero(std::move(ring));
  Monomial one(ring->var_count());
  std::vector<Term> t;
  t.push_back(Term{cc, std::move(one)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::uint32_t power) {
  if (index >= ring->var_count()) throw std::invalid_argument("variable index out of range");
  std::vector<std::uint32_t> e(ring->var_count(), 0);
  e[index] = power;
  return term(std::move(ring), mpq_class(1), Monomial(std::move(e)));
}

Polynomial Polynomial::term(RingPtr ring, const mpq_class& c, Monomial m) {
  if (m.var_count() != ring->var_count())
    throw std::invalid_argument("term monomial has wrong variable count");
  const mpq_class cc = ring->field().canonical(c);
  if (cc == 0) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back(Term{cc, std::move(m)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.var_count() != ring->var_count())
      throw std::invalid_argument("term monomial has wrong variable count");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return monomial_greater(a.mono, b.mono, order);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else {
      mpq_class c = field.canonical(t.coeff);
      if (c != 0) out.push_back(Term{std::move(c), std::move(t.mono)});
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Cmp c = monomial_compare(terms_[i].mono, o.terms_[j].mono, order);
    if (c == Cmp::greater) {
      out.push_back(terms_[i++]);
    } else if (c == Cmp::less) {
      out.push_back(o.terms_[j++]);
    } else {
      mpq_class s = field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.push_back(Term{std::move(s), terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const auto& field = ring_ ? ring_->field() : CoefficientField::rationals();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field.neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const mpq_class& c, const Monomial& m) const {
  const auto& field = ring_->field();
  const mpq_class cc = field.canonical(c);
  if (cc == 0) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    mpq_class nc = field.mul(t.coeff, cc);
    if (nc != 0) out.push_back(Term{std::move(nc), t.mono * m});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (!ring_) throw std::logic_error("scaled() on default-constructed polynomial");
  return times_term(c, Monomial(ring_->var_count()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  // Multiply the shorter operand term-by-term into merged partial sums.
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
  Polynomial acc = zero(ring_);
  for (const auto& t : small.terms_) acc = acc + big.times_term(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().invert(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    mpq_class mag = negative ? mpq_class(-t.coeff) : t.coeff;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    bool printed = false;
    if (!unit || t.mono.is_one()) {
      os << mag.get_str();
      printed = true;
    }
    for (std::size_t v = 0; v < t.mono.var_count(); ++v) {
      const auto e = t.mono.exponent(v);
      if (!e) continue;
      if (printed) os << "*";
      os << ring_->variable_name(v);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

Polynomial ring_arithmetic(const Polynomial& f, const Polynomial& g, RingOp op) {
  switch (op) {
    case RingOp::add: return f + g;
    case RingOp::sub: return f - g;
    case RingOp::mul: return f * g;
  }
  throw std::logic_error("unreachable ring op");
}

}  // namespace cmdefect
