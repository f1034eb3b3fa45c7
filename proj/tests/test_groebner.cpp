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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cmdefect/ideal.hpp"
#include "cmdefect/resolution.hpp"
#include "cmdefect/parser.hpp"
#include "test_util.hpp"

using namespace cmdefect;
using testutil::Rng;

namespace {

RingPtr ring3(OrderKind k = OrderKind::grevlex) {
  return make_ring({"x", "y", "z"}, CoefficientField::rationals(), MonomialOrder{k});
}

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<std::string> ss(gens.begin(), gens.end());
  return Ideal::from_strings(R, ss);
}

// Division oracle: re-expand the combination and check the remainder
// divisibility condition, independently of how the division ran.
void check_division_contract(const Polynomial& f, const std::vector<Polynomial>& divisors,
                             const DivisionResult& d) {
  Polynomial sum = d.remainder;
  REQUIRE(d.quotients.size() == divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) sum = sum + d.quotients[i] * divisors[i];
  CHECK(sum == f);
  for (const auto& t : d.remainder.terms())
    for (const auto& g : divisors) CHECK_FALSE(g.leading_monomial().divides(t.mono));
}

// Groebner oracle: every S-polynomial reduces to zero against the basis and
// every original generator reduces to zero.
void check_groebner_contract(const GroebnerBasis& gb) {
  const auto& els = gb.elements;
  const auto& field = gb.ring->field();
  for (std::size_t i = 0; i < els.size(); ++i) {
    CHECK(els[i].leading_coeff() == 1);
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const Monomial l = els[i].leading_monomial().lcm(els[j].leading_monomial());
      Polynomial s = els[i].times_term(field.one(), l.quotient_by(els[i].leading_monomial())) -
                     els[j].times_term(field.one(), l.quotient_by(els[j].leading_monomial()));
      CHECK(normal_form(s, els).is_zero());
    }
  }
  for (const auto& g : gb.source_generators) CHECK(normal_form(g, els).is_zero());
  // reduced: leads pairwise indivisible, tails reduced
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      CHECK_FALSE(els[j].leading_monomial().divides(els[i].leading_monomial()));
      for (const auto& t : els[i].terms())
        CHECK_FALSE(els[j].leading_monomial().divides(t.mono));
    }
}

}  // namespace

TEST_CASE("divide_with_remainder: basics") {
  auto R = ring3();
  auto x = parse_polynomial("x", R);
  auto d1 = divide_with_remainder(parse_polynomial("x^2", R), {x});
  CHECK(d1.remainder.is_zero());
  CHECK(d1.quotients[0] == x);

  auto d2 = divide_with_remainder(parse_polynomial("y", R), {x});
  CHECK(d2.quotients[0].is_zero());
  CHECK(d2.remainder == parse_polynomial("y", R));

  CHECK_THROWS_AS(divide_with_remainder(x, {Polynomial::zero(R)}), std::invalid_argument);
}

TEST_CASE("divide_with_remainder: lex example with oracle") {
  auto R = make_ring({"x", "y"}, CoefficientField::rationals(), MonomialOrder{OrderKind::lex});
  auto f = parse_polynomial("x^2*y + x*y^2 + y^2", R);
  std::vector<Polynomial> divisors{parse_polynomial("x*y - 1", R),
                                   parse_polynomial("y^2 - 1", R)};
  auto d = divide_with_remainder(f, divisors);
  CHECK(d.remainder == parse_polynomial("x + y + 1", R));
  check_division_contract(f, divisors, d);
}

TEST_CASE("divide_with_remainder contract on random inputs") {
  auto R = ring3();
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    auto f = testutil::random_polynomial(rng, R, 6, 4);
    std::vector<Polynomial> divisors;
    for (int j = 0; j < 3; ++j) {
      auto g = testutil::random_polynomial(rng, R, 3, 3);
      if (!g.is_zero()) divisors.push_back(g);
    }
    if (divisors.empty()) continue;
    check_division_contract(f, divisors, divide_with_remainder(f, divisors));
  }
}

TEST_CASE("buchberger_reduced: monomial and principal ideals") {
  auto R = ring3();
  auto I = ideal_of(R, {"x^2*y", "x*y", "y^3"});
  auto gb = I.groebner();
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0] == parse_polynomial("y^3", R));  // degree 3 sorts first under grevlex
  CHECK(gb.elements[1] == parse_polynomial("x*y", R));

  auto P = ideal_of(R, {"x^2 - y"});
  CHECK(P.groebner().elements.size() == 1);
  CHECK(P.groebner().elements[0] == parse_polynomial("x^2 - y", R));
}

TEST_CASE("buchberger_reduced: twisted cubic under lex") {
  auto R = ring3(OrderKind::lex);
  auto I = ideal_of(R, {"x^2 - y", "x^3 - z"});
  auto gb = I.groebner();
  check_groebner_contract(gb);
  std::vector<Polynomial> expect{
      parse_polynomial("x^2 - y", R), parse_polynomial("x*y - z", R),
      parse_polynomial("x*z - y^2", R), parse_polynomial("y^3 - z^2", R)};
  std::sort(expect.begin(), expect.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_greater(a.leading_monomial(), b.leading_monomial(), R->order());
  });
  CHECK(gb.elements == expect);
}

TEST_CASE("reduced basis is unique under generator shuffles") {
  auto R = ring3();
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 4; ++j) {
      auto g = testutil::random_polynomial(rng, R, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto base = Ideal(R, gens).groebner().elements;
    for (int s = 0; s < 3; ++s) {
      std::vector<Polynomial> shuffled = gens;
      for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
      CHECK(Ideal(R, shuffled).groebner().elements == base);
    }
  }
}

TEST_CASE("groebner contract holds on random ideals") {
  auto R = ring3();
  Rng rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 3; ++j) {
      auto g = testutil::random_polynomial(rng, R, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    check_groebner_contract(Ideal(R, gens).groebner());
  }
}

TEST_CASE("ideal_membership") {
  auto R = ring3();
  CHECK(ideal_membership(parse_polynomial("x^2*y", R), ideal_of(R, {"x"})));
  CHECK(ideal_membership(parse_polynomial("1", R), ideal_of(R, {"x", "x - 1"})));
  auto lexR = ring3(OrderKind::lex);
  CHECK(ideal_membership(parse_polynomial("y^3 - z^2", lexR),
                         ideal_of(lexR, {"x^2 - y", "x^3 - z"})));
  CHECK_FALSE(ideal_membership(parse_polynomial("x", R), ideal_of(R, {"x^2"})));
  CHECK_FALSE(ideal_membership(parse_polynomial("x", R), Ideal::zero(R)));
}

TEST_CASE("ideal_combine: power, sum identity, intersection") {
  auto R = ring3();
  auto sq = ideal_power(ideal_of(R, {"x", "y"}), 2);
  CHECK(ideal_equal(sq, ideal_of(R, {"x^2", "x*y", "y^2"})));

  auto I = ideal_of(R, {"x*y", "z^2"});
  CHECK(ideal_equal(ideal_sum(I, Ideal::zero(R)), I));

  // the motivating intersection: (z) ∩ (x,y,z)^2 = (xz, yz, z^2)
  auto zI = ideal_of(R, {"z"});
  auto m2 = ideal_power(ideal_of(R, {"x", "y", "z"}), 2);
  auto expect = ideal_of(R, {"x*z", "y*z", "z^2"});
  CHECK(ideal_equal(ideal_intersection(zI, m2), expect));
}

TEST_CASE("intersection: combinatorial and elimination paths agree") {
  auto R = ring3();
  Rng rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> a, b;
    for (int j = 0; j < 2; ++j) {
      auto ma = testutil::random_monomial(rng, 3, 3);
      auto mb = testutil::random_monomial(rng, 3, 3);
      if (!ma.is_one()) a.push_back(Polynomial::term(R, mpq_class(1), ma));
      if (!mb.is_one()) b.push_back(Polynomial::term(R, mpq_class(1), mb));
    }
    if (a.empty() || b.empty()) continue;
    Ideal I(R, a), J(R, b);
    auto fast = ideal_intersection(I, J);
    // Adding a redundant non-monomial generator keeps the ideal but routes
    // the computation through the elimination path.
    std::vector<Polynomial> a2 = a;
    a2.push_back(a[0] * parse_polynomial("x + y", R));
    auto slow = ideal_intersection(Ideal(R, a2), J);
    CHECK(ideal_equal(slow, fast));
  }
}

TEST_CASE("intersection membership law on samples") {
  auto R = ring3();
  auto I = ideal_of(R, {"x*y", "z^2"});
  auto J = ideal_of(R, {"y", "x*z"});
  auto meet = ideal_intersection(I, J);
  Rng rng(53);
  for (int i = 0; i < 30; ++i) {
    auto f = testutil::random_polynomial(rng, R, 4, 4);
    CHECK((ideal_membership(f, meet)) == (ideal_membership(f, I) && ideal_membership(f, J)));
  }
  // and over random members built from both sides
  for (int i = 0; i < 20; ++i) {
    auto cf = testutil::random_polynomial(rng, R, 2, 2);
    auto f = meet.has_generators() ? meet.generators()[rng.below(meet.generators().size())] * cf
                                   : Polynomial::zero(R);
    CHECK(ideal_membership(f, I));
    CHECK(ideal_membership(f, J));
  }
}

TEST_CASE("krull_dimension_ideal") {
  auto R = ring3();
  CHECK(krull_dimension_ideal(Ideal::zero(R)) == 3);
  CHECK(krull_dimension_ideal(ideal_of(R, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension_ideal(ideal_of(R, {"x*y", "x*z"})) == 2);
  CHECK(krull_dimension_ideal(ideal_of(R, {"1"})) == kMinusInfinity);
  CHECK(krull_dimension_ideal(ideal_of(R, {"x", "x - 1"})) == kMinusInfinity);

  // independent-set oracle on random monomial ideals
  Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 4; ++j) {
      auto m = testutil::random_monomial(rng, 3, 3);
      if (!m.is_one()) gens.push_back(Polynomial::term(R, mpq_class(1), m));
    }
    if (gens.empty()) continue;
    Ideal I(R, gens);
    long expect = 0;
    for (unsigned u = 0; u < 8; ++u) {
      bool ok = true;
      for (const auto& g : gens) {
        bool inside = true;
        for (int v = 0; v < 3; ++v)
          if (g.leading_monomial().exponent(v) && !(u & (1u << v))) inside = false;
        if (inside) ok = false;
      }
      if (ok) expect = std::max(expect, static_cast<long>(__builtin_popcount(u)));
    }
    CHECK(krull_dimension_ideal(I) == expect);
  }
}

TEST_CASE("dimension cross-check: independent sets vs hilbert pole order") {
  auto R4 = make_ring({"a", "b", "c", "d"}, CoefficientField::rationals(), {});
  Rng rng(73);
  int checked = 0;
  while (checked < 100) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 4; ++j) {
      auto m = testutil::random_monomial(rng, 4, 4);
      if (!m.is_one()) gens.push_back(Polynomial::term(R4, mpq_class(1), m));
    }
    if (gens.empty()) continue;
    ++checked;
    Ideal I(R4, gens);
    auto M = PresentedModule::cyclic(I);
    CHECK(krull_dimension_ideal(I) == hilbert_series(M).pole_order());
  }
}

TEST_CASE("twisted cubic basis over a prime field") {
  auto R = make_ring({"x", "y", "z"}, CoefficientField::prime_field(7),
                     MonomialOrder{OrderKind::lex});
  auto I = Ideal::from_strings(R, {"x^2 - y", "x^3 - z"});
  check_groebner_contract(I.groebner());
  CHECK(I.groebner().elements.size() == 4);
  CHECK(ideal_membership(parse_polynomial("y^3 - z^2", R), I));
}

TEST_CASE("ideal_power rejects exponent zero") {
  auto R = make_ring({"x"}, CoefficientField::rationals(), {});
  CHECK_THROWS_AS(ideal_power(Ideal::from_strings(R, {"x"}), 0), std::invalid_argument);
}
