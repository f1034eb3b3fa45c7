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

#include "cmdefect/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cmdefect/parser.hpp"

namespace cmdefect {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.is_zero()) continue;  // zero generators contribute nothing
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::from_strings(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  ps.reserve(gens.size());
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
  return Ideal(ring, std::move(ps));
}

bool Ideal::is_monomial() const {
  for (const auto& g : gens_)
    if (!g.is_single_term()) return false;
  return true;
}

const GroebnerBasis& Ideal::groebner() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->gb) return *cache_->gb;
  }
  GroebnerBasis gb = buchberger_reduced(*this);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = std::move(gb);
  return *cache_->gb;
}

DivisionResult divide_with_remainder(const Polynomial& f,
                                     const std::vector<Polynomial>& divisors) {
  const RingPtr& R = f.ring();
  const auto& field = R->field();
  for (const auto& g : divisors) {
    require_same_ring(R, g.ring());
    if (g.is_zero()) throw std::invalid_argument("division by a zero polynomial");
  }

  std::vector<std::vector<Term>> qterms(divisors.size());
  std::vector<Term> rterms;
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term lt = work.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& g = divisors[i];
      if (!g.leading_monomial().divides(lt.mono)) continue;
      const Monomial qm = lt.mono.quotient_by(g.leading_monomial());
      const mpq_class qc = field.div(lt.coeff, g.leading_coeff());
      qterms[i].push_back(Term{qc, qm});
      work = work - g.times_term(qc, qm);
      reduced = true;
      break;
    }
    if (!reduced) {
      rterms.push_back(lt);
      work = work - Polynomial::term(R, lt.coeff, lt.mono);
    }
  }
  DivisionResult res;
  res.quotients.reserve(divisors.size());
  for (auto& q : qterms) res.quotients.push_back(Polynomial::from_terms(R, std::move(q)));
  res.remainder = Polynomial::from_terms(R, std::move(rterms));
  return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  return divide_with_remainder(f, divisors).remainder;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const RingPtr& R = f.ring();
  const auto& field = R->field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Monomial mf = l.quotient_by(f.leading_monomial());
  const Monomial mg = l.quotient_by(g.leading_monomial());
  return f.times_term(field.invert(f.leading_coeff()), mf) -
         g.times_term(field.invert(g.leading_coeff()), mg);
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint64_t lcm_degree;
};

}  // namespace

GroebnerBasis buchberger_reduced(const Ideal& I) {
  const RingPtr& R = I.ring();
  const auto& order = R->order();

  std::vector<Polynomial> basis;
  for (const auto& g : I.generators()) basis.push_back(g.monic());

  // a pair absent from `pending` counts as already considered (chain criterion)
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<Pair> queue;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
    auto d = l.degree();
    queue.push_back(Pair{i, j, std::move(l), d});
    pending.insert({i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    // normal strategy: minimal lcm degree first, ties by index
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const auto& a = queue[k];
      const auto& b = queue[best];
      if (a.lcm_degree < b.lcm_degree ||
          (a.lcm_degree == b.lcm_degree && (a.i < b.i || (a.i == b.i && a.j < b.j))))
        best = k;
    }
    Pair p = std::move(queue[best]);
    queue.erase(queue.begin() + best);
    pending.erase({p.i, p.j});

    const Polynomial& fi = basis[p.i];
    const Polynomial& fj = basis[p.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) continue;
    // chain criterion: some g_k with lead dividing lcm(i,j) whose pairs with
    // i and j were both already considered
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    Polynomial r = normal_form(s_polynomial(fi, fj), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    const std::size_t t = basis.size() - 1;
    for (std::size_t k = 0; k < t; ++k) push_pair(k, t);
  }

  // minimalize: drop elements whose lead is divisible by another kept lead
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail-reduce each element against the others
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(others.empty() ? minimal[i] : normal_form(minimal[i], others).monic());
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_greater(a.leading_monomial(), b.leading_monomial(), order);
  });

  GroebnerBasis gb;
  gb.ring = R;
  gb.order = order;
  gb.elements = std::move(reduced);
  gb.source_generators = I.generators();
  return gb;
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  const auto& gb = I.groebner();
  if (gb.elements.empty()) return false;
  return normal_form(f, gb.elements).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  return I.groebner().elements == J.groebner().elements;
}

std::vector<Polynomial> minimalize_monomial_generators(const RingPtr& ring,
                                                       std::vector<Polynomial> gens) {
  std::vector<Monomial> monos;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_single_term()) throw std::invalid_argument("not a monomial generator");
    monos.push_back(g.leading_monomial());
  }
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monos.size() && !redundant; ++j) {
      if (i == j) continue;
      if (monos[j].divides(monos[i]) && (monos[i] != monos[j] || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(monos[i]);
  }
  std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_greater(a, b, ring->order());
  });
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (auto& m : kept) out.push_back(Polynomial::term(ring, mpq_class(1), std::move(m)));
  return out;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g);
  if (I.is_monomial() && J.is_monomial())
    gens = minimalize_monomial_generators(I.ring(), std::move(gens));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  if (I.is_monomial() && J.is_monomial())
    gens = minimalize_monomial_generators(I.ring(), std::move(gens));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned k) {
  if (k < 1) throw std::invalid_argument("ideal power requires exponent >= 1");
  Ideal acc = I;
  for (unsigned i = 1; i < k; ++i) acc = ideal_product(acc, I);
  return acc;
}

namespace {

/// Elimination of one auxiliary variable, placed first under lex so that the
/// basis elements free of it cut out the contraction.
Ideal intersection_by_elimination(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  const std::size_t m = R->var_count();

  std::string aux = "t";
  while (R->variable_index(aux)) aux += "_";
  std::vector<std::string> vars;
  vars.push_back(aux);
  for (const auto& v : R->variables()) vars.push_back(v);
  RingPtr E = make_ring(std::move(vars), R->field(), MonomialOrder{OrderKind::lex});

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<std::uint32_t> e(m + 1, 0);
      for (std::size_t i = 0; i < m; ++i) e[i + 1] = t.mono.exponent(i);
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(E, std::move(ts));
  };

  const Polynomial t = Polynomial::variable(E, 0);
  const Polynomial one_minus_t = Polynomial::constant(E, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * lift(f));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift(g));
  Ideal lifted(E, std::move(gens));

  std::vector<Polynomial> result;
  for (const auto& b : lifted.groebner().elements) {
    bool uses_aux = false;
    for (const auto& term : b.terms())
      if (term.mono.exponent(0)) { uses_aux = true; break; }
    if (uses_aux) continue;
    std::vector<Term> ts;
    for (const auto& term : b.terms()) {
      std::vector<std::uint32_t> e(m, 0);
      for (std::size_t i = 0; i < m; ++i) e[i] = term.mono.exponent(i + 1);
      ts.push_back(Term{term.coeff, Monomial(std::move(e))});
    }
    result.push_back(Polynomial::from_terms(R, std::move(ts)));
  }
  return Ideal(R, std::move(result));
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (!I.has_generators() || !J.has_generators()) return Ideal::zero(I.ring());
  if (I.is_monomial() && J.is_monomial()) {
    // purely combinatorial path: pairwise lcms, then minimalize
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
      for (const auto& g : J.generators())
        gens.push_back(Polynomial::term(I.ring(), mpq_class(1),
                                        f.leading_monomial().lcm(g.leading_monomial())));
    return Ideal(I.ring(), minimalize_monomial_generators(I.ring(), std::move(gens)));
  }
  return intersection_by_elimination(I, J);
}

Ideal ideal_combine(const Ideal& I, const Ideal& J, IdealOp op, unsigned power_exponent) {
  switch (op) {
    case IdealOp::sum: return ideal_sum(I, J);
    case IdealOp::product: return ideal_product(I, J);
    case IdealOp::power: return ideal_power(I, power_exponent);
    case IdealOp::intersection: return ideal_intersection(I, J);
  }
  throw std::logic_error("unreachable ideal op");
}

long krull_dimension_ideal(const Ideal& I) {
  const RingPtr& R = I.ring();
  const std::size_t m = R->var_count();
  if (m > 20) throw std::invalid_argument("variable count too large for subset enumeration");
  const auto& gb = I.groebner();
  if (gb.is_unit_ideal()) return kMinusInfinity;

  // supports of the initial ideal's minimal generators
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elements) {
    std::uint32_t mask = 0;
    const Monomial& lm = g.leading_monomial();
    for (std::size_t i = 0; i < m; ++i)
      if (lm.exponent(i)) mask |= (1u << i);
    supports.push_back(mask);
  }

  long best = 0;
  for (std::uint32_t u = 0; u < (1u << m); ++u) {
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~u) == 0) { independent = false; break; }  // in(I) meets k[U]
    }
    if (independent) best = std::max(best, static_cast<long>(__builtin_popcount(u)));
  }
  return best;
}

}  // namespace cmdefect
