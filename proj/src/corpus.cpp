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

#include "cmdefect/corpus.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace cmdefect {

namespace {

// splitmix64; fixed constants keep the corpus bit-reproducible everywhere
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace

void CorpusSpec::validate() const {
  if (variable_count < 2 || variable_count > 6)
    throw std::invalid_argument("corpus variable_count must be in 2..6");
  if (max_degree < 1 || max_degree > 5)
    throw std::invalid_argument("corpus max_degree must be in 1..5");
  if (generator_count < 1 || generator_count > 8)
    throw std::invalid_argument("corpus generator_count must be in 1..8");
}

PresentedModule example_with_defect(unsigned d, unsigned r) {
  if (r < 1) throw std::invalid_argument("example_with_defect requires r >= 1");
  if (d + r + 1 > 8) throw std::invalid_argument("example_with_defect: size cap d + r + 1 <= 8");
  std::vector<std::string> names;
  for (unsigned i = 0; i <= r; ++i) names.push_back("X" + std::to_string(i));
  for (unsigned i = 1; i <= d; ++i) names.push_back("T" + std::to_string(i));
  RingPtr S = make_ring(std::move(names), CoefficientField::rationals(), {});

  std::vector<Polynomial> x0{Polynomial::variable(S, 0)};
  std::vector<Polynomial> xs;
  for (unsigned i = 0; i <= r; ++i) xs.push_back(Polynomial::variable(S, i));
  Ideal I = ideal_intersection(Ideal(S, x0), ideal_power(Ideal(S, xs), r + 1));
  std::ostringstream label;
  label << "A(d=" << d << ",r=" << r << ")";
  return PresentedModule::cyclic(I, label.str());
}

PresentedModule example_depth_jump() {
  RingPtr R = make_ring({"X", "Y", "Z"}, CoefficientField::rationals(), {});
  Ideal zI(R, {Polynomial::variable(R, 2)});
  std::vector<Polynomial> all{Polynomial::variable(R, 0), Polynomial::variable(R, 1),
                              Polynomial::variable(R, 2)};
  Ideal I = ideal_intersection(zI, ideal_power(Ideal(R, all), 2));
  return PresentedModule::cyclic(I, "A");
}

PresentedModule random_monomial_module(const CorpusSpec& spec, unsigned index) {
  spec.validate();
  if (index >= spec.instance_count)
    throw std::invalid_argument("corpus index out of range");
  std::vector<std::string> names;
  for (unsigned v = 1; v <= spec.variable_count; ++v) names.push_back("x" + std::to_string(v));
  RingPtr R = make_ring(std::move(names), CoefficientField::rationals(), {});

  SplitMix64 rng{spec.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))};
  const unsigned m = spec.variable_count;
  const unsigned count = 1 + static_cast<unsigned>(rng.below(spec.generator_count));
  std::vector<Polynomial> gens;
  for (unsigned g = 0; g < count; ++g) {
    const unsigned deg = 1 + static_cast<unsigned>(rng.below(spec.max_degree));
    std::vector<std::uint32_t> e(m, 0);
    for (unsigned k = 0; k < deg; ++k) e[rng.below(m)]++;
    gens.push_back(Polynomial::term(R, mpq_class(1), Monomial(std::move(e))));
  }
  gens = minimalize_monomial_generators(R, std::move(gens));
  std::ostringstream label;
  label << "corpus(seed=" << spec.seed << ",i=" << index << ")";
  return PresentedModule::cyclic(Ideal(R, std::move(gens)), label.str());
}

std::string fresh_variable_name(const RingPtr& ring) {
  std::string name = "t";
  while (ring->variable_index(name)) name += "_";
  return name;
}

namespace {

struct StatementSink {
  VerificationReport* reports;  // array of 9
  std::string label;

  void fail(int statement, const std::string& detail) {
    reports[statement].counterexamples.push_back(label + ": " + detail);
  }
};

bool cnl_yes(const PresentedModule& M, long n, long l) {
  return check_condition(M, PropertyQuery::c_of_level(n, l)).answer == Answer::yes;
}

/// All nine statement checks for one instance. Bounds are clipped per
/// instance at n <= dim + 2 and l <= dim + 1 (larger values are redundant).
void verify_instance(const PresentedModule& M, const VerifyBounds& bounds, StatementSink sink) {
  const RingPtr& R = M.ring();
  const long dim = M.is_zero() ? 0 : module_dimension(M).value();
  const long ncap = std::min(bounds.n_max, dim + 2);
  const long lcap = std::min(bounds.l_max, dim + 1);
  const long g = cm_defect(M);
  const auto& profiles = monomial_profiles(M);

  // (a) cmd(M) <= l iff (C_n^l) for every n
  for (long l = 0; l <= lcap; ++l) {
    bool all_n = true;
    for (long n = 0; n <= ncap && all_n; ++n) all_n = cnl_yes(M, n, l);
    if ((g <= l) != all_n) {
      std::ostringstream os;
      os << "cmd=" << g << " vs all-(C_n^" << l << ")=" << (all_n ? "yes" : "no");
      sink.fail(0, os.str());
    }
  }

  // (b) (C_n^l) iff cmd <= l at every prime with depth <= n - l - 1
  for (long n = 0; n <= ncap; ++n)
    for (long l = 0; l <= lcap; ++l) {
      const bool lhs = cnl_yes(M, n, l);
      bool rhs = true;
      for (const auto& p : profiles) {
        if (!p.in_support) continue;
        if (p.depth_local <= ExtendedInt::of(n - l - 1) && p.cmd_local > l) rhs = false;
      }
      if (lhs != rhs) {
        std::ostringstream os;
        os << "(C_" << n << "^" << l << ")=" << (lhs ? "yes" : "no")
           << " but depth-bounded criterion says " << (rhs ? "yes" : "no");
        sink.fail(1, os.str());
      }
    }

  // (c) monotonicity: yes(n,l) implies yes(n-1,l) and yes(n,l+1)
  for (long n = 0; n <= ncap; ++n)
    for (long l = 0; l <= lcap; ++l) {
      if (!cnl_yes(M, n, l)) continue;
      if (n >= 1 && !cnl_yes(M, n - 1, l)) {
        std::ostringstream os;
        os << "(C_" << n << "^" << l << ") holds but (C_" << n - 1 << "^" << l << ") fails";
        sink.fail(2, os.str());
      }
      if (!cnl_yes(M, n, l + 1)) {
        std::ostringstream os;
        os << "(C_" << n << "^" << l << ") holds but (C_" << n << "^" << l + 1 << ") fails";
        sink.fail(2, os.str());
      }
    }

  // (d) (S_n^l) implies (C_n^l); and (S_n^l) = (S_{n-l}) for n >= l
  for (long n = 0; n <= ncap; ++n)
    for (long l = 0; l <= lcap; ++l) {
      const bool snl = check_condition(M, PropertyQuery::s_of_level(n, l)).answer == Answer::yes;
      if (snl && !cnl_yes(M, n, l)) {
        std::ostringstream os;
        os << "(S_" << n << "^" << l << ") holds but (C_" << n << "^" << l << ") fails";
        sink.fail(3, os.str());
      }
      if (n >= l) {
        const bool sk =
            check_condition(M, PropertyQuery::serre(n - l)).answer == Answer::yes;
        if (snl != sk) {
          std::ostringstream os;
          os << "(S_" << n << "^" << l << ") != (S_" << n - l << ")";
          sink.fail(3, os.str());
        }
      }
    }

  // (e) CM iff all (S_n); (S_n) iff CM below depth n
  {
    bool all_sn = true;
    for (long n = 0; n <= ncap; ++n) {
      const bool sn = check_condition(M, PropertyQuery::serre(n)).answer == Answer::yes;
      all_sn = all_sn && sn;
      bool rhs = true;
      for (const auto& p : profiles) {
        if (!p.in_support) continue;
        if (p.depth_local < ExtendedInt::of(n) && p.cmd_local != 0) rhs = false;
      }
      if (sn != rhs) {
        std::ostringstream os;
        os << "(S_" << n << ")=" << (sn ? "yes" : "no") << " but CM-below-depth-" << n
           << " says " << (rhs ? "yes" : "no");
        sink.fail(4, os.str());
      }
    }
    if ((g == 0) != all_sn) {
      std::ostringstream os;
      os << "cmd=" << g << " vs all-(S_n)=" << (all_sn ? "yes" : "no");
      sink.fail(4, os.str());
    }
  }

  // Regular elements: a fresh adjoined variable always works; variable
  // differences are used when the engine verifies them.
  const std::string fresh = fresh_variable_name(R);
  PresentedModule Mt = adjoin_variable(M, fresh);
  const std::size_t fresh_idx = Mt.ring()->var_count() - 1;

  // (f) regular elements: cmd preserved; (C_n^l) => quotient
  // (C_{n-1}^l). With x the fresh variable, M_t/xM_t = M.
  {
    if (cm_defect(Mt) != cm_defect(M)) {
      std::ostringstream os;
      os << "cmd(M[" << fresh << "])=" << cm_defect(Mt) << " != cmd(M)=" << g;
      sink.fail(5, os.str());
    }
    for (long n = 1; n <= ncap; ++n)
      for (long l = 0; l <= lcap; ++l)
        if (cnl_yes(Mt, n, l) && !cnl_yes(M, n - 1, l)) {
          std::ostringstream os;
          os << "M[" << fresh << "] has (C_" << n << "^" << l << ") but the quotient lacks (C_"
             << n - 1 << "^" << l << ")";
          sink.fail(5, os.str());
        }
  }

  // difference of variables, when regular
  std::optional<std::pair<std::size_t, std::size_t>> diff;
  if (!M.is_zero()) {
    const std::size_t m = R->var_count();
    for (std::size_t i = 0; i < m && !diff; ++i)
      for (std::size_t j = i + 1; j < m && !diff; ++j) {
        Polynomial x = Polynomial::variable(R, i) - Polynomial::variable(R, j);
        if (is_regular_element(x, M)) diff = {i, j};
      }
  }
  if (diff) {
    PresentedModule Mq = quotient_by_variable_difference(M, diff->first, diff->second);
    if (cm_defect(Mq) != g) {
      std::ostringstream os;
      os << "cmd(M/x)=" << cm_defect(Mq) << " != cmd(M)=" << g << " for x = "
         << R->variable_name(diff->first) << "-" << R->variable_name(diff->second);
      sink.fail(5, os.str());
    }
    for (long n = 1; n <= ncap; ++n)
      for (long l = 0; l <= lcap; ++l)
        if (cnl_yes(M, n, l) && !cnl_yes(Mq, n - 1, l)) {
          std::ostringstream os;
          os << "M has (C_" << n << "^" << l << ") but M/x lacks (C_" << n - 1 << "^" << l
             << ")";
          sink.fail(5, os.str());
        }
    // (g) deformation, difference route: quotient (C_n^l) => module (C_n^l)
    for (long n = 0; n <= ncap; ++n)
      for (long l = 0; l <= lcap; ++l)
        if (cnl_yes(Mq, n, l) && !cnl_yes(M, n, l)) {
          std::ostringstream os;
          os << "M/x has (C_" << n << "^" << l << ") but M does not";
          sink.fail(6, os.str());
        }
  }

  // (g) deformation, fresh-variable route: M = M_t/(t) has (C_n^l) => M_t has it.
  // The graded stand-in for the Jacobson radical is the irrelevant ideal.
  for (long n = 0; n <= ncap; ++n)
    for (long l = 0; l <= lcap; ++l)
      if (cnl_yes(M, n, l) && !cnl_yes(Mt, n, l)) {
        std::ostringstream os;
        os << "M has (C_" << n << "^" << l << ") but M[" << fresh << "] does not";
        sink.fail(6, os.str());
      }

  // (h) variable adjunction preserves the defect (polynomial-variable
  // analogue of the power-series statement, recorded as such)
  if (cm_defect(Mt) != g) {
    std::ostringstream os;
    os << "cmd(M[" << fresh << "])=" << cm_defect(Mt) << " != cmd(M)=" << g;
    sink.fail(7, os.str());
  }
  (void)fresh_idx;

  // (i) grade criterion: (C_n^l) iff gr(p, M) >= min(n, dim M_p) - l at every
  // in-support monomial prime
  if (bounds.grade_statement) {
    std::vector<std::pair<const LocalProfile*, ExtendedInt>> grades;
    for (const auto& p : profiles) {
      if (!p.in_support) continue;
      grades.emplace_back(&p, grade_of_ideal_on_module(p.prime->to_ideal(R), M));
    }
    for (long n = 0; n <= ncap; ++n)
      for (long l = 0; l <= lcap; ++l) {
        const bool lhs = cnl_yes(M, n, l);
        bool rhs = true;
        for (const auto& [p, gr] : grades) {
          ExtendedInt bound = min(ExtendedInt::of(n), p->dim_local).minus(l);
          if (!(gr >= bound)) rhs = false;
        }
        if (lhs != rhs) {
          std::ostringstream os;
          os << "(C_" << n << "^" << l << ")=" << (lhs ? "yes" : "no")
             << " but the grade criterion says " << (rhs ? "yes" : "no");
          sink.fail(8, os.str());
        }
      }
  }
}

}  // namespace

std::vector<VerificationReport> verify_statements_on(const std::vector<PresentedModule>& modules,
                                                     const VerifyBounds& bounds,
                                                     unsigned threads) {
  static const std::pair<const char*, const char*> kStatements[9] = {
      {"thm_cmd_iff_all_cnl", "cmd(M) <= l iff M has (C_n^l) for all n"},
      {"prop_depth_bounded_cnl", "(C_n^l) iff cmd(M_p) <= l whenever depth(M_p) <= n-l-1"},
      {"rem_cnl_monotonicity", "(C_n^l) implies (C_{n-1}^l) and (C_n^{l+1})"},
      {"cor_snl_implies_cnl", "(S_n^l) implies (C_n^l); (S_n^l) = (S_{n-l}) for n >= l"},
      {"rem_sn_vs_cm", "CM iff all (S_n); (S_n) iff CM at primes of depth < n"},
      {"prop_regular_element", "x regular: cmd preserved; (C_n^l) passes to M/xM as (C_{n-1}^l)"},
      {"prop_deformation",
       "M/xM has (C_n^l) => M has it, for x regular in the irrelevant maximal ideal (the "
       "graded stand-in for the Jacobson radical)"},
      {"prop_variable_adjunction",
       "cmd(M[t]) = cmd(M): polynomial-variable analogue standing in for the power-series "
       "statement, labeled as such"},
      {"thm_grade_criterion", "(C_n^l) iff gr(p, M) >= min(n, dim M_p) - l on the support"},
  };

  std::vector<std::array<VerificationReport, 9>> per_instance(modules.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    while (true) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= modules.size()) break;
      auto& reports = per_instance[idx];
      for (int s = 0; s < 9; ++s) {
        reports[s].statement_id = kStatements[s].first;
        reports[s].description = kStatements[s].second;
        reports[s].instances_checked = (s == 8 && !bounds.grade_statement) ? 0 : 1;
      }
      StatementSink sink{reports.data(),
                         modules[idx].label().empty() ? ("instance " + std::to_string(idx))
                                                      : modules[idx].label()};
      verify_instance(modules[idx], bounds, sink);
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<VerificationReport> merged(9);
  for (int s = 0; s < 9; ++s) {
    merged[s].statement_id = kStatements[s].first;
    merged[s].description = kStatements[s].second;
  }
  for (const auto& inst : per_instance)
    for (int s = 0; s < 9; ++s) {
      merged[s].instances_checked += inst[s].instances_checked;
      for (const auto& c : inst[s].counterexamples) merged[s].counterexamples.push_back(c);
    }
  return merged;
}

std::vector<VerificationReport> verify_corpus_statements(const CorpusSpec& spec,
                                                        const VerifyBounds& bounds,
                                                        unsigned threads) {
  spec.validate();
  std::vector<PresentedModule> modules;
  modules.reserve(spec.instance_count);
  for (unsigned i = 0; i < spec.instance_count; ++i)
    modules.push_back(random_monomial_module(spec, i));
  return verify_statements_on(modules, bounds, threads);
}

}  // namespace cmdefect
