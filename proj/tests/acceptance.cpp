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

// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "cmdefect/corpus.hpp"

using namespace cmdefect;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

unsigned worker_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? std::min(hw, 8u) : 2u;
}

// --- criterion 9 helpers -----------------------------------------------------

bool groebner_fully_reduces(const Ideal& I, std::string& why) {
  const auto& gb = I.groebner();
  const auto& els = gb.elements;
  const auto& field = gb.ring->field();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const Monomial lcm = els[i].leading_monomial().lcm(els[j].leading_monomial());
      Polynomial s = els[i].times_term(field.one(), lcm.quotient_by(els[i].leading_monomial())) -
                     els[j].times_term(field.one(), lcm.quotient_by(els[j].leading_monomial()));
      if (!normal_form(s, els).is_zero()) {
        why = "an S-polynomial does not reduce to zero";
        return false;
      }
    }
  for (const auto& g : gb.source_generators)
    if (!normal_form(g, els).is_zero()) {
      why = "an input generator does not reduce to zero";
      return false;
    }
  return true;
}

bool engine_sound_for(const PresentedModule& M, std::string& why) {
  const std::size_t m = M.ring()->var_count();
  try {
    verify_resolution(free_resolution_minimal(M), m);
  } catch (const std::exception& e) {
    why = std::string("resolution: ") + e.what();
    return false;
  }
  if (M.is_cyclic()) {
    Ideal J = M.cyclic_ideal();
    if (!groebner_fully_reduces(J, why)) return false;
    const long combinatorial = krull_dimension_ideal(J);
    const long pole = hilbert_series(M).pole_order();
    if (combinatorial != pole) {
      std::ostringstream os;
      os << "hilbert pole order " << pole << " != combinatorial dimension " << combinatorial;
      why = os.str();
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const auto t_start = std::chrono::steady_clock::now();
  const unsigned threads = worker_threads();

  // ---- criterion 1: prescribed-defect grid ---------------------------------
  {
    bool ok = true;
    std::string detail;
    int instances = 0;
    for (unsigned d = 0; d <= 2 && ok; ++d)
      for (unsigned r = 1; r <= 3 && ok; ++r) {
        if (d + r + 1 > 6) continue;
        ++instances;
        auto A = example_with_defect(d, r);
        const bool good = module_dimension(A) == ExtendedInt::of(static_cast<long>(r + d)) &&
                          module_depth_graded(A) == ExtendedInt::of(static_cast<long>(d)) &&
                          cm_defect(A) == static_cast<long>(r);
        if (!good) {
          ok = false;
          std::ostringstream os;
          os << "failed at (d,r)=(" << d << "," << r << "): dim="
             << module_dimension(A).to_string() << " depth=" << module_depth_graded(A).to_string()
             << " cmd=" << cm_defect(A);
          detail = os.str();
        }
      }
    if (ok) detail = std::to_string(instances) + " rings: dim=r+d, depth=d, cmd=r exactly";
    report(1, ok, "prescribed-defect family grid", detail);
  }

  // ---- criterion 2: the depth-jump example ---------------------------------
  {
    auto A = example_depth_jump();
    MonomialPrime xz;
    xz.vars = {0, 2};
    auto top = local_profile_at_prime(A, MonomialPrime::full(3));
    auto at_xz = local_profile_at_prime(A, xz);
    auto gr = grade_of_ideal_on_module(xz.to_ideal(A.ring()), A);
    const bool ok = module_dimension(A) == ExtendedInt::of(2) &&
                    module_depth_graded(A) == ExtendedInt::of(0) &&
                    top.depth_local == ExtendedInt::of(0) &&
                    at_xz.depth_local == ExtendedInt::of(1) &&
                    at_xz.depth_local > ExtendedInt::of(0) && gr == ExtendedInt::of(0) &&
                    gr < at_xz.depth_local;
    std::ostringstream os;
    os << "dim=" << module_dimension(A).to_string() << ", depth=0 at the irrelevant ideal, depth("
       << at_xz.prime_label << ")=" << at_xz.depth_local.to_string() << " > grade = "
       << gr.to_string();
    report(2, ok, "depth jumps under localization (strict grade inequality)", os.str());
  }

  // ---- shared corpus for criteria 3-9 ---------------------------------------
  CorpusSpec spec;
  spec.seed = 20260808;
  spec.variable_count = 5;
  spec.max_degree = 4;
  spec.generator_count = 6;
  spec.instance_count = 200;

  std::vector<PresentedModule> modules;
  modules.reserve(spec.instance_count);
  for (unsigned i = 0; i < spec.instance_count; ++i)
    modules.push_back(random_monomial_module(spec, i));

  // statements (a)-(h) over all 200 instances; the grade statement (i) over
  // the first 100
  std::vector<PresentedModule> first_half(modules.begin(), modules.begin() + 100);
  std::vector<PresentedModule> second_half(modules.begin() + 100, modules.end());
  VerifyBounds with_grade{8, 7, true};
  VerifyBounds without_grade{8, 7, false};
  auto reports_a = verify_statements_on(first_half, with_grade, threads);
  auto reports_b = verify_statements_on(second_half, without_grade, threads);
  std::vector<VerificationReport> reports(9);
  for (int s = 0; s < 9; ++s) {
    reports[s] = reports_a[s];
    reports[s].instances_checked += reports_b[s].instances_checked;
    for (const auto& c : reports_b[s].counterexamples) reports[s].counterexamples.push_back(c);
  }

  auto statement_detail = [&](std::initializer_list<int> ids) {
    unsigned long bad = 0;
    unsigned long inst = 0;
    for (int s : ids) {
      bad += reports[s].counterexamples.size();
      inst = std::max(inst, reports[s].instances_checked);
    }
    std::ostringstream os;
    os << inst << " modules, " << bad << " counterexamples";
    for (int s : ids)
      if (!reports[s].counterexamples.empty())
        os << "; first: " << reports[s].counterexamples.front();
    return os.str();
  };
  auto statements_pass = [&](std::initializer_list<int> ids) {
    for (int s : ids)
      if (!reports[s].passed()) return false;
    return true;
  };

  report(3, statements_pass({0}), "cmd(M) <= l iff (C_n^l) holds for every n",
         statement_detail({0}));
  report(4, statements_pass({1}),
         "(C_n^l) iff cmd(M_p) <= l whenever depth(M_p) <= n-l-1",
         statement_detail({1}));
  report(5, statements_pass({2, 3}),
         "monotonicity lattice and (S_n^l) => (C_n^l)",
         statement_detail({2, 3}));
  report(6, statements_pass({8}), "grade-based vs depth-based condition verdicts agree",
         statement_detail({8}));

  // ---- criterion 7: dual profile paths and the Schenzel gate ---------------
  {
    bool ok = true;
    std::string detail;
    unsigned long profile_checks = 0, schenzel_checks = 0;
    for (const auto& M : modules) {
      const auto& t1 = monomial_profiles(M);
      for (const auto& p : t1) {
        auto t2 = profile_via_ext_pattern(M, *p.prime);
        ++profile_checks;
        if (p.in_support != t2.in_support || !(p.height == t2.height) ||
            !(p.dim_local == t2.dim_local) || !(p.depth_local == t2.depth_local) ||
            p.cmd_local != t2.cmd_local) {
          ok = false;
          detail = M.label() + ": profile paths disagree at " + p.prime_label;
          break;
        }
      }
      if (!ok) break;
      const long dim = M.is_zero() ? 0 : module_dimension(M).value();
      for (long k = 0; k <= dim + 2; ++k) {
        ++schenzel_checks;
        const bool exhaustive =
            check_condition(M, PropertyQuery::serre(k)).answer == Answer::yes;
        if (schenzel_serre_test(M, k) != exhaustive) {
          ok = false;
          detail = M.label() + ": Schenzel (S_" + std::to_string(k) + ") disagrees";
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) {
      std::ostringstream os;
      os << profile_checks << " profile comparisons, " << schenzel_checks
         << " Schenzel gates, all consistent";
      detail = os.str();
    }
    report(7, ok, "localization path vs Ext-pattern path; Schenzel gate", detail);
  }

  report(8, statements_pass({5, 6, 7}),
         "regular-element, deformation, and variable-adjunction laws",
         statement_detail({5, 6, 7}));

  // ---- criterion 9: engine soundness ----------------------------------------
  {
    bool ok = true;
    std::string detail;
    unsigned long checked = 0;
    std::vector<PresentedModule> sweep = modules;
    for (unsigned d = 0; d <= 2; ++d)
      for (unsigned r = 1; r <= 3; ++r)
        if (d + r + 1 <= 6) sweep.push_back(example_with_defect(d, r));
    sweep.push_back(example_depth_jump());
    for (const auto& M : sweep) {
      std::string why;
      ++checked;
      if (!engine_sound_for(M, why)) {
        ok = false;
        detail = M.label() + ": " + why;
        break;
      }
    }
    if (ok)
      detail = std::to_string(checked) +
               " modules: S-polynomials reduce, resolutions compose to zero and are minimal, "
               "Hilbert pole order = combinatorial dimension";
    report(9, ok, "Groebner, resolution, and Hilbert-series soundness", detail);
  }

  const auto t_end = std::chrono::steady_clock::now();
  std::printf("acceptance total: %.1fs, %d failure(s)\n",
              std::chrono::duration<double>(t_end - t_start).count(), g_failures);
  return g_failures;
}
