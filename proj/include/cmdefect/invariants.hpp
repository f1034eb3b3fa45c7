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

#include "cmdefect/resolution.hpp"

namespace cmdefect {

/// Integer extended by the two sentinels needed by the homological
/// conventions: depth of the zero module is +inf, dim and pd of the zero
/// module are -inf.
class ExtendedInt {
 public:
  ExtendedInt() : kind_(Kind::finite), v_(0) {}
  static ExtendedInt of(long v) { return ExtendedInt(Kind::finite, v); }
  static ExtendedInt plus_infinity() { return ExtendedInt(Kind::plus_inf, 0); }
  static ExtendedInt minus_infinity() { return ExtendedInt(Kind::minus_inf, 0); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_plus_infinity() const { return kind_ == Kind::plus_inf; }
  bool is_minus_infinity() const { return kind_ == Kind::minus_inf; }
  long value() const {
    if (!is_finite()) throw std::logic_error("value() on infinite ExtendedInt");
    return v_;
  }

  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.v_ == b.v_);
  }
  friend bool operator!=(const ExtendedInt& a, const ExtendedInt& b) { return !(a == b); }
  friend bool operator<(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.kind_ == Kind::minus_inf) return b.kind_ != Kind::minus_inf;
    if (a.kind_ == Kind::plus_inf) return false;
    if (b.kind_ == Kind::plus_inf) return true;
    if (b.kind_ == Kind::minus_inf) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtendedInt& a, const ExtendedInt& b) { return a < b || a == b; }
  friend bool operator>(const ExtendedInt& a, const ExtendedInt& b) { return b < a; }
  friend bool operator>=(const ExtendedInt& a, const ExtendedInt& b) { return b <= a; }

  friend ExtendedInt min(const ExtendedInt& a, const ExtendedInt& b) { return a < b ? a : b; }
  friend ExtendedInt max(const ExtendedInt& a, const ExtendedInt& b) { return a < b ? b : a; }

  /// a - c for finite shifts; infinities absorb.
  ExtendedInt minus(long c) const {
    return is_finite() ? ExtendedInt::of(v_ - c) : *this;
  }

  std::string to_string() const {
    if (is_plus_infinity()) return "+inf";
    if (is_minus_infinity()) return "-inf";
    return std::to_string(v_);
  }

 private:
  enum class Kind { finite, plus_inf, minus_inf };
  ExtendedInt(Kind k, long v) : kind_(k), v_(v) {}
  Kind kind_;
  long v_;
};

/// Prime ideal generated by a subset of the variables; the complete test set
/// for modules with finely graded presentations.
struct MonomialPrime {
  std::vector<std::size_t> vars;  // ascending

  static MonomialPrime from_mask(std::uint32_t mask, std::size_t var_count);
  static MonomialPrime full(std::size_t var_count);  // the irrelevant maximal ideal

  std::uint32_t mask() const;
  std::size_t height() const { return vars.size(); }
  bool contains_var(std::size_t v) const;

  Ideal to_ideal(const RingPtr& ring) const;
  std::string to_string(const RingPtr& ring) const;  // "(X,Z)"; "(0)" when empty

  bool operator==(const MonomialPrime& o) const { return vars == o.vars; }
};

/// All 2^m monomial primes, subsets by size then lexicographic on the index
/// lists.
std::vector<MonomialPrime> all_monomial_primes(std::size_t var_count);

struct LocalProfile {
  std::string prime_label;
  std::optional<MonomialPrime> prime;  // set when the prime is monomial
  ExtendedInt height;
  ExtendedInt dim_local;
  ExtendedInt depth_local;
  long cmd_local = 0;
  bool in_support = false;
};

/// Z^m multidegrees certifying that a presentation is finely graded: every
/// entry is a single term and column/row multidegrees are consistent.
struct FineGrading {
  std::vector<std::vector<long>> row_multidegree;
  std::vector<std::vector<long>> col_multidegree;
};

std::optional<FineGrading> compute_fine_grading(const ModuleMap& phi);

/// Monomial module: the presentation admits a fine Z^m grading (cyclic R/J
/// with J monomial is the model case). The flag is cached on the module.
bool is_monomial_module(const PresentedModule& M);

/// For each i = 0..m and each monomial prime, whether Ext^i(M,R) localizes to
/// a nonzero module; only defined for monomial modules.
struct ExtSupportTable {
  std::size_t var_count = 0;
  std::vector<std::vector<bool>> nonzero;  // [i][mask]

  bool any_at(std::uint32_t mask) const;
  long min_index(std::uint32_t mask) const;  // -1 when empty
  long max_index(std::uint32_t mask) const;
};

// --- numerical invariants -------------------------------------------------

/// 0th Fitting ideal (maximal minors of the presentation). Same radical as
/// the annihilator, so it carries the support.
Ideal fitting_support_ideal(const PresentedModule& M);

/// Krull dimension; -inf for the zero module.
ExtendedInt module_dimension(const PresentedModule& M);

/// Depth at the irrelevant maximal ideal via Auslander-Buchsbaum
/// (depth = m - pd); +inf for the zero module.
ExtendedInt module_depth_graded(const PresentedModule& M);

/// Cohen-Macaulay defect dim - depth at the irrelevant maximal ideal; zero
/// for the zero module. For graded modules this equals the supremum of the
/// local defects.
long cm_defect(const PresentedModule& M);

/// Ext^i(M, target) presented as a cokernel (homology of the target-dualized
/// resolution, re-presented via syzygy lifting).
PresentedModule ext_module(const PresentedModule& M, long i, const PresentedModule& target);

/// Cached Ext^i(M, R).
const PresentedModule& ext_against_ring(const PresentedModule& M, long i);

/// Length of a maximal M-sequence inside I: min { i : Ext^i(R/I, M) != 0 },
/// +inf when all vanish. I must be proper.
ExtendedInt grade_of_ideal_on_module(const Ideal& I, const PresentedModule& M);

/// Substitutes 1 for every variable outside S and minimalizes generators;
/// the result lives over k[x_i : i in S] and carries the graded shadow of the
/// localization at p_S. Requires a monomial module.
PresentedModule localize_at_monomial_prime(const PresentedModule& M, const MonomialPrime& S);

/// Profile of M at a monomial prime (localization path for monomial modules,
/// Ext-pattern path otherwise).
LocalProfile local_profile_at_prime(const PresentedModule& M, const MonomialPrime& S);

/// Profile at a user-supplied prime ideal (primality is the caller's
/// contract; only properness is checked). Support is read off the localized
/// Ext pattern via matrix ranks modulo p.
LocalProfile local_profile_at_prime(const PresentedModule& M, const Ideal& p);

/// Multiplication by x injective on M?
bool is_regular_element(const Polynomial& x, const PresentedModule& M);

// --- cached sweeps and cross-validation paths ------------------------------

/// All 2^m localization-path profiles, cached (subsets by size then lex).
const std::vector<LocalProfile>& monomial_profiles(const PresentedModule& M);

const ExtSupportTable& ext_support_table(const PresentedModule& M);

/// Profile derived from the Ext-support pattern alone (Tier-2 path):
/// dim M_p = ht - min support index, depth M_p = ht - max support index.
LocalProfile profile_via_ext_pattern(const PresentedModule& M, const MonomialPrime& S);

// --- module surgery --------------------------------------------------------

/// M ⊗_R R[y]: same presentation matrix over the extended ring.
PresentedModule adjoin_variable(const PresentedModule& M, const std::string& var_name);

/// M/(x_i - x_j)M, realized by substituting x_j := x_i over the ring without
/// x_j; keeps monomial presentations monomial.
PresentedModule quotient_by_variable_difference(const PresentedModule& M, std::size_t i,
                                                std::size_t j);

/// M/xM over the same ring (x homogeneous of positive degree).
PresentedModule quotient_by_element(const PresentedModule& M, const Polynomial& x);

/// Rank of the matrix over the fraction field of R/p (zero tests are
/// membership in p). Exact for prime p.
std::size_t matrix_rank_mod_prime(const std::vector<std::vector<Polynomial>>& entries,
                                  const Ideal& p);

}  // namespace cmdefect
