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

#include "cmdefect/invariants.hpp"

namespace cmdefect {

enum class PropertyKind { Sn, Cn, Cnl, Snl, AlmostCM, CmdLeL };

/// A condition query. The families are related by definition:
/// (S_n) = (C_n^0), (C_n) = (C_n^1), almost-CM = (cmd <= 1); (S_n^l) uses
/// min(dim, n-l) instead of min(dim, n) - l.
struct PropertyQuery {
  PropertyKind kind;
  std::optional<long> n;
  std::optional<long> l;

  static PropertyQuery serre(long n) { return {PropertyKind::Sn, n, std::nullopt}; }
  static PropertyQuery c_of(long n) { return {PropertyKind::Cn, n, std::nullopt}; }
  static PropertyQuery c_of_level(long n, long l) { return {PropertyKind::Cnl, n, l}; }
  static PropertyQuery s_of_level(long n, long l) { return {PropertyKind::Snl, n, l}; }
  static PropertyQuery almost_cm_query() {
    return {PropertyKind::AlmostCM, std::nullopt, std::nullopt};
  }
  static PropertyQuery defect_at_most(long l) { return {PropertyKind::CmdLeL, std::nullopt, l}; }

  void validate() const;
  std::string name() const;
};

enum class Answer { yes, no, unknown };

enum class YesReason { exhaustive, cmd_bound, snl_implies_cnl };

struct PropertyVerdict {
  Answer answer = Answer::unknown;
  std::optional<LocalProfile> witness;  // violating prime, for "no"
  std::optional<YesReason> chain;       // implication tag, for "yes"
  std::string note;
};

std::string answer_to_string(Answer a);
std::string yes_reason_to_string(YesReason r);

/// Does this local profile satisfy the query's depth inequality? Profiles
/// outside the support satisfy everything (depth = +inf).
bool profile_satisfies(const LocalProfile& p, const PropertyQuery& q);

/// Decides the query. Monomial modules are checked exhaustively over the
/// 2^m monomial primes and never return unknown; other modules go through
/// the sound three-valued general path.
PropertyVerdict check_condition(const PresentedModule& M, const PropertyQuery& q);

/// The general path, forced (used to cross-validate its soundness against
/// the exhaustive path on monomial inputs).
PropertyVerdict check_condition_general(const PresentedModule& M, const PropertyQuery& q);

/// cmd(M) <= 1.
bool almost_cm(const PresentedModule& M);

/// Least l with (C_n^l) = yes; equals the largest local gap
/// min(dim_p, n) - depth_p over the in-support monomial primes.
long minimal_defect_level(const PresentedModule& M, long n);

/// One profile per monomial prime, subsets by size then lexicographic.
const std::vector<LocalProfile>& exhaustive_monomial_report(const PresentedModule& M);

/// Finite certificate set for "for all p in Spec": the pairwise sums of the
/// Ext-support Fitting ideals, and (for monomial modules) the minimal
/// monomial primes over each.
struct WitnessSet {
  std::vector<Ideal> ideals;
  std::vector<MonomialPrime> minimal_primes;
  std::string justification;
};

WitnessSet witness_set(const PresentedModule& M);

/// Schenzel-style Ext test for (S_k): accepted when
/// dim Ext^i(M,R) <= m - i - k for all i > m - dim M. Used on the general
/// path as a sufficient yes-route; validated against the exhaustive path.
bool schenzel_serre_test(const PresentedModule& M, long k);

}  // namespace cmdefect
