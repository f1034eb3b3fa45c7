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

#include "cmdefect/serre.hpp"

namespace cmdefect {

/// Deterministic generator spec for the random monomial corpus; generation is
/// a pure function of (spec, index).
struct CorpusSpec {
  std::uint64_t seed = 42;
  unsigned variable_count = 4;   // 2..6
  unsigned max_degree = 4;       // 1..5
  unsigned generator_count = 5;  // 1..8
  unsigned instance_count = 100;

  void validate() const;
};

struct VerificationReport {
  std::string statement_id;
  std::string description;
  unsigned long instances_checked = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

struct VerifyBounds {
  long n_max = 6;
  long l_max = 5;
  bool grade_statement = true;  // the grade-criterion sweep is the costly one
};

/// Cyclic module with prescribed invariants dim = r + d, depth = d, cmd = r:
/// S/I for S = k[X_0..X_r] (plus T_1..T_d when d > 0) and
/// I = (X_0) ∩ (X_0,...,X_r)^(r+1). Requires d + r + 1 <= 8.
PresentedModule example_with_defect(unsigned d, unsigned r);

/// k[X,Y,Z]/((Z) ∩ (X,Y,Z)^2): the classical module whose depth rises from 0
/// to 1 after localizing at (X,Z). The intersection is computed, not
/// hard-coded.
PresentedModule example_depth_jump();

/// Deterministic random cyclic monomial module R/J with a minimal generating
/// set, never the unit ideal.
PresentedModule random_monomial_module(const CorpusSpec& spec, unsigned index);

/// Runs the nine statement checks over explicit modules. Instances are
/// verified independently (optionally in parallel) and reduced in order, so
/// reports are identical for any thread count.
std::vector<VerificationReport> verify_statements_on(const std::vector<PresentedModule>& modules,
                                                     const VerifyBounds& bounds,
                                                     unsigned threads = 1);

/// Generates the corpus from the spec and runs the statement checks.
std::vector<VerificationReport> verify_corpus_statements(const CorpusSpec& spec,
                                                        const VerifyBounds& bounds,
                                                        unsigned threads = 1);

/// A variable name not used by the ring ("t", "t_", ...).
std::string fresh_variable_name(const RingPtr& ring);

}  // namespace cmdefect
