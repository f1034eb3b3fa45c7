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

#include "cmdefect/invariants.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "cmdefect/module_gb.hpp"
#include "derived_slots.hpp"

namespace cmdefect {

// --- monomial primes --------------------------------------------------------

MonomialPrime MonomialPrime::from_mask(std::uint32_t mask, std::size_t var_count) {
  MonomialPrime p;
  for (std::size_t v = 0; v < var_count; ++v)
    if (mask & (1u << v)) p.vars.push_back(v);
  return p;
}

MonomialPrime MonomialPrime::full(std::size_t var_count) {
  MonomialPrime p;
  for (std::size_t v = 0; v < var_count; ++v) p.vars.push_back(v);
  return p;
}

std::uint32_t MonomialPrime::mask() const {
  std::uint32_t m = 0;
  for (auto v : vars) m |= (1u << v);
  return m;
}

bool MonomialPrime::contains_var(std::size_t v) const {
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

Ideal MonomialPrime::to_ideal(const RingPtr& ring) const {
  std::vector<Polynomial> gens;
  for (auto v : vars) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

std::string MonomialPrime::to_string(const RingPtr& ring) const {
  if (vars.empty()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k) os << ",";
    os << ring->variable_name(vars[k]);
  }
  os << ")";
  return os.str();
}

std::vector<MonomialPrime> all_monomial_primes(std::size_t var_count) {
  if (var_count > 16) throw std::invalid_argument("too many variables for a prime sweep");
  std::vector<MonomialPrime> out;
  out.reserve(1u << var_count);
  for (std::uint32_t mask = 0; mask < (1u << var_count); ++mask)
    out.push_back(MonomialPrime::from_mask(mask, var_count));
  std::sort(out.begin(), out.end(), [](const MonomialPrime& a, const MonomialPrime& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;  // lexicographic on ascending index lists
  });
  return out;
}

// --- fine grading ------------------------------------------------------------

std::optional<FineGrading> compute_fine_grading(const ModuleMap& phi) {
  const std::size_t m = phi.ring()->var_count();
  const std::size_t r = phi.target().rank();
  const std::size_t s = phi.source().rank();
  if (!phi.entries_single_term()) return std::nullopt;

  FineGrading fg;
  fg.row_multidegree.assign(r, {});
  fg.col_multidegree.assign(s, {});
  std::vector<bool> row_set(r, false), col_set(s, false);

  auto expvec = [&](const Polynomial& p) {
    std::vector<long> e(m, 0);
    for (std::size_t v = 0; v < m; ++v) e[v] = p.leading_monomial().exponent(v);
    return e;
  };
  auto addv = [&](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(m);
    for (std::size_t v = 0; v < m; ++v) c[v] = a[v] + b[v];
    return c;
  };
  auto subv = [&](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(m);
    for (std::size_t v = 0; v < m; ++v) c[v] = a[v] - b[v];
    return c;
  };

  for (std::size_t start = 0; start < r; ++start) {
    if (row_set[start]) continue;
    row_set[start] = true;
    fg.row_multidegree[start].assign(m, 0);
    std::deque<std::pair<bool, std::size_t>> queue{{true, start}};  // (is_row, index)
    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (std::size_t j = 0; j < s; ++j) {
          const Polynomial& e = phi.entry(idx, j);
          if (e.is_zero()) continue;
          auto want = addv(fg.row_multidegree[idx], expvec(e));
          if (!col_set[j]) {
            col_set[j] = true;
            fg.col_multidegree[j] = want;
            queue.push_back({false, j});
          } else if (fg.col_multidegree[j] != want) {
            return std::nullopt;
          }
        }
      } else {
        for (std::size_t i = 0; i < r; ++i) {
          const Polynomial& e = phi.entry(i, idx);
          if (e.is_zero()) continue;
          auto want = subv(fg.col_multidegree[idx], expvec(e));
          if (!row_set[i]) {
            row_set[i] = true;
            fg.row_multidegree[i] = want;
            queue.push_back({true, i});
          } else if (fg.row_multidegree[i] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  for (std::size_t j = 0; j < s; ++j)
    if (!col_set[j]) fg.col_multidegree[j].assign(m, 0);  // zero columns
  return fg;
}

namespace {

const std::optional<FineGrading>& fine_grading_of(const PresentedModule& M) {
  auto& slots = M.derived();
  return slot_get(slots, slots.fine_grading,
                  [&] { return compute_fine_grading(M.presentation()); });
}

}  // namespace

bool is_monomial_module(const PresentedModule& M) { return fine_grading_of(M).has_value(); }

// --- Fitting ideal and the basic invariants ---------------------------------

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  // row expansion memoized over used-column masks (the row index is the
  // popcount of the mask)
  std::map<std::uint64_t, Polynomial> memo;
  std::function<Polynomial(std::size_t, std::uint64_t)> go =
      [&](std::size_t row, std::uint64_t colmask) -> Polynomial {
    if (row == n) return Polynomial::constant(ring, 1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Polynomial acc = Polynomial::zero(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (colmask & (1ull << c)) continue;
      if (!a[row][c].is_zero()) {
        Polynomial termp = a[row][c] * go(row + 1, colmask | (1ull << c));
        acc = sign > 0 ? acc + termp : acc - termp;
      }
      sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
  };
  return go(0, 0);
}

}  // namespace

Ideal fitting_support_ideal(const PresentedModule& M) {
  const RingPtr& R = M.ring();
  const ModuleMap& phi = M.presentation();
  const std::size_t r0 = phi.target().rank();
  const std::size_t s = phi.source().rank();
  if (r0 == 0) return Ideal(R, {Polynomial::constant(R, 1)});  // Fitt0(0) = R
  if (s < r0) return Ideal::zero(R);
  if (r0 == 1) {
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < s; ++j) gens.push_back(phi.entry(0, j));
    return Ideal(R, std::move(gens));
  }
  // all maximal minors
  double count = 1;
  for (std::size_t k = 0; k < r0; ++k) count *= static_cast<double>(s - k) / (k + 1);
  if (count > 50000) throw std::runtime_error("fitting ideal: too many maximal minors");

  std::vector<Polynomial> minors;
  std::vector<std::size_t> pick(r0);
  for (std::size_t k = 0; k < r0; ++k) pick[k] = k;
  while (true) {
    std::vector<std::vector<Polynomial>> sub(r0, std::vector<Polynomial>());
    for (std::size_t i = 0; i < r0; ++i)
      for (auto c : pick) sub[i].push_back(phi.entry(i, c));
    Polynomial d = poly_det(sub, R);
    if (!d.is_zero()) minors.push_back(d);
    // next combination
    long k = static_cast<long>(r0) - 1;
    while (k >= 0 && pick[k] == s - r0 + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (std::size_t j = k + 1; j < r0; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Ideal(R, std::move(minors));
}

ExtendedInt module_dimension(const PresentedModule& M) {
  if (M.is_zero()) return ExtendedInt::minus_infinity();
  if (M.is_cyclic()) {
    long d = krull_dimension_ideal(M.cyclic_ideal());
    if (d == kMinusInfinity) return ExtendedInt::minus_infinity();
    return ExtendedInt::of(d);
  }
  // pole order of the Hilbert series equals dim R/Fitt0 and avoids minors
  long d = hilbert_series(M).pole_order();
  if (d == kMinusInfinity) return ExtendedInt::minus_infinity();
  return ExtendedInt::of(d);
}

ExtendedInt module_depth_graded(const PresentedModule& M) {
  if (M.is_zero()) return ExtendedInt::plus_infinity();
  const long m = static_cast<long>(M.ring()->var_count());
  return ExtendedInt::of(m - projective_dimension(M));
}

long cm_defect(const PresentedModule& M) {
  if (M.is_zero()) return 0;
  const long d = module_dimension(M).value() - module_depth_graded(M).value();
  if (d < 0) throw std::logic_error("negative Cohen-Macaulay defect");
  return d;
}

// --- Hom complex machinery ---------------------------------------------------

namespace {

struct HomLevel {
  GradedFreeModule cover;                             // G_i^* ⊗ F0
  std::vector<std::vector<Polynomial>> kernel_cols;   // generators of the kernel
  std::vector<long> kernel_degrees;
  std::vector<std::vector<Polynomial>> member_cols;   // image + coefficient relations
  std::vector<long> member_degrees;
};

long column_degree(const GradedFreeModule& cover, const std::vector<Polynomial>& col) {
  std::optional<long> deg;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    auto d = col[i].homogeneous_degree();
    if (!d) throw std::logic_error("non-homogeneous column");
    long cd = static_cast<long>(*d) + cover.degrees[i];
    if (deg && *deg != cd) throw std::logic_error("column with mixed degrees");
    deg = cd;
  }
  return deg.value_or(0);
}

GradedFreeModule hom_cover(const GradedFreeModule& G, const GradedFreeModule& F0) {
  std::vector<long> degs;
  degs.reserve(G.rank() * F0.rank());
  for (std::size_t a = 0; a < G.rank(); ++a)
    for (std::size_t t = 0; t < F0.rank(); ++t) degs.push_back(-G.degrees[a] + F0.degrees[t]);
  return GradedFreeModule(G.ring, std::move(degs));
}

/// D = g^T ⊗ id_{F0} : Hom(G_{k-1}, F0) -> Hom(G_k, F0).
ModuleMap hom_transpose_block(const ModuleMap& g, const GradedFreeModule& F0) {
  const RingPtr& R = g.ring();
  const std::size_t ak = g.source().rank();      // rank G_k
  const std::size_t akm1 = g.target().rank();    // rank G_{k-1}
  const std::size_t r0 = F0.rank();
  GradedFreeModule tgt = hom_cover(g.source(), F0);
  GradedFreeModule src = hom_cover(g.target(), F0);
  std::vector<std::vector<Polynomial>> rows(tgt.rank(),
                                            std::vector<Polynomial>(src.rank(),
                                                                    Polynomial::zero(R)));
  for (std::size_t a = 0; a < ak; ++a)
    for (std::size_t b = 0; b < akm1; ++b) {
      const Polynomial& e = g.entry(b, a);
      if (e.is_zero()) continue;
      for (std::size_t t = 0; t < r0; ++t) rows[a * r0 + t][b * r0 + t] = e;
    }
  return ModuleMap(std::move(src), std::move(tgt), std::move(rows));
}

/// Psi = id_{G_k^*} ⊗ phi : Hom(G_k, F1) -> Hom(G_k, F0), the coefficient
/// relations inside each copy.
ModuleMap hom_relation_block(const GradedFreeModule& Gk, const ModuleMap& phi) {
  const RingPtr& R = phi.ring();
  const std::size_t ak = Gk.rank();
  const std::size_t r0 = phi.target().rank();
  const std::size_t f1 = phi.source().rank();
  GradedFreeModule tgt = hom_cover(Gk, phi.target());
  GradedFreeModule src = hom_cover(Gk, phi.source());
  std::vector<std::vector<Polynomial>> rows(tgt.rank(),
                                            std::vector<Polynomial>(src.rank(),
                                                                    Polynomial::zero(R)));
  for (std::size_t a = 0; a < ak; ++a)
    for (std::size_t t = 0; t < r0; ++t)
      for (std::size_t v = 0; v < f1; ++v) rows[a * r0 + t][a * f1 + v] = phi.entry(t, v);
  return ModuleMap(std::move(src), std::move(tgt), std::move(rows));
}

ModuleMap concat_column_blocks(const GradedFreeModule& target,
                               const std::vector<const ModuleMap*>& blocks) {
  std::vector<long> src_degs;
  for (auto* b : blocks)
    for (long d : b->source().degrees) src_degs.push_back(d);
  std::vector<std::vector<Polynomial>> rows(target.rank());
  for (std::size_t i = 0; i < target.rank(); ++i) {
    for (auto* b : blocks)
      for (std::size_t j = 0; j < b->source().rank(); ++j) rows[i].push_back(b->entry(i, j));
  }
  return ModuleMap(GradedFreeModule(target.ring, std::move(src_degs)), target, std::move(rows));
}

/// Kernel generators and image columns of the Hom complex Hom(G_•, B) at
/// position i, at the level of the free cover Hom(G_i, F0(B)).
HomLevel hom_level(const Resolution& resA, const ModuleMap& presB, long i) {
  const RingPtr& R = presB.ring();
  const long q = static_cast<long>(resA.maps.size());
  HomLevel out;
  if (i < 0 || i > q || presB.target().rank() == 0) {
    out.cover = GradedFreeModule(R, {});
    return out;
  }
  const GradedFreeModule& Gi = resA.modules[i];
  out.cover = hom_cover(Gi, presB.target());

  // kernel of the next differential, allowing coefficient relations
  if (i == q) {
    for (std::size_t k = 0; k < out.cover.rank(); ++k) {
      std::vector<Polynomial> e(out.cover.rank(), Polynomial::zero(R));
      e[k] = Polynomial::constant(R, 1);
      out.kernel_cols.push_back(std::move(e));
      out.kernel_degrees.push_back(out.cover.degrees[k]);
    }
  } else {
    ModuleMap D = hom_transpose_block(resA.maps[i], presB.target());
    ModuleMap Psi = hom_relation_block(resA.modules[i + 1], presB);
    ModuleMap U = concat_column_blocks(D.target(), {&D, &Psi});
    ModuleMap syz = syzygy_module(U);
    const std::size_t lead = out.cover.rank();  // first block of the syzygy rows
    for (std::size_t j = 0; j < syz.source().rank(); ++j) {
      std::vector<Polynomial> col;
      col.reserve(lead);
      bool zero = true;
      for (std::size_t t = 0; t < lead; ++t) {
        col.push_back(syz.entry(t, j));
        if (!col.back().is_zero()) zero = false;
      }
      if (zero) continue;
      out.kernel_degrees.push_back(column_degree(out.cover, col));
      out.kernel_cols.push_back(std::move(col));
    }
  }

  // image of the previous differential plus coefficient relations
  if (i > 0) {
    ModuleMap Din = hom_transpose_block(resA.maps[i - 1], presB.target());
    for (std::size_t j = 0; j < Din.source().rank(); ++j) {
      auto col = Din.column(j);
      if (std::all_of(col.begin(), col.end(), [](const Polynomial& p) { return p.is_zero(); }))
        continue;
      out.member_degrees.push_back(column_degree(out.cover, col));
      out.member_cols.push_back(std::move(col));
    }
  }
  ModuleMap Psi0 = hom_relation_block(Gi, presB);
  for (std::size_t j = 0; j < Psi0.source().rank(); ++j) {
    auto col = Psi0.column(j);
    if (std::all_of(col.begin(), col.end(), [](const Polynomial& p) { return p.is_zero(); }))
      continue;
    out.member_degrees.push_back(column_degree(out.cover, col));
    out.member_cols.push_back(std::move(col));
  }
  return out;
}

/// Is Ext^i(A, B) nonzero? A is given by its resolution, B by a presentation.
bool hom_homology_nonzero(const Resolution& resA, const ModuleMap& presB, long i) {
  HomLevel lvl = hom_level(resA, presB, i);
  if (lvl.kernel_cols.empty()) return false;
  ModOrder ord(presB.ring(), static_cast<int>(lvl.cover.rank()),
               presB.ring()->order().module_extension);
  IncrementalModuleGB members(ord);
  for (const auto& col : lvl.member_cols) members.add(modvec_from_column(col, ord));
  for (const auto& col : lvl.kernel_cols)
    if (!members.contains(modvec_from_column(col, ord))) return true;
  return false;
}

/// Presentation of Ext^i(A, B) = ker/im as a cokernel.
PresentedModule hom_homology_presented(const Resolution& resA, const ModuleMap& presB, long i,
                                       std::string label) {
  const RingPtr& R = presB.ring();
  HomLevel lvl = hom_level(resA, presB, i);
  if (lvl.kernel_cols.empty()) return PresentedModule::zero_module(R);

  std::vector<std::vector<Polynomial>> krows(lvl.cover.rank());
  for (std::size_t t = 0; t < lvl.cover.rank(); ++t)
    for (const auto& col : lvl.kernel_cols) krows[t].push_back(col[t]);
  ModuleMap K(GradedFreeModule(R, lvl.kernel_degrees), lvl.cover, std::move(krows));

  ModuleGraphGB gb(K);
  std::vector<std::vector<Polynomial>> relation_cols;
  std::vector<long> relation_degs;
  for (std::size_t j = 0; j < lvl.member_cols.size(); ++j) {
    auto lift = gb.lift(lvl.member_cols[j]);
    if (!lift) throw std::logic_error("homology member column failed to lift into the kernel");
    relation_cols.push_back(std::move(*lift));
    relation_degs.push_back(lvl.member_degrees[j]);
  }
  for (auto& syz : gb.syzygy_columns()) {
    std::vector<Polynomial> col = syz;
    long deg = 0;
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      auto d = col[t].homogeneous_degree();
      if (!d) throw std::logic_error("non-homogeneous kernel syzygy");
      deg = static_cast<long>(*d) + lvl.kernel_degrees[t];
      break;
    }
    relation_degs.push_back(deg);
    relation_cols.push_back(std::move(col));
  }

  std::vector<std::vector<Polynomial>> rows(lvl.kernel_cols.size());
  for (std::size_t t = 0; t < lvl.kernel_cols.size(); ++t)
    for (const auto& col : relation_cols) rows[t].push_back(col[t]);
  ModuleMap rho(GradedFreeModule(R, std::move(relation_degs)),
                GradedFreeModule(R, lvl.kernel_degrees), std::move(rows));
  return PresentedModule(std::move(rho), std::move(label));
}

}  // namespace

PresentedModule ext_module(const PresentedModule& M, long i, const PresentedModule& target) {
  const RingPtr& R = M.ring();
  require_same_ring(R, target.ring());
  const long m = static_cast<long>(R->var_count());
  if (i < 0 || i > m) throw std::invalid_argument("ext index out of range [0, m]");
  if (M.is_zero() || target.is_zero()) return PresentedModule::zero_module(R);
  const Resolution& res = free_resolution_minimal(M);
  std::ostringstream os;
  os << "Ext^" << i << "(" << (M.label().empty() ? "M" : M.label()) << ","
     << (target.label().empty() ? "N" : target.label()) << ")";
  return hom_homology_presented(res, target.presentation(), i, os.str());
}

const PresentedModule& ext_against_ring(const PresentedModule& M, long i) {
  auto& slots = M.derived();
  {
    std::lock_guard<std::mutex> lock(slots.mu);
    auto it = slots.ext_against_ring.find(i);
    if (it != slots.ext_against_ring.end()) return it->second;
  }
  PresentedModule E = ext_module(M, i, PresentedModule::free_module(M.ring(), 1));
  std::lock_guard<std::mutex> lock(slots.mu);
  auto [it, inserted] = slots.ext_against_ring.emplace(i, std::move(E));
  return it->second;
}

ExtendedInt grade_of_ideal_on_module(const Ideal& I, const PresentedModule& M) {
  require_same_ring(I.ring(), M.ring());
  if (ideal_membership(Polynomial::constant(I.ring(), 1), I))
    throw std::invalid_argument("grade of the unit ideal is undefined");
  if (M.is_zero()) return ExtendedInt::plus_infinity();
  PresentedModule N = PresentedModule::cyclic(I);
  const Resolution& res = free_resolution_minimal(N);
  const long q = static_cast<long>(res.maps.size());
  for (long i = 0; i <= q; ++i)
    if (hom_homology_nonzero(res, M.presentation(), i)) return ExtendedInt::of(i);
  return ExtendedInt::plus_infinity();
}

// --- localization at monomial primes -----------------------------------------

namespace {

RingPtr subring_for(const RingPtr& R, const MonomialPrime& S) {
  std::vector<std::string> names;
  for (auto v : S.vars) names.push_back(R->variable_name(v));
  return make_ring(std::move(names), R->field(), R->order());
}

}  // namespace

PresentedModule localize_at_monomial_prime(const PresentedModule& M, const MonomialPrime& S) {
  const RingPtr& R = M.ring();
  const auto& fg = fine_grading_of(M);
  if (!fg) throw std::invalid_argument("localize_at_monomial_prime requires a monomial module");
  RingPtr sub = subring_for(R, S);
  const std::size_t r = M.presentation().target().rank();
  const std::size_t s = M.presentation().source().rank();

  auto restrict_total = [&](const std::vector<long>& mdeg) {
    long t = 0;
    for (auto v : S.vars) t += mdeg[v];
    return t;
  };
  std::vector<long> dt, ds;
  for (std::size_t i = 0; i < r; ++i) dt.push_back(restrict_total(fg->row_multidegree[i]));
  for (std::size_t j = 0; j < s; ++j) ds.push_back(restrict_total(fg->col_multidegree[j]));

  std::vector<std::vector<Polynomial>> rows(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const Polynomial& e = M.presentation().entry(i, j);
      if (e.is_zero()) {
        rows[i].push_back(Polynomial::zero(sub));
        continue;
      }
      std::vector<std::uint32_t> exps(S.vars.size(), 0);
      for (std::size_t k = 0; k < S.vars.size(); ++k)
        exps[k] = e.leading_monomial().exponent(S.vars[k]);
      rows[i].push_back(Polynomial::term(sub, e.leading_coeff(), Monomial(std::move(exps))));
    }

  ModuleMap sub_map(GradedFreeModule(sub, std::move(ds)), GradedFreeModule(sub, std::move(dt)),
                    std::move(rows));
  ModuleMap pruned = prune_columns(minimalize_presentation(std::move(sub_map)));
  std::string label = M.label().empty() ? "M" : M.label();
  return PresentedModule(std::move(pruned), label + "@" + S.to_string(R));
}

// --- profiles ----------------------------------------------------------------

namespace {

LocalProfile profile_via_localization(const PresentedModule& M, const MonomialPrime& S) {
  LocalProfile p;
  p.prime = S;
  p.prime_label = S.to_string(M.ring());
  p.height = ExtendedInt::of(static_cast<long>(S.height()));
  PresentedModule loc = localize_at_monomial_prime(M, S);
  if (loc.is_zero()) {
    p.in_support = false;
    p.dim_local = ExtendedInt::minus_infinity();
    p.depth_local = ExtendedInt::plus_infinity();
    p.cmd_local = 0;
    return p;
  }
  p.in_support = true;
  p.dim_local = module_dimension(loc);
  p.depth_local = module_depth_graded(loc);
  p.cmd_local = p.dim_local.value() - p.depth_local.value();
  return p;
}

}  // namespace

const std::vector<LocalProfile>& monomial_profiles(const PresentedModule& M) {
  auto& slots = M.derived();
  return slot_get(slots, slots.monomial_profiles, [&] {
    std::vector<LocalProfile> out;
    for (const auto& S : all_monomial_primes(M.ring()->var_count()))
      out.push_back(profile_via_localization(M, S));
    return out;
  });
}

const ExtSupportTable& ext_support_table(const PresentedModule& M) {
  auto& slots = M.derived();
  return slot_get(slots, slots.ext_support, [&] {
    const RingPtr& R = M.ring();
    const std::size_t m = R->var_count();
    ExtSupportTable tbl;
    tbl.var_count = m;
    tbl.nonzero.assign(m + 1, std::vector<bool>(1u << m, false));
    if (M.is_zero()) return tbl;
    for (std::size_t i = 0; i <= m; ++i) {
      const PresentedModule& E = ext_against_ring(M, static_cast<long>(i));
      if (E.is_zero()) continue;
      if (!is_monomial_module(E))
        throw std::logic_error("Ext of a monomial module lost its fine grading");
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        PresentedModule loc =
            localize_at_monomial_prime(E, MonomialPrime::from_mask(mask, m));
        tbl.nonzero[i][mask] = !loc.is_zero();
      }
    }
    return tbl;
  });
}

bool ExtSupportTable::any_at(std::uint32_t mask) const {
  for (const auto& row : nonzero)
    if (row[mask]) return true;
  return false;
}

long ExtSupportTable::min_index(std::uint32_t mask) const {
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    if (nonzero[i][mask]) return static_cast<long>(i);
  return -1;
}

long ExtSupportTable::max_index(std::uint32_t mask) const {
  for (std::size_t i = nonzero.size(); i-- > 0;)
    if (nonzero[i][mask]) return static_cast<long>(i);
  return -1;
}

LocalProfile profile_via_ext_pattern(const PresentedModule& M, const MonomialPrime& S) {
  LocalProfile p;
  p.prime = S;
  p.prime_label = S.to_string(M.ring());
  const long h = static_cast<long>(S.height());
  p.height = ExtendedInt::of(h);
  const ExtSupportTable& tbl = ext_support_table(M);
  const std::uint32_t mask = S.mask();
  const long c = tbl.min_index(mask);
  if (c < 0) {
    p.in_support = false;
    p.dim_local = ExtendedInt::minus_infinity();
    p.depth_local = ExtendedInt::plus_infinity();
    p.cmd_local = 0;
    return p;
  }
  const long s = tbl.max_index(mask);
  p.in_support = true;
  p.dim_local = ExtendedInt::of(h - c);
  p.depth_local = ExtendedInt::of(h - s);
  p.cmd_local = s - c;
  return p;
}

LocalProfile local_profile_at_prime(const PresentedModule& M, const MonomialPrime& S) {
  if (is_monomial_module(M)) {
    const auto& all = monomial_profiles(M);
    for (const auto& p : all)
      if (p.prime && p.prime->vars == S.vars) return p;
    throw std::logic_error("monomial prime missing from the sweep");
  }
  return local_profile_at_prime(M, S.to_ideal(M.ring()));
}

LocalProfile local_profile_at_prime(const PresentedModule& M, const Ideal& p) {
  const RingPtr& R = M.ring();
  require_same_ring(R, p.ring());
  if (ideal_membership(Polynomial::constant(R, 1), p))
    throw std::invalid_argument("profile at an improper ideal");
  const long m = static_cast<long>(R->var_count());

  LocalProfile out;
  {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < p.generators().size(); ++k) {
      if (k) os << ",";
      os << p.generators()[k].to_string();
    }
    if (p.generators().empty()) os << "0";
    os << ")";
    out.prime_label = os.str();
  }
  const long dim_rp = krull_dimension_ideal(p);
  const long ht = m - dim_rp;
  out.height = ExtendedInt::of(ht);

  long c = -1, s = -1;
  for (long i = 0; i <= m; ++i) {
    const PresentedModule& E = ext_against_ring(M, i);
    if (E.is_zero()) continue;
    const std::size_t rk = E.presentation().target().rank();
    const std::size_t rank = matrix_rank_mod_prime(E.presentation().entries(), p);
    const bool nonzero_at_p = rank < rk;
    if (nonzero_at_p) {
      if (c < 0) c = i;
      s = i;
    }
  }
  if (c < 0) {
    out.in_support = false;
    out.dim_local = ExtendedInt::minus_infinity();
    out.depth_local = ExtendedInt::plus_infinity();
    out.cmd_local = 0;
    return out;
  }
  out.in_support = true;
  out.dim_local = ExtendedInt::of(ht - c);
  out.depth_local = ExtendedInt::of(ht - s);
  out.cmd_local = s - c;
  return out;
}

// --- regular elements and module surgery -------------------------------------

bool is_regular_element(const Polynomial& x, const PresentedModule& M) {
  if (x.is_zero()) throw std::invalid_argument("regularity of the zero element");
  require_same_ring(x.ring(), M.ring());
  if (M.is_zero()) return true;
  const RingPtr& R = M.ring();
  const auto& field = R->field();
  const ModuleMap& phi = M.presentation();
  const int r0 = static_cast<int>(phi.target().rank());
  const std::size_t s = phi.source().rank();

  // graph columns: x*e_i (tracked) and the relation columns (tracked after)
  ModOrder plain(R, r0, R->order().module_extension);
  std::vector<ModVec> graph;
  ModOrder ord(R, r0, R->order().module_extension);
  int slot = 0;
  auto add_tracked = [&](ModVec col) {
    col = modvec_normalize(std::move(col), plain, field);
    if (col.empty()) return;
    ord.add_schreyer_lead(col.front().mono, col.front().comp);
    col.push_back(ModTerm{field.one(), Monomial(R->var_count()), r0 + slot});
    ++slot;
    graph.push_back(std::move(col));
  };
  for (int i = 0; i < r0; ++i) {
    ModVec col;
    for (const auto& t : x.terms()) col.push_back(ModTerm{t.coeff, t.mono, i});
    add_tracked(std::move(col));
  }
  const int x_slots = slot;
  for (std::size_t j = 0; j < s; ++j) {
    ModVec col;
    for (int i = 0; i < r0; ++i)
      for (const auto& t : phi.entry(i, j).terms()) col.push_back(ModTerm{t.coeff, t.mono, i});
    add_tracked(std::move(col));
  }
  for (auto& g : graph) g = modvec_normalize(std::move(g), ord, field);
  auto basis = buchberger_module(std::move(graph), ord, field);

  // image GB of the presentation columns, for the membership check
  IncrementalModuleGB image(plain);
  for (std::size_t j = 0; j < s; ++j)
    image.add(modvec_from_column(phi.column(j), plain));

  for (const auto& b : basis) {
    if (b.empty() || b.front().comp < r0) continue;  // not a pure syzygy
    // w = coefficients of the x*e_i block
    std::vector<std::vector<Term>> per(r0);
    for (const auto& t : b) {
      const int sl = t.comp - r0;
      if (sl < x_slots) per[sl].push_back(Term{t.coeff, t.mono});
    }
    ModVec w;
    for (int i = 0; i < r0; ++i)
      for (auto& t : per[i]) w.push_back(ModTerm{t.coeff, t.mono, i});
    w = modvec_normalize(std::move(w), plain, field);
    if (w.empty()) continue;
    if (!image.contains(w)) return false;  // x kills a nonzero class
  }
  return true;
}

PresentedModule adjoin_variable(const PresentedModule& M, const std::string& var_name) {
  const RingPtr& R = M.ring();
  if (R->variable_index(var_name))
    throw std::invalid_argument("adjoined variable already exists: " + var_name);
  std::vector<std::string> names = R->variables();
  names.push_back(var_name);
  RingPtr E = make_ring(std::move(names), R->field(), R->order());
  const std::size_t m = R->var_count();

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<std::uint32_t> e(m + 1, 0);
      for (std::size_t v = 0; v < m; ++v) e[v] = t.mono.exponent(v);
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(E, std::move(ts));
  };

  const ModuleMap& phi = M.presentation();
  std::vector<std::vector<Polynomial>> rows(phi.target().rank());
  for (std::size_t i = 0; i < phi.target().rank(); ++i)
    for (std::size_t j = 0; j < phi.source().rank(); ++j) rows[i].push_back(lift(phi.entry(i, j)));
  ModuleMap lifted(GradedFreeModule(E, phi.source().degrees),
                   GradedFreeModule(E, phi.target().degrees), std::move(rows));
  std::string label = M.label().empty() ? "M" : M.label();
  return PresentedModule(std::move(lifted), label + "[" + var_name + "]");
}

PresentedModule quotient_by_variable_difference(const PresentedModule& M, std::size_t i,
                                                std::size_t j) {
  const RingPtr& R = M.ring();
  const std::size_t m = R->var_count();
  if (i >= m || j >= m || i == j)
    throw std::invalid_argument("quotient_by_variable_difference: bad variable indices");
  std::vector<std::string> names;
  for (std::size_t v = 0; v < m; ++v)
    if (v != j) names.push_back(R->variable_name(v));
  RingPtr Q = make_ring(std::move(names), R->field(), R->order());

  auto project = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<std::uint32_t> e;
      e.reserve(m - 1);
      for (std::size_t v = 0; v < m; ++v) {
        if (v == j) continue;
        std::uint32_t exp = t.mono.exponent(v);
        if (v == i) exp += t.mono.exponent(j);  // substitute x_j := x_i
        e.push_back(exp);
      }
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(Q, std::move(ts));
  };

  const ModuleMap& phi = M.presentation();
  std::vector<std::vector<Polynomial>> rows(phi.target().rank());
  for (std::size_t a = 0; a < phi.target().rank(); ++a)
    for (std::size_t b = 0; b < phi.source().rank(); ++b) rows[a].push_back(project(phi.entry(a, b)));
  ModuleMap mapped(GradedFreeModule(Q, phi.source().degrees),
                   GradedFreeModule(Q, phi.target().degrees), std::move(rows));
  std::string label = M.label().empty() ? "M" : M.label();
  return PresentedModule(std::move(mapped),
                         label + "/(" + R->variable_name(i) + "-" + R->variable_name(j) + ")");
}

PresentedModule quotient_by_element(const PresentedModule& M, const Polynomial& x) {
  const RingPtr& R = M.ring();
  require_same_ring(R, x.ring());
  auto d = x.homogeneous_degree();
  if (!d || *d == 0)
    throw std::invalid_argument("quotient requires a homogeneous element of positive degree");
  const ModuleMap& phi = M.presentation();
  const std::size_t r0 = phi.target().rank();
  std::vector<long> src = phi.source().degrees;
  std::vector<std::vector<Polynomial>> rows(r0);
  for (std::size_t i = 0; i < r0; ++i) {
    rows[i] = phi.entries().empty() ? std::vector<Polynomial>() : phi.entries()[i];
    for (std::size_t k = 0; k < r0; ++k)
      rows[i].push_back(i == k ? x : Polynomial::zero(R));
  }
  for (std::size_t k = 0; k < r0; ++k)
    src.push_back(static_cast<long>(*d) + phi.target().degrees[k]);
  ModuleMap q(GradedFreeModule(R, std::move(src)), phi.target(), std::move(rows));
  std::string label = M.label().empty() ? "M" : M.label();
  return PresentedModule(std::move(q), label + "/(" + x.to_string() + ")");
}

std::size_t matrix_rank_mod_prime(const std::vector<std::vector<Polynomial>>& entries,
                                  const Ideal& p) {
  if (entries.empty()) return 0;
  const auto& gbel = p.groebner().elements;
  auto nf = [&](const Polynomial& f) { return gbel.empty() ? f : normal_form(f, gbel); };

  std::vector<std::vector<Polynomial>> W;
  for (const auto& row : entries) {
    std::vector<Polynomial> r;
    for (const auto& e : row) r.push_back(nf(e));
    W.push_back(std::move(r));
  }
  const std::size_t rows = W.size(), cols = W[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!W[r][col].is_zero()) { pivot = r; break; }
    if (pivot == rows) continue;
    std::swap(W[rank], W[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (W[r][col].is_zero()) continue;
      // cross-multiplication keeps everything in R
      const Polynomial a = W[rank][col], b = W[r][col];
      for (std::size_t c2 = col; c2 < cols; ++c2) W[r][c2] = nf(a * W[r][c2] - b * W[rank][c2]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace cmdefect
