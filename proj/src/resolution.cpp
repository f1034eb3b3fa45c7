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

#include "cmdefect/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "cmdefect/module_gb.hpp"
#include "derived_slots.hpp"

namespace cmdefect {

unsigned long BettiTable::total(long i) const {
  unsigned long t = 0;
  for (const auto& [key, v] : entries)
    if (key.first == i) t += v;
  return t;
}

unsigned long BettiTable::at(long i, long j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

bool HilbertSeries::numerator_is_zero() const {
  for (const auto& [d, c] : numerator)
    if (c != 0) return false;
  return true;
}

long HilbertSeries::pole_order() const {
  if (numerator_is_zero()) return kMinusInfinity;
  HilbertSeries r = reduced();
  return r.denominator_power;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries out = *this;
  while (out.denominator_power > 0) {
    mpz_class at_one(0);
    for (const auto& [d, c] : out.numerator) at_one += c;
    if (at_one != 0) break;
    // divide by (1 - t): with N = sum c_d t^d, Q = N / (1-t) has
    // q_d = sum_{e <= d} c_e (valid because N(1) = 0 kills the tail)
    std::map<long, mpz_class> q;
    mpz_class run(0);
    if (out.numerator.empty()) break;
    const long lo = out.numerator.begin()->first;
    const long hi = out.numerator.rbegin()->first;
    for (long d = lo; d <= hi; ++d) {
      auto it = out.numerator.find(d);
      if (it != out.numerator.end()) run += it->second;
      if (run != 0) q[d] = run;
    }
    out.numerator = std::move(q);
    out.denominator_power -= 1;
  }
  return out;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (numerator.empty()) os << "0";
  for (const auto& [d, c] : numerator) {
    if (c == 0) continue;
    mpz_class mag = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) os << mag.get_str();
    if (d != 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (d != 1) os << "^" << d;
    }
  }
  std::ostringstream full;
  full << "(" << os.str() << ")";
  if (denominator_power > 0) full << "/(1-t)^" << denominator_power;
  return full.str();
}

ModuleMap minimalize_presentation(ModuleMap phi) {
  const RingPtr R = phi.ring();
  const auto& field = R->field();
  std::vector<std::vector<Polynomial>> E = phi.entries();
  std::vector<long> dt = phi.target().degrees;
  std::vector<long> ds = phi.source().degrees;

  while (true) {
    std::size_t pr = 0, pc = 0;
    bool found = false;
    for (std::size_t i = 0; i < E.size() && !found; ++i)
      for (std::size_t j = 0; j < (E.empty() ? 0 : E[i].size()) && !found; ++j)
        if (is_unit_entry(E[i][j])) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;

    const mpq_class inv = field.invert(E[pr][pc].leading_coeff());
    // clear the pivot row across the other columns (column operations keep
    // the image)
    for (std::size_t j = 0; j < E[pr].size(); ++j) {
      if (j == pc || E[pr][j].is_zero()) continue;
      const Polynomial q = E[pr][j].scaled(inv);
      for (std::size_t i = 0; i < E.size(); ++i) E[i][j] = E[i][j] - q * E[i][pc];
    }
    // the pivot column is now the only column with a nonzero entry in row pr;
    // row operations clearing it only change column pc, which is deleted
    for (std::size_t i = 0; i < E.size(); ++i) {
      if (i != pr) E[i][pc] = Polynomial::zero(R);
    }
    E.erase(E.begin() + pr);
    dt.erase(dt.begin() + pr);
    for (auto& row : E) row.erase(row.begin() + pc);
    ds.erase(ds.begin() + pc);
  }

  // drop identically zero columns (they present nothing)
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < ds.size(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < E.size(); ++i)
      if (!E[i][j].is_zero()) { zero = false; break; }
    if (!zero) keep.push_back(j);
  }
  if (keep.size() != ds.size()) {
    std::vector<std::vector<Polynomial>> E2(E.size());
    std::vector<long> ds2;
    for (std::size_t i = 0; i < E.size(); ++i)
      for (auto j : keep) E2[i].push_back(E[i][j]);
    for (auto j : keep) ds2.push_back(ds[j]);
    E = std::move(E2);
    ds = std::move(ds2);
  }

  GradedFreeModule target(R, std::move(dt));
  GradedFreeModule source(R, std::move(ds));
  return ModuleMap(std::move(source), std::move(target), std::move(E));
}

ModuleMap prune_columns(const ModuleMap& phi) {
  const RingPtr& R = phi.ring();
  const std::size_t s = phi.source().rank();
  if (s == 0) return phi;

  ModOrder ord(R, static_cast<int>(phi.target().rank()), R->order().module_extension);
  std::vector<std::size_t> idx(s);
  for (std::size_t j = 0; j < s; ++j) idx[j] = j;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (phi.source().degrees[a] != phi.source().degrees[b])
      return phi.source().degrees[a] < phi.source().degrees[b];
    return a < b;
  });

  IncrementalModuleGB gb(ord);
  std::vector<std::size_t> kept;
  for (auto j : idx) {
    if (phi.column_is_zero(j)) continue;
    if (gb.add(modvec_from_column(phi.column(j), ord))) kept.push_back(j);
  }

  std::vector<std::vector<Polynomial>> rows(phi.target().rank());
  std::vector<long> ds;
  for (std::size_t i = 0; i < phi.target().rank(); ++i)
    for (auto j : kept) rows[i].push_back(phi.entry(i, j));
  for (auto j : kept) ds.push_back(phi.source().degrees[j]);
  return ModuleMap(GradedFreeModule(R, std::move(ds)), phi.target(), std::move(rows));
}

ModuleMap syzygy_module(const ModuleMap& phi) {
  const RingPtr& R = phi.ring();
  ModuleGraphGB gb(phi);
  auto cols = gb.syzygy_columns();

  const std::size_t s = phi.source().rank();
  std::vector<long> degs;
  degs.reserve(cols.size());
  for (const auto& col : cols) {
    std::optional<long> deg;
    for (std::size_t i = 0; i < s; ++i) {
      if (col[i].is_zero()) continue;
      auto d = col[i].homogeneous_degree();
      if (!d) throw std::logic_error("syzygy entry is not homogeneous");
      long cd = static_cast<long>(*d) + phi.source().degrees[i];
      if (deg && *deg != cd) throw std::logic_error("syzygy column has mixed degrees");
      deg = cd;
    }
    degs.push_back(deg.value_or(0));
  }

  // deterministic column order: by degree, then discovery order
  std::vector<std::size_t> idx(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) idx[j] = j;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });

  std::vector<std::vector<Polynomial>> rows(s);
  std::vector<long> ds;
  for (std::size_t i = 0; i < s; ++i)
    for (auto j : idx) rows[i].push_back(cols[j][i]);
  for (auto j : idx) ds.push_back(degs[j]);
  return ModuleMap(GradedFreeModule(R, std::move(ds)), phi.source(), std::move(rows));
}

namespace {

Resolution compute_resolution(const PresentedModule& M) {
  Resolution res;
  res.minimal = true;
  const RingPtr& R = M.ring();
  const std::size_t m = R->var_count();

  res.modules.push_back(M.presentation().target());
  if (M.is_zero()) return res;

  ModuleMap step = prune_columns(M.presentation());
  while (step.source().rank() > 0) {
    res.maps.push_back(step);
    res.modules.push_back(step.source());
    if (res.maps.size() > m + 1)
      throw std::logic_error("resolution exceeded the Hilbert syzygy bound");
    step = prune_columns(syzygy_module(res.maps.back()));
  }
  return res;
}

}  // namespace

const Resolution& free_resolution_minimal(const PresentedModule& M) {
  auto& slots = M.derived();
  return slot_get(slots, slots.resolution, [&] { return compute_resolution(M); });
}

BettiTable betti_table(const PresentedModule& M) {
  const Resolution& res = free_resolution_minimal(M);
  BettiTable t;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (long d : res.modules[i].degrees) t.entries[{static_cast<long>(i), d}] += 1;
  return t;
}

long projective_dimension(const PresentedModule& M) {
  if (M.is_zero()) return kMinusInfinity;
  return static_cast<long>(free_resolution_minimal(M).length());
}

HilbertSeries hilbert_series(const PresentedModule& M) {
  const Resolution& res = free_resolution_minimal(M);
  HilbertSeries h;
  h.denominator_power = static_cast<long>(M.ring()->var_count());
  long sign = 1;
  for (std::size_t i = 0; i < res.modules.size(); ++i, sign = -sign)
    for (long d : res.modules[i].degrees) {
      auto& c = h.numerator[d];
      c += sign;
      if (c == 0) h.numerator.erase(d);
    }
  return h;
}

void verify_resolution(const Resolution& res, std::size_t var_count) {
  if (res.maps.size() > var_count)
    throw std::logic_error("resolution longer than the number of variables");
  for (const auto& map : res.maps)
    if (map.has_unit_entry()) throw std::logic_error("resolution is not minimal");
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
    if (!res.maps[i].compose(res.maps[i + 1]).is_zero_map())
      throw std::logic_error("resolution does not compose to zero");
}

}  // namespace cmdefect
