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

#include "cmdefect/module_gb.hpp"

#include <algorithm>
#include <set>

namespace cmdefect {

int ModOrder::cmp_ambient(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
  if (ambient_ext_ == ModuleExtension::position_over_term) {
    if (ca != cb) return ca < cb ? 1 : -1;  // lower component is greater
    Cmp c = monomial_compare(ma, mb, ring_->order());
    return c == Cmp::equal ? 0 : (c == Cmp::greater ? 1 : -1);
  }
  // term over position
  Cmp c = monomial_compare(ma, mb, ring_->order());
  if (c != Cmp::equal) return c == Cmp::greater ? 1 : -1;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

int ModOrder::cmp(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
  const bool sa = ca >= split_, sb = cb >= split_;
  if (sa != sb) return sa ? -1 : 1;  // ambient terms dominate syzygy terms
  if (!sa) return cmp_ambient(ma, ca, mb, cb);
  // Schreyer order on the syzygy block: compare image leading terms in the
  // ambient module, break ties by position (earlier column greater).
  const auto& [la, capA] = schreyer_[ca - split_];
  const auto& [lb, capB] = schreyer_[cb - split_];
  int c = cmp_ambient(ma * la, capA, mb * lb, capB);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  Cmp mc = monomial_compare(ma, mb, ring_->order());
  return mc == Cmp::equal ? 0 : (mc == Cmp::greater ? 1 : -1);
}

ModVec modvec_normalize(ModVec v, const ModOrder& ord, const CoefficientField& field) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) {
    return ord.cmp(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    mpq_class c = field.canonical(t.coeff);
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(ModTerm{std::move(c), std::move(t.mono), t.comp});
    }
  }
  return out;
}

ModVec modvec_add(const ModVec& a, const ModVec& b, const ModOrder& ord,
                  const CoefficientField& field) {
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.cmp(a[i].mono, a[i].comp, b[j].mono, b[j].comp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      mpq_class s = field.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back(ModTerm{std::move(s), a[i].mono, a[i].comp});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

ModVec modvec_scale(const ModVec& a, const mpq_class& c, const Monomial& m,
                    const CoefficientField& field) {
  ModVec out;
  out.reserve(a.size());
  for (const auto& t : a) {
    mpq_class nc = field.mul(t.coeff, c);
    if (nc != 0) out.push_back(ModTerm{std::move(nc), t.mono * m, t.comp});
  }
  return out;
}

ModVec modvec_negate(const ModVec& a, const CoefficientField& field) {
  ModVec out = a;
  for (auto& t : out) t.coeff = field.neg(t.coeff);
  return out;
}

ModVec modvec_from_column(const std::vector<Polynomial>& column, const ModOrder& ord) {
  ModVec v;
  for (std::size_t i = 0; i < column.size(); ++i)
    for (const auto& t : column[i].terms())
      v.push_back(ModTerm{t.coeff, t.mono, static_cast<int>(i)});
  return modvec_normalize(std::move(v), ord, ord.ring()->field());
}

std::vector<Polynomial> modvec_to_column(const ModVec& v, const RingPtr& ring, std::size_t rank,
                                         int comp_offset) {
  std::vector<std::vector<Term>> per(rank);
  for (const auto& t : v) {
    const int c = t.comp - comp_offset;
    if (c < 0 || static_cast<std::size_t>(c) >= rank)
      throw std::logic_error("modvec component out of range");
    per[c].push_back(Term{t.coeff, t.mono});
  }
  std::vector<Polynomial> col;
  col.reserve(rank);
  for (auto& ts : per) col.push_back(Polynomial::from_terms(ring, std::move(ts)));
  return col;
}

ModVec modvec_normal_form(ModVec v, const std::vector<ModVec>& basis, const ModOrder& ord,
                          const CoefficientField& field) {
  ModVec result;
  while (!v.empty()) {
    const ModTerm lt = v.front();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.empty()) continue;
      const ModTerm& gl = g.front();
      if (gl.comp != lt.comp || !gl.mono.divides(lt.mono)) continue;
      const mpq_class q = field.div(lt.coeff, gl.coeff);
      v = modvec_add(v, modvec_scale(g, field.neg(q), lt.mono.quotient_by(gl.mono), field), ord,
                     field);
      reduced = true;
      break;
    }
    if (!reduced) {
      result.push_back(lt);
      v.erase(v.begin());
    }
  }
  return result;
}

IncrementalModuleGB::IncrementalModuleGB(ModOrder ord)
    : ord_(std::move(ord)), field_(ord_.ring()->field()) {}

void IncrementalModuleGB::push_pairs_with(std::size_t j) {
  for (std::size_t i = 0; i < j; ++i) {
    if (basis_[i].front().comp != basis_[j].front().comp) continue;
    Monomial l = basis_[i].front().mono.lcm(basis_[j].front().mono);
    auto d = l.degree();
    queue_.push_back(Pair{i, j, std::move(l), d});
    pending_.insert({i, j});
  }
}

void IncrementalModuleGB::complete() {
  while (!queue_.empty()) {
    // normal strategy: minimal lcm degree first, ties by index
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k) {
      const auto& a = queue_[k];
      const auto& b = queue_[best];
      if (a.lcm_degree < b.lcm_degree ||
          (a.lcm_degree == b.lcm_degree && (a.i < b.i || (a.i == b.i && a.j < b.j))))
        best = k;
    }
    Pair p = std::move(queue_[best]);
    queue_.erase(queue_.begin() + best);
    pending_.erase({p.i, p.j});

    const ModVec& f = basis_[p.i];
    const ModVec& g = basis_[p.j];
    // chain criterion (valid for modules; the coprime criterion is not)
    bool skip = false;
    for (std::size_t k = 0; k < basis_.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis_[k].front().comp != f.front().comp) continue;
      if (!basis_[k].front().mono.divides(p.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending_.count(key(p.i, k)) && !pending_.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    const Monomial mf = p.lcm.quotient_by(f.front().mono);
    const Monomial mg = p.lcm.quotient_by(g.front().mono);
    ModVec s = modvec_add(modvec_scale(f, field_.invert(f.front().coeff), mf, field_),
                          modvec_scale(g, field_.neg(field_.invert(g.front().coeff)), mg, field_),
                          ord_, field_);
    ModVec r = modvec_normal_form(std::move(s), basis_, ord_, field_);
    if (r.empty()) continue;
    basis_.push_back(std::move(r));
    push_pairs_with(basis_.size() - 1);
  }
}

bool IncrementalModuleGB::add(const ModVec& v) {
  ModVec r = modvec_normal_form(v, basis_, ord_, field_);
  if (r.empty()) return false;
  basis_.push_back(std::move(r));
  push_pairs_with(basis_.size() - 1);
  complete();
  return true;
}

bool IncrementalModuleGB::contains(const ModVec& v) const {
  return modvec_normal_form(v, basis_, ord_, field_).empty();
}

std::vector<ModVec> buchberger_module(std::vector<ModVec> gens, const ModOrder& ord,
                                      const CoefficientField& field) {
  (void)field;
  IncrementalModuleGB gb(ord);
  for (auto& g : gens)
    if (!g.empty()) gb.add(g);
  return gb.basis();
}

ModuleGraphGB::ModuleGraphGB(const ModuleMap& phi)
    : phi_(phi),
      order_(phi.ring(), static_cast<int>(phi.target().rank()),
             phi.ring()->order().module_extension) {
  const RingPtr& R = phi_.ring();
  const auto& field = R->field();
  const int r = static_cast<int>(phi_.target().rank());
  const std::size_t s = phi_.source().rank();

  graph_comp_.assign(s, -1);
  std::vector<ModVec> graph_vectors;
  int slot = 0;
  for (std::size_t j = 0; j < s; ++j) {
    if (phi_.column_is_zero(j)) {
      zero_columns_.push_back(j);
      continue;
    }
    // leading ambient term of the column, for the Schreyer order
    ModVec col;
    for (int i = 0; i < r; ++i)
      for (const auto& t : phi_.entry(i, j).terms())
        col.push_back(ModTerm{t.coeff, t.mono, i});
    ModOrder plain(R, r, R->order().module_extension);
    col = modvec_normalize(std::move(col), plain, field);
    order_.add_schreyer_lead(col.front().mono, col.front().comp);
    graph_comp_[j] = slot++;
    graph_vectors.push_back(std::move(col));
  }
  // append the bookkeeping slot to each tracked column
  const Monomial one(R->var_count());
  for (std::size_t k = 0; k < graph_vectors.size(); ++k) {
    graph_vectors[k].push_back(ModTerm{field.one(), one, r + static_cast<int>(k)});
    graph_vectors[k] = modvec_normalize(std::move(graph_vectors[k]), order_, field);
  }
  basis_ = buchberger_module(std::move(graph_vectors), order_, field);
}

bool ModuleGraphGB::in_image(const std::vector<Polynomial>& v) const {
  const auto& field = phi_.ring()->field();
  ModVec w = modvec_from_column(v, order_);
  ModVec nf = modvec_normal_form(std::move(w), basis_, order_, field);
  for (const auto& t : nf)
    if (t.comp < order_.split()) return false;
  return true;
}

std::optional<std::vector<Polynomial>> ModuleGraphGB::lift(
    const std::vector<Polynomial>& v) const {
  const RingPtr& R = phi_.ring();
  const auto& field = R->field();
  ModVec w = modvec_from_column(v, order_);
  ModVec nf = modvec_normal_form(std::move(w), basis_, order_, field);
  ModVec ambient, book;
  for (const auto& t : nf)
    (t.comp < order_.split() ? ambient : book).push_back(t);
  if (!ambient.empty()) return std::nullopt;
  // v - sum q_k (col_k + e_k) = book  =>  v = sum q_k col_k + (-book slots)
  const std::size_t s = phi_.source().rank();
  std::vector<std::vector<Term>> per(s);
  for (const auto& t : book) {
    const int slot = t.comp - order_.split();
    // invert graph_comp_
    std::size_t col = 0;
    bool found = false;
    for (std::size_t j = 0; j < s; ++j)
      if (graph_comp_[j] == slot) { col = j; found = true; break; }
    if (!found) throw std::logic_error("graph slot without column");
    per[col].push_back(Term{field.neg(t.coeff), t.mono});
  }
  std::vector<Polynomial> out;
  out.reserve(s);
  for (auto& ts : per) out.push_back(Polynomial::from_terms(R, std::move(ts)));
  return out;
}

std::vector<std::vector<Polynomial>> ModuleGraphGB::syzygy_columns() const {
  const RingPtr& R = phi_.ring();
  const std::size_t s = phi_.source().rank();
  std::vector<std::vector<Polynomial>> out;

  // a zero column is its own syzygy
  for (auto j : zero_columns_) {
    std::vector<Polynomial> col(s, Polynomial::zero(R));
    col[j] = Polynomial::constant(R, 1);
    out.push_back(std::move(col));
  }

  for (const auto& b : basis_) {
    if (b.empty() || b.front().comp < order_.split()) continue;
    // leading term in the bookkeeping block: the ambient part must be empty
    for (const auto& t : b)
      if (t.comp < order_.split()) throw std::logic_error("impure syzygy element");
    std::vector<std::vector<Term>> per(s);
    for (const auto& t : b) {
      const int slot = t.comp - order_.split();
      std::size_t col = 0;
      bool found = false;
      for (std::size_t j = 0; j < s; ++j)
        if (graph_comp_[j] == slot) { col = j; found = true; break; }
      if (!found) throw std::logic_error("graph slot without column");
      per[col].push_back(Term{t.coeff, t.mono});
    }
    std::vector<Polynomial> col;
    col.reserve(s);
    for (auto& ts : per) col.push_back(Polynomial::from_terms(R, std::move(ts)));
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace cmdefect
