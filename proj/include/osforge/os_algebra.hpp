// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "osforge/exterior.hpp"
#include "osforge/linalg.hpp"
#include "osforge/matroid.hpp"
#include "osforge/tutte.hpp"

namespace osforge {

/// One ideal generator per circuit: the boundary of the circuit monomial,
/// elements taken in ascending id order.
inline std::vector<ExteriorElement> os_ideal_generators(const Matroid& m) {
  std::vector<ExteriorElement> gens;
  gens.reserve(m.circuits().size());
  for (SetMask c : m.circuits())
    gens.push_back(boundary(ExteriorElement::monomial(c, 1)));
  return gens;
}

/// The Orlik-Solomon algebra A(M) = Lambda(E)/I(M), presented through the
/// broken-circuit (nbc) monomial basis for the chosen linear order on the
/// ground set (default: element id order). Immutable after construction.
///
/// A loop makes the unit a generator of the ideal (the boundary of a
/// 1-circuit is 1), so the whole algebra collapses: every graded dimension,
/// including degree 0, is zero. That matches chi = 0 under the Poincare
/// transform and the absence of nbc sets, so the cross-checks stay exact.
class OSAlgebra {
 public:
  explicit OSAlgebra(Matroid m) : OSAlgebra(std::move(m), std::vector<int>{}) {}

  /// An empty order means the element id order.
  OSAlgebra(Matroid m, std::vector<int> order) : m_(std::move(m)), order_(std::move(order)) {
    if (m_.size() > 20)
      throw std::invalid_argument("OSAlgebra: ground set exceeds 20 elements");
    if (order_.empty()) {
      order_.resize(m_.size());
      std::iota(order_.begin(), order_.end(), 0);
    }
    if (static_cast<int>(order_.size()) != m_.size())
      throw std::invalid_argument("OSAlgebra: order must be a permutation of the ground set");
    pos_.assign(m_.size(), -1);
    for (int k = 0; k < static_cast<int>(order_.size()); ++k) {
      const int id = order_[k];
      if (id < 0 || id >= m_.size() || pos_[id] != -1)
        throw std::invalid_argument("OSAlgebra: order must be a permutation of the ground set");
      pos_[id] = k;
    }

    for (SetMask c : m_.circuits()) {
      BrokenCircuit bc;
      bc.circuit = c;
      bc.tip = order_min(c);
      bc.broken = c & ~bit(bc.tip);
      bc.tip_factor_index = 0;
      for (int id : mask_ids(c)) {
        ++bc.tip_factor_index;
        if (id == bc.tip) break;
      }
      broken_.push_back(bc);
    }
    std::sort(broken_.begin(), broken_.end(),
              [](const BrokenCircuit& a, const BrokenCircuit& b) {
                return a.broken < b.broken || (a.broken == b.broken && a.circuit < b.circuit);
              });

    const int r = rank(m_);
    nbc_.assign(r + 1, {});
    const SetMask limit = m_.size() == 0 ? 1 : (SetMask{1} << m_.size());
    for (SetMask s = 0; s < limit; ++s) {
      if (!is_nbc(s)) continue;
      const int d = popcount(s);
      if (d > r) throw std::logic_error("nbc set larger than the rank");
      nbc_[d].push_back(s);
    }
  }

  const Matroid& matroid() const { return m_; }

  const std::vector<int>& order() const { return order_; }

  /// Broken circuits as masks (circuit minus its order-minimal element).
  std::vector<SetMask> broken_circuits() const {
    std::vector<SetMask> out;
    out.reserve(broken_.size());
    for (const auto& bc : broken_) out.push_back(bc.broken);
    return out;
  }

  /// nbc monomials by degree, each list in increasing mask order.
  const std::vector<std::vector<SetMask>>& nbc_basis() const { return nbc_; }

  std::vector<long long> nbc_counts() const {
    std::vector<long long> out;
    out.reserve(nbc_.size());
    for (const auto& level : nbc_) out.push_back(static_cast<long long>(level.size()));
    return out;
  }

  /// True iff s contains no broken circuit.
  bool is_nbc(SetMask s) const {
    for (const auto& bc : broken_)
      if (subset_of(bc.broken, s)) return false;
    return true;
  }

  /// Image in A(M) written in the nbc monomial basis. A monomial containing
  /// a broken circuit C - c1 (c1 the order-minimal element of circuit C) is
  /// rewritten through the relation boundary(e_C) = 0, which trades the
  /// dropped element c1 back in for one of the larger ones; each step
  /// strictly lowers the order-permuted mask, so the rewriting terminates.
  ExteriorElement normal_form(const ExteriorElement& x) const {
    std::map<SetMask, Rational> work(x.terms().begin(), x.terms().end());
    ExteriorElement result;
    while (!work.empty()) {
      // Deterministic: largest order-permuted monomial first.
      auto chosen = work.begin();
      SetMask chosen_key = permuted(chosen->first);
      for (auto it = std::next(work.begin()); it != work.end(); ++it) {
        const SetMask key = permuted(it->first);
        if (key > chosen_key) {
          chosen = it;
          chosen_key = key;
        }
      }
      const SetMask s = chosen->first;
      const Rational coeff = chosen->second;
      work.erase(chosen);
      if (coeff == 0) continue;

      const BrokenCircuit* hit = nullptr;
      for (const auto& bc : broken_) {
        if (subset_of(bc.broken, s)) {
          hit = &bc;
          break;
        }
      }
      if (hit == nullptr) {
        result.add_term(s, coeff);
        continue;
      }
      if (contains(s, hit->tip)) continue;  // s contains the whole circuit: already in the ideal

      const SetMask rest = s & ~hit->broken;
      // e_s = merge_sign(broken, rest) * e_broken ^ e_rest, and
      // e_broken = sum over c_j != c1 of (-1)^(j0+j+1) e_{C - c_j}
      // with j, j0 the 1-based ascending-id positions in the circuit.
      const int outer = wedge_sign(hit->broken, rest);
      int j = 0;
      for (int cj : mask_ids(hit->circuit)) {
        ++j;
        if (cj == hit->tip) continue;
        const SetMask replaced = hit->circuit & ~bit(cj);
        const int inner = wedge_sign(replaced, rest);
        if (inner == 0) continue;  // rest already holds c_j
        const int sign = ((hit->tip_factor_index + j + 1) % 2 == 0) ? 1 : -1;
        const Rational contribution = Rational(outer * inner * sign) * coeff;
        if (contribution == 0) continue;
        auto [it, inserted] = work.try_emplace(replaced | rest, contribution);
        if (!inserted) {
          it->second += contribution;
          if (it->second == 0) work.erase(it);
        }
      }
    }
    return result;
  }

  /// All monomials of Lambda^p in increasing mask order.
  std::vector<SetMask> monomials(int degree) const {
    std::vector<SetMask> out;
    const SetMask limit = m_.size() == 0 ? 1 : (SetMask{1} << m_.size());
    for (SetMask s = 0; s < limit; ++s)
      if (popcount(s) == degree) out.push_back(s);
    return out;
  }

  /// Row vectors spanning I^p inside Lambda^p: every monomial multiple
  /// e_T ^ boundary(e_C) landing in degree p, coordinates over monomials(p).
  RationalMatrix ideal_span_rows(int degree) const {
    const auto monos = monomials(degree);
    std::map<SetMask, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
    RationalMatrix rows;
    const SetMask limit = m_.size() == 0 ? 1 : (SetMask{1} << m_.size());
    for (SetMask c : m_.circuits()) {
      const int gen_degree = popcount(c) - 1;
      if (gen_degree > degree) continue;
      const ExteriorElement gen = boundary(ExteriorElement::monomial(c, 1));
      for (SetMask t = 0; t < limit; ++t) {
        if (popcount(t) != degree - gen_degree) continue;
        const ExteriorElement row = ExteriorElement::monomial(t, 1) * gen;
        if (row.is_zero()) continue;
        RationalRow vec(monos.size(), Rational(0));
        for (const auto& [s, cf] : row.terms()) vec[col.at(s)] = cf;
        rows.push_back(std::move(vec));
      }
    }
    return rows;
  }

  /// Ideal membership, certified two ways: the rewriting normal form must
  /// vanish, and the coordinate vector must lie in the span of the monomial
  /// multiples of the generators. Disagreement means a rewriting bug and
  /// fails loudly. Inhomogeneous inputs are split by degree.
  bool ideal_member(const ExteriorElement& x) const {
    for (int d : x.degrees()) {
      const ExteriorElement part = x.degree_part(d);
      const bool by_rewriting = normal_form(part).is_zero();
      const auto monos = monomials(d);
      std::map<SetMask, std::size_t> col;
      for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
      RationalRow vec(monos.size(), Rational(0));
      for (const auto& [s, cf] : part.terms()) vec[col.at(s)] = cf;
      const bool by_linear_algebra = in_row_span(ideal_span_rows(d), vec);
      if (by_rewriting != by_linear_algebra)
        throw std::logic_error("ideal_member: rewriting and linear algebra disagree");
      if (!by_rewriting) return false;
    }
    return true;
  }

 private:
  struct BrokenCircuit {
    SetMask broken = 0;
    SetMask circuit = 0;
    int tip = 0;               // order-minimal element of the circuit
    int tip_factor_index = 0;  // its 1-based ascending-id position
  };

  int order_min(SetMask s) const {
    int best = -1;
    for (int id : mask_ids(s))
      if (best < 0 || pos_[id] < pos_[best]) best = id;
    return best;
  }

  /// Mask re-encoded by order position; the termination measure.
  SetMask permuted(SetMask s) const {
    SetMask out = 0;
    for (int id : mask_ids(s)) out |= bit(pos_[id]);
    return out;
  }

  Matroid m_;
  std::vector<int> order_;  // order_[k] = element id with precedence k
  std::vector<int> pos_;    // pos_[id] = precedence of id
  std::vector<BrokenCircuit> broken_;
  std::vector<std::vector<SetMask>> nbc_;
};

/// Graded dimensions of A(M), computed as nbc counts and cross-checked
/// against the Poincare transform of chi; for ground sets of at most
/// linalg_check_max_ground elements, also against exact ranks of
/// Lambda^p / I^p (including dim 0 one degree past the rank). Any
/// disagreement between the routes is a hard error.
inline std::vector<long long> graded_dimensions(const OSAlgebra& a,
                                                int linalg_check_max_ground = 10) {
  const Matroid& m = a.matroid();
  const int r = rank(m);
  std::vector<long long> dims = a.nbc_counts();
  dims.resize(r + 1, 0);

  const UnivariatePolynomial predicted = poincare_from_chi(characteristic(m), r);
  for (int p = 0; p <= r; ++p) {
    if (predicted.coefficient(p) != dims[p])
      throw std::logic_error("graded_dimensions: nbc count disagrees with t^r chi(-1/t)");
  }

  if (m.size() <= linalg_check_max_ground) {
    for (int p = 0; p <= std::min(m.size(), r + 1); ++p) {
      const long long lambda_dim = static_cast<long long>(a.monomials(p).size());
      const long long ideal_rank = static_cast<long long>(rank_of(a.ideal_span_rows(p)));
      const long long expected = p <= r ? dims[p] : 0;
      if (lambda_dim - ideal_rank != expected)
        throw std::logic_error("graded_dimensions: exact quotient rank disagrees with nbc count");
    }
  }
  return dims;
}

/// Lattice of flats (closed subsets) with Mobius values mu(empty, X),
/// computed bottom-up over the containment order. Requires a loopless
/// matroid, so the bottom flat is the empty set.
struct FlatLattice {
  struct Flat {
    SetMask elements = 0;
    int rank = 0;
    Integer mobius;
  };
  std::vector<Flat> flats;  // ascending mask order; flats[0] is the bottom
};

inline FlatLattice flat_lattice(const Matroid& m) {
  if (m.size() > kMaxExhaustiveGround)
    throw std::invalid_argument("flat_lattice: ground set exceeds exhaustive cap");
  for (int id = 0; id < m.size(); ++id)
    if (is_loop(m, id)) throw std::invalid_argument("flat_lattice: loops unsupported");

  const RankProfile profile = rank_profile(m);
  auto closure = [&](SetMask s) {
    SetMask cl = s;
    for (int id = 0; id < m.size(); ++id)
      if (!contains(s, id) &&
          profile.rank_by_subset[s | bit(id)] == profile.rank_by_subset[s])
        cl |= bit(id);
    return cl;
  };

  FlatLattice lattice;
  const SetMask limit = m.size() == 0 ? 1 : (SetMask{1} << m.size());
  for (SetMask s = 0; s < limit; ++s)
    if (closure(s) == s)
      lattice.flats.push_back({s, profile.rank_by_subset[s], Integer(0)});

  // mu(0,X) = -sum of mu(0,Y) over flats Y strictly below X.
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    auto& x = lattice.flats[i];
    if (x.elements == 0) {
      x.mobius = 1;
      continue;
    }
    Integer value = 0;
    for (std::size_t j = 0; j < lattice.flats.size(); ++j) {
      const auto& y = lattice.flats[j];
      if (y.elements != x.elements && subset_of(y.elements, x.elements)) value -= y.mobius;
    }
    x.mobius = value;
  }
  return lattice;
}

/// Independent dimension oracle through the lattice of flats: sum over the
/// flats of each rank of |mu(0,X)|. Requires a loopless matroid (with a loop
/// the lattice only sees the simplification while A(M) collapses to zero).
inline std::vector<long long> whitney_dimensions(const Matroid& m) {
  const FlatLattice lattice = flat_lattice(m);
  std::vector<long long> dims(rank(m) + 1, 0);
  for (const auto& flat : lattice.flats) {
    Integer v = flat.mobius;
    if (v < 0) v = -v;
    dims[flat.rank] += v.convert_to<long long>();
  }
  return dims;
}

}  // namespace osforge
