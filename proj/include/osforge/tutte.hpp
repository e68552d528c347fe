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
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "osforge/matroid.hpp"
#include "osforge/polynomial.hpp"

namespace osforge {

/// Chooses the deletion-contraction pivot among elements that are neither
/// loops nor isthmuses. The default takes the lowest id, so results are
/// reproducible; the Tutte polynomial itself is pivot-order invariant.
using PivotChooser = std::function<int(const Matroid&)>;

inline int lowest_id_pivot(const Matroid& m) {
  for (int id = 0; id < m.size(); ++id)
    if (!is_loop(m, id) && !is_isthmus(m, id)) return id;
  throw std::logic_error("no pivot available");
}

namespace detail {

/// Isomorphism-invariant memo key: relabel elements by (circuit profile, id)
/// and re-express the circuit set. Equal keys mean literally equal relabeled
/// circuit systems, hence isomorphic minors; distinct keys for isomorphic
/// minors only cost cache misses.
inline std::vector<SetMask> tutte_memo_key(const Matroid& m) {
  const int n = m.size();
  std::vector<std::pair<std::vector<int>, int>> tagged(n);
  for (int i = 0; i < n; ++i) tagged[i] = {circuit_profile(m, i), i};
  std::sort(tagged.begin(), tagged.end());
  std::vector<int> new_id(n);
  for (int pos = 0; pos < n; ++pos) new_id[tagged[pos].second] = pos;
  std::vector<SetMask> key;
  key.reserve(m.circuits().size() + 1);
  key.push_back(static_cast<SetMask>(n));
  std::vector<SetMask> circuits;
  for (SetMask c : m.circuits()) {
    SetMask img = 0;
    for (int e : mask_ids(c)) img |= bit(new_id[e]);
    circuits.push_back(img);
  }
  std::sort(circuits.begin(), circuits.end());
  key.insert(key.end(), circuits.begin(), circuits.end());
  return key;
}

using TutteMemo = std::map<std::vector<SetMask>, BivariatePolynomial>;

inline BivariatePolynomial tutte_rec(const Matroid& m, const PivotChooser& pivot,
                                     TutteMemo& memo) {
  // Empty matroid: 1 by the empty-product convention of the factor rule.
  if (m.size() == 0) return BivariatePolynomial::constant(1);

  int loops = 0, isthmuses = 0;
  Matroid core = m;
  for (int id = core.size() - 1; id >= 0; --id) {
    if (is_loop(core, id)) {
      ++loops;
      core = deletion(core, id);
    } else if (is_isthmus(core, id)) {
      ++isthmuses;
      core = deletion(core, id);
    }
  }
  BivariatePolynomial factor = BivariatePolynomial::monomial(isthmuses, loops, 1);
  if (core.size() == 0) return factor;

  const auto key = tutte_memo_key(core);
  auto it = memo.find(key);
  if (it != memo.end()) return factor * it->second;

  const int e = pivot(core);
  if (is_loop(core, e) || is_isthmus(core, e))
    throw std::invalid_argument("pivot chooser returned a loop or isthmus");
  BivariatePolynomial result =
      tutte_rec(deletion(core, e), pivot, memo) + tutte_rec(contraction(core, e), pivot, memo);
  memo.emplace(std::move(key), result);
  return factor * result;
}

}  // namespace detail

/// Tutte polynomial by deletion-contraction with memoization on a canonical
/// circuit signature. Base cases: x for an isthmus, y for a loop, product
/// rule for their mixtures, T = 1 for the empty matroid.
inline BivariatePolynomial tutte(const Matroid& m, const PivotChooser& pivot) {
  detail::TutteMemo memo;  // per-computation cache
  return detail::tutte_rec(m, pivot, memo);
}

inline BivariatePolynomial tutte(const Matroid& m) { return tutte(m, lowest_id_pivot); }

/// Checks T_{M0 + M1} = T_{M0} T_{M1} on the nose.
inline bool tutte_product_check(const Matroid& a, const Matroid& b) {
  return tutte(direct_sum(a, b)) == tutte(a) * tutte(b);
}

/// Closed form for the cycle: sum_{i=1}^{n-1} x^i + y.
inline BivariatePolynomial cycle_tutte(int n) {
  if (n < 2) throw std::invalid_argument("cycle_tutte: n must be >= 2");
  BivariatePolynomial p = BivariatePolynomial::y();
  for (int i = 1; i <= n - 1; ++i) p += BivariatePolynomial::monomial(i, 0, 1);
  return p;
}

namespace detail {

inline BivariatePolynomial x_power_sum(int lo, int hi) {
  BivariatePolynomial p;
  for (int i = lo; i <= hi; ++i) p += BivariatePolynomial::monomial(i, 0, 1);
  return p;
}

}  // namespace detail

/// Tutte polynomial of the parallel connection P(C_n, M0) built by the
/// recursion T_{P^n} = x^{n-2} T_{M0} + T_{P^{n-1}} from the base case
/// T_{P^2} = T_{M0} + y T_{M0/b}; the closed form
/// (sum_{i=0}^{n-2} x^i) T_{M0} + y T_{M0/b} is asserted on the way out.
inline BivariatePolynomial parallel_connection_tutte(const BivariatePolynomial& seed,
                                                     const BivariatePolynomial& seed_contract,
                                                     int n) {
  if (n < 2) throw std::invalid_argument("parallel_connection_tutte: n must be >= 2");
  BivariatePolynomial p = seed + BivariatePolynomial::y() * seed_contract;
  for (int k = 3; k <= n; ++k)
    p += BivariatePolynomial::monomial(k - 2, 0, 1) * seed;
  const BivariatePolynomial closed =
      detail::x_power_sum(0, n - 2) * seed + BivariatePolynomial::y() * seed_contract;
  if (!(p == closed))
    throw std::logic_error("parallel_connection_tutte: recursion disagrees with closed form");
  return p;
}

/// (sum_{i=1}^{n-1} x^i + y) T_{M0}: the direct-sum family member.
inline BivariatePolynomial closed_form_direct_sum_family(const BivariatePolynomial& seed, int n) {
  if (n < 2) throw std::invalid_argument("closed form: n must be >= 2");
  return cycle_tutte(n) * seed;
}

/// (sum_{i=1}^{n-1} x^i) T_{M0} + x y T_{M0/b}: the parallel family member
/// (isthmus factor x times the parallel-connection recursion).
inline BivariatePolynomial closed_form_parallel_family(const BivariatePolynomial& seed,
                                                       const BivariatePolynomial& seed_contract,
                                                       int n) {
  if (n < 2) throw std::invalid_argument("closed form: n must be >= 2");
  const BivariatePolynomial direct =
      detail::x_power_sum(1, n - 1) * seed +
      BivariatePolynomial::monomial(1, 1, 1) * seed_contract;
  const BivariatePolynomial via_recursion =
      BivariatePolynomial::x() * parallel_connection_tutte(seed, seed_contract, n);
  if (!(direct == via_recursion))
    throw std::logic_error("closed_form_parallel_family: recursion route disagrees");
  return direct;
}

/// Characteristic polynomial chi(t) = T(1-t, 0), exactly.
inline UnivariatePolynomial characteristic(const Matroid& m) {
  const BivariatePolynomial t = tutte(m);
  const UnivariatePolynomial one_minus_t({1, -1});
  UnivariatePolynomial chi;
  for (const auto& [e, c] : t.terms()) {
    if (e.second != 0) continue;
    chi += UnivariatePolynomial::constant(c) * one_minus_t.pow(e.first);
  }
  return chi;
}

inline UnivariatePolynomial characteristic_from_tutte(const BivariatePolynomial& t) {
  const UnivariatePolynomial one_minus_t({1, -1});
  UnivariatePolynomial chi;
  for (const auto& [e, c] : t.terms()) {
    if (e.second != 0) continue;
    chi += UnivariatePolynomial::constant(c) * one_minus_t.pow(e.first);
  }
  return chi;
}

/// Beta invariant: the coefficient of x^1 y^0 in the Tutte polynomial.
/// Nonzero exactly for connected matroids; refuses ground sets smaller than
/// two, where the value is convention-dependent.
inline long long beta_invariant(const Matroid& m) {
  if (m.size() < 2)
    throw std::invalid_argument("beta_invariant: ground set must have at least 2 elements");
  return tutte(m).coefficient(1, 0);
}

/// t^r chi(-1/t): the generating function of the predicted graded dimensions
/// of the OS algebra. Throws if the result is not a polynomial with
/// non-negative coefficients (a rank/chi mismatch).
inline UnivariatePolynomial poincare_from_chi(const UnivariatePolynomial& chi, int r) {
  if (r < 0) throw std::invalid_argument("poincare_from_chi: negative rank");
  if (chi.degree() > r)
    throw std::invalid_argument("poincare_from_chi: chi degree exceeds rank, non-polynomial result");
  std::vector<long long> coeffs(r + 1, 0);
  for (int j = 0; j <= r; ++j) {
    const long long c = chi.coefficient(r - j);
    coeffs[j] = ((r - j) % 2 == 0) ? c : -c;
    if (coeffs[j] < 0)
      throw std::invalid_argument("poincare_from_chi: negative coefficient, rank/chi mismatch");
  }
  return UnivariatePolynomial(std::move(coeffs));
}

/// Brute-force basis count: independent subsets of full-rank size. Oracle
/// for T(1,1); exponential, so desk scale only.
inline long long count_bases(const Matroid& m) {
  if (m.size() > 20) throw std::invalid_argument("count_bases: ground set exceeds 20 elements");
  const int r = rank(m);
  long long count = 0;
  const SetMask limit = m.size() == 0 ? 1 : (SetMask{1} << m.size());
  for (SetMask s = 0; s < limit; ++s)
    if (popcount(s) == r && is_independent(m, s)) ++count;
  return count;
}

}  // namespace osforge
