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
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "osforge/constructions.hpp"
#include "osforge/linalg.hpp"
#include "osforge/matroid.hpp"
#include "osforge/rational.hpp"

namespace osforge {

// ---------------------------------------------------------------------------
// Linear forms and arrangements, exact over the rationals

struct LinearForm {
  std::map<std::string, Rational> coeffs;  // variable name -> coefficient, no zeros
  Rational constant = 0;

  bool is_zero() const { return coeffs.empty() && constant == 0; }
  bool is_central() const { return constant == 0; }

  void set(const std::string& var, Rational c) {
    if (c == 0) {
      coeffs.erase(var);
    } else {
      coeffs[var] = std::move(c);
    }
  }

  Rational coefficient(const std::string& var) const {
    auto it = coeffs.find(var);
    return it == coeffs.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs == b.coeffs && a.constant == b.constant;
  }
};

namespace detail {

/// Proportionality of full (coefficients, constant) vectors: the "same
/// hyperplane up to scalar" test.
inline bool proportional(const LinearForm& a, const LinearForm& b,
                         const std::vector<std::string>& variables) {
  Rational ratio = 0;
  bool have_ratio = false;
  auto step = [&](const Rational& x, const Rational& y) {
    if (x == 0 && y == 0) return true;
    if (x == 0 || y == 0) return false;
    if (!have_ratio) {
      ratio = x / y;
      have_ratio = true;
      return true;
    }
    return x == ratio * y;
  };
  for (const auto& v : variables)
    if (!step(a.coefficient(v), b.coefficient(v))) return false;
  return step(a.constant, b.constant);
}

}  // namespace detail

/// A finite list of affine-linear forms over named variables. Central iff
/// every constant term vanishes. Repeated hyperplanes (proportional forms)
/// are rejected unless explicitly allowed, which some realizations of
/// non-simple matroids need.
class Arrangement {
 public:
  Arrangement() = default;

  Arrangement(std::vector<std::string> variables, std::vector<LinearForm> forms,
              bool allow_proportional = false)
      : variables_(std::move(variables)),
        forms_(std::move(forms)),
        allow_proportional_(allow_proportional) {
    std::set<std::string> seen;
    for (const auto& v : variables_)
      if (!seen.insert(v).second)
        throw std::invalid_argument("arrangement: duplicate variable '" + v + "'");
    for (const auto& f : forms_) {
      if (f.is_zero()) throw std::invalid_argument("arrangement: identically zero form");
      for (const auto& [v, c] : f.coeffs)
        if (!seen.count(v))
          throw std::invalid_argument("arrangement: form uses undeclared variable '" + v + "'");
    }
    if (!allow_proportional_) {
      for (std::size_t i = 0; i < forms_.size(); ++i)
        for (std::size_t j = i + 1; j < forms_.size(); ++j)
          if (detail::proportional(forms_[i], forms_[j], variables_))
            throw std::invalid_argument("arrangement: proportional forms " + std::to_string(i) +
                                        " and " + std::to_string(j));
    }
  }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<LinearForm>& forms() const { return forms_; }
  bool proportional_allowed() const { return allow_proportional_; }

  std::size_t size() const { return forms_.size(); }

  bool is_central() const {
    for (const auto& f : forms_)
      if (!f.is_central()) return false;
    return true;
  }

 private:
  std::vector<std::string> variables_;
  std::vector<LinearForm> forms_;
  bool allow_proportional_ = false;
};

// ---------------------------------------------------------------------------
// Sparse exact multivariate polynomials (defining polynomials)

class MultivariatePolynomial {
 public:
  MultivariatePolynomial() = default;

  explicit MultivariatePolynomial(std::vector<std::string> variables)
      : variables_(std::move(variables)) {}

  static MultivariatePolynomial constant(std::vector<std::string> variables, Rational c) {
    MultivariatePolynomial p(std::move(variables));
    if (c != 0) p.terms_[std::vector<int>(p.variables_.size(), 0)] = std::move(c);
    return p;
  }

  static MultivariatePolynomial from_form(const std::vector<std::string>& variables,
                                          const LinearForm& f) {
    MultivariatePolynomial p(variables);
    for (std::size_t i = 0; i < variables.size(); ++i) {
      const Rational c = f.coefficient(variables[i]);
      if (c == 0) continue;
      std::vector<int> e(variables.size(), 0);
      e[i] = 1;
      p.terms_[std::move(e)] = c;
    }
    if (f.constant != 0) p.terms_[std::vector<int>(variables.size(), 0)] = f.constant;
    return p;
  }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                          const MultivariatePolynomial& b) {
    if (a.variables_ != b.variables_)
      throw std::invalid_argument("polynomial product: variable lists differ");
    MultivariatePolynomial p(a.variables_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        const Rational prod = ca * cb;
        auto [it, inserted] = p.terms_.try_emplace(std::move(e), prod);
        if (!inserted) {
          it->second += prod;
          if (it->second == 0) p.terms_.erase(it);
        }
      }
    }
    return p;
  }

  friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  /// Same polynomial re-indexed over a different variable list (a
  /// permutation or superset of the current one).
  MultivariatePolynomial aligned_to(const std::vector<std::string>& variables) const {
    MultivariatePolynomial p(variables);
    for (const auto& [e, c] : terms_) {
      std::vector<int> out(variables.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        const auto it = std::find(variables.begin(), variables.end(), variables_[i]);
        if (it == variables.end())
          throw std::invalid_argument("aligned_to: variable '" + variables_[i] + "' missing");
        out[it - variables.begin()] = e[i];
      }
      p.terms_[std::move(out)] = c;
    }
    return p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::vector<int>, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (int e : a.first) da += e;
      for (int e : b.first) db += e;
      if (da != db) return da > db;
      return a.first > b.first;
    });
    std::string s;
    for (const auto& [e, c] : sorted) {
      const Rational mag = c < 0 ? Rational(-c) : c;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += variables_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        s += rational_to_string(mag);
      } else {
        if (mag != 1) s += rational_to_string(mag) + "*";
        s += mono;
      }
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
      terms.push_back({{"exps", e}, {"c", rational_to_string(c)}});
    return nlohmann::json{
        {"variables", variables_}, {"terms", terms}, {"string", to_string()}};
  }

 private:
  std::vector<std::string> variables_;
  std::map<std::vector<int>, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Arrangement operations

/// Q(A): the expanded product of the forms. The factorization stays
/// recoverable from the form list, never from this expansion.
inline MultivariatePolynomial defining_polynomial(const Arrangement& a) {
  MultivariatePolynomial q = MultivariatePolynomial::constant(a.variables(), 1);
  for (const auto& f : a.forms())
    q = q * MultivariatePolynomial::from_form(a.variables(), f);
  return q;
}

namespace detail {

/// Index of the first form supported on the first variable alone, or -1.
inline int first_axis_form(const Arrangement& a) {
  if (a.variables().empty()) return -1;
  const std::string& x1 = a.variables().front();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& f = a.forms()[i];
    if (f.is_central() && f.coeffs.size() == 1 && f.coeffs.count(x1)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace detail

/// Coordinate change making the designated form the first coordinate: the
/// output has variables x1..xr and its designated form is literally x1.
/// Exact rational change of basis; requires a central arrangement.
inline Arrangement normalize_first(const Arrangement& a, std::size_t form_index) {
  if (!a.is_central()) throw std::invalid_argument("normalize_first: arrangement not central");
  if (form_index >= a.size()) throw std::invalid_argument("normalize_first: no such form");
  const std::size_t r = a.variables().size();
  const LinearForm& phi = a.forms()[form_index];

  // Basis matrix: first row the designated coefficients, completed with unit
  // rows skipping the pivot variable.
  RationalMatrix basis(r, RationalRow(r, Rational(0)));
  std::size_t pivot = r;
  for (std::size_t j = 0; j < r; ++j) {
    basis[0][j] = phi.coefficient(a.variables()[j]);
    if (pivot == r && basis[0][j] != 0) pivot = j;
  }
  if (pivot == r) throw std::invalid_argument("normalize_first: designated form is zero");
  std::size_t row = 1;
  for (std::size_t j = 0; j < r; ++j) {
    if (j == pivot) continue;
    basis[row][j] = 1;
    ++row;
  }
  const RationalMatrix inv = invert(basis).inverse;

  std::vector<std::string> new_vars;
  for (std::size_t j = 1; j <= r; ++j) new_vars.push_back("x" + std::to_string(j));
  std::vector<LinearForm> new_forms;
  for (std::size_t fi = 0; fi < a.size(); ++fi) {
    const LinearForm& f = a.forms()[fi];
    LinearForm g;
    for (std::size_t j = 0; j < r; ++j) {
      Rational c = 0;
      for (std::size_t k = 0; k < r; ++k)
        c += f.coefficient(a.variables()[k]) * inv[k][j];
      g.set(new_vars[j], c);
    }
    new_forms.push_back(std::move(g));
  }
  // Reorder so the designated form comes first.
  std::swap(new_forms[0], new_forms[form_index]);
  return Arrangement(std::move(new_vars), std::move(new_forms), a.proportional_allowed());
}

/// Decone: substitute first-variable = 1 in every form except the
/// designated one (which must be supported on the first variable alone) and
/// forget that variable. The designated hyperplane becomes the hyperplane at
/// infinity of the affine result.
inline Arrangement decone(const Arrangement& a, std::size_t form_index) {
  if (!a.is_central()) throw std::invalid_argument("decone: arrangement not central");
  if (form_index >= a.size()) throw std::invalid_argument("decone: no such form");
  if (a.variables().empty()) throw std::invalid_argument("decone: no variables");
  const std::string& x1 = a.variables().front();
  const LinearForm& h = a.forms()[form_index];
  if (!(h.coeffs.size() == 1 && h.coeffs.count(x1)))
    throw std::invalid_argument(
        "decone: designated form is not the first coordinate (apply normalize_first)");

  std::vector<std::string> new_vars(a.variables().begin() + 1, a.variables().end());
  std::vector<LinearForm> new_forms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == form_index) continue;
    const LinearForm& f = a.forms()[i];
    LinearForm g;
    g.constant = f.coefficient(x1);  // x1 = 1
    for (const auto& v : new_vars) g.set(v, f.coefficient(v));
    if (g.coeffs.empty())
      throw std::invalid_argument("decone: form " + std::to_string(i) +
                                  " is parallel to the designated hyperplane");
    new_forms.push_back(std::move(g));
  }
  return Arrangement(std::move(new_vars), std::move(new_forms), a.proportional_allowed());
}

/// Direct sum over disjoint variable sets: the union of the forms, with
/// defining polynomial Q0 * Q1.
inline Arrangement direct_sum(const Arrangement& a, const Arrangement& b) {
  std::vector<std::string> vars = a.variables();
  for (const auto& v : b.variables()) {
    if (std::find(vars.begin(), vars.end(), v) != vars.end())
      throw std::invalid_argument("arrangement direct_sum: variable collision on '" + v + "'");
    vars.push_back(v);
  }
  std::vector<LinearForm> forms = a.forms();
  forms.insert(forms.end(), b.forms().begin(), b.forms().end());
  return Arrangement(std::move(vars), std::move(forms),
                     a.proportional_allowed() || b.proportional_allowed());
}

namespace detail {

inline Arrangement rename_positional(const Arrangement& a,
                                     const std::vector<std::string>& new_vars) {
  std::vector<LinearForm> forms;
  for (const auto& f : a.forms()) {
    LinearForm g;
    g.constant = f.constant;
    for (std::size_t j = 0; j < a.variables().size(); ++j)
      g.set(new_vars[j], f.coefficient(a.variables()[j]));
    forms.push_back(std::move(g));
  }
  return Arrangement(new_vars, std::move(forms), a.proportional_allowed());
}

}  // namespace detail

/// Parallel connection of central arrangements that both contain their own
/// first-coordinate hyperplane (after normalize_first). Coordinates become
/// (x1..x_{r0}, y2..y_{r1}); a0's forms are kept verbatim, a1 contributes
/// its forms minus its first-coordinate hyperplane with x1 shared, so the
/// identified hyperplane appears exactly once and the defining polynomial is
/// Q0(x) * Qhat1(x1, y2..y_{r1}).
inline Arrangement parallel_connection(const Arrangement& a0, const Arrangement& a1) {
  if (!a0.is_central() || !a1.is_central())
    throw std::invalid_argument("arrangement parallel_connection: inputs must be central");
  const int i0 = detail::first_axis_form(a0);
  const int i1 = detail::first_axis_form(a1);
  if (i0 < 0 || i1 < 0)
    throw std::invalid_argument(
        "arrangement parallel_connection: missing shared first-coordinate hyperplane "
        "(apply normalize_first)");

  const std::size_t r0 = a0.variables().size();
  const std::size_t r1 = a1.variables().size();
  std::vector<std::string> vars0;
  for (std::size_t j = 1; j <= r0; ++j) vars0.push_back("x" + std::to_string(j));
  std::vector<std::string> vars1{"x1"};
  for (std::size_t j = 2; j <= r1; ++j) vars1.push_back("y" + std::to_string(j));

  const Arrangement b0 = detail::rename_positional(a0, vars0);
  const Arrangement b1 = detail::rename_positional(a1, vars1);

  std::vector<std::string> vars = vars0;
  for (std::size_t j = 2; j <= r1; ++j) vars.push_back("y" + std::to_string(j));
  std::vector<LinearForm> forms = b0.forms();
  for (std::size_t i = 0; i < b1.size(); ++i) {
    if (static_cast<int>(i) == i1) continue;
    forms.push_back(b1.forms()[i]);
  }
  return Arrangement(std::move(vars), std::move(forms),
                     a0.proportional_allowed() || a1.proportional_allowed());
}

/// Matroid of the normal-vector configuration of a central arrangement:
/// circuits are the minimal supports of rational linear dependencies among
/// the forms. Elements are labeled h1..hn by form index.
inline Matroid underlying_matroid(const Arrangement& a) {
  if (!a.is_central()) throw std::invalid_argument("underlying_matroid: arrangement not central");
  const int n = static_cast<int>(a.size());
  if (n > kMaxExhaustiveGround)
    throw std::invalid_argument("underlying_matroid: more than 14 forms");

  std::vector<RationalRow> vectors;
  for (const auto& f : a.forms()) {
    RationalRow v;
    for (const auto& var : a.variables()) v.push_back(f.coefficient(var));
    vectors.push_back(std::move(v));
  }
  const SetMask limit = n == 0 ? 1 : (SetMask{1} << n);
  std::vector<bool> independent(limit, true);
  for (SetMask s = 1; s < limit; ++s) {
    RationalMatrix rows;
    for (int i : mask_ids(s)) rows.push_back(vectors[i]);
    independent[s] = rank_of(std::move(rows)) == static_cast<std::size_t>(popcount(s));
  }
  std::vector<SetMask> circuits;
  for (SetMask s = 1; s < limit; ++s) {
    if (independent[s]) continue;
    bool minimal = true;
    for (int i : mask_ids(s)) {
      if (!independent[s & ~bit(i)]) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(s);
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("h" + std::to_string(i));
  return Matroid(std::move(labels), std::move(circuits));
}

/// n hyperplanes in general position in (n-1)-space: the coordinate
/// hyperplanes plus the all-ones form; genericity (every (n-1)-subset
/// independent) is verified exactly, not assumed. At n = 2 the output is a
/// doubled line realizing the parallel pair.
inline Arrangement realize_generic(int n) {
  if (n < 2) throw std::invalid_argument("realize_generic: n must be >= 2");
  const int r = n - 1;
  std::vector<std::string> vars;
  for (int j = 1; j <= r; ++j) vars.push_back("x" + std::to_string(j));
  std::vector<LinearForm> forms;
  for (int j = 0; j < r; ++j) {
    LinearForm f;
    f.set(vars[j], 1);
    forms.push_back(std::move(f));
  }
  LinearForm last;
  if (n == 2) {
    last.set(vars[0], 2);
  } else {
    for (const auto& v : vars) last.set(v, 1);
  }
  forms.push_back(std::move(last));
  Arrangement a(std::move(vars), std::move(forms), n == 2);
  // Exact genericity check.
  const Matroid m = underlying_matroid(a);
  for (SetMask s = 0; s < (SetMask{1} << n); ++s) {
    if (popcount(s) != n - 1) continue;
    if (!is_independent(m, s))
      throw std::logic_error("realize_generic: produced a dependent (n-1)-subset");
  }
  return a;
}

/// Graphic arrangement: one variable per non-root vertex, the root pinned to
/// zero; edge {u,v} gives the form z_u - z_v. Realizes the polygon matroid
/// of a loopless graph; parallel edges give repeated hyperplanes.
inline Arrangement realize_graphic(const Graph& g) {
  check_graph(g);
  if (g.vertices.empty()) throw std::invalid_argument("realize_graphic: empty graph");
  bool has_parallel = false;
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : g.edges) {
    if (e.u == e.v) throw std::invalid_argument("realize_graphic: loops are not realizable");
    if (!pairs.insert(std::minmax(e.u, e.v)).second) has_parallel = true;
  }
  std::vector<std::string> vars;
  for (std::size_t v = 1; v < g.vertices.size(); ++v) vars.push_back("z" + std::to_string(v));
  auto var_of = [&](int v) { return "z" + std::to_string(v); };
  std::vector<LinearForm> forms;
  for (const auto& e : g.edges) {
    LinearForm f;
    if (e.u != 0) f.set(var_of(e.u), 1);
    if (e.v != 0) f.set(var_of(e.v), f.coefficient(var_of(e.v)) - 1);
    forms.push_back(std::move(f));
  }
  return Arrangement(std::move(vars), std::move(forms), has_parallel);
}

// ---------------------------------------------------------------------------
// The decone identity behind the diffeomorphism statement

struct HomoIdentityReport {
  bool identity_holds = false;
  MultivariatePolynomial lhs;  // defining polynomial of decone(P(A0, A1))
  MultivariatePolynomial rhs;  // defining polynomial of dA0 + dA1
  // C* factor bookkeeping of the two product decompositions; 2 on each side.
  int cstar_factors_lhs = 2;
  int cstar_factors_rhs = 2;
};

/// Verifies, as an exact polynomial identity, that deconing the parallel
/// connection yields the direct sum of the decones:
///   Q(decone(P(A0,A1))) = Qhat0(1, x2..) * Qhat1(1, y2..).
/// Both sides are expanded independently from their own form lists.
inline HomoIdentityReport verify_homo_identity(const Arrangement& a0, const Arrangement& a1) {
  if (!a0.is_central() || !a1.is_central())
    throw std::invalid_argument("verify_homo_identity: inputs must be central");
  const int i0 = detail::first_axis_form(a0);
  const int i1 = detail::first_axis_form(a1);
  if (i0 < 0 || i1 < 0)
    throw std::invalid_argument(
        "verify_homo_identity: inputs must contain their first-coordinate hyperplane");

  std::vector<std::string> vars0, vars1{"x1"};
  for (std::size_t j = 1; j <= a0.variables().size(); ++j)
    vars0.push_back("x" + std::to_string(j));
  for (std::size_t j = 2; j <= a1.variables().size(); ++j)
    vars1.push_back("y" + std::to_string(j));
  const Arrangement b0 = detail::rename_positional(a0, vars0);
  const Arrangement b1 = detail::rename_positional(a1, vars1);

  const Arrangement p = parallel_connection(a0, a1);
  const int ip = detail::first_axis_form(p);
  if (ip < 0) throw std::logic_error("verify_homo_identity: parallel connection lost x1");

  HomoIdentityReport rep;
  rep.lhs = defining_polynomial(decone(p, static_cast<std::size_t>(ip)));
  rep.rhs = defining_polynomial(
      direct_sum(decone(b0, static_cast<std::size_t>(i0)),
                 decone(b1, static_cast<std::size_t>(i1))));
  rep.identity_holds = rep.lhs == rep.rhs;
  return rep;
}

// ---------------------------------------------------------------------------
// JSON: {"variables": ["x1","x2"], "forms": [{"coeffs": {"x1": "1"},
// "const": "0"}, ...]} with rationals as "p" or "p/q" strings.

inline nlohmann::json arrangement_to_json(const Arrangement& a) {
  nlohmann::json forms = nlohmann::json::array();
  for (const auto& f : a.forms()) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [v, c] : f.coeffs) coeffs[v] = rational_to_string(c);
    forms.push_back({{"coeffs", coeffs}, {"const", rational_to_string(f.constant)}});
  }
  nlohmann::json j;
  j["variables"] = a.variables();
  j["forms"] = forms;
  if (a.proportional_allowed()) j["allow_proportional"] = true;
  return j;
}

inline Arrangement arrangement_from_json(const nlohmann::json& j) {
  std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
  std::vector<LinearForm> forms;
  for (const auto& jf : j.at("forms")) {
    LinearForm f;
    for (const auto& [v, c] : jf.at("coeffs").items())
      f.set(v, rational_from_string(c.get<std::string>()));
    if (jf.contains("const")) f.constant = rational_from_string(jf.at("const").get<std::string>());
    forms.push_back(std::move(f));
  }
  const bool allow = j.value("allow_proportional", false);
  return Arrangement(std::move(vars), std::move(forms), allow);
}

}  // namespace osforge
