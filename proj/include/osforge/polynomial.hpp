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
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace osforge {

// ---------------------------------------------------------------------------
// Integer bivariate polynomials in x, y (Tutte polynomials)

class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (x exponent, y exponent)

  BivariatePolynomial() = default;

  static BivariatePolynomial zero() { return {}; }
  static BivariatePolynomial constant(long long c) { return monomial(0, 0, c); }
  static BivariatePolynomial x() { return monomial(1, 0, 1); }
  static BivariatePolynomial y() { return monomial(0, 1, 1); }

  static BivariatePolynomial monomial(int xe, int ye, long long c) {
    BivariatePolynomial p;
    if (c != 0) p.terms_[{xe, ye}] = c;
    return p;
  }

  const std::map<Exponents, long long>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  long long coefficient(int xe, int ye) const {
    auto it = terms_.find({xe, ye});
    return it == terms_.end() ? 0 : it->second;
  }

  long long eval(long long xv, long long yv) const {
    long long total = 0;
    for (const auto& [e, c] : terms_) {
      long long t = c;
      for (int i = 0; i < e.first; ++i) t *= xv;
      for (int i = 0; i < e.second; ++i) t *= yv;
      total += t;
    }
    return total;
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    a += b;
    return a;
  }

  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    a -= b;
    return a;
  }

  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        p.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return p;
  }

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  bool all_coefficients_nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Deterministic display: total degree descending, then x exponent
  /// descending, e.g. "x^2 + x + y".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, long long>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      const int da = a.first.first + a.first.second;
      const int db = b.first.first + b.first.second;
      if (da != db) return da > db;
      return a.first.first > b.first.first;
    });
    std::string s;
    for (const auto& [e, c] : sorted) {
      const long long mag = c < 0 ? -c : c;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      std::string mono;
      if (e.first > 0) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
      if (e.second > 0) mono += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
      if (mono.empty() || mag != 1) s += std::to_string(mag);
      s += mono;
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
      arr.push_back({{"x", e.first}, {"y", e.second}, {"c", c}});
    return nlohmann::json{{"terms", arr}};
  }

  static BivariatePolynomial from_json(const nlohmann::json& j) {
    BivariatePolynomial p;
    for (const auto& t : j.at("terms"))
      p.add_term({t.at("x").get<int>(), t.at("y").get<int>()}, t.at("c").get<long long>());
    return p;
  }

 private:
  void add_term(Exponents e, long long c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, long long> terms_;  // no zero coefficients stored
};

// ---------------------------------------------------------------------------
// Integer univariate polynomials in t (characteristic polynomials,
// graded-dimension generating functions)

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;

  explicit UnivariatePolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static UnivariatePolynomial constant(long long c) {
    return UnivariatePolynomial(std::vector<long long>{c});
  }

  static UnivariatePolynomial t() { return UnivariatePolynomial({0, 1}); }

  /// Ascending coefficients, trailing zeros trimmed; empty means zero.
  const std::vector<long long>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  long long coefficient(int k) const {
    return (k < 0 || k >= static_cast<int>(coeffs_.size())) ? 0 : coeffs_[k];
  }

  long long eval(long long tv) const {
    long long total = 0;
    for (int k = degree(); k >= 0; --k) total = total * tv + coeffs_[k];
    return total;
  }

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    a += b;
    return a;
  }

  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    UnivariatePolynomial r = a;
    if (b.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size(), 0);
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r.coeffs_[k] -= b.coeffs_[k];
    r.trim();
    return r;
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(c));
  }

  UnivariatePolynomial pow(int e) const {
    UnivariatePolynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const long long c = coeffs_[k];
      if (c == 0) continue;
      const long long mag = c < 0 ? -c : c;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      std::string mono;
      if (k > 0) mono = k == 1 ? var : var + "^" + std::to_string(k);
      if (mono.empty() || mag != 1) s += std::to_string(mag);
      s += mono;
    }
    return s;
  }

  nlohmann::json to_json() const { return nlohmann::json{{"coeffs", coeffs_}}; }

  static UnivariatePolynomial from_json(const nlohmann::json& j) {
    return UnivariatePolynomial(j.at("coeffs").get<std::vector<long long>>());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<long long> coeffs_;
};

}  // namespace osforge
