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
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "osforge/matroid.hpp"
#include "osforge/rational.hpp"

namespace osforge {

// Monomials of the exterior algebra Lambda(E) are squarefree products of the
// degree-one generators, i.e. ground subsets; a monomial mask always stands
// for the product of its generators in ascending id order.

/// Sign of merging two disjoint ascending monomials: (-1)^inversions where
/// inversions counts pairs a in A, b in B with a > b. Returns 0 on overlap.
inline int wedge_sign(SetMask a, SetMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int i = 0; b >> i; ++i)
    if (contains(b, i)) inversions += popcount(a >> (i + 1));
  return inversions % 2 == 0 ? 1 : -1;
}

/// Rational linear combination of exterior monomials; the carrier of the
/// boundary operator, the OS ideal, and generator maps.
class ExteriorElement {
 public:
  ExteriorElement() = default;

  static ExteriorElement zero() { return {}; }

  static ExteriorElement unit() { return monomial(0, 1); }

  static ExteriorElement generator(int id) { return monomial(bit(id), 1); }

  static ExteriorElement monomial(SetMask s, Rational c) {
    ExteriorElement e;
    if (c != 0) e.terms_[s] = std::move(c);
    return e;
  }

  const std::map<SetMask, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  void add_term(SetMask s, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_[s] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ExteriorElement& operator+=(const ExteriorElement& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }

  ExteriorElement& operator-=(const ExteriorElement& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
  }

  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) {
    a += b;
    return a;
  }

  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) {
    a -= b;
    return a;
  }

  friend ExteriorElement operator*(const Rational& c, const ExteriorElement& e) {
    ExteriorElement r;
    if (c == 0) return r;
    for (const auto& [s, v] : e.terms_) r.terms_[s] = c * v;
    return r;
  }

  /// Exterior product with sign bookkeeping; overlapping monomials vanish.
  friend ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b) {
    ExteriorElement r;
    for (const auto& [sa, ca] : a.terms_) {
      for (const auto& [sb, cb] : b.terms_) {
        const int sign = wedge_sign(sa, sb);
        if (sign != 0) r.add_term(sa | sb, sign * ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Degree-p homogeneous component.
  ExteriorElement degree_part(int p) const {
    ExteriorElement r;
    for (const auto& [s, c] : terms_)
      if (popcount(s) == p) r.terms_[s] = c;
    return r;
  }

  /// Degrees with a nonzero component, ascending.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [s, c] : terms_) {
      const int d = popcount(s);
      if (out.empty() || out.back() != d) {
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_homogeneous() const { return degrees().size() <= 1; }

  std::string to_string(const Matroid& ground) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mask, c] : terms_) {
      const Rational mag = c < 0 ? Rational(-c) : c;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      std::string mono;
      for (int id : mask_ids(mask)) mono += "e[" + ground.label_of(id) + "]";
      if (mono.empty()) mono = "1";
      if (mag != 1 || mask == 0) s += rational_to_string(mag) + (mask == 0 ? "" : "*");
      s += mask == 0 ? "" : mono;
      if (mask == 0 && mag == 1) s += "1";
    }
    return s;
  }

 private:
  std::map<SetMask, Rational> terms_;  // ascending-id monomials, no zeros
};

/// The boundary: on a monomial e_{s1}...e_{sk} (ascending), the alternating
/// sum over dropping one factor, extended linearly. Degree -1, square zero.
inline ExteriorElement boundary(const ExteriorElement& x) {
  ExteriorElement r;
  for (const auto& [s, c] : x.terms()) {
    int position = 0;
    for (int id : mask_ids(s)) {
      ++position;  // 1-based factor index
      const Rational signed_c = (position % 2 == 1) ? c : Rational(-c);
      r.add_term(s & ~bit(id), signed_c);
    }
  }
  return r;
}

// JSON: {"terms": [{"monomial": ["1","3"], "num": 1, "den": 1}, ...]}
// Monomials are label lists for portability; a ground matroid resolves them.

inline nlohmann::json exterior_to_json(const ExteriorElement& x, const Matroid& ground) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mask, c] : x.terms()) {
    nlohmann::json t;
    t["monomial"] = ground.labels_of(mask);
    t["num"] = numerator(c).str();
    t["den"] = denominator(c).str();
    arr.push_back(t);
  }
  return nlohmann::json{{"terms", arr}};
}

inline ExteriorElement exterior_from_json(const nlohmann::json& j, const Matroid& ground) {
  ExteriorElement x;
  for (const auto& t : j.at("terms")) {
    const SetMask mask = ground.mask_of(t.at("monomial").get<std::vector<std::string>>());
    Rational num, den;
    // num/den arrive as JSON numbers or as decimal strings.
    if (t.at("num").is_string()) {
      num = Rational(Integer(t.at("num").get<std::string>()));
    } else {
      num = Rational(t.at("num").get<long long>());
    }
    if (t.at("den").is_string()) {
      den = Rational(Integer(t.at("den").get<std::string>()));
    } else {
      den = Rational(t.at("den").get<long long>());
    }
    if (den == 0) throw std::invalid_argument("exterior term with zero denominator");
    x.add_term(mask, num / den);
  }
  return x;
}

}  // namespace osforge
