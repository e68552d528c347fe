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

#include <random>

#include <catch_amalgamated.hpp>

#include "osforge/constructions.hpp"
#include "osforge/exterior.hpp"
#include "osforge/matroid.hpp"

using namespace osforge;

namespace {

ExteriorElement e(std::initializer_list<int> ids) {
  SetMask s = 0;
  for (int id : ids) s |= bit(id);
  return ExteriorElement::monomial(s, 1);
}

ExteriorElement random_element(std::mt19937& rng, int ground, int max_terms) {
  std::uniform_int_distribution<SetMask> mask(0, (SetMask{1} << ground) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  ExteriorElement x;
  for (int t = 0; t < max_terms; ++t)
    x.add_term(mask(rng), Rational(coeff(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("wedge signs") {
  CHECK(wedge_sign(bit(0), bit(1)) == 1);
  CHECK(wedge_sign(bit(1), bit(0)) == -1);
  CHECK(wedge_sign(bit(0) | bit(2), bit(1)) == -1);
  CHECK(wedge_sign(bit(0), bit(0)) == 0);

  CHECK(e({0}) * e({1}) == ExteriorElement::monomial(bit(0) | bit(1), 1));
  CHECK(e({1}) * e({0}) == ExteriorElement::monomial(bit(0) | bit(1), -1));
  CHECK((e({0}) * e({0})).is_zero());
}

TEST_CASE("wedge is associative and bilinear on random elements") {
  std::mt19937 rng(2026);
  for (int round = 0; round < 50; ++round) {
    const auto a = random_element(rng, 6, 3);
    const auto b = random_element(rng, 6, 3);
    const auto c = random_element(rng, 6, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("boundary on small monomials") {
  CHECK(boundary(e({0, 1})) == e({1}) - e({0}));
  CHECK(boundary(e({0, 1, 2})) == e({1, 2}) - e({0, 2}) + e({0, 1}));
  CHECK(boundary(e({0})) == ExteriorElement::unit());
  CHECK(boundary(ExteriorElement::unit()).is_zero());
  CHECK(boundary(boundary(e({0, 1, 2}))).is_zero());
}

TEST_CASE("boundary is linear and squares to zero") {
  std::mt19937 rng(97);
  for (int round = 0; round < 100; ++round) {
    const auto a = random_element(rng, 8, 4);
    const auto b = random_element(rng, 8, 4);
    CHECK(boundary(a + b) == boundary(a) + boundary(b));
    CHECK(boundary(boundary(a)).is_zero());
  }
}

TEST_CASE("telescoped products of consecutive differences") {
  // prod_{i=1}^{n-1} (e_i - e_{i+1}) equals the boundary of the full
  // monomial, up to the sign (-1)^(n-1).
  for (int n = 2; n <= 5; ++n) {
    ExteriorElement prod = ExteriorElement::unit();
    for (int i = 0; i + 1 < n; ++i)
      prod = prod * (ExteriorElement::generator(i) - ExteriorElement::generator(i + 1));
    SetMask full = (SetMask{1} << n) - 1;
    ExteriorElement expected = boundary(ExteriorElement::monomial(full, 1));
    if (n % 2 == 0) expected = Rational(-1) * expected;
    CHECK(prod == expected);
  }
}

TEST_CASE("degree bookkeeping") {
  const ExteriorElement x = e({0, 1}) + e({2}) + ExteriorElement::unit();
  CHECK(x.degrees() == std::vector<int>{0, 1, 2});
  CHECK_FALSE(x.is_homogeneous());
  CHECK(x.degree_part(1) == e({2}));
  CHECK(x.degree_part(3).is_zero());
  CHECK(e({0, 1}).is_homogeneous());
}

TEST_CASE("exterior JSON round trip") {
  const Matroid ground = free_matroid({"a", "b", "c", "d"});
  std::mt19937 rng(5);
  for (int round = 0; round < 20; ++round) {
    const auto x = random_element(rng, 4, 4);
    const auto back = exterior_from_json(exterior_to_json(x, ground), ground);
    CHECK(back == x);
  }
  const auto j = nlohmann::json::parse(
      R"({"terms":[{"monomial":["a","c"],"num":1,"den":3},{"monomial":[],"num":-2,"den":1}]})");
  const auto x = exterior_from_json(j, ground);
  CHECK(x == ExteriorElement::monomial(ground.mask_of({"a", "c"}), Rational(1, 3)) +
                 ExteriorElement::monomial(0, -2));
}
