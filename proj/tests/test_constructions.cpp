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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "osforge/osforge.hpp"

using namespace osforge;

namespace {

std::set<std::set<std::string>> circuit_sets(const Matroid& m) {
  std::set<std::set<std::string>> out;
  for (const auto& c : m.circuit_label_sets()) out.insert({c.begin(), c.end()});
  return out;
}

std::multiset<int> circuit_sizes(const Matroid& m) {
  std::multiset<int> out;
  for (SetMask c : m.circuits()) out.insert(popcount(c));
  return out;
}

}  // namespace

TEST_CASE("cycle matroid") {
  const Matroid c3 = cycle_matroid(3);
  CHECK(c3.labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(circuit_sets(c3) == std::set<std::set<std::string>>{{"1", "2", "3"}});

  const Matroid c2 = cycle_matroid(2);
  CHECK(circuit_sizes(c2) == std::multiset<int>{2});
  CHECK_FALSE(is_simple(c2));

  CHECK(rank(cycle_matroid(6)) == 5);
  CHECK_THROWS_AS(cycle_matroid(1), std::invalid_argument);
}

TEST_CASE("isthmus matroid") {
  const Matroid s = isthmus_matroid();
  CHECK(s.labels() == std::vector<std::string>{"p"});
  CHECK(s.circuits().empty());
  CHECK(is_isthmus(s, 0));
  CHECK(tutte(s) == BivariatePolynomial::x());
}

TEST_CASE("direct sum") {
  const Matroid sum = direct_sum(osforge::testing::seed_c3(), cycle_matroid(3));
  CHECK(sum.size() == 6);
  CHECK(sum.circuits().size() == 2);
  CHECK(rank(sum) == 4);

  CHECK_THROWS_AS(direct_sum(cycle_matroid(3), cycle_matroid(4)), std::invalid_argument);

  const Matroid with_free = direct_sum(osforge::testing::seed_c3(), free_matroid({"x", "y"}));
  CHECK(is_isthmus(with_free, std::string("x")));
  CHECK(is_isthmus(with_free, std::string("y")));

  for (const auto& [name, m] : osforge::testing::small_corpus()) {
    if (m.size() > 6) continue;
    INFO(name);
    CHECK_FALSE(is_connected(direct_sum(m, relabeled_with_prefix(m, "q."))));
  }
}

TEST_CASE("parallel connection") {
  const Matroid a = osforge::testing::seed_c3();
  const Matroid b = relabeled(cycle_matroid(3), {"d", "e", "f"});
  const Matroid p = parallel_connection(a, "a", b, "d");

  SECTION("ground and circuits of the triangle gluing") {
    CHECK(p.size() == 5);
    const std::string merged = merged_basepoint_label("a", "d");
    CHECK(p.label_of(0) == merged);
    CHECK(circuit_sets(p) == std::set<std::set<std::string>>{
                                 {merged, "b", "c"}, {merged, "e", "f"}, {"b", "c", "e", "f"}});
    CHECK(validate(p).pass());
  }

  SECTION("mixed circuit realizes the longest circuit") {
    for (int n = 3; n <= 6; ++n) {
      const Matroid pn = parallel_connection(cycle_matroid(n), "1", a, "a");
      CHECK(longest_circuit(pn) == n + 1);
    }
  }

  SECTION("loops are rejected as basepoints") {
    const Matroid with_loop = contraction(cycle_matroid(2), std::string("2"));
    CHECK_THROWS_AS(parallel_connection(with_loop, with_loop.label_of(0), a, "a"),
                    std::invalid_argument);
  }

  SECTION("symmetric up to isomorphism") {
    const Matroid q = parallel_connection(b, "d", a, "a");
    CHECK(find_isomorphism(p, q).has_value());
  }

  SECTION("axioms hold for every corpus pair") {
    const auto corpus = osforge::testing::small_corpus();
    for (const auto& [name0, m0] : corpus) {
      if (m0.size() > 5 || m0.circuits().empty()) continue;
      for (const auto& [name1, m1] : corpus) {
        if (m1.size() > 5 || m1.circuits().empty()) continue;
        INFO(name0 << " with " << name1);
        const Matroid lhs = relabeled_with_prefix(m0, "l.");
        const Matroid rhs = relabeled_with_prefix(m1, "r.");
        const Matroid glued =
            parallel_connection(lhs, lhs.label_of(0), rhs, rhs.label_of(0));
        CHECK(validate(glued).pass());
      }
    }
  }
}

TEST_CASE("family builders") {
  const FamilySpec spec{osforge::testing::seed_c3(), "a", 3};
  const Matroid direct = direct_sum_family(spec);
  const Matroid parallel = parallel_family(spec);

  SECTION("the 3-cycle instance unfolds as expected") {
    CHECK(circuit_sizes(direct) == std::multiset<int>{3, 3});
    CHECK(circuit_sizes(parallel) == std::multiset<int>{3, 3, 4});
    CHECK(is_isthmus(parallel, std::string("p")));
  }

  SECTION("equal ground size and rank across seeds and n") {
    for (const auto& seed : osforge::testing::family_seeds()) {
      for (int n = 2; n <= 5; ++n) {
        INFO(seed.name << " n=" << n);
        const FamilySpec s{seed.matroid, seed.basepoint, n};
        const Matroid d = direct_sum_family(s);
        const Matroid q = parallel_family(s);
        CHECK(d.size() == seed.matroid.size() + n);
        CHECK(q.size() == seed.matroid.size() + n);
        CHECK(rank(d) == rank(seed.matroid) + n - 1);
        CHECK(rank(q) == rank(seed.matroid) + n - 1);
        if (n >= 3) {
          CHECK(is_simple(d));
          CHECK(is_simple(q));
        }
      }
    }
  }

  SECTION("the seed embeds as a restriction of both members") {
    for (const auto& seed : osforge::testing::family_seeds()) {
      const FamilySpec s{seed.matroid, seed.basepoint, 3};
      const Matroid d = direct_sum_family(s);
      const Matroid back = restriction(d, d.mask_of(seed.matroid.labels()));
      CHECK(back.labels() == seed.matroid.labels());
      CHECK(circuit_sets(back) == circuit_sets(seed.matroid));

      // On the parallel side the merged element stands in for the basepoint.
      const Matroid q = parallel_family(s);
      const std::string merged = merged_basepoint_label("1", seed.basepoint);
      std::vector<std::string> keep;
      for (const auto& l : seed.matroid.labels())
        keep.push_back(l == seed.basepoint ? merged : l);
      const Matroid qback = restriction(q, q.mask_of(keep));
      std::set<std::set<std::string>> translated;
      for (const auto& c : seed.matroid.circuit_label_sets()) {
        std::set<std::string> t;
        for (const auto& l : c) t.insert(l == seed.basepoint ? merged : l);
        translated.insert(std::move(t));
      }
      CHECK(circuit_sets(qback) == translated);
    }
  }

  SECTION("spec guards") {
    CHECK_THROWS_AS(direct_sum_family({osforge::testing::seed_c3(), "a", 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(direct_sum_family({cycle_matroid(2), "1", 3}), std::invalid_argument);
    CHECK_THROWS_AS(direct_sum_family({osforge::testing::seed_c3(), "zz", 3}),
                    std::invalid_argument);
  }

  SECTION("seed labels colliding with cycle or isthmus labels get the m0. prefix") {
    const Matroid collided = direct_sum_family({cycle_matroid(3), "1", 3});
    CHECK(collided.has_label("m0.1"));
    CHECK(find_isomorphism(collided, direct).has_value());
    const Matroid bad_p = relabeled(cycle_matroid(3), {"p", "q", "r"});
    CHECK(parallel_family({bad_p, "q", 3}).has_label("m0.p"));
    CHECK(certify_os_isomorphism({cycle_matroid(3), "1", 3}).accepted);
  }
}

TEST_CASE("graphic matroids") {
  SECTION("triangle graph gives the 3-cycle matroid") {
    CHECK(graphic_matroid(cycle_graph(3)) == cycle_matroid(3));
  }
  SECTION("graph cycles agree with cycle matroids for all n") {
    for (int n = 2; n <= 7; ++n) CHECK(graphic_matroid(cycle_graph(n)) == cycle_matroid(n));
  }
  SECTION("forests are free") {
    CHECK(graphic_matroid(path_graph(5)).circuits().empty());
  }
  SECTION("fan graph of order two") {
    CHECK(circuit_sizes(graphic_matroid(fan_graph(2))) == std::multiset<int>{3, 3, 4});
  }
  SECTION("self-loops and parallel edges") {
    Graph g;
    g.vertices = {"u", "v"};
    g.edges = {{"l", 0, 0}, {"e1", 0, 1}, {"e2", 0, 1}};
    const Matroid m = graphic_matroid(g);
    CHECK(circuit_sets(m) == std::set<std::set<std::string>>{{"l"}, {"e1", "e2"}});
  }
  SECTION("complete graph on four vertices") {
    const Matroid k4 = graphic_matroid(complete_graph(4));
    CHECK(k4.size() == 6);
    CHECK(circuit_sizes(k4) == std::multiset<int>{3, 3, 3, 3, 4, 4, 4});
    CHECK(rank(k4) == 3);
  }
}

TEST_CASE("fan graphs") {
  const Graph g4 = fan_graph(4);
  CHECK(g4.vertices.size() == 8);
  CHECK(g4.edges.size() == 13);

  const Graph g2 = fan_graph(2);
  CHECK(g2.vertices.size() == 4);
  CHECK(g2.edges.size() == 5);

  // Spokes are {0, i} for every path vertex.
  for (int m = 2; m <= 4; ++m) {
    const Graph g = fan_graph(m);
    for (int i = 1; i < 2 * m; ++i) {
      const std::string label = "s" + std::to_string(i);
      const auto it = std::find_if(g.edges.begin(), g.edges.end(),
                                   [&](const GraphEdge& e) { return e.label == label; });
      REQUIRE(it != g.edges.end());
      CHECK(std::minmax(it->u, it->v) == std::minmax(0, i));
    }
  }
}

TEST_CASE("fan families") {
  SECTION("longest circuits separate the members") {
    const Matroid f2 = fan_family(2, 6, 2);
    const Matroid f3 = fan_family(2, 6, 3);
    CHECK(longest_circuit(f2) == 7);
    CHECK(longest_circuit(f3) == 8);
    CHECK_FALSE(find_isomorphism(f2, f3).has_value());
  }
  SECTION("longest circuit is (n-1)+i across the whole spoke range") {
    for (int m = 2; m <= 3; ++m) {
      const int n = 2 * m + 2;
      for (int i = m; i <= 2 * m - 1; ++i) {
        INFO("m=" << m << " n=" << n << " i=" << i);
        CHECK(longest_circuit(fan_family(m, n, i)) == (n - 1) + i);
      }
    }
  }
  SECTION("guards") {
    CHECK_THROWS_AS(fan_family(2, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(fan_family(2, 6, 4), std::invalid_argument);
    CHECK_THROWS_AS(fan_family(2, 5, 2), std::invalid_argument);
  }
  SECTION("tutte agrees with the closed form for the fan seed") {
    const Matroid seed = osforge::testing::seed_fan2();
    for (int i : {2, 3}) {
      const std::string spoke = "s" + std::to_string(i);
      const auto closed = closed_form_parallel_family(
          tutte(seed), tutte(contraction(seed, spoke)), 6);
      CHECK(tutte(fan_family(2, 6, i)) == closed);
    }
  }
}

namespace {

// Glue a path of length n-1 across the named edge of the seed graph and
// hang one pendant edge; the polygon matroid of the result should be the
// parallel family member.
Graph glue_path_and_pendant(Graph g, const std::string& edge_label, int n) {
  const GraphEdge eps =
      g.edges[std::find_if(g.edges.begin(), g.edges.end(),
                           [&](const GraphEdge& e) { return e.label == edge_label; }) -
              g.edges.begin()];
  const int base = static_cast<int>(g.vertices.size());
  for (int k = 0; k < n - 2; ++k) g.vertices.push_back("w" + std::to_string(k));
  g.vertices.push_back("tail");
  int prev = eps.u;
  for (int k = 0; k < n - 1; ++k) {
    const int next = k == n - 2 ? eps.v : base + k;
    g.edges.push_back({"path" + std::to_string(k), prev, next});
    prev = next;
  }
  g.edges.push_back({"pendant", eps.v, base + (n - 2)});
  return g;
}

}  // namespace

TEST_CASE("parallel family matches its graph description for graphic seeds") {
  SECTION("triangle seed") {
    Graph tri = cycle_graph(3);
    for (auto& e : tri.edges) e.label = "t" + e.label;  // keep clear of cycle labels
    for (int n = 3; n <= 5; ++n) {
      const Matroid via_graph = graphic_matroid(glue_path_and_pendant(tri, "t1", n));
      const Matroid via_family = parallel_family({graphic_matroid(tri), "t1", n});
      INFO("n=" << n);
      CHECK(find_isomorphism(via_graph, via_family).has_value());
    }
  }
  SECTION("fan seed") {
    const int n = 4;
    const Matroid via_graph = graphic_matroid(glue_path_and_pendant(fan_graph(2), "s2", n));
    const Matroid via_family = parallel_family({osforge::testing::seed_fan2(), "s2", n});
    CHECK(find_isomorphism(via_graph, via_family).has_value());
  }
}

TEST_CASE("family spec JSON") {
  const FamilySpec spec{osforge::testing::seed_c3(), "a", 3};
  const FamilySpec back = family_spec_from_json(family_spec_to_json(spec));
  CHECK(back.seed == spec.seed);
  CHECK(back.basepoint == spec.basepoint);
  CHECK(back.n == spec.n);
  CHECK_THROWS_AS(family_spec_from_json(nlohmann::json::parse(
                      R"({"seed":{"ground":["a"],"circuits":[]},"basepoint":"a","n":1})")),
                  std::invalid_argument);
}

TEST_CASE("graph JSON") {
  const Graph g = fan_graph(2);
  const Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.vertices == g.vertices);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(back.edges[i].label == g.edges[i].label);
    CHECK(std::minmax(back.edges[i].u, back.edges[i].v) ==
          std::minmax(g.edges[i].u, g.edges[i].v));
  }
  CHECK_THROWS_AS(
      graph_from_json(nlohmann::json::parse(
          R"({"vertices":["a"],"edges":[{"label":"e","ends":["a","zz"]}]})")),
      std::invalid_argument);
}
