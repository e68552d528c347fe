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

#include "osforge/matroid.hpp"

namespace osforge {

// ---------------------------------------------------------------------------
// Graphs (multigraphs: loops and parallel edges allowed)

struct GraphEdge {
  std::string label;
  int u = 0;
  int v = 0;
};

struct Graph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;

  int vertex_id(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
      if (vertices[i] == name) return i;
    throw std::invalid_argument("unknown vertex '" + name + "'");
  }
};

inline void check_graph(const Graph& g) {
  std::set<std::string> vseen;
  for (const auto& v : g.vertices)
    if (!vseen.insert(v).second)
      throw std::invalid_argument("duplicate vertex '" + v + "'");
  std::set<std::string> eseen;
  const int n = static_cast<int>(g.vertices.size());
  for (const auto& e : g.edges) {
    if (!eseen.insert(e.label).second)
      throw std::invalid_argument("duplicate edge label '" + e.label + "'");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge '" + e.label + "' has undeclared endpoint");
  }
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"label", e.label},
                          {"ends", {g.vertices[e.u], g.vertices[e.v]}}});
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  Graph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& je : j.at("edges")) {
    const auto ends = je.at("ends").get<std::vector<std::string>>();
    if (ends.size() != 2) throw std::invalid_argument("edge needs exactly two ends");
    GraphEdge e;
    e.label = je.at("label").get<std::string>();
    g.edges.push_back(e);
    g.edges.back().u = g.vertex_id(ends[0]);
    g.edges.back().v = g.vertex_id(ends[1]);
  }
  check_graph(g);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 2) throw std::invalid_argument("cycle_graph: n must be >= 2");
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    g.edges.push_back({std::to_string(i), i - 1, i % n});
  return g;
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    g.edges.push_back({"e" + std::to_string(i), i - 1, i});
  return g;
}

inline Graph complete_graph(int k) {
  if (k < 1) throw std::invalid_argument("complete_graph: k must be >= 1");
  Graph g;
  for (int i = 0; i < k; ++i) g.vertices.push_back(std::to_string(i));
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      g.edges.push_back({"e" + std::to_string(u) + std::to_string(v), u, v});
  return g;
}

/// Fan: vertices 0..2m-1, a path 1-2-...-(2m-1), and spokes {0,i} for every
/// path vertex i. Path edges are labeled p<i> (= {i,i+1}) and spokes s<i>
/// (= {0,i}); repeated unordered pairs are deduplicated and the edge count
/// 4m-3 is asserted.
inline Graph fan_graph(int m) {
  if (m < 1) throw std::invalid_argument("fan_graph: m must be >= 1");
  Graph g;
  for (int i = 0; i < 2 * m; ++i) g.vertices.push_back(std::to_string(i));
  std::set<std::pair<int, int>> seen;
  auto add = [&](const std::string& label, int u, int v) {
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) return;
    g.edges.push_back({label, u, v});
  };
  for (int i = 1; i < 2 * m - 1; ++i) add("p" + std::to_string(i), i, i + 1);
  for (int i = 1; i < 2 * m; ++i) add("s" + std::to_string(i), 0, i);
  if (static_cast<int>(g.edges.size()) != 4 * m - 3)
    throw std::logic_error("fan_graph: edge count is not 4m-3");
  return g;
}

// ---------------------------------------------------------------------------
// Graphic matroids

/// Circuits of the polygon matroid: edge sets of simple cycles, i.e. the
/// connected edge subsets in which every touched vertex has degree exactly 2.
/// Loops give 1-circuits and parallel pairs give 2-circuits. Enumerates edge
/// subsets, so inputs are capped at 22 edges.
inline Matroid graphic_matroid(const Graph& g) {
  check_graph(g);
  const int ne = static_cast<int>(g.edges.size());
  if (ne > 22) throw std::invalid_argument("graphic_matroid: more than 22 edges");
  std::vector<std::string> labels;
  for (const auto& e : g.edges) labels.push_back(e.label);

  std::vector<SetMask> circuits;
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<int> degree(nv);
  for (SetMask s = 1; s < (SetMask{1} << ne); ++s) {
    std::fill(degree.begin(), degree.end(), 0);
    for (int i : mask_ids(s)) {
      degree[g.edges[i].u] += 1;
      degree[g.edges[i].v] += 1;
    }
    bool two_regular = true;
    int support = -1;
    for (int v = 0; v < nv && two_regular; ++v) {
      if (degree[v] == 0) continue;
      if (degree[v] != 2) two_regular = false;
      if (support < 0) support = v;
    }
    if (!two_regular) continue;
    // Connectivity of the support via edge-incidence flood fill.
    std::vector<bool> reached(nv, false);
    std::vector<int> stack{support};
    reached[support] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int i : mask_ids(s)) {
        const auto& e = g.edges[i];
        for (int w : {e.u, e.v}) {
          if ((e.u == v || e.v == v) && !reached[w]) {
            reached[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    bool connected = true;
    for (int v = 0; v < nv; ++v)
      if (degree[v] > 0 && !reached[v]) connected = false;
    if (connected) circuits.push_back(s);
  }
  return Matroid(std::move(labels), std::move(circuits));
}

// ---------------------------------------------------------------------------
// Basic matroid constructors

/// Polygon matroid of the n-cycle: ground 1..n, one circuit of size n,
/// rank n-1. At n=2 this is the parallel pair U_{1,2}.
inline Matroid cycle_matroid(int n) {
  if (n < 2) throw std::invalid_argument("cycle_matroid: n must be >= 2");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  const SetMask all = (SetMask{1} << n) - 1;
  return Matroid(std::move(labels), {all});
}

/// Rank one on a single point, no circuits.
inline Matroid isthmus_matroid(const std::string& label = "p") {
  return Matroid({label}, {});
}

inline Matroid free_matroid(const std::vector<std::string>& labels) {
  return Matroid(labels, {});
}

/// Disjoint union of ground sets; circuits are the union of the circuit
/// sets. Label sets must be disjoint (see relabeled_with_prefix).
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (a.has_label(l))
      throw std::invalid_argument("direct_sum: label collision on '" + l + "'");
    labels.push_back(l);
  }
  std::vector<SetMask> circuits = a.circuits();
  for (SetMask c : b.circuits()) circuits.push_back(c << a.size());
  return Matroid(std::move(labels), std::move(circuits));
}

inline std::string merged_basepoint_label(const std::string& b0, const std::string& b1) {
  return "b̄:" + b0 + "=" + b1;
}

/// Parallel connection P(m0, m1) along basepoints b0 ~ b1, which are
/// identified to a single fresh element placed first in the ground set.
/// Circuits: images of the circuits of m0 and of m1, plus the mixed sets
/// (C - b0) u (C' - b1) for circuits C of m0 through b0 and C' of m1
/// through b1. The union is minimalized; for simple inputs minimalization
/// must remove nothing, and that is checked rather than assumed.
inline Matroid parallel_connection(const Matroid& m0, const std::string& b0,
                                   const Matroid& m1, const std::string& b1) {
  const int i0 = m0.id_of(b0);
  const int i1 = m1.id_of(b1);
  if (is_loop(m0, i0) || is_loop(m1, i1))
    throw std::invalid_argument("parallel_connection: basepoint is a loop");

  const std::string merged = merged_basepoint_label(b0, b1);
  std::vector<std::string> labels{merged};
  std::map<int, int> map0, map1;  // old id -> new id
  map0[i0] = 0;
  map1[i1] = 0;
  for (int i = 0; i < m0.size(); ++i) {
    if (i == i0) continue;
    map0[i] = static_cast<int>(labels.size());
    labels.push_back(m0.label_of(i));
  }
  for (int i = 0; i < m1.size(); ++i) {
    if (i == i1) continue;
    const auto& l = m1.label_of(i);
    if (std::find(labels.begin(), labels.end(), l) != labels.end())
      throw std::invalid_argument("parallel_connection: label collision on '" + l + "'");
    map1[i] = static_cast<int>(labels.size());
    labels.push_back(l);
  }

  auto remap = [](SetMask c, const std::map<int, int>& f) {
    SetMask out = 0;
    for (int e : mask_ids(c)) out |= bit(f.at(e));
    return out;
  };
  std::vector<SetMask> circuits;
  for (SetMask c : m0.circuits()) circuits.push_back(remap(c, map0));
  for (SetMask c : m1.circuits()) circuits.push_back(remap(c, map1));
  for (SetMask c : m0.circuits()) {
    if (!contains(c, i0)) continue;
    for (SetMask d : m1.circuits()) {
      if (!contains(d, i1)) continue;
      circuits.push_back(remap(c & ~bit(i0), map0) | remap(d & ~bit(i1), map1));
    }
  }

  const std::size_t before = [&] {
    auto s = circuits;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s.size();
  }();
  auto minimal = detail::minimalize(circuits);
  if (minimal.size() != before && is_simple(m0) && is_simple(m1))
    throw std::logic_error(
        "parallel_connection: minimalization removed circuits on simple inputs");
  return Matroid(std::move(labels), std::move(minimal));
}

// ---------------------------------------------------------------------------
// The two families built from a seed matroid and a basepoint

/// Seed data for the paired families: a simple matroid, a distinguished
/// basepoint in it, and the cycle length n >= 2.
struct FamilySpec {
  Matroid seed;
  std::string basepoint;
  int n = 0;
};

inline void check_family_spec(const FamilySpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("family spec: n must be >= 2");
  if (!validate(spec.seed).pass())
    throw std::invalid_argument("family spec: seed fails the circuit axioms");
  if (!is_simple(spec.seed))
    throw std::invalid_argument("family spec: seed must be simple (no loops or parallel pairs)");
  spec.seed.id_of(spec.basepoint);  // throws if absent
}

/// Seed labels that collide with the cycle labels 1..n or the isthmus label
/// p get a deterministic "m0." prefix, so a seed may reuse those names. All
/// family builders and the certifier resolve a spec the same way.
inline FamilySpec resolve_family_labels(FamilySpec spec) {
  bool collision = spec.seed.has_label("p");
  for (int i = 1; i <= spec.n && !collision; ++i)
    collision = spec.seed.has_label(std::to_string(i));
  if (!collision) return spec;
  spec.seed = relabeled_with_prefix(spec.seed, "m0.");
  spec.basepoint = "m0." + spec.basepoint;
  return spec;
}

/// The direct-sum member: n-cycle matroid plus the seed, ground 1..n then
/// the seed's elements.
inline Matroid direct_sum_family(const FamilySpec& raw) {
  check_family_spec(raw);
  const FamilySpec spec = resolve_family_labels(raw);
  return direct_sum(cycle_matroid(spec.n), spec.seed);
}

/// The parallel-connection member: P(C_n, seed) glued along cycle point 1
/// and the basepoint, then extended by an isthmus p.
inline Matroid parallel_family(const FamilySpec& raw) {
  check_family_spec(raw);
  const FamilySpec spec = resolve_family_labels(raw);
  Matroid p = parallel_connection(cycle_matroid(spec.n), "1", spec.seed, spec.basepoint);
  return direct_sum(p, isthmus_matroid("p"));
}

// Family spec JSON mirrors the FamilySpec fields:
// {"seed": {matroid}, "basepoint": "a", "n": 3}

inline nlohmann::json family_spec_to_json(const FamilySpec& spec) {
  nlohmann::json j;
  j["seed"] = matroid_to_json(spec.seed);
  j["basepoint"] = spec.basepoint;
  j["n"] = spec.n;
  return j;
}

inline FamilySpec family_spec_from_json(const nlohmann::json& j) {
  FamilySpec spec{matroid_from_json(j.at("seed")), j.at("basepoint").get<std::string>(),
                  j.at("n").get<int>()};
  check_family_spec(spec);
  return spec;
}

/// Fan-seeded parallel family: isthmus + P(C_n, M(fan_graph(m))) glued along
/// the spoke s<i>. Distinct i in [m, 2m-1] give pairwise non-isomorphic
/// matroids (their longest circuits are (n-1)+i) with one shared graded
/// dimension vector; requires n > 2m+1.
inline Matroid fan_family(int m, int n, int i) {
  if (m < 1) throw std::invalid_argument("fan_family: m must be >= 1");
  if (i < m || i > 2 * m - 1)
    throw std::invalid_argument("fan_family: spoke index i must satisfy m <= i <= 2m-1");
  if (n <= 2 * m + 1)
    throw std::invalid_argument("fan_family: n must exceed 2m+1");
  FamilySpec spec{graphic_matroid(fan_graph(m)), "s" + std::to_string(i), n};
  return parallel_family(spec);
}

}  // namespace osforge
