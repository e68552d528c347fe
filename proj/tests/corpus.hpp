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

#include <string>
#include <utility>
#include <vector>

#include "osforge/osforge.hpp"

namespace osforge::testing {

inline Matroid seed_c3() { return relabeled(cycle_matroid(3), {"a", "b", "c"}); }

inline Matroid seed_c4() { return relabeled(cycle_matroid(4), {"a", "b", "c", "d"}); }

inline Matroid seed_fan2() { return graphic_matroid(fan_graph(2)); }

inline Matroid seed_k4() { return graphic_matroid(complete_graph(4)); }

struct NamedSeed {
  std::string name;
  Matroid matroid;
  std::string basepoint;
};

/// The four seeds the family-level checks run over; all simple and connected.
inline std::vector<NamedSeed> family_seeds() {
  return {{"C3", seed_c3(), "a"},
          {"C4", seed_c4(), "a"},
          {"M(G2)", seed_fan2(), "s2"},
          {"M(K4)", seed_k4(), "e01"}};
}

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

/// Small matroids every property suite sweeps over. All loopless; ground
/// sets of at most ten elements.
inline std::vector<NamedMatroid> small_corpus() {
  std::vector<NamedMatroid> out;
  for (int n = 2; n <= 6; ++n)
    out.push_back({"C" + std::to_string(n), cycle_matroid(n)});
  out.push_back({"free1", isthmus_matroid()});
  out.push_back({"free3", free_matroid({"f1", "f2", "f3"})});
  out.push_back({"U13", Matroid::from_label_sets({"a", "b", "c"},
                                                 {{"a", "b"}, {"b", "c"}, {"a", "c"}})});
  out.push_back({"C3+C3", direct_sum(seed_c3(), relabeled(cycle_matroid(3), {"d", "e", "f"}))});
  out.push_back({"C3+C5", direct_sum(seed_c3(), cycle_matroid(5))});
  out.push_back({"P(C3,C3)",
                 parallel_connection(seed_c3(), "a", relabeled(cycle_matroid(3), {"d", "e", "f"}),
                                     "d")});
  out.push_back({"P(C3,C4)",
                 parallel_connection(seed_c3(), "a",
                                     relabeled(cycle_matroid(4), {"d", "e", "f", "g"}), "d")});
  out.push_back({"M(G2)", seed_fan2()});
  out.push_back({"M(K4)", seed_k4()});
  out.push_back({"M3", direct_sum_family({seed_c3(), "a", 3})});
  out.push_back({"M3'", parallel_family({seed_c3(), "a", 3})});
  out.push_back({"M4(G2)", direct_sum_family({seed_fan2(), "s2", 4})});
  out.push_back({"M4'(G2)", parallel_family({seed_fan2(), "s2", 4})});
  return out;
}

/// Connected members of the small corpus (for beta-invariant sweeps).
inline std::vector<NamedMatroid> connected_corpus() {
  std::vector<NamedMatroid> out;
  for (auto& nm : small_corpus())
    if (is_connected(nm.matroid)) out.push_back(std::move(nm));
  return out;
}

}  // namespace osforge::testing
