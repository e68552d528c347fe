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
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace osforge {

// Ground subsets are bit masks keyed by element id; all subset iteration is
// in increasing mask order so every computation is deterministic.
using SetMask = std::uint32_t;

inline constexpr int kMaxGroundSize = 30;
// Exhaustive searches (isomorphism, flat lattices) refuse larger inputs
// instead of silently taking forever.
inline constexpr int kMaxExhaustiveGround = 14;

inline int popcount(SetMask m) { return std::popcount(m); }

inline SetMask bit(int id) { return SetMask{1} << id; }

inline bool contains(SetMask s, int id) { return (s >> id) & 1u; }

inline bool subset_of(SetMask a, SetMask b) { return (a & ~b) == 0; }

/// Element ids of a mask in ascending order.
inline std::vector<int> mask_ids(SetMask s) {
  std::vector<int> ids;
  for (int i = 0; s >> i; ++i)
    if (contains(s, i)) ids.push_back(i);
  return ids;
}

struct Element {
  int id = 0;
  std::string label;
};

/// A matroid given by its ground set and its set of circuits (minimal
/// dependent sets). Circuits are the canonical representation; rank and
/// independence are derived from them. Instances are immutable values.
class Matroid {
 public:
  Matroid() = default;

  Matroid(std::vector<std::string> labels, std::vector<SetMask> circuits)
      : labels_(std::move(labels)), circuits_(std::move(circuits)) {
    if (static_cast<int>(labels_.size()) > kMaxGroundSize)
      throw std::invalid_argument("matroid ground set exceeds " +
                                  std::to_string(kMaxGroundSize) + " elements");
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if (labels_[i].empty()) throw std::invalid_argument("empty element label");
      if (!index_.emplace(labels_[i], i).second)
        throw std::invalid_argument("duplicate element label '" + labels_[i] + "'");
    }
    for (SetMask c : circuits_) {
      if (c == 0) throw std::invalid_argument("empty circuit");
      if (!subset_of(c, full_mask()))
        throw std::invalid_argument("circuit uses unknown element id");
    }
    std::sort(circuits_.begin(), circuits_.end());
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
  }

  static Matroid from_label_sets(std::vector<std::string> ground,
                                 const std::vector<std::vector<std::string>>& circuits) {
    Matroid shell(std::move(ground), {});
    std::vector<SetMask> masks;
    masks.reserve(circuits.size());
    for (const auto& c : circuits) masks.push_back(shell.mask_of(c));
    return Matroid(shell.labels_, std::move(masks));
  }

  int size() const { return static_cast<int>(labels_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label_of(int id) const {
    if (id < 0 || id >= size()) throw std::out_of_range("element id out of range");
    return labels_[id];
  }

  int id_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw std::invalid_argument("unknown element label '" + label + "'");
    return it->second;
  }

  bool has_label(const std::string& label) const { return index_.count(label) != 0; }

  SetMask full_mask() const {
    return size() == 0 ? 0 : (size() == 32 ? ~SetMask{0} : (bit(size()) - 1));
  }

  const std::vector<SetMask>& circuits() const { return circuits_; }

  SetMask mask_of(const std::vector<std::string>& labels) const {
    SetMask s = 0;
    for (const auto& l : labels) {
      const SetMask b = bit(id_of(l));
      if (s & b) throw std::invalid_argument("duplicate element '" + l + "' in subset");
      s |= b;
    }
    return s;
  }

  std::vector<std::string> labels_of(SetMask s) const {
    std::vector<std::string> out;
    for (int id : mask_ids(s)) out.push_back(label_of(id));
    return out;
  }

  std::vector<std::vector<std::string>> circuit_label_sets() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(circuits_.size());
    for (SetMask c : circuits_) out.push_back(labels_of(c));
    return out;
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.labels_ == b.labels_ && a.circuits_ == b.circuits_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<SetMask> circuits_;  // sorted ascending, deduplicated
  std::map<std::string, int> index_;
};

// ---------------------------------------------------------------------------
// Axiom validation

struct ValidationReport {
  bool antichain_ok = true;
  bool elimination_ok = true;
  // Witness circuits (as label sets) for the first failure found.
  std::vector<std::vector<std::string>> antichain_witness;
  std::vector<std::vector<std::string>> elimination_witness;
  std::string eliminated_label;

  bool pass() const { return antichain_ok && elimination_ok; }
};

/// Checks the antichain property and the circuit elimination axiom. Reports,
/// never throws: failures carry a witnessing pair of circuits.
inline ValidationReport validate(const Matroid& m) {
  ValidationReport rep;
  const auto& cs = m.circuits();
  for (std::size_t i = 0; i < cs.size() && rep.antichain_ok; ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      if (subset_of(cs[i], cs[j])) {
        rep.antichain_ok = false;
        rep.antichain_witness = {m.labels_of(cs[i]), m.labels_of(cs[j])};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < cs.size() && rep.elimination_ok; ++i) {
    for (std::size_t j = i + 1; j < cs.size() && rep.elimination_ok; ++j) {
      const SetMask common = cs[i] & cs[j];
      if (common == 0) continue;
      for (int e : mask_ids(common)) {
        const SetMask target = (cs[i] | cs[j]) & ~bit(e);
        bool found = false;
        for (SetMask c : cs) {
          if (subset_of(c, target)) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.elimination_ok = false;
          rep.elimination_witness = {m.labels_of(cs[i]), m.labels_of(cs[j])};
          rep.eliminated_label = m.label_of(e);
          break;
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rank and independence

/// True iff no circuit is contained in s.
inline bool is_independent(const Matroid& m, SetMask s) {
  if (!subset_of(s, m.full_mask()))
    throw std::invalid_argument("subset uses unknown element id");
  for (SetMask c : m.circuits())
    if (subset_of(c, s)) return false;
  return true;
}

/// Size of a maximal independent subset of s, grown greedily in id order
/// (correct by the matroid exchange property).
inline int rank(const Matroid& m, SetMask s) {
  if (!subset_of(s, m.full_mask()))
    throw std::invalid_argument("subset uses unknown element id");
  SetMask indep = 0;
  for (int id : mask_ids(s)) {
    const SetMask cand = indep | bit(id);
    if (is_independent(m, cand)) indep = cand;
  }
  return popcount(indep);
}

inline int rank(const Matroid& m) { return rank(m, m.full_mask()); }

/// Rank of the whole matroid together with a full subset-to-rank table
/// (indexed by mask). Exponential in the ground size; capped at 20 elements.
struct RankProfile {
  int rank = 0;
  std::vector<int> rank_by_subset;
};

inline RankProfile rank_profile(const Matroid& m) {
  if (m.size() > 20) throw std::invalid_argument("rank_profile: ground set exceeds 20 elements");
  RankProfile p;
  const SetMask limit = m.size() == 0 ? 1 : (SetMask{1} << m.size());
  p.rank_by_subset.resize(limit);
  for (SetMask s = 0; s < limit; ++s) p.rank_by_subset[s] = rank(m, s);
  p.rank = p.rank_by_subset[limit - 1];
  return p;
}

// ---------------------------------------------------------------------------
// Minors

namespace detail {

/// Keeps only the inclusion-minimal members, deduplicated.
inline std::vector<SetMask> minimalize(std::vector<SetMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<SetMask> out;
  for (SetMask s : sets) {
    bool minimal = true;
    for (SetMask t : sets) {
      if (t != s && subset_of(t, s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

/// Drops element id from the ground set, compacting higher ids down by one.
inline SetMask drop_bit(SetMask s, int id) {
  const SetMask low = s & (bit(id) - 1);
  const SetMask high = (s >> (id + 1)) << id;
  return low | high;
}

}  // namespace detail

/// Deletion M\e: circuits of the result are the circuits avoiding e.
inline Matroid deletion(const Matroid& m, int id) {
  if (id < 0 || id >= m.size()) throw std::invalid_argument("unknown element id");
  std::vector<std::string> labels = m.labels();
  labels.erase(labels.begin() + id);
  std::vector<SetMask> circuits;
  for (SetMask c : m.circuits())
    if (!contains(c, id)) circuits.push_back(detail::drop_bit(c, id));
  return Matroid(std::move(labels), std::move(circuits));
}

inline Matroid deletion(const Matroid& m, const std::string& label) {
  return deletion(m, m.id_of(label));
}

/// Contraction M/e: circuits are the minimal nonempty members of
/// {C - e : C a circuit of M}. The result may have loops or parallel pairs.
inline Matroid contraction(const Matroid& m, int id) {
  if (id < 0 || id >= m.size()) throw std::invalid_argument("unknown element id");
  std::vector<std::string> labels = m.labels();
  labels.erase(labels.begin() + id);
  std::vector<SetMask> residues;
  for (SetMask c : m.circuits()) {
    const SetMask r = c & ~bit(id);
    if (r != 0) residues.push_back(detail::drop_bit(r, id));
  }
  return Matroid(std::move(labels), detail::minimalize(std::move(residues)));
}

inline Matroid contraction(const Matroid& m, const std::string& label) {
  return contraction(m, m.id_of(label));
}

/// Restriction to a subset: delete everything outside keep.
inline Matroid restriction(const Matroid& m, SetMask keep) {
  if (!subset_of(keep, m.full_mask()))
    throw std::invalid_argument("subset uses unknown element id");
  Matroid cur = m;
  for (int id = m.size() - 1; id >= 0; --id)
    if (!contains(keep, id)) cur = deletion(cur, id);
  return cur;
}

// ---------------------------------------------------------------------------
// Element and matroid predicates

inline bool is_loop(const Matroid& m, int id) {
  if (id < 0 || id >= m.size()) throw std::invalid_argument("unknown element id");
  for (SetMask c : m.circuits())
    if (c == bit(id)) return true;
  return false;
}

/// An isthmus (coloop) lies in no circuit; this is the sense used by the
/// Tutte recursion base case.
inline bool is_isthmus(const Matroid& m, int id) {
  if (id < 0 || id >= m.size()) throw std::invalid_argument("unknown element id");
  for (SetMask c : m.circuits())
    if (contains(c, id)) return false;
  return true;
}

inline bool is_loop(const Matroid& m, const std::string& l) { return is_loop(m, m.id_of(l)); }
inline bool is_isthmus(const Matroid& m, const std::string& l) { return is_isthmus(m, m.id_of(l)); }

/// Tutte's connectivity criterion: every pair of distinct elements lies in a
/// common circuit. A single non-loop element counts as connected (matching
/// the beta-invariant convention beta(isthmus) = 1); a single loop does not.
inline bool is_connected(const Matroid& m) {
  if (m.size() == 0) throw std::invalid_argument("connectivity of empty matroid");
  if (m.size() == 1) return !is_loop(m, 0);
  for (int a = 0; a < m.size(); ++a) {
    for (int b = a + 1; b < m.size(); ++b) {
      bool together = false;
      for (SetMask c : m.circuits()) {
        if (contains(c, a) && contains(c, b)) {
          together = true;
          break;
        }
      }
      if (!together) return false;
    }
  }
  return true;
}

/// No loops (1-circuits) or parallel pairs (2-circuits).
inline bool is_simple(const Matroid& m) {
  for (SetMask c : m.circuits())
    if (popcount(c) <= 2) return false;
  return true;
}

inline int longest_circuit(const Matroid& m) {
  if (m.circuits().empty())
    throw std::invalid_argument("longest_circuit: matroid has no circuits");
  int best = 0;
  for (SetMask c : m.circuits()) best = std::max(best, popcount(c));
  return best;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

/// Per-element invariant: sorted sizes of the circuits through the element.
inline std::vector<int> circuit_profile(const Matroid& m, int id) {
  std::vector<int> sizes;
  for (SetMask c : m.circuits())
    if (contains(c, id)) sizes.push_back(popcount(c));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline bool iso_backtrack(const Matroid& a, const Matroid& b,
                          const std::vector<std::vector<int>>& candidates,
                          const std::set<SetMask>& b_circuits,
                          std::vector<int>& image, SetMask& used, int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int target : candidates[next]) {
    if (contains(used, target)) continue;
    image[next] = target;
    used |= bit(target);
    // Any circuit of a fully assigned so far must land on a circuit of b.
    bool ok = true;
    for (SetMask c : a.circuits()) {
      if (!contains(c, next)) continue;
      if ((c >> (next + 1)) != 0) continue;  // not fully assigned yet
      SetMask img = 0;
      for (int e : mask_ids(c)) img |= bit(image[e]);
      if (!b_circuits.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok && iso_backtrack(a, b, candidates, b_circuits, image, used, next + 1))
      return true;
    used &= ~bit(target);
    image[next] = -1;
  }
  return false;
}

}  // namespace detail

/// Searches for a ground-set bijection carrying circuits onto circuits.
/// Exhaustive with invariant pruning; refuses ground sets larger than
/// kMaxExhaustiveGround outright. Returns the id-to-id map on success.
inline std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() > kMaxExhaustiveGround || b.size() > kMaxExhaustiveGround)
    throw std::invalid_argument("find_isomorphism: ground set exceeds exhaustive cap of " +
                                std::to_string(kMaxExhaustiveGround));
  if (a.size() != b.size() || a.circuits().size() != b.circuits().size()) return std::nullopt;
  std::vector<int> sizes_a, sizes_b;
  for (SetMask c : a.circuits()) sizes_a.push_back(popcount(c));
  for (SetMask c : b.circuits()) sizes_b.push_back(popcount(c));
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) return std::nullopt;

  std::vector<std::vector<int>> profiles_b(b.size());
  for (int i = 0; i < b.size(); ++i) profiles_b[i] = detail::circuit_profile(b, i);
  std::vector<std::vector<int>> candidates(a.size());
  for (int i = 0; i < a.size(); ++i) {
    const auto pa = detail::circuit_profile(a, i);
    for (int j = 0; j < b.size(); ++j)
      if (pa == profiles_b[j]) candidates[i].push_back(j);
    if (candidates[i].empty()) return std::nullopt;
  }

  std::set<SetMask> b_circuits(b.circuits().begin(), b.circuits().end());
  std::vector<int> image(a.size(), -1);
  SetMask used = 0;
  if (!detail::iso_backtrack(a, b, candidates, b_circuits, image, used, 0))
    return std::nullopt;

  // The bijection, applied to circuits, must yield exactly the target set.
  std::set<SetMask> mapped;
  for (SetMask c : a.circuits()) {
    SetMask img = 0;
    for (int e : mask_ids(c)) img |= bit(image[e]);
    mapped.insert(img);
  }
  if (mapped != b_circuits)
    throw std::logic_error("find_isomorphism: witness fails circuit check");
  return image;
}

// ---------------------------------------------------------------------------
// Relabeling helpers

inline Matroid relabeled(const Matroid& m, std::vector<std::string> new_labels) {
  if (static_cast<int>(new_labels.size()) != m.size())
    throw std::invalid_argument("relabeled: label count mismatch");
  return Matroid(std::move(new_labels), m.circuits());
}

inline Matroid relabeled_with_prefix(const Matroid& m, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(m.size());
  for (const auto& l : m.labels()) labels.push_back(prefix + l);
  return relabeled(m, std::move(labels));
}

// ---------------------------------------------------------------------------
// JSON format, consumed and produced repo-wide:
// {"ground": ["1","2","a"], "circuits": [["1","2"],["a","1","2"]]}
// Labels are strings; circuits are arrays of labels, order-insensitive;
// duplicate labels are rejected. A top-level "schema_version" is tolerated.

inline nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json j;
  j["ground"] = m.labels();
  j["circuits"] = m.circuit_label_sets();
  return j;
}

inline Matroid matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("circuits"))
    throw std::invalid_argument("matroid JSON needs 'ground' and 'circuits'");
  std::vector<std::string> ground = j.at("ground").get<std::vector<std::string>>();
  auto circuits = j.at("circuits").get<std::vector<std::vector<std::string>>>();
  Matroid m = Matroid::from_label_sets(std::move(ground), circuits);
  if (m.circuits().size() != circuits.size())
    throw std::invalid_argument("matroid JSON contains duplicate circuits");
  return m;
}

}  // namespace osforge
