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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "osforge/constructions.hpp"
#include "osforge/exterior.hpp"
#include "osforge/linalg.hpp"
#include "osforge/matroid.hpp"
#include "osforge/os_algebra.hpp"
#include "osforge/tutte.hpp"

namespace osforge {

inline constexpr const char* kToolVersion = "osforge 0.1.0";

// ---------------------------------------------------------------------------
// The degree-one transfer map between the exterior algebras of the two
// family members, extended multiplicatively.

/// Degree-1 assignment of source generators to target exterior elements.
struct GeneratorMap {
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  std::vector<ExteriorElement> images;  // indexed by source id, over target ids
};

/// Builds the transfer map for a family spec: cycle generators i < n map to
/// e_i - e_n + e_p over the target (with the basepoint-merged element
/// standing in for cycle point 1), the last cycle generator maps to the
/// isthmus generator, and seed generators map to their namesakes. The seed
/// basepoint maps to the merged generator, which is a single element of the
/// target even though cycle point 1 and the basepoint stay distinct in the
/// source.
inline GeneratorMap transfer_map(const FamilySpec& raw, const Matroid& source,
                                 const Matroid& target) {
  check_family_spec(raw);
  const FamilySpec spec = resolve_family_labels(raw);
  const int n = spec.n;
  const std::string merged = merged_basepoint_label("1", spec.basepoint);

  auto require = [](const Matroid& m, const std::string& label) {
    if (!m.has_label(label))
      throw std::invalid_argument("transfer_map: constructed family lacks element '" + label +
                                  "'; spec and family disagree");
    return m.id_of(label);
  };

  for (int i = 1; i <= n; ++i) require(source, std::to_string(i));
  for (const auto& l : spec.seed.labels()) require(source, l);
  const int t_merged = require(target, merged);
  const int t_last = require(target, std::to_string(n));
  const int t_p = require(target, "p");

  auto target_cycle = [&](int i) { return i == 1 ? t_merged : require(target, std::to_string(i)); };

  GeneratorMap gm;
  gm.source_labels = source.labels();
  gm.target_labels = target.labels();
  gm.images.resize(source.size());
  for (int i = 1; i <= n - 1; ++i) {
    gm.images[source.id_of(std::to_string(i))] = ExteriorElement::generator(target_cycle(i)) -
                                                 ExteriorElement::generator(t_last) +
                                                 ExteriorElement::generator(t_p);
  }
  gm.images[source.id_of(std::to_string(n))] = ExteriorElement::generator(t_p);
  for (const auto& l : spec.seed.labels()) {
    const int t = l == spec.basepoint ? t_merged : require(target, l);
    gm.images[source.id_of(l)] = ExteriorElement::generator(t);
  }
  return gm;
}

/// Multiplicative extension: a monomial maps to the wedge of its generator
/// images in ascending source-id order; linear and degree-preserving.
inline ExteriorElement apply_map(const GeneratorMap& gm, const ExteriorElement& x) {
  ExteriorElement out;
  for (const auto& [mask, c] : x.terms()) {
    ExteriorElement prod = ExteriorElement::unit();
    for (int id : mask_ids(mask)) prod = prod * gm.images.at(id);
    out += c * prod;
  }
  return out;
}

/// Exact degree-one matrix of the map (rows: source generators, columns:
/// target generators) with its determinant and inverse. Throws on a
/// non-square or singular matrix.
struct Degree1Witness {
  RationalMatrix matrix;
  RationalMatrix inverse;
  Rational det;

  bool unimodular() const { return det == 1 || det == -1; }
};

inline Degree1Witness check_degree1_bijective(const GeneratorMap& gm) {
  const std::size_t rows = gm.source_labels.size();
  const std::size_t cols = gm.target_labels.size();
  if (rows != cols)
    throw std::invalid_argument("check_degree1_bijective: generator counts differ");
  RationalMatrix a(rows, RationalRow(cols, Rational(0)));
  for (std::size_t s = 0; s < rows; ++s) {
    for (const auto& [mask, c] : gm.images[s].terms()) {
      const auto ids = mask_ids(mask);
      if (ids.size() != 1)
        throw std::invalid_argument("check_degree1_bijective: image not homogeneous of degree 1");
      a[s][ids[0]] = c;
    }
  }
  const InverseWitness inv = invert(a);  // throws if singular
  return Degree1Witness{std::move(a), inv.inverse, inv.det};
}

// ---------------------------------------------------------------------------
// Relation transport

struct RelationCheck {
  std::vector<std::string> circuit;  // source circuit, labels
  std::string kind;                  // "cycle" or "seed"
  bool member = false;               // image of its boundary lies in the target ideal
};

/// Maps every source circuit's boundary through the generator map and tests
/// membership in the target ideal (rewriting + linear algebra, both must
/// agree). The transcript records the two sub-cases: seed circuits map to
/// literal target generators, the cycle circuit telescopes.
inline std::vector<RelationCheck> check_relations(const GeneratorMap& gm, const Matroid& source,
                                                  const OSAlgebra& target, int cycle_n) {
  std::vector<RelationCheck> out;
  const SetMask cycle_mask = (SetMask{1} << cycle_n) - 1;  // cycle ids come first
  for (SetMask c : source.circuits()) {
    RelationCheck rc;
    rc.circuit = source.labels_of(c);
    rc.kind = subset_of(c, cycle_mask) ? "cycle" : "seed";
    const ExteriorElement image = apply_map(gm, boundary(ExteriorElement::monomial(c, 1)));
    rc.member = target.ideal_member(image);
    out.push_back(std::move(rc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The certificate

struct StageResult {
  std::string name;
  bool pass = false;
};

struct SurjectivityWitness {
  int degree = 0;
  long long dim_source = 0;
  long long dim_target = 0;
  long long achieved_rank = 0;
  // Sparse triplets (row, col, value) of the induced map on the nbc bases.
  std::vector<std::tuple<int, int, std::string>> entries;
};

/// Machine-checkable record of the certification pipeline. recheck() works
/// on the serialized data alone: it re-derives the determinant, the
/// matrix-inverse product, and the per-degree ranks from the embedded
/// matrices without consulting the matroid code.
struct IsoCertificate {
  std::string tool_version = kToolVersion;
  int n = 0;
  std::string basepoint;
  nlohmann::json seed;
  nlohmann::json source;
  nlohmann::json target;
  std::vector<std::pair<std::string, nlohmann::json>> generator_images;
  std::vector<std::vector<std::string>> degree1_matrix;
  std::vector<std::vector<std::string>> degree1_inverse;
  std::string degree1_det;
  std::vector<RelationCheck> relations;
  std::vector<long long> dims_source;
  std::vector<long long> dims_target;
  std::vector<SurjectivityWitness> surjectivity;
  std::vector<StageResult> stages;
  std::vector<std::string> notes;
  bool accepted = false;
};

inline nlohmann::json certificate_to_json(const IsoCertificate& c) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["tool_version"] = c.tool_version;
  j["n"] = c.n;
  j["basepoint"] = c.basepoint;
  j["seed"] = c.seed;
  j["source"] = c.source;
  j["target"] = c.target;
  j["generator_images"] = nlohmann::json::array();
  for (const auto& [label, img] : c.generator_images)
    j["generator_images"].push_back({{"source", label}, {"image", img}});
  j["degree1_matrix"] = c.degree1_matrix;
  j["degree1_inverse"] = c.degree1_inverse;
  j["degree1_det"] = c.degree1_det;
  j["relations"] = nlohmann::json::array();
  for (const auto& r : c.relations)
    j["relations"].push_back({{"circuit", r.circuit}, {"kind", r.kind}, {"member", r.member}});
  j["dims_source"] = c.dims_source;
  j["dims_target"] = c.dims_target;
  j["surjectivity"] = nlohmann::json::array();
  for (const auto& s : c.surjectivity) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [r, col, v] : s.entries) entries.push_back({r, col, v});
    j["surjectivity"].push_back({{"degree", s.degree},
                                 {"dim_source", s.dim_source},
                                 {"dim_target", s.dim_target},
                                 {"rank", s.achieved_rank},
                                 {"entries", entries}});
  }
  j["stages"] = nlohmann::json::array();
  for (const auto& s : c.stages) j["stages"].push_back({{"name", s.name}, {"pass", s.pass}});
  j["notes"] = c.notes;
  j["accepted"] = c.accepted;
  return j;
}

inline IsoCertificate certificate_from_json(const nlohmann::json& j) {
  IsoCertificate c;
  c.tool_version = j.at("tool_version").get<std::string>();
  c.n = j.at("n").get<int>();
  c.basepoint = j.at("basepoint").get<std::string>();
  c.seed = j.at("seed");
  c.source = j.at("source");
  c.target = j.at("target");
  for (const auto& g : j.at("generator_images"))
    c.generator_images.emplace_back(g.at("source").get<std::string>(), g.at("image"));
  c.degree1_matrix = j.at("degree1_matrix").get<std::vector<std::vector<std::string>>>();
  c.degree1_inverse = j.at("degree1_inverse").get<std::vector<std::vector<std::string>>>();
  c.degree1_det = j.at("degree1_det").get<std::string>();
  for (const auto& r : j.at("relations")) {
    RelationCheck rc;
    rc.circuit = r.at("circuit").get<std::vector<std::string>>();
    rc.kind = r.at("kind").get<std::string>();
    rc.member = r.at("member").get<bool>();
    c.relations.push_back(std::move(rc));
  }
  c.dims_source = j.at("dims_source").get<std::vector<long long>>();
  c.dims_target = j.at("dims_target").get<std::vector<long long>>();
  for (const auto& s : j.at("surjectivity")) {
    SurjectivityWitness w;
    w.degree = s.at("degree").get<int>();
    w.dim_source = s.at("dim_source").get<long long>();
    w.dim_target = s.at("dim_target").get<long long>();
    w.achieved_rank = s.at("rank").get<long long>();
    for (const auto& e : s.at("entries"))
      w.entries.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::string>());
    c.surjectivity.push_back(std::move(w));
  }
  for (const auto& s : j.at("stages"))
    c.stages.push_back({s.at("name").get<std::string>(), s.at("pass").get<bool>()});
  c.notes = j.at("notes").get<std::vector<std::string>>();
  c.accepted = j.at("accepted").get<bool>();
  return c;
}

namespace detail {

inline RationalMatrix parse_matrix(const std::vector<std::vector<std::string>>& s) {
  RationalMatrix m;
  for (const auto& row : s) {
    RationalRow r;
    for (const auto& v : row) r.push_back(rational_from_string(v));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace detail

/// Standalone re-verification of a serialized certificate: pure linear
/// algebra and bookkeeping on the embedded data. Returns the verdict the
/// certificate must reproduce.
inline bool recheck_certificate(const nlohmann::json& j) {
  const IsoCertificate c = certificate_from_json(j);
  bool ok = true;

  const RationalMatrix a = detail::parse_matrix(c.degree1_matrix);
  const RationalMatrix b = detail::parse_matrix(c.degree1_inverse);
  try {
    const InverseWitness w = invert(a);
    ok = ok && (w.det == rational_from_string(c.degree1_det));
    ok = ok && (w.det == 1 || w.det == -1);
    ok = ok && is_identity(matmul(a, b));
  } catch (const std::invalid_argument&) {
    ok = false;
  }

  for (const auto& r : c.relations) ok = ok && r.member;
  ok = ok && (c.dims_source == c.dims_target);

  for (const auto& s : c.surjectivity) {
    if (s.degree < 0 || s.degree >= static_cast<int>(c.dims_target.size())) return false;
    ok = ok && (s.dim_target == c.dims_target[s.degree]);
    ok = ok && (s.dim_source == c.dims_source[s.degree]);
    RationalMatrix m(s.dim_source, RationalRow(s.dim_target, Rational(0)));
    for (const auto& [row, col, v] : s.entries) {
      if (row < 0 || row >= s.dim_source || col < 0 || col >= s.dim_target) return false;
      m[row][col] = rational_from_string(v);
    }
    const long long rk = static_cast<long long>(rank_of(std::move(m)));
    ok = ok && (rk == s.achieved_rank) && (rk == s.dim_target);
  }

  for (const auto& s : c.stages) ok = ok && s.pass;
  return ok && c.accepted;
}

// ---------------------------------------------------------------------------
// The full pipeline

/// Builds both family members and the transfer map, then certifies: circuit
/// axioms on both sides, degree-one unimodularity, relation transport into
/// the target ideal, equality of graded dimension vectors, and full
/// per-degree rank of the induced map on nbc bases (surjectivity plus equal
/// dimensions forces bijectivity). The certificate carries every witness.
inline IsoCertificate certify_os_isomorphism(const FamilySpec& raw) {
  check_family_spec(raw);
  const FamilySpec spec = resolve_family_labels(raw);
  const Matroid source = direct_sum_family(spec);
  const Matroid target = parallel_family(spec);

  IsoCertificate cert;
  cert.n = spec.n;
  cert.basepoint = spec.basepoint;
  cert.seed = matroid_to_json(spec.seed);
  cert.source = matroid_to_json(source);
  cert.target = matroid_to_json(target);
  cert.notes.push_back(
      "the source basepoint generator maps to the merged degree-one generator of the target");
  if (spec.basepoint != raw.basepoint)
    cert.notes.push_back("seed labels collided with the cycle labels and carry an m0. prefix");

  cert.stages.push_back({"source-axioms", validate(source).pass()});
  cert.stages.push_back({"target-axioms", validate(target).pass()});

  const GeneratorMap gm = transfer_map(spec, source, target);
  for (int s = 0; s < source.size(); ++s)
    cert.generator_images.emplace_back(source.label_of(s),
                                       exterior_to_json(gm.images[s], target));

  const Degree1Witness deg1 = check_degree1_bijective(gm);
  cert.degree1_det = rational_to_string(deg1.det);
  for (const auto& row : deg1.matrix) {
    std::vector<std::string> out;
    for (const auto& v : row) out.push_back(rational_to_string(v));
    cert.degree1_matrix.push_back(std::move(out));
  }
  for (const auto& row : deg1.inverse) {
    std::vector<std::string> out;
    for (const auto& v : row) out.push_back(rational_to_string(v));
    cert.degree1_inverse.push_back(std::move(out));
  }
  cert.stages.push_back({"degree1-unimodular", deg1.unimodular()});

  const OSAlgebra source_algebra(source);
  const OSAlgebra target_algebra(target);

  cert.relations = check_relations(gm, source, target_algebra, spec.n);
  bool relations_ok = true;
  for (const auto& r : cert.relations) relations_ok = relations_ok && r.member;
  cert.stages.push_back({"relations-into-target-ideal", relations_ok});

  cert.dims_source = graded_dimensions(source_algebra);
  cert.dims_target = graded_dimensions(target_algebra);
  cert.stages.push_back({"graded-dimensions-equal", cert.dims_source == cert.dims_target});

  bool full_rank = true;
  const auto& src_basis = source_algebra.nbc_basis();
  const auto& tgt_basis = target_algebra.nbc_basis();
  for (int p = 0; p < static_cast<int>(src_basis.size()); ++p) {
    SurjectivityWitness w;
    w.degree = p;
    w.dim_source = static_cast<long long>(src_basis[p].size());
    w.dim_target = p < static_cast<int>(tgt_basis.size())
                       ? static_cast<long long>(tgt_basis[p].size())
                       : 0;
    std::map<SetMask, int> tgt_col;
    if (p < static_cast<int>(tgt_basis.size()))
      for (int i = 0; i < static_cast<int>(tgt_basis[p].size()); ++i) tgt_col[tgt_basis[p][i]] = i;
    RationalMatrix rows(w.dim_source, RationalRow(w.dim_target, Rational(0)));
    for (int r = 0; r < static_cast<int>(src_basis[p].size()); ++r) {
      const ExteriorElement image =
          target_algebra.normal_form(apply_map(gm, ExteriorElement::monomial(src_basis[p][r], 1)));
      for (const auto& [mask, cf] : image.terms()) {
        auto it = tgt_col.find(mask);
        if (it == tgt_col.end())
          throw std::logic_error("certify: normal form left the nbc basis");
        rows[r][it->second] = cf;
        w.entries.emplace_back(r, it->second, rational_to_string(cf));
      }
    }
    w.achieved_rank = static_cast<long long>(rank_of(rows));
    full_rank = full_rank && (w.achieved_rank == w.dim_target);
    cert.surjectivity.push_back(std::move(w));
  }
  cert.stages.push_back({"per-degree-full-rank", full_rank});

  cert.accepted = true;
  for (const auto& s : cert.stages) cert.accepted = cert.accepted && s.pass;
  return cert;
}

// ---------------------------------------------------------------------------
// The multi-matroid demonstration: m pairwise non-isomorphic simple matroids
// sharing one OS algebra.

struct SharedOsMember {
  int spoke = 0;
  Matroid matroid;
  int longest_circuit = 0;
  bool certified = false;
  IsoCertificate certificate;
};

struct SharedOsPair {
  int spoke_a = 0;
  int spoke_b = 0;
  bool isomorphic = false;
  std::string method;  // "exhaustive" or "longest-circuit"
};

struct SharedOsReport {
  int m = 0;
  int n = 0;
  Matroid base;  // the shared direct-sum member
  std::vector<long long> dims;
  std::vector<SharedOsMember> members;
  std::vector<SharedOsPair> pairs;
  bool pairwise_nonisomorphic = true;
  bool accepted = false;
};

inline SharedOsReport shared_os_report(int m, int n) {
  if (m < 1) throw std::invalid_argument("shared_os_report: m must be >= 1");
  if (n <= 2 * m + 1) throw std::invalid_argument("shared_os_report: n must exceed 2m+1");
  const Matroid seed = graphic_matroid(fan_graph(m));
  if (seed.size() + n > 20)
    throw std::invalid_argument("shared_os_report: instance exceeds desk scale (> 20 elements)");

  SharedOsReport rep;
  rep.m = m;
  rep.n = n;
  rep.base = direct_sum_family({seed, "s" + std::to_string(m), n});

  for (int i = m; i <= 2 * m - 1; ++i) {
    SharedOsMember member;
    member.spoke = i;
    const FamilySpec spec{seed, "s" + std::to_string(i), n};
    member.matroid = parallel_family(spec);
    member.longest_circuit = longest_circuit(member.matroid);
    member.certificate = certify_os_isomorphism(spec);
    member.certified = member.certificate.accepted;
    if (rep.dims.empty()) rep.dims = member.certificate.dims_source;
    rep.members.push_back(std::move(member));
  }

  for (std::size_t a = 0; a < rep.members.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.members.size(); ++b) {
      SharedOsPair pair;
      pair.spoke_a = rep.members[a].spoke;
      pair.spoke_b = rep.members[b].spoke;
      if (rep.members[a].matroid.size() <= kMaxExhaustiveGround) {
        pair.isomorphic =
            find_isomorphism(rep.members[a].matroid, rep.members[b].matroid).has_value();
        pair.method = "exhaustive";
      } else {
        pair.isomorphic =
            rep.members[a].longest_circuit == rep.members[b].longest_circuit;
        pair.method = "longest-circuit";
      }
      rep.pairwise_nonisomorphic = rep.pairwise_nonisomorphic && !pair.isomorphic;
      rep.pairs.push_back(std::move(pair));
    }
  }

  rep.accepted = rep.pairwise_nonisomorphic;
  for (const auto& member : rep.members) rep.accepted = rep.accepted && member.certified;
  return rep;
}

inline nlohmann::json shared_os_report_to_json(const SharedOsReport& rep) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["tool_version"] = kToolVersion;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["base"] = matroid_to_json(rep.base);
  j["dims"] = rep.dims;
  j["members"] = nlohmann::json::array();
  for (const auto& member : rep.members) {
    j["members"].push_back({{"spoke", member.spoke},
                            {"matroid", matroid_to_json(member.matroid)},
                            {"longest_circuit", member.longest_circuit},
                            {"certified", member.certified},
                            {"certificate", certificate_to_json(member.certificate)}});
  }
  j["pairs"] = nlohmann::json::array();
  for (const auto& pair : rep.pairs) {
    j["pairs"].push_back({{"spoke_a", pair.spoke_a},
                          {"spoke_b", pair.spoke_b},
                          {"isomorphic", pair.isomorphic},
                          {"method", pair.method}});
  }
  j["pairwise_nonisomorphic"] = rep.pairwise_nonisomorphic;
  j["accepted"] = rep.accepted;
  return j;
}

}  // namespace osforge
