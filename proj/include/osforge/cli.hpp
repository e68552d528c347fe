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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "osforge/arrangement.hpp"
#include "osforge/constructions.hpp"
#include "osforge/iso.hpp"
#include "osforge/matroid.hpp"
#include "osforge/os_algebra.hpp"
#include "osforge/tutte.hpp"

namespace osforge::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error.

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

inline Matroid load_matroid(const std::string& matroid_path, const std::string& graph_path) {
  if (matroid_path.empty() == graph_path.empty())
    throw std::invalid_argument("provide exactly one of --matroid or --graph");
  if (!matroid_path.empty()) return matroid_from_json(load_json(matroid_path));
  return graphic_matroid(graph_from_json(load_json(graph_path)));
}

/// Writes the artifact to --out (atomically, via a temp file and rename) or
/// to the output stream.
inline void emit(const nlohmann::json& payload, const std::string& text,
                 const std::string& format, const std::string& out_path, std::ostream& out) {
  std::string body;
  if (format == "text") {
    body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
  } else {
    body = payload.dump(2) + "\n";
  }
  if (out_path.empty()) {
    out << body;
    return;
  }
  const std::filesystem::path target(out_path);
  const std::filesystem::path tmp(out_path + ".tmp");
  {
    std::ofstream f(tmp);
    if (!f) throw std::invalid_argument("cannot write file '" + out_path + "'");
    f << body;
  }
  std::filesystem::rename(tmp, target);
}

inline nlohmann::json versioned(nlohmann::json j) {
  j["schema_version"] = 1;
  j["tool_version"] = kToolVersion;
  return j;
}

}  // namespace detail

/// Runs one CLI invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"matroid, Tutte-polynomial, and Orlik-Solomon algebra toolkit"};
  app.require_subcommand(1);

  std::string matroid_path, graph_path, arrangement_path, element_path;
  std::string basepoint, out_path, format = "json";
  std::string file_a, file_b;
  int n = 0, m = 0, form_index = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the artifact to this file");
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_matroid_input = [&](CLI::App* sub) {
    sub->add_option("--matroid", matroid_path, "matroid JSON file");
    sub->add_option("--graph", graph_path, "graph JSON file (polygon matroid is taken)");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the circuit axioms");
  add_matroid_input(validate_cmd);
  add_common(validate_cmd);

  CLI::App* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial by deletion-contraction");
  add_matroid_input(tutte_cmd);
  add_common(tutte_cmd);

  CLI::App* chi_cmd = app.add_subcommand("chi", "characteristic polynomial T(1-t, 0)");
  add_matroid_input(chi_cmd);
  add_common(chi_cmd);

  CLI::App* beta_cmd = app.add_subcommand("beta", "beta invariant (coefficient of x)");
  add_matroid_input(beta_cmd);
  add_common(beta_cmd);

  CLI::App* dims_cmd = app.add_subcommand("os-dims", "graded dimensions of the OS algebra");
  add_matroid_input(dims_cmd);
  add_common(dims_cmd);

  CLI::App* nf_cmd = app.add_subcommand("nf", "normal form in the nbc basis");
  add_matroid_input(nf_cmd);
  nf_cmd->add_option("--element", element_path, "exterior element JSON file")->required();
  add_common(nf_cmd);

  CLI::App* family_cmd =
      app.add_subcommand("build-family", "build both family members from a seed");
  add_matroid_input(family_cmd);
  family_cmd->add_option("--basepoint", basepoint, "seed basepoint label")->required();
  family_cmd->add_option("--n", n, "cycle length (n >= 2)")->required();
  add_common(family_cmd);

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "certify the graded OS-algebra isomorphism");
  certify_cmd->add_option("--matroid,--seed-matroid", matroid_path, "seed matroid JSON file");
  certify_cmd->add_option("--graph", graph_path, "seed graph JSON file");
  certify_cmd->add_option("--basepoint", basepoint, "seed basepoint label")->required();
  certify_cmd->add_option("--n", n, "cycle length (n >= 2)")->required();
  add_common(certify_cmd);

  CLI::App* corollary_cmd = app.add_subcommand(
      "corollary-cor", "m pairwise non-isomorphic matroids sharing one OS algebra");
  corollary_cmd->add_option("--m", m, "fan parameter (members m..2m-1)")->required();
  corollary_cmd->add_option("--n", n, "cycle length, must exceed 2m+1")->required();
  add_common(corollary_cmd);

  CLI::App* decone_cmd = app.add_subcommand("arr-decone", "decone a central arrangement");
  decone_cmd->add_option("--arrangement", arrangement_path, "arrangement JSON file")->required();
  decone_cmd->add_option("--form-index", form_index, "designated hyperplane (default 0)");
  add_common(decone_cmd);

  CLI::App* parallel_cmd =
      app.add_subcommand("arr-parallel", "parallel connection of two central arrangements");
  parallel_cmd->add_option("a0", file_a, "first arrangement JSON file")->required();
  parallel_cmd->add_option("a1", file_b, "second arrangement JSON file")->required();
  add_common(parallel_cmd);

  CLI::App* homo_cmd = app.add_subcommand(
      "arr-verify-homo", "check the decone/parallel-connection defining-polynomial identity");
  homo_cmd->add_option("a0", file_a, "first arrangement JSON file")->required();
  homo_cmd->add_option("a1", file_b, "second arrangement JSON file")->required();
  add_common(homo_cmd);

  CLI::App* iso_cmd = app.add_subcommand("isomorphic", "search for a circuit-preserving bijection");
  iso_cmd->add_option("m0", file_a, "first matroid JSON file")->required();
  iso_cmd->add_option("m1", file_b, "second matroid JSON file")->required();
  add_common(iso_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      const Matroid mat = detail::load_matroid(matroid_path, graph_path);
      const ValidationReport rep = validate(mat);
      nlohmann::json j;
      j["pass"] = rep.pass();
      j["antichain_ok"] = rep.antichain_ok;
      j["elimination_ok"] = rep.elimination_ok;
      if (!rep.antichain_ok) j["antichain_witness"] = rep.antichain_witness;
      if (!rep.elimination_ok) {
        j["elimination_witness"] = rep.elimination_witness;
        j["eliminated"] = rep.eliminated_label;
      }
      detail::emit(detail::versioned(j), rep.pass() ? "pass" : "fail", format, out_path, out);
      return rep.pass() ? 0 : 1;
    }

    if (tutte_cmd->parsed()) {
      const Matroid mat = detail::load_matroid(matroid_path, graph_path);
      const BivariatePolynomial t = tutte(mat);
      nlohmann::json j = t.to_json();
      j["string"] = t.to_string();
      detail::emit(detail::versioned(j), t.to_string(), format, out_path, out);
      return 0;
    }

    if (chi_cmd->parsed()) {
      const Matroid mat = detail::load_matroid(matroid_path, graph_path);
      const UnivariatePolynomial chi = characteristic(mat);
      nlohmann::json j = chi.to_json();
      j["string"] = chi.to_string();
      detail::emit(detail::versioned(j), chi.to_string(), format, out_path, out);
      return 0;
    }

    if (beta_cmd->parsed()) {
      const Matroid mat = detail::load_matroid(matroid_path, graph_path);
      const long long beta = beta_invariant(mat);
      detail::emit(detail::versioned({{"beta", beta}}), std::to_string(beta), format, out_path,
                   out);
      return 0;
    }

    if (dims_cmd->parsed()) {
      const Matroid mat = detail::load_matroid(matroid_path, graph_path);
      const OSAlgebra algebra(mat);
      const auto dims = graded_dimensions(algebra);
      nlohmann::json j;
      j["dims"] = dims;
      bool loopless = true;
      for (int id = 0; id < mat.size(); ++id) loopless = loopless && !is_loop(mat, id);
      if (loopless && mat.size() <= kMaxExhaustiveGround)
        j["whitney"] = whitney_dimensions(mat);
      std::string text;
      for (std::size_t i = 0; i < dims.size(); ++i)
        text += (i ? " " : "") + std::to_string(dims[i]);
      detail::emit(detail::versioned(j), text, format, out_path, out);
      return 0;
    }

    if (nf_cmd->parsed()) {
      const Matroid mat = detail::load_matroid(matroid_path, graph_path);
      const OSAlgebra algebra(mat);
      const ExteriorElement x = exterior_from_json(detail::load_json(element_path), mat);
      const ExteriorElement reduced = algebra.normal_form(x);
      nlohmann::json j = exterior_to_json(reduced, mat);
      j["string"] = reduced.to_string(mat);
      detail::emit(detail::versioned(j), reduced.to_string(mat), format, out_path, out);
      return 0;
    }

    if (family_cmd->parsed()) {
      const FamilySpec spec{detail::load_matroid(matroid_path, graph_path), basepoint, n};
      nlohmann::json j;
      j["direct_sum"] = matroid_to_json(direct_sum_family(spec));
      j["parallel"] = matroid_to_json(parallel_family(spec));
      detail::emit(detail::versioned(j), detail::versioned(j).dump(2), format, out_path, out);
      return 0;
    }

    if (certify_cmd->parsed()) {
      const FamilySpec spec{detail::load_matroid(matroid_path, graph_path), basepoint, n};
      const IsoCertificate cert = certify_os_isomorphism(spec);
      std::string text;
      for (const auto& s : cert.stages)
        text += (s.pass ? "[pass] " : "[FAIL] ") + s.name + "\n";
      text += cert.accepted ? "accepted" : "rejected";
      detail::emit(certificate_to_json(cert), text, format, out_path, out);
      return cert.accepted ? 0 : 1;
    }

    if (corollary_cmd->parsed()) {
      const SharedOsReport rep = shared_os_report(m, n);
      std::string text = std::to_string(rep.members.size()) + " members; dims:";
      for (long long d : rep.dims) text += " " + std::to_string(d);
      for (const auto& member : rep.members)
        text += "\nspoke " + std::to_string(member.spoke) + ": longest circuit " +
                std::to_string(member.longest_circuit) +
                (member.certified ? ", certified" : ", NOT certified");
      text += rep.accepted ? "\naccepted" : "\nrejected";
      detail::emit(shared_os_report_to_json(rep), text, format, out_path, out);
      return rep.accepted ? 0 : 1;
    }

    if (decone_cmd->parsed()) {
      Arrangement a = arrangement_from_json(detail::load_json(arrangement_path));
      if (form_index < 0 || static_cast<std::size_t>(form_index) >= a.size())
        throw std::invalid_argument("form index out of range");
      a = normalize_first(a, static_cast<std::size_t>(form_index));
      const Arrangement d = decone(a, 0);
      nlohmann::json j = arrangement_to_json(d);
      j["defining_polynomial"] = defining_polynomial(d).to_json();
      detail::emit(detail::versioned(j), defining_polynomial(d).to_string(), format, out_path,
                   out);
      return 0;
    }

    if (parallel_cmd->parsed()) {
      const Arrangement a0 = arrangement_from_json(detail::load_json(file_a));
      const Arrangement a1 = arrangement_from_json(detail::load_json(file_b));
      const Arrangement p = parallel_connection(a0, a1);
      nlohmann::json j = arrangement_to_json(p);
      j["defining_polynomial"] = defining_polynomial(p).to_json();
      j["underlying_matroid"] = matroid_to_json(underlying_matroid(p));
      detail::emit(detail::versioned(j), defining_polynomial(p).to_string(), format, out_path,
                   out);
      return 0;
    }

    if (homo_cmd->parsed()) {
      const Arrangement a0 = arrangement_from_json(detail::load_json(file_a));
      const Arrangement a1 = arrangement_from_json(detail::load_json(file_b));
      const HomoIdentityReport rep = verify_homo_identity(a0, a1);
      nlohmann::json j;
      j["identity_holds"] = rep.identity_holds;
      j["lhs"] = rep.lhs.to_json();
      j["rhs"] = rep.rhs.to_json();
      j["cstar_factors_lhs"] = rep.cstar_factors_lhs;
      j["cstar_factors_rhs"] = rep.cstar_factors_rhs;
      detail::emit(detail::versioned(j),
                   rep.identity_holds ? "identity holds" : "identity FAILS", format, out_path,
                   out);
      return rep.identity_holds ? 0 : 1;
    }

    if (iso_cmd->parsed()) {
      const Matroid m0 = matroid_from_json(detail::load_json(file_a));
      const Matroid m1 = matroid_from_json(detail::load_json(file_b));
      const auto found = find_isomorphism(m0, m1);
      nlohmann::json j;
      j["isomorphic"] = found.has_value();
      if (found) {
        nlohmann::json map = nlohmann::json::object();
        for (int i = 0; i < m0.size(); ++i) map[m0.label_of(i)] = m1.label_of((*found)[i]);
        j["bijection"] = map;
      }
      detail::emit(detail::versioned(j), found ? "isomorphic" : "not isomorphic", format,
                   out_path, out);
      return found ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal verification failure: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace osforge::cli
