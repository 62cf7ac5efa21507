// Copyright 2026 The pauli-dla Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdla/report.hpp"

#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pdla {

namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  return value.str();
}

template <typename T>
Json maybe(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json summand_json(const Summand& s) {
  return Json{{"kind", to_string(s.kind)}, {"k", s.k},           {"r", s.r},
              {"label", s.label()},        {"copies", big(s.copies())}, {"dimension", big(s.dimension())}};
}

Json root_json(const RootCertificate& cert) {
  Json edges = Json::array();
  for (const auto& e : cert.root.edges) edges.push_back(Json::array({e.u, e.v, e.multiplicity}));
  return Json{{"vertices", cert.root.vertices},
              {"edges", std::move(edges)},
              {"vertex_to_edge", cert.vertex_to_edge},
              {"verified", cert.verified}};
}

Json component_json(const ComponentReport& r) {
  const auto& d = r.diagnostics;
  Json diag{{"omega_size", maybe(d.omega_size)},
            {"omega_prime_size", maybe(d.omega_prime_size)},
            {"dim_W", d.dim_W},
            {"dim_W0", maybe(d.dim_W0)},
            {"rad_f_dim", maybe(d.rad_f_dim)},
            {"rad_q_dim", maybe(d.rad_q_dim)},
            {"form_type", d.form_type ? Json(to_string(*d.form_type)) : Json(nullptr)},
            {"resolved_by", d.resolved_by ? Json(to_string(*d.resolved_by)) : Json(nullptr)}};
  return Json{{"generators", r.generators},
              {"branch", to_string(r.branch)},
              {"summand", summand_json(r.summand)},
              {"diagnostics", std::move(diag)},
              {"root", r.root ? root_json(*r.root) : Json(nullptr)}};
}

std::vector<Summand> raw_summands(const Classification& c) {
  std::vector<Summand> out;
  for (const auto& comp : c.components) out.push_back(comp.summand);
  return out;
}

const char* status_name(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Pass:
      return "pass";
    case VerificationStatus::Fail:
      return "fail";
    case VerificationStatus::Unverified:
      return "unverified";
  }
  return "?";
}

}  // namespace

std::string json_report(std::span<const PauliString> input, const Classification& c,
                        const std::optional<VerificationReport>& verification) {
  Json gens = Json::array();
  for (const auto& g : input) gens.push_back(render_pauli(g));
  Json comps = Json::array();
  for (const auto& comp : c.components) comps.push_back(component_json(comp));
  Json canon = Json::array();
  for (const auto& s : c.canonical) canon.push_back(summand_json(s));

  Json out{{"n", c.qubits},
           {"generators", std::move(gens)},
           {"warnings", c.warnings},
           {"components", std::move(comps)},
           {"decomposition", render_summands(raw_summands(c))},
           {"canonical", c.canonical_string()},
           {"canonical_summands", std::move(canon)},
           {"total_dim", big(c.total_dim)}};
  if (verification) {
    out["verified"] = verification->status == VerificationStatus::Pass;
    out["verification"] = Json{{"status", status_name(verification->status)},
                               {"closure_size", verification->closure_size},
                               {"message", verification->message}};
  }
  return out.dump(2) + "\n";
}

std::string plain_report(std::span<const PauliString> input, const Classification& c,
                         const std::optional<VerificationReport>& verification) {
  std::ostringstream out;
  out << "n = " << c.qubits << ", " << input.size() << " generators, " << c.components.size() << " components\n";
  for (const auto& w : c.warnings) out << "warning: " << w << "\n";
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto& comp = c.components[i];
    out << "component " << i << " [" << to_string(comp.branch) << "] generators";
    for (std::size_t g : comp.generators) out << " " << g;
    out << " -> " << render_summands(std::vector<Summand>{comp.summand}) << "\n";
  }
  out << "decomposition: " << render_summands(raw_summands(c)) << "\n";
  out << "canonical: " << c.canonical_string() << "\n";
  out << "total_dim: " << c.total_dim.str() << "\n";
  if (verification) {
    out << "verified: " << status_name(verification->status);
    if (!verification->message.empty()) out << " (" << verification->message << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace pdla
