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

// Command-line front end: classify instance files, generate instance
// families, and expose the oracle and graph tools as JSON.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>
#include "pdla/classifier.hpp"
#include "pdla/graph.hpp"
#include "pdla/instance.hpp"
#include "pdla/oracle.hpp"
#include "pdla/report.hpp"

namespace {

pdla::Instance load(const std::string& path) {
  return path == "-" ? pdla::parse_instance(std::cin) : pdla::read_instance(path);
}

using Json = nlohmann::ordered_json;

constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;

struct ClassifyArgs {
  std::string path;
  bool strict = false;
  bool verify = false;
  std::size_t cap = 1'000'000;
  bool plain = false;
};

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::string edges;
  std::string subsets;
  std::size_t m = 0;
  std::uint64_t seed = 1;
};

struct ToolArgs {
  std::string name;
  std::string path;
  bool strict = false;
  std::size_t cap = 1'000'000;
  std::string functional;
  std::uint64_t seed = 1;
};

std::string render_point(const pdla::BitVector& bits, std::size_t n) {
  return pdla::render_pauli(pdla::from_vector(pdla::PauliVector(n, bits)));
}

std::vector<pdla::BitVector> vectors_of(const pdla::Classification& c) {
  std::vector<pdla::BitVector> out;
  for (const auto& g : c.generators) out.push_back(pdla::to_vector(g).bits());
  return out;
}

int run_classify(const ClassifyArgs& args) {
  const pdla::Instance inst = load(args.path);
  pdla::ClassifyOptions options;
  options.strict = args.strict;
  options.closure_cap = args.cap;
  const pdla::Classification c = pdla::classify(inst.generators, options);
  std::optional<pdla::VerificationReport> verification;
  if (args.verify) verification = pdla::verify_classification(inst.generators, c, args.cap);
  std::cout << (args.plain ? pdla::plain_report(inst.generators, c, verification)
                           : pdla::json_report(inst.generators, c, verification));
  if (verification && verification->status == pdla::VerificationStatus::Fail) {
    std::cerr << "verification failed: " << verification->message << "\n";
    return kExitMismatch;
  }
  return 0;
}

int run_generate(const GenerateArgs& args) {
  std::vector<pdla::PauliString> gens;
  std::string comment = args.kind + " n=" + std::to_string(args.n);
  if (args.kind == "qaoa-path") {
    gens = pdla::qaoa_path(args.n);
  } else if (args.kind == "qaoa-cycle") {
    gens = pdla::qaoa_cycle(args.n);
  } else if (args.kind == "qaoa-graph") {
    gens = pdla::qaoa_graph(args.n, pdla::parse_edge_list(args.edges));
    comment += " edges=" + args.edges;
  } else if (args.kind == "parity-basis") {
    gens = pdla::parity_basis(args.n, pdla::parse_subsets(args.subsets));
    comment += " subsets=" + args.subsets;
  } else if (args.kind == "random") {
    std::mt19937_64 rng(args.seed);
    gens = pdla::random_generators(args.n, args.m, rng);
    comment += " m=" + std::to_string(args.m) + " seed=" + std::to_string(args.seed);
  }
  std::cout << pdla::format_instance(gens, comment);
  return 0;
}

Json adjacency_json(const pdla::Graph& g) { return Json(g.adjacency_lists()); }

Json catalog_json() {
  const auto catalog = pdla::catalog_forbidden();
  Json graphs = Json::array();
  for (const auto& entry : catalog) {
    Json gens = Json::array();
    for (const auto& p : pdla::realize_on_qubits(entry.realization)) gens.push_back(pdla::render_pauli(p));
    graphs.push_back(Json{{"vertices", entry.graph.size()},
                          {"adjacency", adjacency_json(entry.graph)},
                          {"generators", std::move(gens)}});
  }
  return Json{{"count", catalog.size()}, {"graphs", std::move(graphs)}};
}

Json tool_json(const ToolArgs& args) {
  if (args.name == "catalog") return catalog_json();

  const pdla::Instance inst = load(args.path);
  pdla::ClassifyOptions options;
  options.strict = args.strict;
  options.closure_cap = args.cap;
  const pdla::Classification c = pdla::classify(inst.generators, options);
  const std::size_t n = c.qubits;
  const auto form = pdla::QuadraticForm::pauli(n);
  const auto vectors = vectors_of(c);

  if (args.name == "closure") {
    const auto set = pdla::closure(vectors, form, args.cap);
    Json points = Json::array();
    for (const auto& p : set.points()) points.push_back(render_point(p, n));
    return Json{{"n", n}, {"size", set.size()}, {"points", std::move(points)}};
  }
  if (args.name == "root-graph") {
    const pdla::Graph g = pdla::frustration_graph(vectors, form);
    Json comps = Json::array();
    for (const auto& members : pdla::connected_components(g)) {
      std::vector<std::size_t> inputs;
      for (std::size_t v : members) inputs.push_back(c.input_index[v]);
      const auto cert = pdla::recognize_root(g.induced(members));
      Json root = nullptr;
      if (cert) {
        Json edges = Json::array();
        for (const auto& e : cert->root.edges) edges.push_back(Json::array({e.u, e.v, e.multiplicity}));
        root = Json{{"vertices", cert->root.vertices},
                    {"edges", std::move(edges)},
                    {"vertex_to_edge", cert->vertex_to_edge},
                    {"verified", cert->verified}};
      }
      comps.push_back(Json{{"generators", inputs}, {"line_graph", cert.has_value()}, {"root", std::move(root)}});
    }
    return Json{{"n", n}, {"components", std::move(comps)}};
  }
  if (args.name == "witness") {
    const auto witness = pdla::forbidden_witness(vectors, form);
    Json out{{"n", n}, {"witness", nullptr}};
    if (witness) {
      std::vector<std::size_t> inputs;
      Json gens = Json::array();
      for (std::size_t i : *witness) {
        inputs.push_back(c.input_index[i]);
        gens.push_back(pdla::render_pauli(c.generators[i]));
      }
      out["witness"] = inputs;
      out["generators"] = std::move(gens);
    }
    return out;
  }
  if (args.name == "commutator-graph") {
    std::vector<pdla::PauliVector> pv;
    for (const auto& g : c.generators) pv.push_back(pdla::to_vector(g));
    const auto comps = pdla::commutator_graph(pv, n);
    Json out_comps = Json::array();
    for (const auto& comp : comps) {
      Json points = Json::array();
      for (const auto& p : comp) points.push_back(pdla::render_pauli(pdla::from_vector(p)));
      out_comps.push_back(Json{{"size", comp.size()}, {"points", std::move(points)}});
    }
    return Json{{"n", n}, {"count", comps.size()}, {"components", std::move(out_comps)}};
  }
  if (args.name == "cartan") {
    const auto set = pdla::closure(vectors, form, args.cap);
    pdla::BitVector functional(form.dim());
    if (!args.functional.empty()) {
      functional = pdla::BitVector::from_string(args.functional);
      if (functional.size() != form.dim()) {
        throw std::invalid_argument("functional needs " + std::to_string(form.dim()) + " bits");
      }
    } else {
      std::mt19937_64 rng(args.seed);
      for (std::size_t j = 0; j < form.dim(); ++j) functional.set(j, rng() & 1U);
    }
    const auto split = pdla::cartan_split(set, functional, form);
    Json l = Json::array();
    Json m = Json::array();
    for (const auto& p : split.l_part) l.push_back(render_point(p, n));
    for (const auto& p : split.m_part) m.push_back(render_point(p, n));
    return Json{{"n", n},         {"functional", functional.str()}, {"l", std::move(l)},
                {"m", std::move(m)}, {"verified", split.verified},      {"warnings", split.warnings}};
  }
  throw std::invalid_argument("unknown tool '" + args.name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify dynamical Lie algebras generated by Pauli strings"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the algebra generated by an instance file");
  classify_cmd->add_option("file", classify_args.path, "Instance file, one Pauli string per line; - reads stdin")->required();
  classify_cmd->add_flag("--strict", classify_args.strict, "Reject Hermitian generators");
  classify_cmd->add_flag("--verify", classify_args.verify, "Check the result against the closure oracle");
  classify_cmd->add_option("--cap", classify_args.cap, "Largest closure the oracle may enumerate");
  auto* json_flag = classify_cmd->add_flag("--json", "JSON output (default)");
  auto* plain_flag = classify_cmd->add_flag("--plain", classify_args.plain, "Human-readable output");
  json_flag->excludes(plain_flag);

  GenerateArgs gen_args;
  auto* generate_cmd = app.add_subcommand("generate", "Print an instance file for a generator family");
  generate_cmd->add_option("kind", gen_args.kind, "Family")
      ->required()
      ->check(CLI::IsMember({"qaoa-path", "qaoa-cycle", "qaoa-graph", "parity-basis", "random"}));
  generate_cmd->add_option("--n", gen_args.n, "Number of qubits")->required();
  generate_cmd->add_option("--edges", gen_args.edges, "Interaction edges for qaoa-graph, e.g. 1-2,2-3");
  generate_cmd->add_option("--subsets", gen_args.subsets, "Parity subsets, e.g. 1,2;2,3");
  generate_cmd->add_option("--m", gen_args.m, "Generator count for random");
  generate_cmd->add_option("--seed", gen_args.seed, "Seed for random");

  ToolArgs tool_args;
  auto* tools_cmd = app.add_subcommand("tools", "Oracle and graph tools");
  tools_cmd->add_option("tool", tool_args.name, "Tool")
      ->required()
      ->check(CLI::IsMember({"closure", "root-graph", "witness", "commutator-graph", "cartan", "catalog"}));
  tools_cmd->add_option("file", tool_args.path, "Instance file (all tools except catalog)");
  tools_cmd->add_flag("--strict", tool_args.strict, "Reject Hermitian generators");
  tools_cmd->add_option("--cap", tool_args.cap, "Largest closure to enumerate");
  tools_cmd->add_option("--functional", tool_args.functional, "Cartan functional as a 0/1 string of length 2n+1");
  tools_cmd->add_option("--seed", tool_args.seed, "Seed for a random Cartan functional");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify_cmd) return run_classify(classify_args);
    if (*generate_cmd) {
      if (gen_args.kind == "qaoa-graph" && gen_args.edges.empty()) throw pdla::InstanceParseError("qaoa-graph needs --edges");
      if (gen_args.kind == "random" && gen_args.m == 0) throw pdla::InstanceParseError("random needs --m");
      return run_generate(gen_args);
    }
    if (*tools_cmd) {
      if (tool_args.name != "catalog" && tool_args.path.empty()) {
        throw pdla::InstanceParseError(tool_args.name + " needs an instance file");
      }
      std::cout << tool_json(tool_args).dump(2) << "\n";
      return 0;
    }
  } catch (const pdla::InvalidGenerator& e) {
    std::cerr << "invalid generator: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const pdla::InstanceParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
