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

#include "pdla/classifier.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace pdla {

namespace {

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

constexpr std::size_t kNumericLabelLimit = 20;

std::string pow2_label(std::size_t e) {
  if (e <= kNumericLabelLimit) return std::to_string(std::uint64_t{1} << e);
  return "2^" + std::to_string(e);
}

BigInt choose2(std::size_t k) { return BigInt(k) * BigInt(k - 1) / 2; }

// Points reachable from the generators by repeatedly adding an anticommuting
// generator; these are exactly the Pauli directions of the generated algebra.
std::optional<std::size_t> generator_closure_size(std::span<const BitVector> gens, const QuadraticForm& form,
                                                  std::size_t cap) {
  std::unordered_set<BitVector> seen(gens.begin(), gens.end());
  std::deque<BitVector> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    const BitVector p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      if (!form.polar(p, g)) continue;
      BitVector q = p ^ g;
      if (seen.insert(q).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(q));
      }
    }
  }
  return seen.size();
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

ComponentReport isolated_report() {
  ComponentReport report;
  report.branch = Branch::Isolated;
  report.summand = {SummandKind::SO_N, 2, 0};
  report.diagnostics.dim_W = 1;
  return report;
}

void rewrite(Summand s, std::vector<Summand>& out) {
  switch (s.kind) {
    case SummandKind::SO_POW2:
      if (s.k >= 1 && s.k <= kNumericLabelLimit) return rewrite({SummandKind::SO_N, std::size_t{1} << s.k, s.r}, out);
      break;
    case SummandKind::SP:
      if (s.k == 1) s = {SummandKind::SU, 1, s.r};
      break;
    case SummandKind::SO_N:
      if (s.k == 3) s = {SummandKind::SU, 1, s.r};
      else if (s.k == 4) s = {SummandKind::SU, 1, s.r + 1};
      else if (s.k == 5) s = {SummandKind::SP, 2, s.r};
      else if (s.k == 6) s = {SummandKind::SU, 2, s.r};
      break;
    case SummandKind::SU:
      break;
  }
  out.push_back(s);
}

std::string canonical_label(const Summand& s) {
  if (s.kind == SummandKind::SO_N && s.k == 2) return "u(1)";
  return s.label();
}

}  // namespace

BigInt Summand::dimension() const {
  switch (kind) {
    case SummandKind::SU:
      return pow2(2 * k) - 1;
    case SummandKind::SP:
      return k == 0 ? BigInt(0) : pow2(k - 1) * (pow2(k) + 1);
    case SummandKind::SO_POW2:
      return k == 0 ? BigInt(0) : pow2(k - 1) * (pow2(k) - 1);
    case SummandKind::SO_N:
      return k == 0 ? BigInt(0) : choose2(k);
  }
  return 0;
}

BigInt Summand::copies() const { return pow2(r); }

std::string Summand::label() const {
  switch (kind) {
    case SummandKind::SU:
      return "su(" + pow2_label(k) + ")";
    case SummandKind::SP:
      return "sp(" + (k == 0 ? std::string("0") : pow2_label(k - 1)) + ")";
    case SummandKind::SO_POW2:
      return "so(" + pow2_label(k) + ")";
    case SummandKind::SO_N:
      return "so(" + std::to_string(k) + ")";
  }
  return "?";
}

const char* to_string(SummandKind kind) {
  switch (kind) {
    case SummandKind::SU:
      return "SU";
    case SummandKind::SP:
      return "SP";
    case SummandKind::SO_POW2:
      return "SO_POW2";
    case SummandKind::SO_N:
      return "SO_N";
  }
  return "?";
}

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::Line:
      return "Line";
    case Branch::Natural:
      return "Natural";
    case Branch::Isolated:
      return "Isolated";
  }
  return "?";
}

const char* to_string(Resolution resolution) { return resolution == Resolution::Formula ? "Formula" : "Closure"; }

std::string Classification::canonical_string() const { return render_summands(canonical); }

std::vector<Summand> canonicalize(std::span<const Summand> summands) {
  std::vector<Summand> out;
  out.reserve(summands.size());
  for (const auto& s : summands) rewrite(s, out);
  std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
    const BigInt da = a.dimension();
    const BigInt db = b.dimension();
    if (da != db) return da > db;
    return a < b;
  });
  return out;
}

std::string render_summands(std::span<const Summand> summands) {
  if (summands.empty()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " ⊕ ";
    out += part;
  };
  for (std::size_t i = 0; i < summands.size();) {
    const std::string label = canonical_label(summands[i]);
    BigInt copies = 0;
    std::size_t j = i;
    for (; j < summands.size() && summands[j].kind == summands[i].kind && summands[j].k == summands[i].k; ++j) {
      copies += summands[j].copies();
    }
    if (copies <= 4) {
      for (int c = 0; c < static_cast<int>(copies); ++c) append(label);
    } else {
      append(label + "^⊕" + copies.str());
    }
    i = j;
  }
  return out;
}

ComponentReport classify_line_component(std::span<const BitVector> gens, const QuadraticForm& form,
                                        const RootCertificate& cert, std::size_t closure_cap) {
  if (!cert.verified) throw std::invalid_argument("root certificate is not verified");
  if (cert.vertex_to_edge.size() != gens.size()) {
    throw std::invalid_argument("root certificate does not match the component");
  }
  const std::size_t k = cert.root.vertices;
  if (k == 4) throw std::invalid_argument("line-graph branch needs a root without exactly 4 vertices");

  const auto instances = cert.root.instance_endpoints();
  std::vector<std::pair<std::size_t, std::size_t>> ends(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) ends[i] = instances[cert.vertex_to_edge[i]];

  // Spanning tree of the root, lowest generator index first.
  DisjointSets sets(k);
  std::vector<std::size_t> tree;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree_adj(k);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (sets.unite(ends[i].first, ends[i].second)) {
      tree.push_back(i);
      tree_adj[ends[i].first].emplace_back(ends[i].second, i);
      tree_adj[ends[i].second].emplace_back(ends[i].first, i);
    }
  }

  SpanBasis w_span(form.dim());
  for (const auto& g : gens) w_span.insert(g);
  SpanBasis w0_span(form.dim());
  std::vector<BitVector> tree_vectors;
  for (std::size_t i : tree) {
    w0_span.insert(gens[i]);
    tree_vectors.push_back(gens[i]);
  }
  const std::size_t dim_w = w_span.rank();
  const std::size_t dim_w0 = w0_span.rank();
  const std::size_t d = dim_w - dim_w0;

  ComponentReport report;
  report.branch = Branch::Line;
  report.diagnostics.omega_size = k;
  report.diagnostics.dim_W = dim_w;
  report.diagnostics.dim_W0 = dim_w0;
  report.diagnostics.resolved_by = Resolution::Formula;

  std::size_t omega_prime = d;
  if (k % 4 == 0 && dim_w0 == k - 1) {
    // Standard embedding: W0 has a one-dimensional isotropic radical r0, and
    // |Omega'| is d + 1 exactly when r0 is reached from the extra generators.
    const BigInt predicted = choose2(k) * pow2(d + 1);
    std::optional<std::size_t> points;
    if (predicted <= closure_cap) points = generator_closure_size(gens, form, closure_cap);
    if (points) {
      const BigInt ratio = BigInt(*points) / choose2(k);
      if (ratio * choose2(k) != *points || ratio == 0 || (ratio & (ratio - 1)) != 0) {
        throw std::logic_error("closure size is not C(k,2) times a power of two");
      }
      omega_prime = boost::multiprecision::msb(ratio);
      report.diagnostics.resolved_by = Resolution::Closure;
    } else {
      const HyperbolicBasis w0_basis = symplectic_gram_schmidt(tree_vectors, form);
      if (w0_basis.radical.size() != 1) throw std::logic_error("standard embedding without a 1-dim radical");
      const BitVector& r0 = w0_basis.radical.front();

      // potential[x]: sum of tree-edge vectors on the tree path from vertex 0.
      std::vector<BitVector> potential(k, BitVector(form.dim()));
      std::vector<bool> seen(k, false);
      std::deque<std::size_t> queue{0};
      seen[0] = true;
      while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (auto [y, edge] : tree_adj[x]) {
          if (seen[y]) continue;
          seen[y] = true;
          potential[y] = potential[x] ^ gens[edge];
          queue.push_back(y);
        }
      }
      SpanBasis deltas(form.dim());
      for (std::size_t i = 0; i < gens.size(); ++i) {
        deltas.insert(gens[i] ^ potential[ends[i].first] ^ potential[ends[i].second]);
      }
      omega_prime = deltas.contains(r0) ? d + 1 : d;
    }
  } else if (dim_w0 + 1 != k && dim_w0 + 2 != k) {
    throw std::logic_error("tree span has impossible dimension");
  }

  report.diagnostics.omega_prime_size = omega_prime;
  report.summand = {SummandKind::SO_N, k, omega_prime};
  report.root = cert;
  return report;
}

ComponentReport classify_natural_component(std::span<const BitVector> gens, const QuadraticForm& form) {
  const HyperbolicBasis basis = symplectic_gram_schmidt(gens, form);
  const RadicalAnalysis rad = analyze_radical(basis);
  const std::size_t k = basis.pairs.size();
  const std::size_t l = basis.radical.size();

  ComponentReport report;
  report.branch = Branch::Natural;
  report.diagnostics.dim_W = basis.dim();
  report.diagnostics.rad_f_dim = rad.rad_f_dim;
  report.diagnostics.rad_q_dim = rad.rad_q_dim;
  if (rad.anisotropic) {
    report.summand = {SummandKind::SU, k, l - 1};
  } else {
    const FormType type = space_type(basis);
    report.diagnostics.form_type = type;
    report.summand = {type == FormType::Plus ? SummandKind::SO_POW2 : SummandKind::SP, k, l};
  }
  return report;
}

Classification classify(std::span<const PauliString> generators, const ClassifyOptions& options) {
  if (generators.empty()) throw InvalidGenerator("no generators given");
  Classification out;
  out.qubits = generators.front().qubits();

  std::vector<BitVector> vectors;
  std::unordered_map<BitVector, std::size_t> first_seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    PauliString p = generators[i];
    if (p.qubits() != out.qubits) throw InvalidGenerator("generators act on different qubit counts");
    if (p.x().is_zero() && p.z().is_zero()) {
      throw InvalidGenerator("generator " + std::to_string(i) + " (" + render_pauli(p) +
                             ") is a multiple of the identity");
    }
    if (!p.squares_to_minus_one()) {
      if (options.strict) {
        throw InvalidGenerator("generator " + std::to_string(i) + " (" + render_pauli(p) + ") is Hermitian");
      }
      p = p.with_phase(p.phase() + 1);
      out.warnings.push_back("generator " + std::to_string(i) + " (" + render_pauli(generators[i]) +
                             ") is Hermitian; using " + render_pauli(p));
    }
    BitVector v = to_vector(p).bits();
    auto [it, inserted] = first_seen.emplace(v, i);
    if (!inserted) {
      out.warnings.push_back("generator " + std::to_string(i) + " duplicates generator " +
                             std::to_string(it->second));
      continue;
    }
    vectors.push_back(std::move(v));
    out.generators.push_back(std::move(p));
    out.input_index.push_back(i);
  }

  const QuadraticForm form = QuadraticForm::pauli(out.qubits);
  const Graph graph = frustration_graph(vectors, form);
  std::vector<Summand> summands;
  for (const auto& members : connected_components(graph)) {
    ComponentReport report;
    if (members.size() == 1) {
      report = isolated_report();
    } else {
      std::vector<BitVector> comp;
      comp.reserve(members.size());
      for (std::size_t v : members) comp.push_back(vectors[v]);
      const auto cert = recognize_root(graph.induced(members));
      report = cert ? classify_line_component(comp, form, *cert, options.closure_cap)
                    : classify_natural_component(comp, form);
    }
    for (std::size_t v : members) report.generators.push_back(out.input_index[v]);
    out.total_dim += report.summand.total_dimension();
    summands.push_back(report.summand);
    out.components.push_back(std::move(report));
  }
  out.canonical = canonicalize(summands);
  return out;
}

std::optional<std::array<std::size_t, 6>> forbidden_witness(std::span<const BitVector> gens,
                                                             const QuadraticForm& form) {
  if (gens.size() < 6) return std::nullopt;
  const Graph graph = frustration_graph(gens, form);
  std::array<std::size_t, 6> chosen{};

  auto is_witness = [&]() {
    if (!is_connected(graph.induced(chosen))) return false;
    std::vector<BitVector> vs;
    for (std::size_t i : chosen) vs.push_back(gens[i]);
    const HyperbolicBasis basis = symplectic_gram_schmidt(vs, form);
    return basis.pairs.size() == 3 && basis.radical.empty() && space_type(basis) == FormType::Minus;
  };

  std::function<bool(std::size_t, std::size_t, const SpanBasis&)> search =
      [&](std::size_t depth, std::size_t start, const SpanBasis& span) {
        if (depth == 6) return is_witness();
        for (std::size_t i = start; i + (6 - depth) <= gens.size(); ++i) {
          SpanBasis next = span;
          if (!next.insert(gens[i])) continue;
          chosen[depth] = i;
          if (search(depth + 1, i + 1, next)) return true;
        }
        return false;
      };
  if (search(0, 0, SpanBasis(form.dim()))) return chosen;
  return std::nullopt;
}

FullGenerationReport check_generates_full(std::span<const PauliString> generators, std::size_t qubits) {
  FullGenerationReport report;
  if (generators.empty()) return report;
  for (const auto& g : generators) {
    if (g.qubits() != qubits) throw InvalidGenerator("generator qubit count does not match n");
  }
  const Classification c = classify(generators);
  report.connected = c.components.size() == 1;

  std::vector<BitVector> vectors;
  for (const auto& g : c.generators) vectors.push_back(to_vector(g).bits());
  report.spans = rank_of(vectors) == 2 * qubits + 1;

  constexpr std::size_t kWitnessSearchLimit = 32;
  if (vectors.size() <= kWitnessSearchLimit) {
    report.witness = forbidden_witness(vectors, QuadraticForm::pauli(qubits)).has_value();
  } else {
    report.witness = std::any_of(c.components.begin(), c.components.end(), [](const ComponentReport& r) {
      return r.branch == Branch::Natural && r.generators.size() >= 6;
    });
  }
  report.full = c.canonical.size() == 1 && c.canonical.front() == Summand{SummandKind::SU, qubits, 0};
  return report;
}

std::vector<std::vector<std::size_t>> equiv_classes(std::span<const BitVector> points,
                                                    const QuadraticForm& form) {
  SpanBasis w(form.dim());
  for (const auto& p : points) w.insert(p);
  const RadicalAnalysis rad = analyze_radical(symplectic_gram_schmidt(w.rows(), form));
  SpanBasis rad_q(form.dim());
  for (std::size_t i = 0; i < rad.radical.size(); ++i) {
    if (!rad.radical_q[i]) rad_q.insert(rad.radical[i]);
  }

  std::vector<std::vector<std::size_t>> classes;
  std::unordered_map<BitVector, std::size_t> class_of;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, inserted] = class_of.emplace(rad_q.residue(points[i]), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

}  // namespace pdla
