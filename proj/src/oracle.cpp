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

#include "pdla/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace pdla {

namespace {

bool in_form_radical(const BitVector& v, const QuadraticForm& form) {
  for (std::size_t i = 0; i < 2 * form.pairs(); ++i) {
    if (v.get(i)) return false;
  }
  return true;
}

void require_point(const BitVector& v, const QuadraticForm& form) {
  if (v.size() != form.dim()) throw std::invalid_argument("point has the wrong dimension");
  if (!form.value(v)) throw std::invalid_argument("closure generator has Q = 0");
  if (in_form_radical(v, form)) throw std::invalid_argument("closure generator is the radical point");
}

PauliVector lifted_vector(PauliString p) {
  if (!p.squares_to_minus_one()) p = p.with_phase(p.phase() + 1);
  return to_vector(p);
}

}  // namespace

bool ClosureSet::insert(const BitVector& v) {
  auto [it, inserted] = index_.emplace(v, points_.size());
  if (inserted) points_.push_back(v);
  return inserted;
}

ClosureSet closure(std::span<const BitVector> gens, const QuadraticForm& form, std::size_t cap) {
  ClosureSet out(form.dim());
  for (const auto& g : gens) {
    require_point(g, form);
    out.insert(g);
  }
  if (out.size() > cap) throw ClosureCapExceeded("closure exceeds cap of " + std::to_string(cap) + " points");
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const BitVector& u = out.points()[i];
      const BitVector& v = out.points()[j];
      if (!form.polar(u, v)) continue;
      if (out.insert(u ^ v) && out.size() > cap) {
        throw ClosureCapExceeded("closure exceeds cap of " + std::to_string(cap) + " points");
      }
    }
  }
  return out;
}

ClosureSet closure(std::span<const PauliVector> gens, std::size_t cap) {
  if (gens.empty()) return ClosureSet(0);
  std::vector<BitVector> bits;
  for (const auto& g : gens) bits.push_back(g.bits());
  return closure(bits, QuadraticForm::pauli(gens.front().qubits()), cap);
}

VerificationReport verify_classification(std::span<const PauliString> gens, const Classification& c,
                                         std::size_t cap) {
  VerificationReport report;
  const QuadraticForm form = QuadraticForm::pauli(c.qubits);
  std::vector<BitVector> all;
  for (const auto& g : c.generators) all.push_back(to_vector(g).bits());

  try {
    const ClosureSet full = closure(all, form, cap);
    report.closure_size = full.size();
    if (BigInt(full.size()) != c.total_dim) {
      report.status = VerificationStatus::Fail;
      report.message = "dimension mismatch: classified " + c.total_dim.str() + " != closure " +
                       std::to_string(full.size());
      return report;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].x().is_zero() && gens[i].z().is_zero()) continue;
      if (!full.contains(lifted_vector(gens[i]).bits())) {
        report.status = VerificationStatus::Fail;
        report.message = "generator " + std::to_string(i) + " is not a closure member";
        return report;
      }
    }

    std::unordered_map<std::size_t, std::size_t> kept_position;
    for (std::size_t i = 0; i < c.input_index.size(); ++i) kept_position[c.input_index[i]] = i;
    for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
      const ComponentReport& comp = c.components[ci];
      std::vector<BitVector> members;
      for (std::size_t g : comp.generators) members.push_back(all[kept_position.at(g)]);
      const ClosureSet points = closure(members, form, cap);
      const auto classes = equiv_classes(points.points(), form);
      const BigInt copies = comp.summand.copies();
      for (const auto& cls : classes) {
        if (BigInt(cls.size()) != copies) {
          report.status = VerificationStatus::Fail;
          report.message = "component " + std::to_string(ci) + ": " + copies.str() +
                           " copies but an equivalence class of size " + std::to_string(cls.size());
          return report;
        }
      }
      if (BigInt(classes.size()) != comp.summand.dimension()) {
        report.status = VerificationStatus::Fail;
        report.message = "component " + std::to_string(ci) + ": " + std::to_string(classes.size()) +
                         " equivalence classes but summand dimension " + comp.summand.dimension().str();
        return report;
      }
    }
  } catch (const ClosureCapExceeded& e) {
    report.status = VerificationStatus::Unverified;
    report.message = e.what();
    return report;
  }
  report.status = VerificationStatus::Pass;
  return report;
}

ClosureSet enumerate_T(std::span<const BitVector> tree_gens, std::size_t k, const QuadraticForm& form) {
  ClosureSet out(form.dim());
  if (tree_gens.empty()) {
    if (k > 1) throw std::logic_error("empty tree cannot span more than one vertex");
    return out;
  }
  for (const auto& g : tree_gens) require_point(g, form);

  // Adding edges in BFS order of the tree's line graph grows the tree one
  // leaf at a time; the new leaf x pairs with every existing {y, z} at y.
  const Graph lg = frustration_graph(tree_gens, form);
  const auto comps = connected_components(lg);
  if (comps.size() != 1) throw std::logic_error("tree edges do not form a connected tree");
  std::vector<std::size_t> order{0};
  std::vector<bool> seen(tree_gens.size(), false);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t v : lg.neighbors(order[head])) {
      if (!seen[v]) {
        seen[v] = true;
        order.push_back(v);
      }
    }
  }

  for (std::size_t e : order) {
    const BitVector& edge = tree_gens[e];
    std::vector<BitVector> fresh{edge};
    for (const auto& p : out.points()) {
      if (form.polar(edge, p)) fresh.push_back(edge ^ p);
    }
    for (const auto& p : fresh) out.insert(p);
  }
  const std::size_t expected = k * (k - 1) / 2;
  if (out.size() != expected) {
    throw std::logic_error("tree enumeration produced " + std::to_string(out.size()) + " points, expected " +
                           std::to_string(expected));
  }
  return out;
}

std::vector<std::vector<PauliVector>> commutator_graph(std::span<const PauliVector> gens, std::size_t qubits) {
  if (qubits > 6) throw std::invalid_argument("commutator graph is limited to n <= 6");
  const QuadraticForm form = QuadraticForm::pauli(qubits);
  const std::size_t count = std::size_t{1} << (2 * qubits);

  // Point index encodes x in the low n bits and z in the high n bits; the
  // phase bit is fixed by Q = 1.
  auto point = [&](std::size_t index) {
    BitVector bits(2 * qubits + 1);
    for (std::size_t j = 0; j < 2 * qubits; ++j) {
      if ((index >> j) & 1U) bits.set(j);
    }
    const std::size_t xz = std::popcount((index & ((std::size_t{1} << qubits) - 1)) & (index >> qubits));
    if (xz % 2 == 0) bits.set(2 * qubits);
    return bits;
  };
  auto index_of = [&](const BitVector& v) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < 2 * qubits; ++j) {
      if (v.get(j)) index |= std::size_t{1} << j;
    }
    return index;
  };

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    if (g.qubits() != qubits) throw std::invalid_argument("generator qubit count does not match n");
    const std::size_t gi = index_of(g.bits());
    for (std::size_t p = 1; p < count; ++p) {
      if (!form.polar(point(p), g.bits())) continue;
      std::size_t a = find(p);
      std::size_t b = find(p ^ gi);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<std::vector<PauliVector>> components;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t p = 1; p < count; ++p) {
    auto [it, inserted] = slot.emplace(find(p), components.size());
    if (inserted) components.emplace_back();
    components[it->second].emplace_back(qubits, point(p));
  }
  return components;
}

CartanSplit cartan_split(const ClosureSet& points, const BitVector& functional, const QuadraticForm& form) {
  CartanSplit out;
  out.functional = functional;
  std::unordered_set<BitVector> l_set;
  std::unordered_set<BitVector> m_set;
  for (const auto& p : points.points()) {
    if (dot(p, functional)) {
      out.m_part.push_back(p);
      m_set.insert(p);
    } else {
      out.l_part.push_back(p);
      l_set.insert(p);
    }
  }
  if (out.l_part.empty() && points.size() > 0) out.warnings.push_back("hyperplane misses every point");

  out.verified = true;
  const auto& pts = points.points();
  for (std::size_t i = 0; i < pts.size() && out.verified; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!form.polar(pts[i], pts[j])) continue;
      const bool same_side = dot(pts[i], functional) == dot(pts[j], functional);
      const auto& target = same_side ? l_set : m_set;
      if (!target.contains(pts[i] ^ pts[j])) {
        out.verified = false;
        break;
      }
    }
  }
  return out;
}

QuadraticForm catalog_space() { return QuadraticForm::standard(0, 3, {}); }

std::vector<ForbiddenGraph> catalog_forbidden() {
  const QuadraticForm form = catalog_space();
  constexpr std::size_t kDim = 6;

  std::vector<std::uint32_t> pts;
  for (std::uint32_t v = 1; v < (1U << kDim); ++v) {
    BitVector bits(kDim);
    for (std::size_t j = 0; j < kDim; ++j) {
      if ((v >> j) & 1U) bits.set(j);
    }
    if (form.value(bits)) pts.push_back(v);
  }
  if (pts.size() != 36) throw std::logic_error("minus-type 6-space should have 36 points");

  auto polar = [](std::uint32_t u, std::uint32_t v) {
    return std::popcount(((u & 7U) & (v >> 3)) ^ ((v & 7U) & (u >> 3))) & 1;
  };

  std::vector<ForbiddenGraph> out;
  std::unordered_set<std::uint32_t> seen_masks;
  std::array<std::size_t, 6> pick{};
  std::array<std::uint32_t, 6> basis{};

  auto record = [&]() {
    std::uint32_t mask = 0;
    std::array<std::uint32_t, 6> adj{};
    for (std::size_t a = 0, bit = 0; a < 6; ++a) {
      for (std::size_t b = a + 1; b < 6; ++b, ++bit) {
        if (polar(pts[pick[a]], pts[pick[b]])) {
          mask |= 1U << bit;
          adj[a] |= 1U << b;
          adj[b] |= 1U << a;
        }
      }
    }
    std::uint32_t reach = 1;
    for (int round = 0; round < 6; ++round) {
      std::uint32_t next = reach;
      for (std::size_t a = 0; a < 6; ++a) {
        if ((reach >> a) & 1U) next |= adj[a];
      }
      reach = next;
    }
    if (reach != 0x3FU || !seen_masks.insert(mask).second) return;

    Graph g(6);
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = a + 1; b < 6; ++b) {
        if ((adj[a] >> b) & 1U) g.add_edge(a, b);
      }
    }
    for (const auto& known : out) {
      if (iso_small(known.graph, g)) return;
    }
    ForbiddenGraph entry{std::move(g), {}};
    for (std::size_t a = 0; a < 6; ++a) {
      BitVector bits(kDim);
      for (std::size_t j = 0; j < kDim; ++j) {
        if ((pts[pick[a]] >> j) & 1U) bits.set(j);
      }
      entry.realization.push_back(std::move(bits));
    }
    out.push_back(std::move(entry));
  };

  // Depth-first over 6-subsets, keeping only those that stay independent.
  auto search = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == 6) {
      record();
      return;
    }
    for (std::size_t i = start; i + (6 - depth) <= pts.size(); ++i) {
      std::uint32_t r = pts[i];
      for (std::size_t b = 0; b < depth; ++b) {
        const std::uint32_t pivot = basis[b] & (~basis[b] + 1);
        if (r & pivot) r ^= basis[b];
      }
      if (r == 0) continue;
      basis[depth] = r;
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  search(search, 0, 0);

  if (out.size() != 32) {
    throw std::logic_error("expected 32 forbidden graphs, found " + std::to_string(out.size()));
  }
  return out;
}

std::vector<PauliString> realize_on_qubits(std::span<const BitVector> catalog_points) {
  std::vector<PauliString> out;
  for (const auto& v : catalog_points) {
    if (v.size() != 6) throw std::invalid_argument("catalog points live in a 6-dimensional space");
    // e_i -> iX_i and e_{3+i} -> iZ_i; each basis image carries one factor of i.
    BitVector bits(7);
    for (std::size_t j = 0; j < 6; ++j) {
      if (v.get(j)) bits.set(j);
    }
    if (v.popcount() % 2 == 1) bits.set(6);
    out.push_back(from_vector(PauliVector(3, std::move(bits))));
  }
  return out;
}

}  // namespace pdla
