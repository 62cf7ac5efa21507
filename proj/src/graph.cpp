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

#include "pdla/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace pdla {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("Graph does not allow loops");
  adj_.set(u, v);
  adj_.set(v, u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < size(); ++u) twice += degree(u);
  return twice / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  auto words = row(u);
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word bits = words[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> Graph::adjacency_lists() const {
  std::vector<std::vector<std::size_t>> out(size());
  for (std::size_t u = 0; u < size(); ++u) out[u] = neighbors(u);
  return out;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

std::size_t MultiGraph::edge_instances() const {
  std::size_t total = 0;
  for (const auto& e : edges) total += e.multiplicity;
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> MultiGraph::instance_endpoints() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_instances());
  for (const auto& e : edges) {
    for (std::size_t c = 0; c < e.multiplicity; ++c) out.emplace_back(e.u, e.v);
  }
  return out;
}

Graph frustration_graph(std::span<const BitVector> vectors, const QuadraticForm& form) {
  Graph g(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (form.polar(vectors[i], vectors[j])) g.add_edge(i, j);
    }
  }
  return g;
}

Graph frustration_graph(std::span<const PauliVector> vectors) {
  if (vectors.empty()) return Graph(0);
  std::vector<BitVector> bits;
  bits.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.qubits() != vectors.front().qubits()) {
      throw std::invalid_argument("frustration graph needs vectors on one qubit count");
    }
    bits.push_back(v.bits());
  }
  return frustration_graph(bits, QuadraticForm::pauli(vectors.front().qubits()));
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (std::size_t v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.size() > 0 && connected_components(g).size() == 1; }

LineGraph line_graph(const MultiGraph& d) {
  LineGraph out;
  out.edge_order = d.instance_endpoints();
  const std::size_t m = out.edge_order.size();
  out.graph = Graph(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = out.edge_order[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [c, e] = out.edge_order[j];
      const int shared = (a == c || a == e) + (b == c || b == e);
      if (shared == 1) out.graph.add_edge(i, j);
    }
  }
  return out;
}

namespace {

bool extend_iso(const Graph& g1, const Graph& g2, std::vector<int>& map, std::vector<bool>& used,
                std::size_t next) {
  if (next == g1.size()) return true;
  const std::size_t deg = g1.degree(next);
  for (std::size_t cand = 0; cand < g2.size(); ++cand) {
    if (used[cand] || g2.degree(cand) != deg) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      ok = g1.adjacent(prev, next) == g2.adjacent(static_cast<std::size_t>(map[prev]), cand);
    }
    if (!ok) continue;
    map[next] = static_cast<int>(cand);
    used[cand] = true;
    if (extend_iso(g1, g2, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool iso_small(const Graph& g1, const Graph& g2) {
  if (g1.size() > 8 || g2.size() > 8) throw std::invalid_argument("iso_small supports at most 8 vertices");
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<std::size_t> d1;
  std::vector<std::size_t> d2;
  for (std::size_t u = 0; u < g1.size(); ++u) {
    d1.push_back(g1.degree(u));
    d2.push_back(g2.degree(u));
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  std::vector<int> map(g1.size(), -1);
  std::vector<bool> used(g2.size(), false);
  return extend_iso(g1, g2, map, used, 0);
}

}  // namespace pdla
