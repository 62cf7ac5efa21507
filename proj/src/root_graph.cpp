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

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <unordered_map>

#include "pdla/graph.hpp"

namespace pdla {

namespace {

constexpr std::size_t kMaxPartialRoots = 32;
constexpr int kUnset = -1;

// A labelled root of the vertices placed so far: ends[v] are the endpoints of
// the edge standing for collapsed vertex v, incident[x] the edges at label x.
struct PartialRoot {
  std::vector<std::array<int, 2>> ends;
  std::vector<std::vector<std::size_t>> incident;

  int fresh_label() {
    incident.emplace_back();
    return static_cast<int>(incident.size()) - 1;
  }
  void place(std::size_t v, int s, int t) {
    ends[v] = {s, t};
    incident[static_cast<std::size_t>(s)].push_back(v);
    incident[static_cast<std::size_t>(t)].push_back(v);
  }
  bool has_edge(int s, int t) const {
    for (std::size_t e : incident[static_cast<std::size_t>(s)]) {
      if (ends[e][0] == t || ends[e][1] == t) return true;
    }
    return false;
  }
};

// Incident edges at s and t must be exactly the placed neighbours of w.
bool consistent(const Graph& g, const PartialRoot& p, std::size_t w, int s, int t,
                std::size_t placed_neighbors) {
  std::size_t count = p.incident[static_cast<std::size_t>(s)].size();
  for (std::size_t e : p.incident[static_cast<std::size_t>(s)]) {
    if (!g.adjacent(w, e)) return false;
  }
  if (t != kUnset) {
    if (p.has_edge(s, t)) return false;
    count += p.incident[static_cast<std::size_t>(t)].size();
    for (std::size_t e : p.incident[static_cast<std::size_t>(t)]) {
      if (!g.adjacent(w, e)) return false;
    }
  }
  return count == placed_neighbors;
}

std::vector<std::size_t> bfs_order(const Graph& g) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (std::size_t v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return order;
}

// Roots of a connected twin-free graph, found by placing vertices in BFS order
// and keeping every labelled partial root that is still consistent.
std::vector<PartialRoot> simple_roots(const Graph& g) {
  const std::size_t m = g.size();
  const auto order = bfs_order(g);
  std::vector<bool> placed(m, false);

  PartialRoot start;
  start.ends.assign(m, {kUnset, kUnset});
  const int a = start.fresh_label();
  const int b = start.fresh_label();
  start.place(order[0], a, b);
  placed[order[0]] = true;
  std::vector<PartialRoot> roots{std::move(start)};

  for (std::size_t step = 1; step < m; ++step) {
    const std::size_t w = order[step];
    std::vector<std::size_t> nbrs;
    for (std::size_t u : g.neighbors(w)) {
      if (placed[u]) nbrs.push_back(u);
    }

    std::vector<PartialRoot> next;
    for (PartialRoot& p : roots) {
      const auto anchor = p.ends[nbrs.front()];
      // The second edge is unique up to relabelling, so only one side is tried.
      const std::size_t sides = step == 1 ? 1 : 2;
      std::vector<std::pair<int, int>> options;
      for (std::size_t side = 0; side < sides; ++side) {
        const int s = anchor[side];
        std::vector<std::size_t> away;
        for (std::size_t u : nbrs) {
          if (p.ends[u][0] != s && p.ends[u][1] != s) away.push_back(u);
        }
        if (away.empty()) {
          if (consistent(g, p, w, s, kUnset, nbrs.size())) options.emplace_back(s, kUnset);
          continue;
        }
        for (int t : p.ends[away.front()]) {
          const bool common = std::all_of(away.begin(), away.end(), [&](std::size_t u) {
            return p.ends[u][0] == t || p.ends[u][1] == t;
          });
          if (common && consistent(g, p, w, s, t, nbrs.size())) options.emplace_back(s, t);
        }
      }
      for (std::size_t i = 0; i < options.size(); ++i) {
        PartialRoot q = i + 1 == options.size() ? std::move(p) : p;
        auto [s, t] = options[i];
        if (t == kUnset) t = q.fresh_label();
        q.place(w, s, t);
        next.push_back(std::move(q));
        if (next.size() >= kMaxPartialRoots) break;
      }
      if (next.size() >= kMaxPartialRoots) break;
    }
    roots = std::move(next);
    placed[w] = true;
    if (roots.empty()) break;
  }
  return roots;
}

// Builds the multigraph from per-vertex endpoints. Edges are listed by the
// first vertex mapping to them, instances in vertex order.
RootCertificate assemble(std::size_t labels, const std::vector<std::array<int, 2>>& ends) {
  RootCertificate cert;
  cert.root.vertices = labels;
  std::map<std::pair<int, int>, std::size_t> edge_index;
  std::vector<std::size_t> edge_of(ends.size());
  for (std::size_t v = 0; v < ends.size(); ++v) {
    const auto key = std::minmax(ends[v][0], ends[v][1]);
    auto [it, inserted] = edge_index.emplace(key, cert.root.edges.size());
    if (inserted) {
      cert.root.edges.push_back({static_cast<std::size_t>(key.first), static_cast<std::size_t>(key.second), 0});
    }
    edge_of[v] = it->second;
    ++cert.root.edges[it->second].multiplicity;
  }
  std::vector<std::size_t> offset(cert.root.edges.size() + 1, 0);
  for (std::size_t e = 0; e < cert.root.edges.size(); ++e) {
    offset[e + 1] = offset[e] + cert.root.edges[e].multiplicity;
  }
  cert.vertex_to_edge.resize(ends.size());
  for (std::size_t v = 0; v < ends.size(); ++v) cert.vertex_to_edge[v] = offset[edge_of[v]]++;
  return cert;
}

bool verify(const Graph& g, RootCertificate& cert) {
  const LineGraph lg = line_graph(cert.root);
  if (lg.graph.size() != g.size()) return false;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v) != lg.graph.adjacent(cert.vertex_to_edge[u], cert.vertex_to_edge[v])) {
        return false;
      }
    }
  }
  cert.verified = true;
  return true;
}

}  // namespace

std::optional<RootCertificate> recognize_root(const Graph& g) {
  const std::size_t m = g.size();
  if (m == 0 || !is_connected(g)) return std::nullopt;

  // Open-neighbourhood twins become parallel edges of one root edge.
  std::vector<std::size_t> rep(m);
  std::vector<std::size_t> reps;
  {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (std::size_t v = 0; v < m; ++v) {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (Word w : g.row(v)) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
      auto& bucket = buckets[h];
      rep[v] = v;
      for (std::size_t r : bucket) {
        if (std::equal(g.row(v).begin(), g.row(v).end(), g.row(r).begin())) {
          rep[v] = r;
          break;
        }
      }
      if (rep[v] == v) {
        bucket.push_back(v);
        reps.push_back(v);
      }
    }
  }
  std::vector<std::size_t> collapsed_index(m);
  for (std::size_t i = 0; i < reps.size(); ++i) collapsed_index[reps[i]] = i;
  const Graph collapsed = g.induced(reps);

  auto candidates = simple_roots(collapsed);
  std::stable_sort(candidates.begin(), candidates.end(), [](const PartialRoot& a, const PartialRoot& b) {
    return a.incident.size() < b.incident.size();
  });

  for (const PartialRoot& p : candidates) {
    std::vector<std::array<int, 2>> ends(m);
    for (std::size_t v = 0; v < m; ++v) ends[v] = p.ends[collapsed_index[rep[v]]];
    std::size_t labels = p.incident.size();
    if (labels == 4) {
      // The two 4-vertex roots with equal line graphs: swap every edge at the
      // last vertex for its complementary pair, leaving 3 vertices.
      constexpr int d = 3;
      for (auto& e : ends) {
        if (e[0] != d && e[1] != d) continue;
        const int other = e[0] == d ? e[1] : e[0];
        std::array<int, 2> comp{};
        std::size_t k = 0;
        for (int x = 0; x < d; ++x) {
          if (x != other) comp[k++] = x;
        }
        e = comp;
      }
      labels = 3;
    }
    RootCertificate cert = assemble(labels, ends);
    if (verify(g, cert)) return cert;
  }
  return std::nullopt;
}

}  // namespace pdla
