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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pdla/bit_vector.hpp"
#include "pdla/pauli.hpp"
#include "pdla/quadratic_space.hpp"

namespace pdla {

/// Simple undirected graph stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertices) : adj_(vertices, vertices) {}

  std::size_t size() const { return adj_.rows(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_.get(u, v); }
  void add_edge(std::size_t u, std::size_t v);
  std::span<const Word> row(std::size_t u) const { return adj_.row(u); }

  std::size_t degree(std::size_t u) const { return adj_.row_popcount(u); }
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t u) const;
  std::vector<std::vector<std::size_t>> adjacency_lists() const;

  /// Induced subgraph; vertex i of the result is vertices[i].
  Graph induced(std::span<const std::size_t> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  BitMatrix adj_;
};

/// Loopless multigraph. Edge instances are numbered by expanding `edges` in
/// order, each edge contributing `multiplicity` consecutive instances.
struct MultiEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t multiplicity = 1;
};

struct MultiGraph {
  std::size_t vertices = 0;
  std::vector<MultiEdge> edges;

  std::size_t edge_instances() const;
  /// Endpoints of every edge instance, in instance order.
  std::vector<std::pair<std::size_t, std::size_t>> instance_endpoints() const;
};

/// Gram matrix of f on the given vectors.
Graph frustration_graph(std::span<const BitVector> vectors, const QuadraticForm& form);
Graph frustration_graph(std::span<const PauliVector> vectors);

/// BFS partition; components ordered by least vertex, members ascending.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct LineGraph {
  Graph graph;
  /// Endpoints of the edge instance behind each line-graph vertex.
  std::vector<std::pair<std::size_t, std::size_t>> edge_order;
};

/// Vertices are edge instances; two are adjacent iff they share exactly one
/// endpoint, so parallel instances are non-adjacent.
LineGraph line_graph(const MultiGraph& d);

struct RootCertificate {
  MultiGraph root;
  /// vertex_to_edge[v] is the edge instance of `root` that vertex v maps to.
  std::vector<std::size_t> vertex_to_edge;
  bool verified = false;
};

/// Reconstructs a multigraph whose line graph is g, or nullopt when none
/// exists. The returned root never has exactly 4 vertices and is always
/// checked by rebuilding its line graph.
std::optional<RootCertificate> recognize_root(const Graph& g);

/// Exact isomorphism test for graphs on at most 8 vertices.
bool iso_small(const Graph& g1, const Graph& g2);

}  // namespace pdla
