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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdla/bit_vector.hpp"
#include "pdla/classifier.hpp"
#include "pdla/graph.hpp"
#include "pdla/pauli.hpp"
#include "pdla/quadratic_space.hpp"

namespace pdla {

class ClosureCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of Q = 1 points closed under adding collinear pairs.
class ClosureSet {
 public:
  explicit ClosureSet(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<BitVector>& points() const { return points_; }
  bool contains(const BitVector& v) const { return index_.contains(v); }
  /// Returns false if v was already present.
  bool insert(const BitVector& v);

 private:
  std::size_t dim_;
  std::vector<BitVector> points_;
  std::unordered_map<BitVector, std::size_t> index_;
};

/// Least superset of `gens` closed under u, v -> u + v whenever f(u, v) = 1.
/// Every point is paired with all points found before it. Throws
/// ClosureCapExceeded once the set would grow past `cap`.
ClosureSet closure(std::span<const BitVector> gens, const QuadraticForm& form,
                   std::size_t cap = 1'000'000);
ClosureSet closure(std::span<const PauliVector> gens, std::size_t cap = 1'000'000);

enum class VerificationStatus { Pass, Fail, Unverified };

struct VerificationReport {
  VerificationStatus status = VerificationStatus::Unverified;
  std::size_t closure_size = 0;
  std::string message;
};

/// Compares a classification against closure: total point count, copy count
/// against the size of every equivalence class in each component, and
/// membership of each generator.
VerificationReport verify_classification(std::span<const PauliString> gens, const Classification& c,
                                         std::size_t cap = 1'000'000);

/// The C(k, 2) points generated by the edges of a spanning tree on k
/// vertices, grown one leaf at a time. Throws std::logic_error on a count
/// mismatch.
ClosureSet enumerate_T(std::span<const BitVector> tree_gens, std::size_t k, const QuadraticForm& form);

/// Components of the graph on all 4^n - 1 anti-Hermitian Pauli points in
/// which p ~ p + g for each generator g anticommuting with p. Needs n <= 6.
std::vector<std::vector<PauliVector>> commutator_graph(std::span<const PauliVector> gens, std::size_t qubits);

struct CartanSplit {
  BitVector functional;
  std::vector<BitVector> l_part;
  std::vector<BitVector> m_part;
  bool verified = false;
  std::vector<std::string> warnings;
};

/// Splits a point set by the hyperplane ker(functional) and checks
/// [l,l] in l, [l,m] in m and [m,m] in l over all collinear pairs.
CartanSplit cartan_split(const ClosureSet& points, const BitVector& functional, const QuadraticForm& form);

struct ForbiddenGraph {
  Graph graph;
  /// Six points of the minus-type 6-space realizing the graph.
  std::vector<BitVector> realization;
};

/// The minus-type 6-space used by the catalog: three elliptic pairs.
QuadraticForm catalog_space();

/// The 32 connected 6-vertex frustration graphs of spanning 6-subsets of a
/// nondegenerate minus-type 6-space, up to isomorphism.
std::vector<ForbiddenGraph> catalog_forbidden();

/// Isometric image of catalog-space points as Pauli strings on 3 qubits.
std::vector<PauliString> realize_on_qubits(std::span<const BitVector> catalog_points);

}  // namespace pdla
