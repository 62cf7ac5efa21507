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
#include <vector>

#include "pdla/bit_vector.hpp"

namespace pdla {

/// A quadratic form over F2 in split coordinates.
///
/// The space has dimension 2*pairs + tail. Coordinate i is f-paired with
/// coordinate pairs+i for i < pairs; the tail coordinates span Rad(f).
/// Q(v) = sum_i v_i v_{pairs+i} + <diagonal, v>, where diagonal holds Q(e_i).
class QuadraticForm {
 public:
  QuadraticForm(std::size_t pairs, std::size_t tail, BitVector diagonal);

  /// The form of the Pauli quotient space on n qubits: layout (a | b | r).
  static QuadraticForm pauli(std::size_t qubits);
  /// Orthogonal sum of hyperbolic and elliptic 2-spaces, then `tail` radical
  /// coordinates with the given Q-values. Pairs come hyperbolic first.
  static QuadraticForm standard(std::size_t hyperbolic_pairs, std::size_t elliptic_pairs,
                                std::span<const bool> tail_values = {});

  std::size_t dim() const { return 2 * pairs_ + tail_; }
  std::size_t pairs() const { return pairs_; }
  std::size_t tail() const { return tail_; }
  const BitVector& diagonal() const { return diagonal_; }

  /// The polar (symplectic) form f(u, v) = Q(u+v) + Q(u) + Q(v).
  bool polar(const BitVector& u, const BitVector& v) const;
  bool value(const BitVector& v) const;
  bool operator()(const BitVector& v) const { return value(v); }

 private:
  std::size_t pairs_;
  std::size_t tail_;
  BitVector diagonal_;
};

/// Incremental row echelon basis with lowest-index pivots.
///
/// When constructed with `track_inputs > 0`, every row also records which
/// inserted vectors it is a combination of, so `coordinates` can express a
/// member of the span in terms of the inserted vectors.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim, std::size_t track_inputs = 0);

  /// Returns true when v was independent of the rows so far. Zero vectors
  /// are counted as inputs but never stored.
  bool insert(const BitVector& v);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }
  const std::vector<BitVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v reduced against the rows; zero iff v is in the span.
  BitVector residue(const BitVector& v) const;
  bool contains(const BitVector& v) const { return residue(v).is_zero(); }
  /// Coefficients over the inserted vectors, or nullopt if v is not in the span.
  /// Requires input tracking.
  std::optional<BitVector> coordinates(const BitVector& v) const;

 private:
  std::size_t dim_;
  std::size_t track_;
  std::size_t inputs_ = 0;
  std::vector<BitVector> rows_;
  std::vector<BitVector> combos_;
  std::vector<std::size_t> pivots_;
};

/// Row-reduces `vectors` (all of one dimension) with input tracking enabled.
SpanBasis reduce(std::span<const BitVector> vectors);
std::size_t rank_of(std::span<const BitVector> vectors);

struct HyperbolicPair {
  BitVector v;
  BitVector w;
  bool q_v = false;
  bool q_w = false;
  bool q_sum = false;

  /// All three nonzero vectors of <v, w> have Q = 1.
  bool elliptic() const { return q_v && q_w && q_sum; }
};

/// Pairs with f(v_i, w_j) = delta_ij, plus a basis of the f-radical.
struct HyperbolicBasis {
  std::vector<HyperbolicPair> pairs;
  std::vector<BitVector> radical;
  std::vector<bool> radical_q;

  std::size_t dim() const { return 2 * pairs.size() + radical.size(); }
};

/// Symplectic Gram-Schmidt. The first unpaired vector (input order) is
/// paired with the first later vector it is not f-orthogonal to; both are
/// then projected out of every remaining vector. Vectors that end up
/// orthogonal to everything are collected as the radical.
HyperbolicBasis symplectic_gram_schmidt(std::span<const BitVector> vectors,
                                        const QuadraticForm& form);

struct RadicalAnalysis {
  std::size_t rad_f_dim = 0;
  std::size_t rad_q_dim = 0;
  bool anisotropic = false;
  /// When anisotropic, the first vector has Q = 1 and every other has Q = 0.
  std::vector<BitVector> radical;
  std::vector<bool> radical_q;
};

RadicalAnalysis analyze_radical(const HyperbolicBasis& basis);

enum class FormType { Plus, Minus };

/// Product of the pair types. Throws std::logic_error if the radical holds an
/// anisotropic vector, since then no +/- type is defined.
FormType space_type(const HyperbolicBasis& basis);

const char* to_string(FormType type);

}  // namespace pdla
