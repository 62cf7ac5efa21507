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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pdla/bit_vector.hpp"
#include "pdla/quadratic_space.hpp"

namespace pdla {

class PauliParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element i^phase * X^x * Z^z of the Pauli group on `qubits()` qubits.
///
/// Y is not a separate letter internally: Y = iXZ, so a qubit with both the
/// x and z bit set carries one unit of phase when rendered as Y.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t qubits) : x_(qubits), z_(qubits) {}
  PauliString(BitVector x, BitVector z, unsigned phase);

  std::size_t qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  /// Exponent c of i^c, in [0, 4).
  unsigned phase() const { return phase_; }

  /// p^2 = -1 (anti-Hermitian up to sign), i.e. (x.z + c) is odd.
  bool squares_to_minus_one() const;
  PauliString with_phase(unsigned phase) const { return {x_, z_, phase}; }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  BitVector x_;
  BitVector z_;
  unsigned phase_ = 0;
};

/// Parses "[+|-|i|+i|-i]" followed by letters in {I, X, Y, Z, .}. With a
/// qubit count the word is right-padded with identities.
PauliString parse_pauli(std::string_view text, std::optional<std::size_t> qubits = std::nullopt);
std::string render_pauli(const PauliString& p);

PauliString multiply(const PauliString& p, const PauliString& q);
/// [p, q] = (pq - qp) / 2, which is pq when they anticommute and 0 otherwise.
std::optional<PauliString> commutator(const PauliString& p, const PauliString& q);
bool anticommute(const PauliString& p, const PauliString& q);

/// Image of a Pauli string in V = Pi_n / {+-1}: coordinates (x | z | c mod 2).
class PauliVector {
 public:
  PauliVector() = default;
  explicit PauliVector(std::size_t qubits) : bits_(2 * qubits + 1), qubits_(qubits) {}
  PauliVector(std::size_t qubits, BitVector bits);

  /// The radical point, the image of i*identity.
  static PauliVector radical_point(std::size_t qubits);

  std::size_t qubits() const { return qubits_; }
  const BitVector& bits() const { return bits_; }

  bool x(std::size_t j) const { return bits_.get(j); }
  bool z(std::size_t j) const { return bits_.get(qubits_ + j); }
  bool r() const { return bits_.get(2 * qubits_); }

  PauliVector& operator+=(const PauliVector& other);
  friend PauliVector operator+(PauliVector a, const PauliVector& b) { return a += b; }
  friend bool operator==(const PauliVector&, const PauliVector&) = default;

 private:
  BitVector bits_;
  std::size_t qubits_ = 0;
};

PauliVector to_vector(const PauliString& p);
/// Representative that renders with a positive sign, e.g. "iY" rather than "-iY".
PauliString from_vector(const PauliVector& v);

/// f(u, v): 1 iff the corresponding Pauli strings anticommute.
bool polar_form(const PauliVector& u, const PauliVector& v);
/// Q(v): 1 iff the corresponding Pauli strings square to -1.
bool quadratic_form(const PauliVector& v);

struct FormValues {
  bool f = false;
  bool q_u = false;
  bool q_v = false;
};
FormValues eval_forms(const PauliVector& u, const PauliVector& v);

}  // namespace pdla
