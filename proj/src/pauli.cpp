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

#include "pdla/pauli.hpp"

#include <bit>

namespace pdla {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("Pauli strings act on different qubit counts");
}

}  // namespace

PauliString::PauliString(BitVector x, BitVector z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase % 4) {
  require_same_size(x_.size(), z_.size());
}

bool PauliString::squares_to_minus_one() const { return (dot(x_, z_) + phase_) % 2 == 1; }

PauliString parse_pauli(std::string_view text, std::optional<std::size_t> qubits) {
  std::size_t pos = 0;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string_view word = text.substr(pos);
  if (word.empty()) throw PauliParseError("empty Pauli word '" + std::string(text) + "'");
  const std::size_t n = qubits.value_or(word.size());
  if (word.size() > n) {
    throw PauliParseError("Pauli word '" + std::string(text) + "' has " + std::to_string(word.size()) +
                          " letters but n = " + std::to_string(n));
  }
  BitVector x(n);
  BitVector z(n);
  for (std::size_t j = 0; j < word.size(); ++j) {
    switch (word[j]) {
      case 'I':
      case '.':
        break;
      case 'X':
        x.set(j);
        break;
      case 'Z':
        z.set(j);
        break;
      case 'Y':
        x.set(j);
        z.set(j);
        phase += 1;
        break;
      default:
        throw PauliParseError("unknown Pauli letter '" + std::string(1, word[j]) + "' in '" +
                              std::string(text) + "'");
    }
  }
  return PauliString(std::move(x), std::move(z), phase % 4);
}

std::string render_pauli(const PauliString& p) {
  const std::size_t n = p.qubits();
  std::string letters(n, 'I');
  unsigned ys = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const bool x = p.x().get(j);
    const bool z = p.z().get(j);
    if (x && z) {
      letters[j] = 'Y';
      ++ys;
    } else if (x) {
      letters[j] = 'X';
    } else if (z) {
      letters[j] = 'Z';
    }
  }
  // Each Y absorbs one factor of i.
  const unsigned phase = (p.phase() + 4 - ys % 4) % 4;
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  return kPrefix[phase] + letters;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  require_same_size(p.qubits(), q.qubits());
  // X^a1 Z^b1 X^a2 Z^b2 = (-1)^{b1.a2} X^{a1+a2} Z^{b1+b2}
  const unsigned phase = p.phase() + q.phase() + (dot(p.z(), q.x()) ? 2U : 0U);
  return PauliString(p.x() ^ q.x(), p.z() ^ q.z(), phase % 4);
}

bool anticommute(const PauliString& p, const PauliString& q) {
  require_same_size(p.qubits(), q.qubits());
  return dot(p.x(), q.z()) != dot(p.z(), q.x());
}

std::optional<PauliString> commutator(const PauliString& p, const PauliString& q) {
  if (!anticommute(p, q)) return std::nullopt;
  return multiply(p, q);
}

PauliVector::PauliVector(std::size_t qubits, BitVector bits) : bits_(std::move(bits)), qubits_(qubits) {
  if (bits_.size() != 2 * qubits + 1) throw std::invalid_argument("PauliVector needs 2n+1 coordinates");
}

PauliVector PauliVector::radical_point(std::size_t qubits) {
  return PauliVector(qubits, BitVector::unit(2 * qubits + 1, 2 * qubits));
}

PauliVector& PauliVector::operator+=(const PauliVector& other) {
  require_same_size(qubits_, other.qubits_);
  bits_ ^= other.bits_;
  return *this;
}

PauliVector to_vector(const PauliString& p) {
  const std::size_t n = p.qubits();
  BitVector bits(2 * n + 1);
  // x occupies [0, n), z occupies [n, 2n), r sits at 2n.
  for (std::size_t j = 0; j < n; ++j) {
    if (p.x().get(j)) bits.set(j);
    if (p.z().get(j)) bits.set(n + j);
  }
  if (p.phase() % 2 == 1) bits.set(2 * n);
  return PauliVector(n, std::move(bits));
}

PauliString from_vector(const PauliVector& v) {
  const std::size_t n = v.qubits();
  BitVector x(n);
  BitVector z(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (v.x(j)) x.set(j);
    if (v.z(j)) z.set(j);
  }
  const unsigned ys = static_cast<unsigned>((x & z).popcount() % 4);
  const unsigned rendered = (ys + (v.r() ? 1U : 0U)) % 2;
  return PauliString(std::move(x), std::move(z), (rendered + ys) % 4);
}

bool polar_form(const PauliVector& u, const PauliVector& v) {
  require_same_size(u.qubits(), v.qubits());
  return QuadraticForm::pauli(u.qubits()).polar(u.bits(), v.bits());
}

bool quadratic_form(const PauliVector& v) { return QuadraticForm::pauli(v.qubits()).value(v.bits()); }

FormValues eval_forms(const PauliVector& u, const PauliVector& v) {
  require_same_size(u.qubits(), v.qubits());
  const auto form = QuadraticForm::pauli(u.qubits());
  return {form.polar(u.bits(), v.bits()), form.value(u.bits()), form.value(v.bits())};
}

}  // namespace pdla
