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

#include "pdla/quadratic_space.hpp"

#include <bit>
#include <stdexcept>

namespace pdla {

namespace {

Word low_mask(std::size_t bits) {
  return bits >= kWordBits ? ~Word{0} : ((Word{1} << bits) - 1);
}

}  // namespace

QuadraticForm::QuadraticForm(std::size_t pairs, std::size_t tail, BitVector diagonal)
    : pairs_(pairs), tail_(tail), diagonal_(std::move(diagonal)) {
  if (diagonal_.size() != 2 * pairs_ + tail_) {
    throw std::invalid_argument("quadratic form diagonal has the wrong dimension");
  }
}

QuadraticForm QuadraticForm::pauli(std::size_t qubits) {
  return QuadraticForm(qubits, 1, BitVector::unit(2 * qubits + 1, 2 * qubits));
}

QuadraticForm QuadraticForm::standard(std::size_t hyperbolic_pairs, std::size_t elliptic_pairs,
                                      std::span<const bool> tail_values) {
  const std::size_t pairs = hyperbolic_pairs + elliptic_pairs;
  BitVector diag(2 * pairs + tail_values.size());
  for (std::size_t i = hyperbolic_pairs; i < pairs; ++i) {
    diag.set(i);
    diag.set(pairs + i);
  }
  for (std::size_t t = 0; t < tail_values.size(); ++t) {
    if (tail_values[t]) diag.set(2 * pairs + t);
  }
  return QuadraticForm(pairs, tail_values.size(), std::move(diag));
}

bool QuadraticForm::polar(const BitVector& u, const BitVector& v) const {
  if (u.size() != dim() || v.size() != dim()) {
    throw std::invalid_argument("vector dimension does not match the quadratic form");
  }
  Word acc = 0;
  for (std::size_t off = 0; off < pairs_; off += kWordBits) {
    const Word mask = low_mask(pairs_ - off);
    const Word u_lo = u.extract(off) & mask;
    const Word u_hi = u.extract(pairs_ + off) & mask;
    const Word v_lo = v.extract(off) & mask;
    const Word v_hi = v.extract(pairs_ + off) & mask;
    acc ^= (u_lo & v_hi) ^ (v_lo & u_hi);
  }
  return std::popcount(acc) & 1;
}

bool QuadraticForm::value(const BitVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector dimension does not match the quadratic form");
  Word acc = 0;
  for (std::size_t off = 0; off < pairs_; off += kWordBits) {
    const Word mask = low_mask(pairs_ - off);
    acc ^= v.extract(off) & v.extract(pairs_ + off) & mask;
  }
  const bool quad = std::popcount(acc) & 1;
  return quad != dot(v, diagonal_);
}

SpanBasis::SpanBasis(std::size_t dim, std::size_t track_inputs) : dim_(dim), track_(track_inputs) {}

BitVector SpanBasis::residue(const BitVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension does not match the span");
  BitVector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (r.get(pivots_[i])) r ^= rows_[i];
  }
  return r;
}

bool SpanBasis::insert(const BitVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension does not match the span");
  const std::size_t index = inputs_++;
  BitVector r = v;
  BitVector combo;
  if (track_ > 0) {
    if (index >= track_) throw std::out_of_range("SpanBasis input tracking capacity exceeded");
    combo = BitVector(track_);
    combo.set(index);
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (r.get(pivots_[i])) {
      r ^= rows_[i];
      if (track_ > 0) combo ^= combos_[i];
    }
  }
  const std::size_t pivot = r.lowest_set_bit();
  if (pivot == dim_) return false;
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  if (track_ > 0) combos_.push_back(std::move(combo));
  return true;
}

std::optional<BitVector> SpanBasis::coordinates(const BitVector& v) const {
  if (track_ == 0) throw std::logic_error("SpanBasis was built without input tracking");
  BitVector r = v;
  BitVector combo(track_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (r.get(pivots_[i])) {
      r ^= rows_[i];
      combo ^= combos_[i];
    }
  }
  if (!r.is_zero()) return std::nullopt;
  BitVector out(inputs_);
  for (std::size_t i = 0; i < inputs_; ++i) {
    if (combo.get(i)) out.set(i);
  }
  return out;
}

SpanBasis reduce(std::span<const BitVector> vectors) {
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
  SpanBasis basis(dim, vectors.size());
  for (const auto& v : vectors) basis.insert(v);
  return basis;
}

std::size_t rank_of(std::span<const BitVector> vectors) {
  if (vectors.empty()) return 0;
  SpanBasis basis(vectors.front().size());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

HyperbolicBasis symplectic_gram_schmidt(std::span<const BitVector> vectors,
                                        const QuadraticForm& form) {
  HyperbolicBasis out;
  std::vector<BitVector> work;
  work.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!v.is_zero()) work.push_back(v);
  }

  SpanBasis radical_span(form.dim());
  std::size_t head = 0;
  while (head < work.size()) {
    BitVector v = std::move(work[head]);
    ++head;
    std::size_t partner = work.size();
    for (std::size_t j = head; j < work.size(); ++j) {
      if (form.polar(v, work[j])) {
        partner = j;
        break;
      }
    }
    if (partner == work.size()) {
      // v is orthogonal to all pairs found so far and to every remaining vector.
      if (radical_span.insert(v)) {
        out.radical_q.push_back(form.value(v));
        out.radical.push_back(std::move(v));
      }
      continue;
    }
    BitVector w = std::move(work[partner]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(partner));

    std::vector<BitVector> rest;
    rest.reserve(work.size() - head);
    for (std::size_t j = head; j < work.size(); ++j) {
      BitVector x = std::move(work[j]);
      const bool fxw = form.polar(x, w);
      const bool fxv = form.polar(x, v);
      if (fxw) x ^= v;
      if (fxv) x ^= w;
      if (!x.is_zero()) rest.push_back(std::move(x));
    }
    work = std::move(rest);
    head = 0;

    HyperbolicPair pair;
    pair.q_v = form.value(v);
    pair.q_w = form.value(w);
    pair.q_sum = form.value(v ^ w);
    pair.v = std::move(v);
    pair.w = std::move(w);
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

RadicalAnalysis analyze_radical(const HyperbolicBasis& basis) {
  RadicalAnalysis out;
  out.rad_f_dim = basis.radical.size();
  std::size_t anisotropic_index = basis.radical.size();
  for (std::size_t i = 0; i < basis.radical.size(); ++i) {
    if (basis.radical_q[i]) {
      anisotropic_index = i;
      break;
    }
  }
  out.anisotropic = anisotropic_index != basis.radical.size();
  out.rad_q_dim = out.rad_f_dim - (out.anisotropic ? 1 : 0);
  if (!out.anisotropic) {
    out.radical = basis.radical;
    out.radical_q = basis.radical_q;
    return out;
  }
  // Q is additive on Rad(f), so adding the anisotropic vector flips Q.
  const BitVector& pivot = basis.radical[anisotropic_index];
  out.radical.push_back(pivot);
  out.radical_q.push_back(true);
  for (std::size_t i = 0; i < basis.radical.size(); ++i) {
    if (i == anisotropic_index) continue;
    out.radical.push_back(basis.radical_q[i] ? basis.radical[i] ^ pivot : basis.radical[i]);
    out.radical_q.push_back(false);
  }
  return out;
}

FormType space_type(const HyperbolicBasis& basis) {
  for (bool q : basis.radical_q) {
    if (q) throw std::logic_error("space_type is undefined with an anisotropic radical");
  }
  std::size_t elliptic = 0;
  for (const auto& pair : basis.pairs) {
    if (pair.elliptic()) ++elliptic;
  }
  return elliptic % 2 == 0 ? FormType::Plus : FormType::Minus;
}

const char* to_string(FormType type) { return type == FormType::Plus ? "+" : "-"; }

}  // namespace pdla
