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

#include "pdla/bit_vector.hpp"

#include <stdexcept>

namespace pdla {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t dim, std::size_t index) {
  BitVector v(dim);
  v.set(index);
  return v;
}

bool BitVector::is_zero() const {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::lowest_set_bit() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return dim_;
}

Word BitVector::extract(std::size_t offset) const {
  const std::size_t wi = offset / kWordBits;
  const std::size_t shift = offset % kWordBits;
  if (wi >= words_.size()) return 0;
  Word lo = words_[wi] >> shift;
  if (shift != 0 && wi + 1 < words_.size()) lo |= words_[wi + 1] << (kWordBits - shift);
  return lo;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("BitVector dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("BitVector dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::string BitVector::str() const {
  std::string out(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

std::size_t BitVector::hash() const {
  // splitmix64 finalizer folded over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ dim_;
  for (Word w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

bool dot(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BitVector dimension mismatch");
  Word acc = 0;
  auto aw = a.words();
  auto bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) acc ^= aw[i] & bw[i];
  return std::popcount(acc) & 1;
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
  std::size_t total = 0;
  for (Word w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::row_popcount_masked(std::size_t r, std::span<const Word> mask) const {
  auto words = row(r);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words[i] & mask[i]));
  }
  return total;
}

}  // namespace pdla
