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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdla {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over F2, packed 64 bits per word.
///
/// Bits past `size()` in the last word are always zero; every mutating
/// operation preserves that, so word-wise equality and hashing are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {}

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t dim, std::size_t index);

  std::size_t size() const { return dim_; }
  std::size_t num_words() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool is_zero() const;
  std::size_t popcount() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t lowest_set_bit() const;

  /// Reads 64 bits starting at bit `offset`; bits past size() read as zero.
  Word extract(std::size_t offset) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  /// '0'/'1' characters, index 0 first.
  std::string str() const;
  std::size_t hash() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Word> words_;
};

/// Parity of the bitwise AND; the standard dot product over F2.
bool dot(const BitVector& a, const BitVector& b);

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

/// Dense row-major matrix over F2.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  std::size_t row_popcount(std::size_t r) const;
  /// Number of set bits in row r restricted to the columns set in `mask`.
  std::size_t row_popcount_masked(std::size_t r, std::span<const Word> mask) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace pdla

template <>
struct std::hash<pdla::BitVector> {
  std::size_t operator()(const pdla::BitVector& v) const { return v.hash(); }
};
