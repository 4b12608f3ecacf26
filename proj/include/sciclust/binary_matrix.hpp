// Copyright 2026 The sciclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sciclust/error.hpp"

namespace sciclust {

/// Square N x N matrix of bits, stored as bit-packed rows of 64-bit words.
///
/// Used for both the adjacency matrix and its boolean powers. Bits past
/// column N-1 in the last word of each row are always zero, so whole-row
/// word operations (AND, OR, popcount, equality) never see garbage.
class BinaryMatrix {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryMatrix() = default;

  explicit BinaryMatrix(std::size_t n)
      : n_(n), words_per_row_((n + kWordBits - 1) / kWordBits), bits_(n * words_per_row_, 0) {}

  static BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BinaryMatrix ones(std::size_t n) {
    BinaryMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j);
    return m;
  }

  /// Builds a matrix from nested rows; any non-zero entry becomes 1.
  template <typename Rows>
  static BinaryMatrix from_rows(const Rows& rows) {
    const std::size_t n = std::size(rows);
    BinaryMatrix m(n);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (std::size(row) != n) throw InputError("from_rows: matrix is not square");
      std::size_t j = 0;
      for (const auto& v : row) {
        if (v) m.set(i, j);
        ++j;
      }
      ++i;
    }
    return m;
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_per_row_; }

  [[nodiscard]] bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_per_row_ + j / kWordBits] >> (j % kWordBits)) & word_type{1};
  }

  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    word_type& w = bits_[i * words_per_row_ + j / kWordBits];
    const word_type mask = word_type{1} << (j % kWordBits);
    if (value)
      w |= mask;
    else
      w &= ~mask;
  }

  [[nodiscard]] std::span<const word_type> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_per_row_, words_per_row_};
  }
  [[nodiscard]] std::span<word_type> row(std::size_t i) noexcept {
    return {bits_.data() + i * words_per_row_, words_per_row_};
  }

  /// True when rows i and j share at least one set column.
  [[nodiscard]] bool rows_intersect(std::size_t i, std::size_t j) const noexcept {
    const auto a = row(i);
    const auto b = row(j);
    for (std::size_t w = 0; w < words_per_row_; ++w)
      if (a[w] & b[w]) return true;
    return false;
  }

  [[nodiscard]] bool row_is_zero(std::size_t i) const noexcept {
    const auto r = row(i);
    return std::all_of(r.begin(), r.end(), [](word_type w) { return w == 0; });
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_type w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] bool is_symmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (get(i, j) != get(j, i)) return false;
    return true;
  }

  [[nodiscard]] bool has_full_diagonal() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (!get(i, i)) return false;
    return true;
  }

  /// Elementwise superset test: every 1-entry of `other` is a 1-entry here.
  [[nodiscard]] bool contains(const BinaryMatrix& other) const {
    if (other.n_ != n_) throw InputError("contains: size mismatch");
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if ((other.bits_[k] & ~bits_[k]) != 0) return false;
    return true;
  }

  /// Rows as '0'/'1' strings separated by newlines; handy in test failure output.
  [[nodiscard]] std::string to_string() const {
    std::string s;
    s.reserve(n_ * (n_ + 1));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) s.push_back(get(i, j) ? '1' : '0');
      s.push_back('\n');
    }
    return s;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<word_type> bits_;
};

}  // namespace sciclust
