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

// Boolean matrix powers of an adjacency matrix.
//
// All products are taken over the Boolean semiring (OR as addition, AND as
// multiplication). The support of such a product equals the support of the
// integer product, so binarizing after every multiply is the same as
// binarizing once at the end, and entries never overflow.

#include <bit>
#include <cstddef>
#include <cstdint>

#include "sciclust/binary_matrix.hpp"
#include "sciclust/error.hpp"

namespace sciclust {

/// Exponents and multiplication counts for one node count.
struct PowerPlan {
  std::size_t n = 0;
  std::size_t k = 0;            // naive exponent, floor(n / 2)
  std::size_t m = 0;            // squaring count, ceil(log2(k)) for n >= 4, else 0
  std::size_t naive_mults = 0;  // max(k - 1, 0)
  std::size_t fast_mults = 0;   // m

  friend bool operator==(const PowerPlan&, const PowerPlan&) = default;
};

struct PowerResult {
  BinaryMatrix matrix;
  std::size_t multiplications = 0;
};

inline PowerPlan make_power_plan(std::size_t n) {
  if (n < 1) throw InputError("power plan needs at least one node");
  PowerPlan plan;
  plan.n = n;
  plan.k = n / 2;
  // ceil(log2(k)) == bit_width(k - 1) for k >= 1; n <= 3 gives k <= 1 and m = 0.
  plan.m = n >= 4 ? static_cast<std::size_t>(std::bit_width(plan.k - 1)) : 0;
  plan.naive_mults = plan.k > 1 ? plan.k - 1 : 0;
  plan.fast_mults = plan.m;
  return plan;
}

/// Boolean product: out(i, j) = OR_t a(i, t) AND b(t, j).
///
/// Row-oriented: for every set bit t in row i of `a`, row t of `b` is OR-ed
/// into row i of the result, one 64-bit word at a time.
inline BinaryMatrix bool_multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.size() != b.size())
    throw InputError("bool_multiply: size mismatch " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  const std::size_t n = a.size();
  const std::size_t words = a.words_per_row();
  BinaryMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto dst = out.row(i);
    const auto src = a.row(i);
    for (std::size_t w = 0; w < words; ++w) {
      BinaryMatrix::word_type bits = src[w];
      while (bits != 0) {
        const std::size_t t = w * BinaryMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto brow = b.row(t);
        for (std::size_t x = 0; x < words; ++x) dst[x] |= brow[x];
      }
    }
  }
  return out;
}

/// Repeated squaring: G := A, then G := G * G exactly m times, giving
/// A^(2^m). With an all-ones diagonal, G(i, j) = 1 iff the hop distance
/// from i to j is at most 2^m.
inline PowerResult power_fast(const BinaryMatrix& a) {
  const PowerPlan plan = make_power_plan(a.size());
  PowerResult result{a, 0};
  for (std::size_t i = 0; i < plan.m; ++i) {
    result.matrix = bool_multiply(result.matrix, result.matrix);
    ++result.multiplications;
  }
  return result;
}

/// Reference evaluation of A^k, k = floor(n / 2), by k - 1 sequential
/// multiplications. Quadratic in k; only meant for small n.
inline PowerResult power_naive_oracle(const BinaryMatrix& a) {
  const PowerPlan plan = make_power_plan(a.size());
  PowerResult result{a, 0};
  for (std::size_t i = 1; i < plan.k; ++i) {
    result.matrix = bool_multiply(result.matrix, a);
    ++result.multiplications;
  }
  return result;
}

}  // namespace sciclust
