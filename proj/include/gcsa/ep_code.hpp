// Copyright 2026 The GCSA-NA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "gcsa/block_matrix.hpp"
#include "gcsa/field.hpp"

namespace gcsa {

// Entangled-polynomial exponents, 0-based block indices.
//   A block (i, j) of an m x p grid carries x^(j + p*i).
//   B block (i, j) of a p x n grid carries x^(p-1-i + p*m*j).
inline std::size_t ep_exponent_a(std::size_t i, std::size_t j, std::size_t p) {
  return j + p * i;
}
inline std::size_t ep_exponent_b(std::size_t i, std::size_t j, std::size_t p,
                                 std::size_t m) {
  return p - 1 - i + p * m * j;
}

// sum_{i,j} A_{i,j} x^{ep_exponent_a(i,j)}, evaluated at the shift x.
FieldMatrix ep_encode_a(const BlockGrid& a_blocks, Elem x);
// sum_{i,j} B_{i,j} x^{ep_exponent_b(i,j)}; `m` is the row-grid size of the
// matching A grid.
FieldMatrix ep_encode_b(const BlockGrid& b_blocks, std::size_t m, Elem x);

// The coefficients C_1..C_{pmn+p-1} of the product of the two encodings as a
// polynomial in x. coeffs[i] multiplies x^i.
struct ProductCoefficients {
  std::vector<FieldMatrix> coeffs;

  // 1-based position, as returned by product_block_index.
  const FieldMatrix& at_position(std::size_t pos) const { return coeffs.at(pos - 1); }
};

// Symbolic convolution of the two encodings: every A-term times every B-term,
// accumulated by exponent sum. Never evaluates at a point.
ProductCoefficients product_coeffs_oracle(const BlockGrid& a_blocks,
                                          const BlockGrid& b_blocks);

}  // namespace gcsa
