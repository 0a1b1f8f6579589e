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

#include "gcsa/ep_code.hpp"

#include "gcsa/errors.hpp"

namespace gcsa {

FieldMatrix ep_encode_a(const BlockGrid& a_blocks, Elem x) {
  const PrimeField& f = a_blocks.field();
  const std::size_t m = a_blocks.grid_rows(), p = a_blocks.grid_cols();
  FieldMatrix out(f, a_blocks.block_rows(), a_blocks.block_cols());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      out.add_scaled(a_blocks.block(i, j), f.pow(x, ep_exponent_a(i, j, p)));
    }
  }
  return out;
}

FieldMatrix ep_encode_b(const BlockGrid& b_blocks, std::size_t m, Elem x) {
  const PrimeField& f = b_blocks.field();
  const std::size_t p = b_blocks.grid_rows(), n = b_blocks.grid_cols();
  FieldMatrix out(f, b_blocks.block_rows(), b_blocks.block_cols());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.add_scaled(b_blocks.block(i, j), f.pow(x, ep_exponent_b(i, j, p, m)));
    }
  }
  return out;
}

ProductCoefficients product_coeffs_oracle(const BlockGrid& a_blocks,
                                          const BlockGrid& b_blocks) {
  const std::size_t m = a_blocks.grid_rows(), p = a_blocks.grid_cols();
  const std::size_t n = b_blocks.grid_cols();
  if (b_blocks.grid_rows() != p || a_blocks.block_cols() != b_blocks.block_rows() ||
      !(a_blocks.field() == b_blocks.field())) {
    throw ShapeError("product_coeffs_oracle: incompatible block grids");
  }
  const FieldMatrix zero(a_blocks.field(), a_blocks.block_rows(),
                         b_blocks.block_cols());
  ProductCoefficients out{std::vector<FieldMatrix>(p * m * n + p - 1, zero)};
  for (std::size_t ai = 0; ai < m; ++ai) {
    for (std::size_t aj = 0; aj < p; ++aj) {
      for (std::size_t bi = 0; bi < p; ++bi) {
        for (std::size_t bj = 0; bj < n; ++bj) {
          const std::size_t e = ep_exponent_a(ai, aj, p) + ep_exponent_b(bi, bj, p, m);
          out.coeffs[e] += mat_mul(a_blocks.block(ai, aj), b_blocks.block(bi, bj));
        }
      }
    }
  }
  return out;
}

}  // namespace gcsa
