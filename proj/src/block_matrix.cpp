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

#include "gcsa/block_matrix.hpp"

#include <algorithm>
#include <string>

#include "gcsa/errors.hpp"

namespace gcsa {

BlockGrid::BlockGrid(std::size_t grid_rows, std::size_t grid_cols,
                     std::vector<FieldMatrix> blocks)
    : grid_rows_(grid_rows), grid_cols_(grid_cols), blocks_(std::move(blocks)) {
  if (grid_rows_ == 0 || grid_cols_ == 0 ||
      blocks_.size() != grid_rows_ * grid_cols_) {
    throw ShapeError("BlockGrid: expected " + std::to_string(grid_rows_) + "x" +
                     std::to_string(grid_cols_) + " blocks, got " +
                     std::to_string(blocks_.size()));
  }
  for (const auto& b : blocks_) {
    if (!b.same_shape(blocks_.front()) || !(b.field() == blocks_.front().field())) {
      throw ShapeError("BlockGrid: blocks are not uniform");
    }
  }
}

FieldMatrix BlockGrid::concatenate() const {
  FieldMatrix out(field(), grid_rows_ * block_rows(), grid_cols_ * block_cols());
  for (std::size_t i = 0; i < grid_rows_; ++i) {
    for (std::size_t j = 0; j < grid_cols_; ++j) {
      out.paste(block(i, j), i * block_rows(), j * block_cols());
    }
  }
  return out;
}

BlockGrid partition(const FieldMatrix& m, std::size_t grid_rows,
                    std::size_t grid_cols) {
  if (grid_rows == 0 || grid_cols == 0 || m.rows() % grid_rows != 0 ||
      m.cols() % grid_cols != 0) {
    throw PartitionError("cannot split " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " into a " +
                         std::to_string(grid_rows) + "x" +
                         std::to_string(grid_cols) + " grid");
  }
  const std::size_t br = m.rows() / grid_rows, bc = m.cols() / grid_cols;
  std::vector<FieldMatrix> blocks;
  blocks.reserve(grid_rows * grid_cols);
  for (std::size_t i = 0; i < grid_rows; ++i) {
    for (std::size_t j = 0; j < grid_cols; ++j) {
      blocks.push_back(m.submatrix(i * br, j * bc, br, bc));
    }
  }
  return BlockGrid(grid_rows, grid_cols, std::move(blocks));
}

std::size_t product_block_index(std::size_t m_idx, std::size_t n_idx,
                                std::size_t p, std::size_t m, std::size_t n) {
  if (m_idx < 1 || m_idx > m || n_idx < 1 || n_idx > n) {
    throw IndexError("product block (" + std::to_string(m_idx) + "," +
                     std::to_string(n_idx) + ") outside [" + std::to_string(m) +
                     "]x[" + std::to_string(n) + "]");
  }
  return p + p * (m_idx - 1) + p * m * (n_idx - 1);
}

std::vector<std::size_t> desired_positions(std::size_t p, std::size_t m,
                                           std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      out.push_back(product_block_index(i, j, p, m, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldMatrix reassemble(const ProductBlocks& blocks, std::size_t m, std::size_t n) {
  std::vector<FieldMatrix> ordered;
  ordered.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      auto it = blocks.find({i, j});
      if (it == blocks.end()) {
        throw IncompleteError("missing product block (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
      }
      ordered.push_back(it->second);
    }
  }
  return BlockGrid(m, n, std::move(ordered)).concatenate();
}

}  // namespace gcsa
