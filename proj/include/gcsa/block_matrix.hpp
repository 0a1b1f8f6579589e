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
#include <map>
#include <utility>
#include <vector>

#include "gcsa/field.hpp"

namespace gcsa {

// A grid_rows x grid_cols array of equally shaped blocks. Block indices are
// 0-based here; the 1-based [R'] positions of product blocks only appear in
// product_block_index.
class BlockGrid {
 public:
  // `blocks` is row-major over the grid. Throws ShapeError if the grid is
  // empty, the count is wrong, or the blocks are not uniform.
  BlockGrid(std::size_t grid_rows, std::size_t grid_cols,
            std::vector<FieldMatrix> blocks);

  std::size_t grid_rows() const { return grid_rows_; }
  std::size_t grid_cols() const { return grid_cols_; }
  std::size_t block_rows() const { return blocks_.front().rows(); }
  std::size_t block_cols() const { return blocks_.front().cols(); }
  const PrimeField& field() const { return blocks_.front().field(); }

  const FieldMatrix& block(std::size_t i, std::size_t j) const {
    return blocks_[i * grid_cols_ + j];
  }

  // Inverse of partition().
  FieldMatrix concatenate() const;

 private:
  std::size_t grid_rows_;
  std::size_t grid_cols_;
  std::vector<FieldMatrix> blocks_;
};

// Splits M into contiguous blocks. Throws PartitionError unless grid_rows
// divides M.rows() and grid_cols divides M.cols().
BlockGrid partition(const FieldMatrix& m, std::size_t grid_rows,
                    std::size_t grid_cols);

// 1-based coefficient position p + p(m_idx-1) + pm(n_idx-1) of the product
// block (m_idx, n_idx), both 1-based. Over all m*n pairs these are the
// desired positions of the product polynomial.
std::size_t product_block_index(std::size_t m_idx, std::size_t n_idx,
                                std::size_t p, std::size_t m, std::size_t n);

// Sorted list of product_block_index over [m] x [n].
std::vector<std::size_t> desired_positions(std::size_t p, std::size_t m,
                                           std::size_t n);

// Keys are 1-based (m_idx, n_idx).
using ProductBlocks = std::map<std::pair<std::size_t, std::size_t>, FieldMatrix>;

// Lays out the m x n blocks into one matrix. Throws IncompleteError if any
// block is missing and ShapeError if shapes disagree.
FieldMatrix reassemble(const ProductBlocks& blocks, std::size_t m, std::size_t n);

}  // namespace gcsa
