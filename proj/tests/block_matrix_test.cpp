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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "gcsa/block_matrix.hpp"
#include "gcsa/errors.hpp"
#include "gcsa/rng.hpp"

namespace gcsa {
namespace {

TEST(PartitionTest, OneByTwo) {
  const PrimeField f(7);
  const FieldMatrix a = FieldMatrix::from_ints(f, 2, 2, {1, 2, 3, 4});
  const BlockGrid g = partition(a, 1, 2);
  EXPECT_EQ(g.block(0, 0), FieldMatrix::from_ints(f, 2, 1, {1, 3}));
  EXPECT_EQ(g.block(0, 1), FieldMatrix::from_ints(f, 2, 1, {2, 4}));
  EXPECT_EQ(partition(a, 1, 1).block(0, 0), a);
}

TEST(PartitionTest, RoundTrip) {
  const PrimeField f(7);
  Rng rng(1, "part");
  const FieldMatrix a = FieldMatrix::random(f, 4, 6, rng);
  const BlockGrid g = partition(a, 2, 3);
  EXPECT_EQ(g.block_rows(), 2u);
  EXPECT_EQ(g.block_cols(), 2u);
  EXPECT_EQ(g.block(1, 2), a.submatrix(2, 4, 2, 2));
  EXPECT_EQ(g.concatenate(), a);
}

TEST(PartitionTest, RejectsIndivisible) {
  const PrimeField f(7);
  EXPECT_THROW(partition(FieldMatrix(f, 3, 4), 2, 2), PartitionError);
  EXPECT_THROW(partition(FieldMatrix(f, 4, 4), 0, 2), PartitionError);
}

TEST(ProductIndexTest, Examples) {
  EXPECT_EQ(product_block_index(1, 1, 2, 1, 1), 2u);
  EXPECT_EQ(product_block_index(1, 1, 1, 1, 1), 1u);
  EXPECT_EQ(desired_positions(2, 2, 2), (std::vector<std::size_t>{2, 4, 6, 8}));
  EXPECT_THROW(product_block_index(0, 1, 2, 1, 1), IndexError);
  EXPECT_THROW(product_block_index(1, 2, 2, 1, 1), IndexError);
}

TEST(ProductIndexTest, InjectiveInsideRange) {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::size_t n = 1; n <= 3; ++n) {
        std::set<std::size_t> seen;
        for (std::size_t i = 1; i <= m; ++i) {
          for (std::size_t j = 1; j <= n; ++j) {
            const std::size_t pos = product_block_index(i, j, p, m, n);
            EXPECT_GE(pos, 1u);
            EXPECT_LE(pos, p * m * n);
            seen.insert(pos);
          }
        }
        EXPECT_EQ(seen.size(), m * n);
      }
    }
  }
}

TEST(ReassembleTest, GridOfScalars) {
  const PrimeField f(11);
  ProductBlocks blocks;
  blocks.emplace(std::pair{1, 1}, FieldMatrix(f, 1, 1, {1}));
  blocks.emplace(std::pair{1, 2}, FieldMatrix(f, 1, 1, {2}));
  blocks.emplace(std::pair{2, 1}, FieldMatrix(f, 1, 1, {3}));
  blocks.emplace(std::pair{2, 2}, FieldMatrix(f, 1, 1, {4}));
  EXPECT_EQ(reassemble(blocks, 2, 2), FieldMatrix::from_ints(f, 2, 2, {1, 2, 3, 4}));
  blocks.erase(std::pair{2, 1});
  EXPECT_THROW(reassemble(blocks, 2, 2), IncompleteError);
}

TEST(ReassembleTest, ProductRoundTrip) {
  const PrimeField f(97);
  Rng rng(9, "reassemble");
  const FieldMatrix ab = mat_mul(FieldMatrix::random(f, 4, 3, rng), FieldMatrix::random(f, 3, 6, rng));
  const BlockGrid g = partition(ab, 2, 3);
  ProductBlocks blocks;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) blocks.emplace(std::pair{i + 1, j + 1}, g.block(i, j));
  }
  EXPECT_EQ(reassemble(blocks, 2, 3), ab);

  ProductBlocks single;
  single.emplace(std::pair{1, 1}, ab);
  EXPECT_EQ(reassemble(single, 1, 1), ab);
}

}  // namespace
}  // namespace gcsa
