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

#include <gtest/gtest.h>

#include "gcsa/block_matrix.hpp"
#include "gcsa/ep_code.hpp"
#include "gcsa/errors.hpp"
#include "gcsa/rng.hpp"

namespace gcsa {
namespace {

BlockGrid scalar_grid(const PrimeField& f, std::size_t r, std::size_t c,
                      std::initializer_list<std::int64_t> v) {
  return partition(FieldMatrix::from_ints(f, r, c, v), r, c);
}

TEST(EpEncodeTest, SingleBlockIgnoresShift) {
  const PrimeField f(7);
  const BlockGrid a = scalar_grid(f, 1, 1, {5});
  EXPECT_EQ(ep_encode_a(a, 3), FieldMatrix(f, 1, 1, {5}));
  EXPECT_EQ(ep_encode_b(a, 1, 3), FieldMatrix(f, 1, 1, {5}));
}

TEST(EpEncodeTest, InnerSplitTwo) {
  const PrimeField f(7);
  // A = [A1 A2]: A1 + x A2. B = [B1; B2]: x B1 + B2.
  const BlockGrid a = scalar_grid(f, 1, 2, {2, 5});
  const BlockGrid b = scalar_grid(f, 2, 1, {4, 6});
  EXPECT_EQ(ep_encode_a(a, 3).at(0, 0), (2 + 3 * 5) % 7u);
  EXPECT_EQ(ep_encode_b(b, 1, 3).at(0, 0), (3 * 4 + 6) % 7u);
}

TEST(EpEncodeTest, ExponentTables) {
  const PrimeField f(7);
  // m = p = 2: exponents 0, 1, 2, 3 -> 1, 3, 2, 6 at x = 3.
  const BlockGrid a = scalar_grid(f, 2, 2, {1, 2, 3, 4});
  EXPECT_EQ(ep_encode_a(a, 3).at(0, 0), (1 * 1 + 2 * 3 + 3 * 2 + 4 * 6) % 7u);
  // p = 2, m = 1, n = 2: B11 -> 1, B21 -> 0, B12 -> 3, B22 -> 2.
  const BlockGrid b = scalar_grid(f, 2, 2, {1, 2, 3, 4});  // rows B1*, B2*
  EXPECT_EQ(ep_encode_b(b, 1, 3).at(0, 0), (3 * 1 + 6 * 2 + 1 * 3 + 2 * 4) % 7u);
}

TEST(ProductCoeffsTest, ToyCoefficients) {
  const PrimeField f(101);
  const BlockGrid a = scalar_grid(f, 1, 2, {2, 3});  // A1, A2
  const BlockGrid b = scalar_grid(f, 2, 1, {5, 7});  // B1, B2
  const ProductCoefficients pc = product_coeffs_oracle(a, b);
  ASSERT_EQ(pc.coeffs.size(), 3u);
  EXPECT_EQ(pc.at_position(1).at(0, 0), 2 * 7u);          // A1 B2
  EXPECT_EQ(pc.at_position(2).at(0, 0), 2 * 5 + 3 * 7u);  // A1 B1 + A2 B2
  EXPECT_EQ(pc.at_position(3).at(0, 0), 3 * 5u);          // A2 B1
}

TEST(ProductCoeffsTest, TrivialPartition) {
  const PrimeField f(11);
  const BlockGrid a = scalar_grid(f, 1, 1, {4});
  const BlockGrid b = scalar_grid(f, 1, 1, {5});
  const auto pc = product_coeffs_oracle(a, b);
  ASSERT_EQ(pc.coeffs.size(), 1u);
  EXPECT_EQ(pc.coeffs[0].at(0, 0), 9u);
}

TEST(ProductCoeffsTest, RejectsIncompatibleGrids) {
  const PrimeField f(11);
  const BlockGrid a = scalar_grid(f, 1, 2, {1, 2});
  const BlockGrid b = scalar_grid(f, 3, 1, {1, 2, 3});
  EXPECT_THROW(product_coeffs_oracle(a, b), ShapeError);
}

class EpPartitionTest
    : public ::testing::TestWithParam<std::tuple<std::size_t, std::size_t, std::size_t>> {};

TEST_P(EpPartitionTest, EvaluationAndDesiredBlocks) {
  const auto [p, m, n] = GetParam();
  const PrimeField f(97);
  Rng rng(p * 100 + m * 10 + n, "ep");
  const FieldMatrix a = FieldMatrix::random(f, 2 * m, 2 * p, rng);
  const FieldMatrix b = FieldMatrix::random(f, 2 * p, 2 * n, rng);
  const BlockGrid ga = partition(a, m, p);
  const BlockGrid gb = partition(b, p, n);
  const ProductCoefficients pc = product_coeffs_oracle(ga, gb);
  ASSERT_EQ(pc.coeffs.size(), p * m * n + p - 1);

  for (int t = 0; t < 20; ++t) {
    const Elem x = rng.uniform(f);
    FieldMatrix sum(f, 2, 2);
    Elem power = 1;
    for (const auto& c : pc.coeffs) {
      sum.add_scaled(c, power);
      power = f.mul(power, x);
    }
    EXPECT_EQ(sum, mat_mul(ep_encode_a(ga, x), ep_encode_b(gb, m, x)));
  }

  const BlockGrid truth = partition(mat_mul(a, b), m, n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      EXPECT_EQ(pc.at_position(product_block_index(i, j, p, m, n)), truth.block(i - 1, j - 1));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, EpPartitionTest,
                         ::testing::Combine(::testing::Values(1, 2, 3),
                                            ::testing::Values(1, 2),
                                            ::testing::Values(1, 2)));

}  // namespace
}  // namespace gcsa
