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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "gcsa/errors.hpp"
#include "gcsa/field.hpp"
#include "gcsa/rng.hpp"

namespace gcsa {
namespace {

// Schoolbook product with unsigned __int128 accumulation, independent of mat_mul.
std::vector<std::uint64_t> naive_product(const FieldMatrix& a, const FieldMatrix& b) {
  const auto q = a.field().modulus();
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + static_cast<unsigned __int128>(a.at(i, k)) * b.at(k, j)) % q;
      }
      out.push_back(static_cast<std::uint64_t>(acc));
    }
  }
  return out;
}

TEST(PrimeFieldTest, Primality) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));  // Carmichael
  EXPECT_FALSE(is_prime(65537ull * 65539ull));
  EXPECT_THROW(PrimeField(4), NotPrime);
  EXPECT_THROW(PrimeField(1), NotPrime);
}

TEST(PrimeFieldTest, Arithmetic) {
  EXPECT_EQ(PrimeField(7).inv(3), 5u);
  EXPECT_EQ(PrimeField(5).pow(2, 4), 1u);
  EXPECT_EQ(PrimeField(101).mul(50, 51), 25u);  // 2550 = 25*101 + 25
  const PrimeField f(13);
  EXPECT_EQ(f.sub(2, 5), 10u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.reduce(-2), 11u);
  EXPECT_THROW(f.inv(0), DivisionByZero);
  for (Elem a = 1; a < 13; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(PrimeFieldTest, LargeModulusInverse) {
  const PrimeField f((std::uint64_t{1} << 61) - 1);
  Rng rng(3, "test");
  for (int i = 0; i < 50; ++i) {
    const Elem a = 1 + rng.below(f.modulus() - 1);
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  }
}

TEST(FieldMatrixTest, RejectsBadEntries) {
  const PrimeField f(5);
  EXPECT_THROW(FieldMatrix(f, 2, 2, {1, 2, 3}), ShapeError);
  EXPECT_THROW(FieldMatrix(f, 1, 1, {5}), ShapeError);
}

TEST(FieldMatrixTest, MatMulSmall) {
  const PrimeField f(5);
  EXPECT_EQ(mat_mul(FieldMatrix(f, 1, 1, {3}), FieldMatrix(f, 1, 1, {4})),
            FieldMatrix(f, 1, 1, {2}));
  const FieldMatrix b = FieldMatrix::from_ints(f, 2, 3, {1, 2, 3, 4, 0, -1});
  EXPECT_EQ(mat_mul(FieldMatrix::identity(f, 2), b), b);
  EXPECT_THROW(mat_mul(b, b), ShapeError);
}

TEST(FieldMatrixTest, MatMulMatchesNaive) {
  for (std::uint64_t q : {97ull, 65537ull, (1ull << 61) - 1}) {
    const PrimeField f(q);
    Rng rng(q, "mat");
    const FieldMatrix a = FieldMatrix::random(f, 5, 7, rng);
    const FieldMatrix b = FieldMatrix::random(f, 7, 3, rng);
    const auto got = mat_mul(a, b);
    const auto want = naive_product(a, b);
    EXPECT_TRUE(std::equal(want.begin(), want.end(), got.entries().begin())) << q;
  }
}

TEST(FieldMatrixTest, InverseOfRandom) {
  const PrimeField f(97);
  Rng rng(11, "inv");
  FieldMatrix a = FieldMatrix::random(f, 4, 4, rng);
  while (rank(a) < 4) a = FieldMatrix::random(f, 4, 4, rng);
  EXPECT_EQ(mat_mul(a, inverse(a)), FieldMatrix::identity(f, 4));
}

TEST(FieldMatrixTest, SolveSquare) {
  const PrimeField f(5);
  const FieldMatrix m = FieldMatrix::from_ints(f, 2, 2, {1, 1, 1, 2});
  const FieldMatrix y = FieldMatrix::from_ints(f, 2, 1, {0, 1});
  EXPECT_EQ(solve_square(m, y), FieldMatrix::from_ints(f, 2, 1, {4, 1}));

  const FieldMatrix id = FieldMatrix::identity(f, 3);
  const FieldMatrix rhs = FieldMatrix::from_ints(f, 3, 2, {1, 2, 3, 4, 0, 1});
  EXPECT_EQ(solve_square(id, rhs), rhs);

  const FieldMatrix singular = FieldMatrix::from_ints(f, 2, 2, {1, 2, 1, 2});
  EXPECT_THROW(solve_square(singular, y), SingularMatrix);
  EXPECT_THROW(solve_square(FieldMatrix(f, 2, 3), y), ShapeError);
}

TEST(FieldMatrixTest, SolveRoundTrip) {
  const PrimeField f(65537);
  Rng rng(5, "solve");
  for (int t = 0; t < 10; ++t) {
    const FieldMatrix m = FieldMatrix::random(f, 6, 6, rng);
    if (rank(m) < 6) continue;
    const FieldMatrix x = FieldMatrix::random(f, 6, 4, rng);
    EXPECT_EQ(solve_square(m, mat_mul(m, x)), x);
  }
}

TEST(FieldMatrixTest, RankAndNullSpace) {
  const PrimeField f(7);
  const FieldMatrix m = FieldMatrix::from_ints(f, 3, 4, {1, 2, 3, 4, 0, 1, 2, 3, 1, 3, 5, 0});
  // Row 3 = row 1 + row 2.
  EXPECT_EQ(rank(m), 2u);
  const FieldMatrix n = null_space(m);
  EXPECT_EQ(n.rows(), 4u);
  EXPECT_EQ(n.cols(), 2u);
  EXPECT_TRUE(mat_mul(m, n).is_zero());
  EXPECT_EQ(rank(n), 2u);
}

TEST(StructuredTest, Vandermonde) {
  const PrimeField f(13);
  const std::vector<Elem> pts{2, 3, 5};
  const FieldMatrix v = vandermonde(f, pts, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(v.at(i, j), f.pow(pts[i], j));
  }
  EXPECT_EQ(rank(vandermonde(f, pts, 3)), 3u);
  const std::vector<Elem> repeated{2, 2};
  EXPECT_THROW(vandermonde(f, repeated, 2), DegeneratePoints);
}

TEST(StructuredTest, LowerToeplitz) {
  const PrimeField f(13);
  const std::vector<Elem> one{7};
  EXPECT_EQ(lower_toeplitz(f, one), FieldMatrix(f, 1, 1, {7}));
  const std::vector<Elem> col{1, 2, 3};
  EXPECT_EQ(lower_toeplitz(f, col),
            FieldMatrix::from_ints(f, 3, 3, {1, 0, 0, 2, 1, 0, 3, 2, 1}));
}

TEST(StructuredTest, CauchyPower) {
  const PrimeField f(5);
  const std::vector<Elem> x{0}, poles{4};
  EXPECT_EQ(cauchy_power(f, x, poles, 1), FieldMatrix(f, 1, 1, {4}));

  const PrimeField g(13);
  const std::vector<Elem> pts{3, 4}, fs{1, 2};
  const FieldMatrix c = cauchy_power(g, pts, fs, 2);
  ASSERT_EQ(c.cols(), 4u);
  // Row i, pole p: [(f-x)^-2, (f-x)^-1].
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t p = 0; p < 2; ++p) {
      const Elem d = g.inv(g.sub(fs[p], pts[i]));
      EXPECT_EQ(c.at(i, 2 * p), g.mul(d, d));
      EXPECT_EQ(c.at(i, 2 * p + 1), d);
    }
  }
  const std::vector<Elem> clash{1};
  EXPECT_THROW(cauchy_power(g, clash, fs, 1), DegeneratePoints);
}

TEST(RngTest, StreamsAreDeterministicAndDistinct) {
  Rng a(42, streams::kSourceA), b(42, streams::kSourceA), c(42, streams::kSourceB);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Rng r(1, "below");
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}

TEST(OpCounterTest, CountsMatMul) {
  const PrimeField f(7);
  OpCountScope scope;
  mat_mul(FieldMatrix(f, 2, 3), FieldMatrix(f, 3, 4));
  EXPECT_GT(scope.count(), 0u);
}

}  // namespace
}  // namespace gcsa
