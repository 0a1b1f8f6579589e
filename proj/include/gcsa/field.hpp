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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gcsa {

class Rng;

// A residue in [0, q).
using Elem = std::uint64_t;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t value);

// Arithmetic modulo a prime q < 2^63. Cheap to copy; two fields compare equal
// iff their moduli match.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return q_; }
  bool contains(Elem a) const { return a < q_; }

  // Maps any signed integer to its residue.
  Elem reduce(std::int64_t v) const;

  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (q_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % q_);
  }
  Elem pow(Elem base, std::uint64_t exponent) const;
  // Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

// Thread-local tally of field multiply-accumulates performed by the matrix
// kernels below. Informational only; used by the simulator's op report.
namespace op_counter {
std::uint64_t current();
void add(std::uint64_t ops);
}  // namespace op_counter

class OpCountScope {
 public:
  OpCountScope() : start_(op_counter::current()) {}
  std::uint64_t count() const { return op_counter::current() - start_; }

 private:
  std::uint64_t start_;
};

// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  // rows x cols zero matrix.
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  // Takes ownership of row-major entries; every entry must already be < q.
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols,
              std::vector<Elem> entries);

  static FieldMatrix identity(PrimeField field, std::size_t n);
  // Row-major signed literals, reduced mod q. Mostly for tests.
  static FieldMatrix from_ints(PrimeField field, std::size_t rows,
                               std::size_t cols,
                               std::initializer_list<std::int64_t> values);
  static FieldMatrix random(PrimeField field, std::size_t rows,
                            std::size_t cols, Rng& rng);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }

  Elem at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  // Stores v mod q.
  void set(std::size_t i, std::size_t j, Elem v);
  std::span<const Elem> entries() const { return entries_; }
  std::span<const Elem> row(std::size_t i) const {
    return std::span<const Elem>(entries_).subspan(i * cols_, cols_);
  }

  bool is_zero() const;
  bool same_shape(const FieldMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  FieldMatrix& operator+=(const FieldMatrix& other);
  FieldMatrix& operator-=(const FieldMatrix& other);
  // this += s * other
  FieldMatrix& add_scaled(const FieldMatrix& other, Elem s);
  FieldMatrix scaled(Elem s) const;
  FieldMatrix transpose() const;

  // Copies the rows x cols window starting at (row0, col0).
  FieldMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows,
                        std::size_t cols) const;
  // Writes `block` into this matrix with its top-left corner at (row0, col0).
  void paste(const FieldMatrix& block, std::size_t row0, std::size_t col0);

  std::string to_string() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  void check_compatible(const FieldMatrix& other, const char* what) const;

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

FieldMatrix operator+(FieldMatrix lhs, const FieldMatrix& rhs);
FieldMatrix operator-(FieldMatrix lhs, const FieldMatrix& rhs);

// Standard product mod q. Throws ShapeError on mismatched inner dimension or
// field.
FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix hstack(std::span<const FieldMatrix> parts);
FieldMatrix block_diag(std::span<const FieldMatrix> blocks);

// Solves M X = Y by Gauss-Jordan elimination. The pivot of each column is
// the first row (from the top of the active part) holding a nonzero entry,
// so the result is exact and reproducible.
// Throws ShapeError if M is not square or Y has the wrong row count, and
// SingularMatrix if M is not invertible.
FieldMatrix solve_square(const FieldMatrix& m, const FieldMatrix& y);
FieldMatrix inverse(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);
// Columns form a basis of {v : M v = 0}, read off the reduced row echelon
// form (one basis vector per free column, with a 1 in that column).
FieldMatrix null_space(const FieldMatrix& m);

// Row i = [1, x_i, x_i^2, ..., x_i^(width-1)].
FieldMatrix vandermonde(PrimeField field, std::span<const Elem> points,
                        std::size_t width);
// N x N lower triangular Toeplitz matrix whose first column is given.
FieldMatrix lower_toeplitz(PrimeField field, std::span<const Elem> first_column);
// Row i holds, for each pole f in order,
//   [(f - x_i)^-max_power, ..., (f - x_i)^-1].
// Throws DegeneratePoints on repeated points/poles or a pole equal to a point.
FieldMatrix cauchy_power(PrimeField field, std::span<const Elem> points,
                         std::span<const Elem> poles, std::size_t max_power);

// Throws DegeneratePoints unless all values are pairwise distinct.
void require_distinct(std::span<const Elem> values, const char* what);

}  // namespace gcsa
