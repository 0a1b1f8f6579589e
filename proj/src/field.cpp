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

#include "gcsa/field.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "gcsa/errors.hpp"
#include "gcsa/rng.hpp"

namespace gcsa {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    e >>= 1;
  }
  return result;
}

thread_local std::uint64_t tl_ops = 0;

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (value % p == 0) return value == p;
  }
  std::uint64_t d = value - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod64(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, value);
      if (x == value - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : q_(modulus) {
  if (modulus >= kMaxModulus) {
    throw NotPrime("field modulus " + std::to_string(modulus) + " exceeds 2^62");
  }
  if (!is_prime(modulus)) {
    throw NotPrime("field modulus " + std::to_string(modulus) + " is not prime");
  }
}

Elem PrimeField::reduce(std::int64_t v) const {
  const auto q = static_cast<std::int64_t>(q_);
  std::int64_t r = v % q;
  if (r < 0) r += q;
  return static_cast<Elem>(r);
}

Elem PrimeField::pow(Elem base, std::uint64_t exponent) const {
  return powmod64(base, exponent, q_);
}

Elem PrimeField::inv(Elem a) const {
  if (a % q_ == 0) throw DivisionByZero("inverse of zero");
  return powmod64(a, q_ - 2, q_);
}

namespace op_counter {
std::uint64_t current() { return tl_ops; }
void add(std::uint64_t ops) { tl_ops += ops; }
}  // namespace op_counter

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                         std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw ShapeError("entry count " + std::to_string(entries_.size()) +
                     " does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
  for (Elem e : entries_) {
    if (!field_.contains(e)) throw ShapeError("matrix entry out of field range");
  }
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = 1;
  return out;
}

FieldMatrix FieldMatrix::from_ints(PrimeField field, std::size_t rows,
                                   std::size_t cols,
                                   std::initializer_list<std::int64_t> values) {
  if (values.size() != rows * cols) {
    throw ShapeError("from_ints: wrong number of values");
  }
  std::vector<Elem> entries;
  entries.reserve(values.size());
  for (std::int64_t v : values) entries.push_back(field.reduce(v));
  return FieldMatrix(field, rows, cols, std::move(entries));
}

FieldMatrix FieldMatrix::random(PrimeField field, std::size_t rows,
                                std::size_t cols, Rng& rng) {
  FieldMatrix out(field, rows, cols);
  for (Elem& e : out.entries_) e = rng.uniform(field);
  return out;
}

void FieldMatrix::set(std::size_t i, std::size_t j, Elem v) {
  entries_[i * cols_ + j] = v % field_.modulus();
}

bool FieldMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Elem e) { return e == 0; });
}

void FieldMatrix::check_compatible(const FieldMatrix& other,
                                   const char* what) const {
  if (!(field_ == other.field_) || !same_shape(other)) {
    throw ShapeError(std::string(what) + ": operands differ in shape or field");
  }
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& other) {
  check_compatible(other, "add");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = field_.add(entries_[i], other.entries_[i]);
  }
  return *this;
}

FieldMatrix& FieldMatrix::operator-=(const FieldMatrix& other) {
  check_compatible(other, "sub");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = field_.sub(entries_[i], other.entries_[i]);
  }
  return *this;
}

FieldMatrix& FieldMatrix::add_scaled(const FieldMatrix& other, Elem s) {
  check_compatible(other, "add_scaled");
  if (s == 0) return *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = field_.add(entries_[i], field_.mul(s, other.entries_[i]));
  }
  op_counter::add(entries_.size());
  return *this;
}

FieldMatrix FieldMatrix::scaled(Elem s) const {
  FieldMatrix out(field_, rows_, cols_);
  return out.add_scaled(*this, s);
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = at(i, j);
  }
  return out;
}

FieldMatrix FieldMatrix::submatrix(std::size_t row0, std::size_t col0,
                                   std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw ShapeError("submatrix window out of range");
  }
  FieldMatrix out(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy_n(entries_.begin() + (row0 + i) * cols_ + col0, cols,
                out.entries_.begin() + i * cols);
  }
  return out;
}

void FieldMatrix::paste(const FieldMatrix& block, std::size_t row0,
                        std::size_t col0) {
  if (!(block.field_ == field_) || row0 + block.rows_ > rows_ ||
      col0 + block.cols_ > cols_) {
    throw ShapeError("paste window out of range");
  }
  for (std::size_t i = 0; i < block.rows_; ++i) {
    std::copy_n(block.entries_.begin() + i * block.cols_, block.cols_,
                entries_.begin() + (row0 + i) * cols_ + col0);
  }
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
  }
  os << "] mod " << field_.modulus();
  return os.str();
}

FieldMatrix operator+(FieldMatrix lhs, const FieldMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

FieldMatrix operator-(FieldMatrix lhs, const FieldMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.rows()) {
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const PrimeField& f = a.field();
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  std::vector<Elem> out(n * m, 0);
  // Products of residues below 2^32 fit in 64 bits, so a 128-bit
  // accumulator only needs reducing at the end. Wider moduli reduce every
  // step (each product is then below 2^124).
  const bool narrow = f.modulus() <= (std::uint64_t{1} << 32);
  std::vector<unsigned __int128> acc(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t t = 0; t < k; ++t) {
      const Elem lhs = a.at(i, t);
      if (lhs == 0) continue;
      const auto brow = b.row(t);
      for (std::size_t j = 0; j < m; ++j) {
        acc[j] += static_cast<unsigned __int128>(lhs) * brow[j];
        if (!narrow) acc[j] %= f.modulus();
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      out[i * m + j] = static_cast<Elem>(acc[j] % f.modulus());
    }
  }
  op_counter::add(static_cast<std::uint64_t>(n) * k * m);
  return FieldMatrix(f, n, m, std::move(out));
}

FieldMatrix hstack(std::span<const FieldMatrix> parts) {
  if (parts.empty()) throw ShapeError("hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows() || !(p.field() == parts[0].field())) {
      throw ShapeError("hstack: row counts differ");
    }
    cols += p.cols();
  }
  FieldMatrix out(parts[0].field(), parts[0].rows(), cols);
  std::size_t col = 0;
  for (const auto& p : parts) {
    out.paste(p, 0, col);
    col += p.cols();
  }
  return out;
}

FieldMatrix block_diag(std::span<const FieldMatrix> blocks) {
  if (blocks.empty()) throw ShapeError("block_diag of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  FieldMatrix out(blocks[0].field(), rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.paste(b, r, c);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

namespace {

// In-place reduction of `work` (rows x cols, row-major) to reduced row echelon
// form. Returns the pivot column of each pivot row.
std::vector<std::size_t> rref(const PrimeField& f, std::vector<Elem>& work,
                              std::size_t rows, std::size_t cols,
                              std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::uint64_t ops = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && work[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(work.begin() + piv * cols, work.begin() + (piv + 1) * cols,
                       work.begin() + r * cols);
    }
    const Elem scale = f.inv(work[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) {
      work[r * cols + j] = f.mul(work[r * cols + j], scale);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = work[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        work[i * cols + j] =
            f.sub(work[i * cols + j], f.mul(factor, work[r * cols + j]));
      }
      ops += cols - c;
    }
    pivots.push_back(c);
    ++r;
  }
  op_counter::add(ops);
  return pivots;
}

}  // namespace

FieldMatrix solve_square(const FieldMatrix& m, const FieldMatrix& y) {
  if (m.rows() != m.cols()) {
    throw ShapeError("solve_square: system is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + ", not square");
  }
  if (y.rows() != m.rows() || !(y.field() == m.field())) {
    throw ShapeError("solve_square: right-hand side has wrong shape");
  }
  const std::size_t n = m.rows(), k = y.cols(), cols = n + k;
  std::vector<Elem> work(n * cols);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), work.begin() + i * cols);
    std::copy(y.row(i).begin(), y.row(i).end(), work.begin() + i * cols + n);
  }
  const auto pivots = rref(m.field(), work, n, cols, n);
  if (pivots.size() != n) throw SingularMatrix("solve_square: matrix is singular");
  std::vector<Elem> out(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(work.begin() + i * cols + n, k, out.begin() + i * k);
  }
  return FieldMatrix(m.field(), n, k, std::move(out));
}

FieldMatrix inverse(const FieldMatrix& m) {
  return solve_square(m, FieldMatrix::identity(m.field(), m.rows()));
}

std::size_t rank(const FieldMatrix& m) {
  std::vector<Elem> work(m.entries().begin(), m.entries().end());
  return rref(m.field(), work, m.rows(), m.cols(), m.cols()).size();
}

FieldMatrix null_space(const FieldMatrix& m) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Elem> work(m.entries().begin(), m.entries().end());
  const auto pivots = rref(f, work, rows, cols, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FieldMatrix basis(f, cols, free_cols.size());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis.set(fc, b, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis.set(pivots[r], b, f.neg(work[r * cols + fc]));
    }
  }
  return basis;
}

void require_distinct(std::span<const Elem> values, const char* what) {
  std::unordered_set<Elem> seen;
  for (Elem v : values) {
    if (!seen.insert(v).second) {
      throw DegeneratePoints(std::string(what) + ": value " + std::to_string(v) +
                             " repeats");
    }
  }
}

FieldMatrix vandermonde(PrimeField field, std::span<const Elem> points,
                        std::size_t width) {
  require_distinct(points, "vandermonde points");
  FieldMatrix out(field, points.size(), width);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Elem power = 1;
    for (std::size_t j = 0; j < width; ++j) {
      out.set(i, j, power);
      power = field.mul(power, points[i]);
    }
  }
  return out;
}

FieldMatrix lower_toeplitz(PrimeField field, std::span<const Elem> first_column) {
  const std::size_t n = first_column.size();
  FieldMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, first_column[i - j]);
  }
  return out;
}

FieldMatrix cauchy_power(PrimeField field, std::span<const Elem> points,
                         std::span<const Elem> poles, std::size_t max_power) {
  std::vector<Elem> all(points.begin(), points.end());
  all.insert(all.end(), poles.begin(), poles.end());
  require_distinct(all, "cauchy points and poles");
  FieldMatrix out(field, points.size(), poles.size() * max_power);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t p = 0; p < poles.size(); ++p) {
      const Elem base = field.inv(field.sub(poles[p], points[i]));
      // Column p*max_power + j holds base^(max_power - j).
      Elem power = base;
      for (std::size_t j = max_power; j-- > 0;) {
        out.set(i, p * max_power + j, power);
        power = field.mul(power, base);
      }
    }
  }
  return out;
}

}  // namespace gcsa
