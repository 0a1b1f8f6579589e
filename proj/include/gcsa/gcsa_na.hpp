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
#include <optional>
#include <span>
#include <vector>

#include "gcsa/field.hpp"
#include "gcsa/rng.hpp"

namespace gcsa {

// The integers a user picks for one secure batch multiplication instance.
// The batch holds groups * group_size pairs (A_i, B_i) with A_i of shape
// rows x inner and B_i of shape inner x cols. Each A_i is cut into a
// row_split x inner_split block grid and each B_i into inner_split x
// col_split.
struct SchemeShape {
  std::size_t servers = 1;
  std::size_t colluding = 1;  // X: tolerated coalition size
  std::size_t groups = 1;
  std::size_t group_size = 1;
  std::size_t inner_split = 1;  // p
  std::size_t row_split = 1;    // m
  std::size_t col_split = 1;    // n
  std::size_t rows = 1;
  std::size_t inner = 1;
  std::size_t cols = 1;

  std::size_t batch() const { return groups * group_size; }
  friend bool operator==(const SchemeShape&, const SchemeShape&) = default;
};

// A validated shape plus every derived quantity the protocol uses.
struct SchemeParams {
  SchemeShape shape;
  PrimeField field;

  std::size_t product_terms;  // pmn: Cauchy unknowns per batch pair
  std::size_t threshold;      // pmn(groups+1)group_size + 2X - 1
  std::size_t ep_degree;      // max(pm, pmn - pm + p) - 1
  std::vector<std::size_t> desired;  // 1-based positions of the product blocks

  std::size_t batch() const { return shape.batch(); }
  // Number of polynomial (Vandermonde) unknowns in the decoding system.
  std::size_t poly_terms() const {
    return product_terms * shape.group_size + 2 * shape.colluding - 1;
  }
  // Count of uniformly random matrices masking the polynomial part.
  std::size_t aligned_noise_count() const {
    return product_terms * (shape.group_size - 1) + shape.colluding + ep_degree;
  }
  bool is_desired(std::size_t pos) const;

  std::size_t a_block_rows() const { return shape.rows / shape.row_split; }
  std::size_t a_block_cols() const { return shape.inner / shape.inner_split; }
  std::size_t b_block_cols() const { return shape.cols / shape.col_split; }
};

// Throws InvalidParameter (zero counts, X = 0), NotDivisible,
// InsufficientServers (threshold > servers) or FieldTooSmall
// (q < servers + batch).
SchemeParams derive_params(const SchemeShape& shape, PrimeField field);

// Public evaluation points. poles[g] belongs to batch pair g = l*group_size+k
// (0-based l, k); alphas[s] belongs to server s (0-based).
struct EvalPoints {
  std::vector<Elem> poles;
  std::vector<Elem> alphas;

  Elem pole(std::size_t group, std::size_t k, std::size_t group_size) const {
    return poles[group * group_size + k];
  }
};

enum class PointPolicy { kSequential, kRandom };

// Sequential: poles 1..L, alphas L+1..L+S, reduced mod q. Random: S+L
// distinct field elements drawn from the "points" stream of `seed`.
// Throws FieldTooSmall when q < S + L.
EvalPoints choose_points(const PrimeField& field, std::size_t servers,
                         std::size_t batch, PointPolicy policy = PointPolicy::kSequential,
                         std::uint64_t seed = 0);
// Validates sizes and pairwise distinctness (DegeneratePoints).
EvalPoints make_points(const SchemeParams& params, std::vector<Elem> poles,
                       std::vector<Elem> alphas);

// Ascending coefficients of prod_{k' != k} (x + pole_{l,k'} - pole_{l,k})^pmn,
// length pmn(group_size-1)+1. The constant term is never zero.
std::vector<Elem> psi_coeffs(const SchemeParams& params, const EvalPoints& points,
                             std::size_t group, std::size_t k);

// Encoded inputs held by one server: one A-share and one B-share per group.
struct ServerShare {
  std::vector<FieldMatrix> a;
  std::vector<FieldMatrix> b;
};
using ShareBundle = std::vector<ServerShare>;

// Source-private noise: groups*X matrices each, index l*X + x.
struct SourceNoise {
  std::vector<FieldMatrix> a;
  std::vector<FieldMatrix> b;
};

SourceNoise draw_source_noise(const SchemeParams& params, Rng& rng_a, Rng& rng_b);

// Per-source encoders. Result is indexed [server][group].
std::vector<std::vector<FieldMatrix>> share_source_a(
    const SchemeParams& params, const EvalPoints& points,
    std::span<const FieldMatrix> a_batch, std::span<const FieldMatrix> noise_a);
std::vector<std::vector<FieldMatrix>> share_source_b(
    const SchemeParams& params, const EvalPoints& points,
    std::span<const FieldMatrix> b_batch, std::span<const FieldMatrix> noise_b);

ShareBundle make_shares(const SchemeParams& params, const EvalPoints& points,
                        std::span<const FieldMatrix> a_batch,
                        std::span<const FieldMatrix> b_batch,
                        const SourceNoise& noise);

// Structured noise generated by one server ahead of time.
struct NoiseBundle {
  // aligned_noise_count() uniform matrices masking the polynomial part.
  std::vector<FieldMatrix> aligned;
  // batch * pmn matrices, index g*pmn + (pos-1). Zero exactly at desired
  // positions, uniform elsewhere.
  std::vector<FieldMatrix> cauchy;

  std::size_t random_count() const;
  std::size_t zero_count() const;
};

NoiseBundle gen_server_noise(const SchemeParams& params, Rng& rng);

// The aligned noise matrix delivered to `server`. Depends only on the noise
// bundle and public points.
FieldMatrix noise_share(const NoiseBundle& noise, const SchemeParams& params,
                        const EvalPoints& points, std::size_t server);

// sum_l A_l * B_l + noise.
FieldMatrix server_answer(const ServerShare& share, const FieldMatrix& noise);

struct Answer {
  std::size_t server = 0;
  std::optional<FieldMatrix> value;  // empty for a straggler

  bool responsive() const { return value.has_value(); }
};

// R x R system matrix (Cauchy-Vandermonde times block-diagonal Toeplitz) for
// the listed servers.
FieldMatrix decoding_matrix(const SchemeParams& params, const EvalPoints& points,
                            std::span<const std::size_t> servers);

struct DecodeResult {
  std::vector<FieldMatrix> products;      // index g = l*group_size + k
  std::vector<std::size_t> used_servers;  // the R servers decoded from
};

// Decodes from the first R responsive answers (by server index). Throws
// NotEnoughAnswers with fewer than R responsive answers.
DecodeResult reconstruct(std::span<const Answer> answers, const SchemeParams& params,
                         const EvalPoints& points);

// X x X matrix whose (i, x) entry is the coefficient of the x-th source noise
// term in the share of servers[i], for group `group`. The A side carries the
// extra Delta factor.
FieldMatrix collusion_matrix(const SchemeParams& params, const EvalPoints& points,
                             std::span<const std::size_t> servers,
                             std::size_t group, bool a_side);

}  // namespace gcsa
