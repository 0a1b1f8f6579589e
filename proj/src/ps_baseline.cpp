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

#include "gcsa/ps_baseline.hpp"

#include <string>

#include "gcsa/block_matrix.hpp"
#include "gcsa/errors.hpp"

namespace gcsa::ps {

namespace {

// Constant term of the polynomial of degree < points.size() through
// (points[i], values[i]).
FieldMatrix interpolate_at_zero(const PrimeField& f, std::span<const Elem> points,
                                std::span<const FieldMatrix* const> values) {
  const std::size_t k = points.size();
  const std::size_t r = values[0]->rows(), c = values[0]->cols();
  FieldMatrix rhs(f, k, r * c);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t e = 0; e < r * c; ++e) rhs.set(i, e, values[i]->entries()[e]);
  }
  const FieldMatrix coeffs = solve_square(vandermonde(f, points, k), rhs);
  const auto row = coeffs.row(0);
  return FieldMatrix(f, r, c, std::vector<Elem>(row.begin(), row.end()));
}

}  // namespace

PsInstance make_instance(const SchemeShape& shape, PrimeField field,
                         std::vector<Elem> alphas) {
  if (shape.row_split != 1 || shape.col_split != 1) {
    throw UnsupportedPartition("polynomial sharing is implemented for m = n = 1 only");
  }
  if (shape.colluding == 0 || shape.inner_split == 0) {
    throw InvalidParameter("p and X must be positive");
  }
  const std::size_t need = ps_threshold(shape.inner_split, shape.colluding);
  if (shape.servers < need) {
    throw InsufficientServers("polynomial sharing needs " + std::to_string(need) +
                              " servers, have " + std::to_string(shape.servers));
  }
  if (shape.servers > need) {
    throw InvalidParameter("polynomial sharing runs with exactly S = " +
                           std::to_string(need) + " servers");
  }
  if (alphas.empty()) {
    if (field.modulus() <= shape.servers) {
      throw FieldTooSmall("field too small for " + std::to_string(shape.servers) +
                          " nonzero points");
    }
    for (std::size_t s = 1; s <= shape.servers; ++s) alphas.push_back(s);
  }
  if (alphas.size() != shape.servers) throw ShapeError("wrong number of PS points");
  require_distinct(alphas, "PS points");

  const FieldMatrix inv = inverse(vandermonde(field, alphas, need));
  const auto row = inv.row(shape.inner_split - 1);
  return PsInstance{field, shape.inner_split, shape.colluding, std::move(alphas),
                    std::vector<Elem>(row.begin(), row.end())};
}

PsShare ps_share(const PsInstance& inst, const FieldMatrix& a, const FieldMatrix& b,
                 std::span<const FieldMatrix> noise_a,
                 std::span<const FieldMatrix> noise_b, std::size_t server) {
  const PrimeField& f = inst.field;
  const std::size_t p = inst.inner_split;
  if (noise_a.size() != inst.colluding || noise_b.size() != inst.colluding) {
    throw ShapeError("ps_share: need X noise matrices per source");
  }
  const BlockGrid ga = partition(a, 1, p);
  const BlockGrid gb = partition(b, p, 1);
  const Elem alpha = inst.alphas.at(server);

  FieldMatrix sa(f, ga.block_rows(), ga.block_cols());
  FieldMatrix sb(f, gb.block_rows(), gb.block_cols());
  for (std::size_t j = 0; j < p; ++j) {
    sa.add_scaled(ga.block(0, j), f.pow(alpha, j));
    sb.add_scaled(gb.block(j, 0), f.pow(alpha, p - 1 - j));
  }
  for (std::size_t x = 0; x < inst.colluding; ++x) {
    const Elem w = f.pow(alpha, p + x);
    sa.add_scaled(noise_a[x], w);
    sb.add_scaled(noise_b[x], w);
  }
  return PsShare{std::move(sa), std::move(sb)};
}

PsRound ps_round(const PsInstance& inst,
                 std::span<const std::optional<FieldMatrix>> local_products,
                 std::span<const std::vector<FieldMatrix>> server_noise) {
  const PrimeField& f = inst.field;
  const std::size_t s_count = inst.servers();
  if (local_products.size() != s_count || server_noise.size() != s_count) {
    throw ShapeError("ps_round: one product and one noise list per server");
  }
  for (std::size_t s = 0; s < s_count; ++s) {
    if (!local_products[s]) {
      throw MissingServer("server " + std::to_string(s + 1) +
                          " did not respond; polynomial sharing cannot proceed");
    }
    if (server_noise[s].size() != inst.colluding) {
      throw ShapeError("ps_round: need X noise matrices per server");
    }
  }

  PsRound out;
  out.messages.resize(s_count);
  for (std::size_t from = 0; from < s_count; ++from) {
    const FieldMatrix weighted = local_products[from]->scaled(inst.extract[from]);
    for (std::size_t to = 0; to < s_count; ++to) {
      FieldMatrix msg = weighted;
      Elem power = inst.alphas[to];
      for (const auto& z : server_noise[from]) {
        msg.add_scaled(z, power);
        power = f.mul(power, inst.alphas[to]);
      }
      out.messages[from].push_back(std::move(msg));
    }
  }
  for (std::size_t to = 0; to < s_count; ++to) {
    FieldMatrix sum = out.messages[0][to];
    for (std::size_t from = 1; from < s_count; ++from) sum += out.messages[from][to];
    out.aggregates.push_back(std::move(sum));
  }
  return out;
}

FieldMatrix ps_decode(const PsInstance& inst, std::span<const Answer> answers) {
  const std::size_t need = inst.colluding + 1;
  std::vector<Elem> points;
  std::vector<const FieldMatrix*> values;
  for (const auto& a : answers) {
    if (!a.responsive()) continue;
    points.push_back(inst.alphas.at(a.server));
    values.push_back(&*a.value);
    if (points.size() == need) break;
  }
  if (points.size() < need) {
    throw NotEnoughAnswers("polynomial sharing decode needs " + std::to_string(need) +
                           " answers, have " + std::to_string(points.size()));
  }
  return interpolate_at_zero(inst.field, points, values);
}

FieldMatrix recover_from_transcript(const PsInstance& inst,
                                    const std::vector<std::vector<FieldMatrix>>& messages) {
  const std::size_t s_count = inst.servers();
  std::optional<FieldMatrix> total;
  for (std::size_t from = 0; from < s_count; ++from) {
    std::vector<Elem> points;
    std::vector<const FieldMatrix*> values;
    for (std::size_t to = 0; to < s_count && points.size() < inst.colluding + 1; ++to) {
      if (to == from) continue;
      points.push_back(inst.alphas[to]);
      values.push_back(&messages.at(from).at(to));
    }
    FieldMatrix term = interpolate_at_zero(inst.field, points, values);
    if (total) {
      *total += term;
    } else {
      total = std::move(term);
    }
  }
  return *total;
}

}  // namespace gcsa::ps
