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

#include "gcsa/gcsa_na.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "gcsa/block_matrix.hpp"
#include "gcsa/ep_code.hpp"
#include "gcsa/errors.hpp"

namespace gcsa {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

void check_batch(std::span<const FieldMatrix> batch, const SchemeParams& params,
                 std::size_t rows, std::size_t cols, const char* what) {
  if (batch.size() != params.batch()) {
    throw ShapeError(std::string(what) + ": expected " + str(params.batch()) +
                     " matrices, got " + str(batch.size()));
  }
  for (const auto& m : batch) {
    if (m.rows() != rows || m.cols() != cols || !(m.field() == params.field)) {
      throw ShapeError(std::string(what) + ": matrix is not " + str(rows) + "x" +
                       str(cols) + " over the scheme field");
    }
  }
}

// (pole - alpha) for batch pair g at server s.
Elem shift(const SchemeParams& params, const EvalPoints& points, std::size_t g,
           std::size_t s) {
  return params.field.sub(points.poles[g], points.alphas[s]);
}

// Delta_s^l = prod_k (pole_{l,k} - alpha_s)^pmn.
Elem delta(const SchemeParams& params, const EvalPoints& points, std::size_t l,
           std::size_t s) {
  const PrimeField& f = params.field;
  Elem d = 1;
  for (std::size_t k = 0; k < params.shape.group_size; ++k) {
    const std::size_t g = l * params.shape.group_size + k;
    d = f.mul(d, f.pow(shift(params, points, g, s), params.product_terms));
  }
  return d;
}

}  // namespace

bool SchemeParams::is_desired(std::size_t pos) const {
  return std::binary_search(desired.begin(), desired.end(), pos);
}

SchemeParams derive_params(const SchemeShape& shape, PrimeField field) {
  const auto& s = shape;
  if (s.servers == 0 || s.groups == 0 || s.group_size == 0 || s.inner_split == 0 ||
      s.row_split == 0 || s.col_split == 0 || s.rows == 0 || s.inner == 0 ||
      s.cols == 0) {
    throw InvalidParameter("all scheme counts and dimensions must be positive");
  }
  if (s.colluding == 0) {
    throw InvalidParameter("X must be at least 1; the construction needs noise terms");
  }
  if (s.rows % s.row_split || s.inner % s.inner_split || s.cols % s.col_split) {
    throw NotDivisible("dimensions " + str(s.rows) + "x" + str(s.inner) + "x" +
                       str(s.cols) + " are not divisible by splits m=" +
                       str(s.row_split) + " p=" + str(s.inner_split) +
                       " n=" + str(s.col_split));
  }
  const std::size_t p = s.inner_split, m = s.row_split, n = s.col_split;
  const std::size_t terms = p * m * n;
  const std::size_t threshold =
      terms * (s.groups + 1) * s.group_size + 2 * s.colluding - 1;
  if (threshold > s.servers) {
    throw InsufficientServers("recovery threshold " + str(threshold) +
                              " exceeds server count " + str(s.servers));
  }
  if (field.modulus() < s.servers + s.batch()) {
    throw FieldTooSmall("field of size " + std::to_string(field.modulus()) +
                        " cannot hold " + str(s.servers + s.batch()) +
                        " distinct points");
  }
  return SchemeParams{
      .shape = shape,
      .field = field,
      .product_terms = terms,
      .threshold = threshold,
      .ep_degree = std::max(p * m, terms - p * m + p) - 1,
      .desired = desired_positions(p, m, n),
  };
}

EvalPoints choose_points(const PrimeField& field, std::size_t servers,
                         std::size_t batch, PointPolicy policy, std::uint64_t seed) {
  if (field.modulus() < servers + batch) {
    throw FieldTooSmall("need " + str(servers + batch) +
                        " distinct points in a field of size " +
                        std::to_string(field.modulus()));
  }
  EvalPoints out;
  if (policy == PointPolicy::kSequential) {
    for (std::size_t g = 1; g <= batch; ++g) out.poles.push_back(g % field.modulus());
    for (std::size_t s = 1; s <= servers; ++s) {
      out.alphas.push_back((batch + s) % field.modulus());
    }
    return out;
  }
  Rng rng(seed, streams::kPoints);
  std::unordered_set<Elem> used;
  auto draw = [&] {
    Elem v;
    do {
      v = rng.uniform(field);
    } while (!used.insert(v).second);
    return v;
  };
  for (std::size_t g = 0; g < batch; ++g) out.poles.push_back(draw());
  for (std::size_t s = 0; s < servers; ++s) out.alphas.push_back(draw());
  return out;
}

EvalPoints make_points(const SchemeParams& params, std::vector<Elem> poles,
                       std::vector<Elem> alphas) {
  if (poles.size() != params.batch() || alphas.size() != params.shape.servers) {
    throw ShapeError("make_points: expected " + str(params.batch()) + " poles and " +
                     str(params.shape.servers) + " server points");
  }
  std::vector<Elem> all(poles);
  all.insert(all.end(), alphas.begin(), alphas.end());
  for (Elem v : all) {
    if (!params.field.contains(v)) throw DegeneratePoints("point outside the field");
  }
  require_distinct(all, "evaluation points");
  return EvalPoints{std::move(poles), std::move(alphas)};
}

std::vector<Elem> psi_coeffs(const SchemeParams& params, const EvalPoints& points,
                             std::size_t group, std::size_t k) {
  const PrimeField& f = params.field;
  const std::size_t kc = params.shape.group_size;
  if (group >= params.shape.groups || k >= kc) {
    throw IndexError("psi_coeffs: pair (" + str(group) + "," + str(k) + ") out of range");
  }
  const Elem own = points.pole(group, k, kc);
  std::vector<Elem> poly{1};
  for (std::size_t other = 0; other < kc; ++other) {
    if (other == k) continue;
    const Elem root_shift = f.sub(points.pole(group, other, kc), own);
    // Multiply by (x + root_shift) once per power.
    for (std::size_t rep = 0; rep < params.product_terms; ++rep) {
      std::vector<Elem> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] = f.add(next[i], f.mul(poly[i], root_shift));
        next[i + 1] = f.add(next[i + 1], poly[i]);
      }
      poly = std::move(next);
    }
  }
  return poly;
}

SourceNoise draw_source_noise(const SchemeParams& params, Rng& rng_a, Rng& rng_b) {
  SourceNoise out;
  const std::size_t count = params.shape.groups * params.shape.colluding;
  for (std::size_t i = 0; i < count; ++i) {
    out.a.push_back(FieldMatrix::random(params.field, params.a_block_rows(),
                                        params.a_block_cols(), rng_a));
  }
  for (std::size_t i = 0; i < count; ++i) {
    out.b.push_back(FieldMatrix::random(params.field, params.a_block_cols(),
                                        params.b_block_cols(), rng_b));
  }
  return out;
}

std::vector<std::vector<FieldMatrix>> share_source_a(
    const SchemeParams& params, const EvalPoints& points,
    std::span<const FieldMatrix> a_batch, std::span<const FieldMatrix> noise_a) {
  const auto& sh = params.shape;
  const PrimeField& f = params.field;
  check_batch(a_batch, params, sh.rows, sh.inner, "share_source_a");
  if (noise_a.size() != sh.groups * sh.colluding) {
    throw ShapeError("share_source_a: wrong number of noise matrices");
  }
  std::vector<BlockGrid> grids;
  for (const auto& a : a_batch) grids.push_back(partition(a, sh.row_split, sh.inner_split));

  std::vector<std::vector<FieldMatrix>> out(sh.servers);
  for (std::size_t s = 0; s < sh.servers; ++s) {
    for (std::size_t l = 0; l < sh.groups; ++l) {
      // Delta * P/(shift^pmn) is P times the other pairs' shift^pmn, so no
      // inverse is needed.
      FieldMatrix share(f, params.a_block_rows(), params.a_block_cols());
      for (std::size_t k = 0; k < sh.group_size; ++k) {
        const std::size_t g = l * sh.group_size + k;
        Elem weight = 1;
        for (std::size_t k2 = 0; k2 < sh.group_size; ++k2) {
          if (k2 == k) continue;
          weight = f.mul(weight, f.pow(shift(params, points, l * sh.group_size + k2, s),
                                       params.product_terms));
        }
        share.add_scaled(ep_encode_a(grids[g], shift(params, points, g, s)), weight);
      }
      const Elem d = delta(params, points, l, s);
      Elem power = 1;
      for (std::size_t x = 0; x < sh.colluding; ++x) {
        share.add_scaled(noise_a[l * sh.colluding + x], f.mul(d, power));
        power = f.mul(power, points.alphas[s]);
      }
      out[s].push_back(std::move(share));
    }
  }
  return out;
}

std::vector<std::vector<FieldMatrix>> share_source_b(
    const SchemeParams& params, const EvalPoints& points,
    std::span<const FieldMatrix> b_batch, std::span<const FieldMatrix> noise_b) {
  const auto& sh = params.shape;
  const PrimeField& f = params.field;
  check_batch(b_batch, params, sh.inner, sh.cols, "share_source_b");
  if (noise_b.size() != sh.groups * sh.colluding) {
    throw ShapeError("share_source_b: wrong number of noise matrices");
  }
  std::vector<BlockGrid> grids;
  for (const auto& b : b_batch) grids.push_back(partition(b, sh.inner_split, sh.col_split));

  std::vector<std::vector<FieldMatrix>> out(sh.servers);
  for (std::size_t s = 0; s < sh.servers; ++s) {
    for (std::size_t l = 0; l < sh.groups; ++l) {
      FieldMatrix share(f, params.a_block_cols(), params.b_block_cols());
      for (std::size_t k = 0; k < sh.group_size; ++k) {
        const std::size_t g = l * sh.group_size + k;
        const Elem x = shift(params, points, g, s);
        share.add_scaled(ep_encode_b(grids[g], sh.row_split, x),
                         f.inv(f.pow(x, params.product_terms)));
      }
      Elem power = 1;
      for (std::size_t x = 0; x < sh.colluding; ++x) {
        share.add_scaled(noise_b[l * sh.colluding + x], power);
        power = f.mul(power, points.alphas[s]);
      }
      out[s].push_back(std::move(share));
    }
  }
  return out;
}

ShareBundle make_shares(const SchemeParams& params, const EvalPoints& points,
                        std::span<const FieldMatrix> a_batch,
                        std::span<const FieldMatrix> b_batch,
                        const SourceNoise& noise) {
  auto a = share_source_a(params, points, a_batch, noise.a);
  auto b = share_source_b(params, points, b_batch, noise.b);
  ShareBundle out(params.shape.servers);
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s].a = std::move(a[s]);
    out[s].b = std::move(b[s]);
  }
  return out;
}

std::size_t NoiseBundle::random_count() const {
  return aligned.size() +
         std::count_if(cauchy.begin(), cauchy.end(),
                       [](const FieldMatrix& z) { return !z.is_zero(); });
}

std::size_t NoiseBundle::zero_count() const {
  return aligned.size() + cauchy.size() - random_count();
}

NoiseBundle gen_server_noise(const SchemeParams& params, Rng& rng) {
  const std::size_t r = params.a_block_rows(), c = params.b_block_cols();
  NoiseBundle out;
  for (std::size_t i = 0; i < params.aligned_noise_count(); ++i) {
    out.aligned.push_back(FieldMatrix::random(params.field, r, c, rng));
  }
  for (std::size_t g = 0; g < params.batch(); ++g) {
    for (std::size_t pos = 1; pos <= params.product_terms; ++pos) {
      out.cauchy.push_back(params.is_desired(pos)
                               ? FieldMatrix(params.field, r, c)
                               : FieldMatrix::random(params.field, r, c, rng));
    }
  }
  return out;
}

FieldMatrix noise_share(const NoiseBundle& noise, const SchemeParams& params,
                        const EvalPoints& points, std::size_t server) {
  const PrimeField& f = params.field;
  const auto& sh = params.shape;
  const std::size_t terms = params.product_terms;
  if (server >= sh.servers) throw IndexError("noise_share: no server " + str(server));
  FieldMatrix out(f, params.a_block_rows(), params.b_block_cols());

  Elem power = 1;
  for (const auto& z : noise.aligned) {
    out.add_scaled(z, power);
    power = f.mul(power, points.alphas[server]);
  }

  for (std::size_t l = 0; l < sh.groups; ++l) {
    for (std::size_t k = 0; k < sh.group_size; ++k) {
      const std::size_t g = l * sh.group_size + k;
      auto c = psi_coeffs(params, points, l, k);
      // Coefficients past the polynomial degree are zero (group_size == 1).
      c.resize(std::max(c.size(), terms), 0);
      const Elem inv_shift = f.inv(shift(params, points, g, server));
      // Term i carries (pole - alpha)^-(terms - i) times the Toeplitz
      // combination sum_{i' <= i} c_{i-i'} Z''_{i'+1}.
      for (std::size_t i = 0; i < terms; ++i) {
        const Elem weight = f.pow(inv_shift, terms - i);
        for (std::size_t ip = 0; ip <= i; ++ip) {
          const Elem coeff = f.mul(weight, c[i - ip]);
          out.add_scaled(noise.cauchy[g * terms + ip], coeff);
        }
      }
    }
  }
  return out;
}

FieldMatrix server_answer(const ServerShare& share, const FieldMatrix& noise) {
  if (share.a.size() != share.b.size() || share.a.empty()) {
    throw ShapeError("server_answer: share lists differ in length");
  }
  FieldMatrix out = noise;
  for (std::size_t l = 0; l < share.a.size(); ++l) {
    out += mat_mul(share.a[l], share.b[l]);
  }
  return out;
}

FieldMatrix decoding_matrix(const SchemeParams& params, const EvalPoints& points,
                            std::span<const std::size_t> servers) {
  std::vector<Elem> alphas;
  for (std::size_t s : servers) alphas.push_back(points.alphas.at(s));
  const FieldMatrix parts[] = {
      cauchy_power(params.field, alphas, points.poles, params.product_terms),
      vandermonde(params.field, alphas, params.poly_terms()),
  };
  const FieldMatrix cauchy_vandermonde = hstack(parts);

  std::vector<FieldMatrix> diag;
  for (std::size_t l = 0; l < params.shape.groups; ++l) {
    for (std::size_t k = 0; k < params.shape.group_size; ++k) {
      auto c = psi_coeffs(params, points, l, k);
      c.resize(params.product_terms);
      diag.push_back(lower_toeplitz(params.field, c));
    }
  }
  diag.push_back(FieldMatrix::identity(params.field, params.poly_terms()));
  return mat_mul(cauchy_vandermonde, block_diag(diag));
}

DecodeResult reconstruct(std::span<const Answer> answers, const SchemeParams& params,
                         const EvalPoints& points) {
  const std::size_t need = params.threshold;
  std::vector<const Answer*> picked;
  for (const auto& a : answers) {
    if (a.responsive()) picked.push_back(&a);
  }
  if (picked.size() < need) {
    throw NotEnoughAnswers("have " + str(picked.size()) + " responsive answers, need " +
                           str(need));
  }
  std::sort(picked.begin(), picked.end(),
            [](const Answer* x, const Answer* y) { return x->server < y->server; });
  picked.resize(need);

  const std::size_t br = params.a_block_rows(), bc = params.b_block_cols();
  DecodeResult out;
  FieldMatrix rhs(params.field, need, br * bc);
  for (std::size_t i = 0; i < need; ++i) {
    const FieldMatrix& y = *picked[i]->value;
    if (y.rows() != br || y.cols() != bc) throw ShapeError("answer has wrong shape");
    out.used_servers.push_back(picked[i]->server);
    for (std::size_t e = 0; e < br * bc; ++e) rhs.set(i, e, y.entries()[e]);
  }
  for (std::size_t i = 1; i < need; ++i) {
    if (out.used_servers[i] == out.used_servers[i - 1]) {
      throw DegeneratePoints("duplicate answer from server " + str(out.used_servers[i]));
    }
  }

  FieldMatrix unknowns(params.field, 0, 0);
  try {
    unknowns = solve_square(decoding_matrix(params, points, out.used_servers), rhs);
  } catch (const SingularMatrix& e) {
    throw InternalError(std::string("decoding system singular for distinct points: ") +
                        e.what());
  }

  const auto& sh = params.shape;
  for (std::size_t g = 0; g < params.batch(); ++g) {
    ProductBlocks blocks;
    for (std::size_t mi = 1; mi <= sh.row_split; ++mi) {
      for (std::size_t ni = 1; ni <= sh.col_split; ++ni) {
        const std::size_t pos =
            product_block_index(mi, ni, sh.inner_split, sh.row_split, sh.col_split);
        const auto row = unknowns.row(g * params.product_terms + pos - 1);
        blocks.emplace(std::pair{mi, ni},
                       FieldMatrix(params.field, br, bc,
                                   std::vector<Elem>(row.begin(), row.end())));
      }
    }
    out.products.push_back(reassemble(blocks, sh.row_split, sh.col_split));
  }
  return out;
}

FieldMatrix collusion_matrix(const SchemeParams& params, const EvalPoints& points,
                             std::span<const std::size_t> servers, std::size_t group,
                             bool a_side) {
  const PrimeField& f = params.field;
  const std::size_t x_count = params.shape.colluding;
  if (servers.size() != x_count) {
    throw ShapeError("collusion_matrix: expected " + str(x_count) + " servers");
  }
  FieldMatrix out(f, x_count, x_count);
  for (std::size_t i = 0; i < x_count; ++i) {
    const std::size_t s = servers[i];
    Elem power = a_side ? delta(params, points, group, s) : 1;
    for (std::size_t x = 0; x < x_count; ++x) {
      out.set(i, x, power);
      power = f.mul(power, points.alphas[s]);
    }
  }
  return out;
}

}  // namespace gcsa
