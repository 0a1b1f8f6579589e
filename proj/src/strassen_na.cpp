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

#include "gcsa/strassen_na.hpp"

#include <algorithm>
#include <string>

#include "gcsa/block_matrix.hpp"
#include "gcsa/errors.hpp"
#include "gcsa/rng.hpp"

namespace gcsa::strassen {

namespace {

std::vector<FieldMatrix> combine_terms(
    std::span<const FieldMatrix> parts,
    const std::array<std::array<int, kBlocks>, kProducts>& terms) {
  const PrimeField& f = parts.front().field();
  std::vector<FieldMatrix> out;
  for (const auto& row : terms) {
    FieldMatrix acc(f, parts.front().rows(), parts.front().cols());
    for (std::size_t j = 0; j < kBlocks; ++j) {
      if (row[j] != 0) acc.add_scaled(parts[j], f.reduce(row[j]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<FieldMatrix> blocks_of(const FieldMatrix& m) {
  const BlockGrid g = partition(m, 2, 2);
  return {g.block(0, 0), g.block(0, 1), g.block(1, 0), g.block(1, 1)};
}

}  // namespace

FieldMatrix BilinearScheme::recon_matrix(const PrimeField& field) const {
  FieldMatrix out(field, kBlocks, kProducts);
  for (std::size_t o = 0; o < kBlocks; ++o) {
    for (std::size_t i = 0; i < kProducts; ++i) out.set(o, i, field.reduce(recon[o][i]));
  }
  return out;
}

std::vector<FieldMatrix> BilinearScheme::left_factors(
    std::span<const FieldMatrix> a_blocks) const {
  if (a_blocks.size() != kBlocks) throw ShapeError("need four A blocks");
  return combine_terms(a_blocks, a_terms);
}

std::vector<FieldMatrix> BilinearScheme::right_factors(
    std::span<const FieldMatrix> b_blocks) const {
  if (b_blocks.size() != kBlocks) throw ShapeError("need four B blocks");
  return combine_terms(b_blocks, b_terms);
}

std::vector<FieldMatrix> BilinearScheme::combine(
    std::span<const FieldMatrix> products) const {
  if (products.size() != kProducts) throw ShapeError("need seven products");
  const PrimeField& f = products.front().field();
  std::vector<FieldMatrix> out;
  for (const auto& row : recon) {
    FieldMatrix acc(f, products.front().rows(), products.front().cols());
    for (std::size_t i = 0; i < kProducts; ++i) {
      if (row[i] != 0) acc.add_scaled(products[i], f.reduce(row[i]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

BilinearScheme strassen_bilinear() {
  // Block index: 0 = 11, 1 = 12, 2 = 21, 3 = 22.
  BilinearScheme s{
      {{
          {1, 0, 0, 0},   // A11
          {1, 1, 0, 0},   // A11 + A12
          {0, 0, 1, 1},   // A21 + A22
          {0, 0, 0, 1},   // A22
          {1, 0, 0, 1},   // A11 + A22
          {0, 1, 0, -1},  // A12 - A22
          {1, 0, -1, 0},  // A11 - A21
      }},
      {{
          {0, 1, 0, -1},  // B12 - B22
          {0, 0, 0, 1},   // B22
          {1, 0, 0, 0},   // B11
          {-1, 0, 1, 0},  // B21 - B11
          {1, 0, 0, 1},   // B11 + B22
          {0, 0, 1, 1},   // B21 + B22
          {1, 1, 0, 0},   // B11 + B12
      }},
      {{
          {0, -1, 0, 1, 1, 1, 0},
          {1, 1, 0, 0, 0, 0, 0},
          {0, 0, 1, 1, 0, 0, 0},
          {1, 0, -1, 0, 1, 0, -1},
      }},
  };

  // C_{r,c} = sum_t A_{r,t} B_{t,c}: coefficient of A_ja B_jb in output o.
  for (std::size_t o = 0; o < kBlocks; ++o) {
    const std::size_t r = o / 2, c = o % 2;
    for (std::size_t ja = 0; ja < kBlocks; ++ja) {
      for (std::size_t jb = 0; jb < kBlocks; ++jb) {
        int got = 0;
        for (std::size_t i = 0; i < kProducts; ++i) {
          got += s.recon[o][i] * s.a_terms[i][ja] * s.b_terms[i][jb];
        }
        const bool expect = ja / 2 == r && jb % 2 == c && ja % 2 == jb / 2;
        if (got != (expect ? 1 : 0)) {
          throw ConsistencyError("Strassen assignment fails for output " +
                                 std::to_string(o) + ", term A" + std::to_string(ja) +
                                 "*B" + std::to_string(jb));
        }
      }
    }
  }
  return s;
}

NoiseDesign noise_design(const FieldMatrix& recon) {
  if (recon.rows() != kBlocks || recon.cols() != kProducts) {
    throw ShapeError("recon must be 4 x 7");
  }
  if (rank(recon) != kBlocks) throw RankError("recon must have rank 4");
  FieldMatrix n = null_space(recon);
  if (n.cols() != kProducts - kBlocks || rank(n) != n.cols()) {
    throw RankError("null space of recon is not 3-dimensional");
  }
  if (!mat_mul(recon, n).is_zero()) throw InternalError("noise design does not cancel");
  return NoiseDesign{std::move(n)};
}

FieldMatrix reference_assignment(const PrimeField& field) {
  return FieldMatrix::from_ints(field, kProducts, 3,
                                {-1, -1, 1,   //
                                 -1, 1, -1,   //
                                 -1, 0, 0,    //
                                 1, 0, 0,     //
                                 0, 1, 0,     //
                                 0, 0, -1,    //
                                 0, 0, 1});
}

StrassenRun strassen_na_run(const FieldMatrix& a, const FieldMatrix& b,
                            std::size_t servers, std::uint64_t seed,
                            std::span<const std::size_t> stragglers) {
  const PrimeField f = a.field();
  if (a.cols() != b.rows() || a.rows() % 2 || a.cols() % 2 || b.cols() % 2) {
    throw ShapeError("Strassen run needs conformable even-sized matrices");
  }
  if (servers < kThreshold) {
    throw InsufficientServers("Strassen construction needs at least 15 servers");
  }
  if (f.modulus() <= servers + kProducts) {
    throw FieldTooSmall("field too small for 7 poles and " + std::to_string(servers) +
                        " server points");
  }

  const BilinearScheme scheme = strassen_bilinear();
  const NoiseDesign design = noise_design(scheme.recon_matrix(f));

  std::vector<Elem> poles, alphas;
  for (std::size_t i = 1; i <= kProducts; ++i) poles.push_back(i);
  for (std::size_t s = 1; s <= servers; ++s) alphas.push_back(kProducts + s);
  std::vector<Elem> c(kProducts, 1);
  for (std::size_t i = 0; i < kProducts; ++i) {
    for (std::size_t j = 0; j < kProducts; ++j) {
      if (j != i) c[i] = f.mul(c[i], f.sub(poles[j], poles[i]));
    }
  }

  const std::size_t br = a.rows() / 2, bk = a.cols() / 2, bc = b.cols() / 2;
  StrassenRun run{FieldMatrix(f, a.rows(), b.cols()), {}, {}, {}};
  TraceReport& trace = run.trace;
  trace.scheme = Scheme::kStrassenNa;
  trace.shape = SchemeShape{servers, 1, 1, 1, 2, 2, 2, a.rows(), a.cols(), b.cols()};
  trace.modulus = f.modulus();
  trace.seed = seed;
  trace.threshold = kThreshold;
  trace.stragglers.assign(stragglers.begin(), stragglers.end());

  // Offline noise: Z_1..Z_3 in null(recon) directions, Z_4..Z_10 polynomial.
  Rng server_rng(seed, streams::kServer);
  std::vector<FieldMatrix> z;
  for (std::size_t i = 0; i < 10; ++i) z.push_back(FieldMatrix::random(f, br, bc, server_rng));
  {
    OpCountScope ops;
    std::vector<FieldMatrix> aligned;
    for (std::size_t i = 0; i < kProducts; ++i) {
      FieldMatrix acc(f, br, bc);
      for (std::size_t j = 0; j < 3; ++j) acc.add_scaled(z[j], design.n.at(i, j));
      aligned.push_back(std::move(acc));
    }
    for (std::size_t s = 0; s < servers; ++s) {
      FieldMatrix zs(f, br, bc);
      for (std::size_t i = 0; i < kProducts; ++i) {
        zs.add_scaled(aligned[i], f.div(c[i], f.sub(poles[i], alphas[s])));
      }
      Elem power = 1;
      for (std::size_t i = 3; i < 10; ++i) {
        zs.add_scaled(z[i], power);
        power = f.mul(power, alphas[s]);
      }
      run.noise_shares.push_back(std::move(zs));
    }
    trace.ops.noise = ops.count();
  }
  for (std::size_t s = 1; s < servers; ++s) {
    trace.record(Phase::kOfflineNoise, Endpoint::node(0), Endpoint::node(s), br * bc);
  }

  // Sharing.
  Rng rng_a(seed, streams::kSourceA), rng_b(seed, streams::kSourceB);
  const FieldMatrix za = FieldMatrix::random(f, br, bk, rng_a);
  const FieldMatrix zb = FieldMatrix::random(f, bk, bc, rng_b);
  const auto pa = scheme.left_factors(blocks_of(a));
  const auto qb = scheme.right_factors(blocks_of(b));
  std::vector<FieldMatrix> share_a, share_b;
  {
    OpCountScope ops;
    for (std::size_t s = 0; s < servers; ++s) {
      FieldMatrix sa = za;
      FieldMatrix sb = zb;
      Elem delta = 1;
      for (std::size_t i = 0; i < kProducts; ++i) {
        const Elem d = f.sub(poles[i], alphas[s]);
        delta = f.mul(delta, d);
        const Elem w = f.inv(d);
        sa.add_scaled(pa[i], w);
        sb.add_scaled(qb[i], w);
      }
      share_a.push_back(sa.scaled(delta));
      share_b.push_back(std::move(sb));
    }
    trace.ops.sharing = ops.count();
  }
  for (std::size_t s = 0; s < servers; ++s) {
    trace.record(Phase::kSharing, Endpoint::source_a(), Endpoint::node(s), br * bk);
  }
  for (std::size_t s = 0; s < servers; ++s) {
    trace.record(Phase::kSharing, Endpoint::source_b(), Endpoint::node(s), bk * bc);
  }

  // Answers from the first 15 responsive servers.
  std::vector<bool> dropped(servers, false);
  for (auto s : stragglers) dropped.at(s) = true;
  std::vector<std::size_t> used;
  for (std::size_t s = 0; s < servers && used.size() < kThreshold; ++s) {
    if (!dropped[s]) used.push_back(s);
  }
  if (used.size() < kThreshold) {
    throw NotEnoughAnswers("Strassen decode needs 15 answers, have " +
                           std::to_string(used.size()));
  }
  std::vector<FieldMatrix> answers;
  {
    OpCountScope ops;
    for (auto s : used) answers.push_back(mat_mul(share_a[s], share_b[s]) + run.noise_shares[s]);
    trace.ops.compute = ops.count();
  }
  for (auto s : used) {
    trace.record(Phase::kAnswer, Endpoint::node(s), Endpoint::master(), br * bc);
  }
  trace.decoded_from = used;

  // Decode: columns c_i/(f_i - alpha) for T_i, then alpha^0..alpha^7.
  {
    OpCountScope ops;
    FieldMatrix sys(f, kThreshold, kThreshold);
    FieldMatrix rhs(f, kThreshold, br * bc);
    for (std::size_t r = 0; r < kThreshold; ++r) {
      const Elem al = alphas[used[r]];
      for (std::size_t i = 0; i < kProducts; ++i) {
        sys.set(r, i, f.div(c[i], f.sub(poles[i], al)));
      }
      Elem power = 1;
      for (std::size_t j = kProducts; j < kThreshold; ++j) {
        sys.set(r, j, power);
        power = f.mul(power, al);
      }
      for (std::size_t e = 0; e < br * bc; ++e) rhs.set(r, e, answers[r].entries()[e]);
    }
    const FieldMatrix u = solve_square(sys, rhs);
    for (std::size_t i = 0; i < kProducts; ++i) {
      const auto row = u.row(i);
      run.masked.emplace_back(f, br, bc, std::vector<Elem>(row.begin(), row.end()));
    }
    const auto blocks = scheme.combine(run.masked);
    for (std::size_t o = 0; o < kBlocks; ++o) run.product.paste(blocks[o], (o / 2) * br, (o % 2) * bc);
    trace.ops.decode = ops.count();
  }
  trace.complete = true;
  trace.verified = run.product == mat_mul(a, b);
  return run;
}

}  // namespace gcsa::strassen
