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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcsa/field.hpp"
#include "gcsa/trace.hpp"

namespace gcsa::strassen {

constexpr std::size_t kProducts = 7;
constexpr std::size_t kBlocks = 4;     // row-major order 11, 12, 21, 22
constexpr std::size_t kThreshold = 15;  // 7 Cauchy terms + alpha^0..alpha^7

// Seven-product bilinear algorithm for 2 x 2 block matrices:
// P_i = sum_j a_terms[i][j] A_j, Q_i = sum_j b_terms[i][j] B_j and
// C_o = sum_i recon[o][i] P_i Q_i.
struct BilinearScheme {
  std::array<std::array<int, kBlocks>, kProducts> a_terms;
  std::array<std::array<int, kBlocks>, kProducts> b_terms;
  std::array<std::array<int, kProducts>, kBlocks> recon;

  FieldMatrix recon_matrix(const PrimeField& field) const;
  std::vector<FieldMatrix> left_factors(std::span<const FieldMatrix> a_blocks) const;
  std::vector<FieldMatrix> right_factors(std::span<const FieldMatrix> b_blocks) const;
  // Applies recon to [T_1..T_7]; returns C_11, C_12, C_21, C_22.
  std::vector<FieldMatrix> combine(std::span<const FieldMatrix> products) const;
};

// Checks the assignment against the matrix-multiplication tensor over the
// integers, which covers every field. Throws ConsistencyError on mismatch.
BilinearScheme strassen_bilinear();

struct NoiseDesign {
  FieldMatrix n;  // 7 x 3; column j says how Z_{j+1} enters T_1..T_7
};

// Basis of null(recon) by elimination. Throws RankError unless recon has full
// row rank 4.
NoiseDesign noise_design(const FieldMatrix& recon);

// Hand-written signed assignment, kept for comparison with noise_design:
// T_1 -Z1-Z2+Z3, T_2 -Z1+Z2-Z3, T_3 -Z1, T_4 +Z1, T_5 +Z2, T_6 -Z3, T_7 +Z3.
FieldMatrix reference_assignment(const PrimeField& field);

struct StrassenRun {
  FieldMatrix product;
  std::vector<FieldMatrix> masked;        // decoded T_1..T_7
  std::vector<FieldMatrix> noise_shares;  // Z~ evaluated at every server
  TraceReport trace;
};

// Full protocol with X = 1 on square-blockable A (lambda x kappa) and
// B (kappa x mu), all dimensions even. Poles f_i = i, server points
// alpha_s = 7 + s (1-based). Throws InsufficientServers for S < 15,
// FieldTooSmall when q <= S + 7 and NotEnoughAnswers when the stragglers
// leave fewer than 15 answers.
StrassenRun strassen_na_run(const FieldMatrix& a, const FieldMatrix& b,
                            std::size_t servers, std::uint64_t seed,
                            std::span<const std::size_t> stragglers = {});

}  // namespace gcsa::strassen
