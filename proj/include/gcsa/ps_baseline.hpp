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
#include <optional>
#include <span>
#include <vector>

#include "gcsa/field.hpp"
#include "gcsa/gcsa_na.hpp"

namespace gcsa::ps {

// Polynomial-sharing baseline for a single product A*B with A cut into 1 x p
// column blocks and B into p x 1 row blocks. Batches are handled by running
// independent instances.
//
// Shares are degree p-1+X polynomials in alpha, so the local products have
// degree 2p+2X-2 and every one of the 2p+2X-1 servers is needed to extract
// the alpha^(p-1) coefficient. Security against X colluders in the re-sharing
// round uses the noise polynomial sum_x alpha_j^x Z_{s,x}.
struct PsInstance {
  PrimeField field;
  std::size_t inner_split;  // p
  std::size_t colluding;    // X
  std::vector<Elem> alphas;
  // extract[s] = r_s: sum_s r_s * alpha_s^j is 1 for j = p-1 and 0 otherwise
  // (row p-1 of the inverse Vandermonde matrix).
  std::vector<Elem> extract;

  std::size_t servers() const { return alphas.size(); }
};

inline std::size_t ps_threshold(std::size_t p, std::size_t colluding) {
  return 2 * p + 2 * colluding - 1;
}

// Uses shape.inner_split, shape.colluding and shape.servers. Throws
// UnsupportedPartition if row_split or col_split exceed 1, InsufficientServers
// for S < 2p+2X-1, InvalidParameter for S > 2p+2X-1 (the round uses every
// server) and FieldTooSmall if the field cannot hold S nonzero points.
// Points are alpha_s = s (1-based) unless given.
PsInstance make_instance(const SchemeShape& shape, PrimeField field,
                         std::vector<Elem> alphas = {});

struct PsShare {
  FieldMatrix a;
  FieldMatrix b;
};

// A~ = sum_j A_j a^(j-1) + sum_x a^(p-1+x) ZA_x,
// B~ = sum_j B_j a^(p-j) + sum_x a^(p-1+x) ZB_x, at a = alphas[server].
PsShare ps_share(const PsInstance& inst, const FieldMatrix& a, const FieldMatrix& b,
                 std::span<const FieldMatrix> noise_a,
                 std::span<const FieldMatrix> noise_b, std::size_t server);

struct PsRound {
  // messages[from][to], including the self-message from == to that never
  // leaves the server.
  std::vector<std::vector<FieldMatrix>> messages;
  // aggregates[s] = sum_j messages[j][s] = AB + sum_x alpha_s^x (sum_j Z_{j,x}).
  std::vector<FieldMatrix> aggregates;
};

// local_products[s] = A~_s B~_s; server_noise[s] holds X matrices Z_{s,x}.
// Throws MissingServer if any local product is absent.
PsRound ps_round(const PsInstance& inst,
                 std::span<const std::optional<FieldMatrix>> local_products,
                 std::span<const std::vector<FieldMatrix>> server_noise);

// Interpolates the degree-X aggregate polynomial from the first X+1
// responsive answers and returns its constant term. Throws NotEnoughAnswers.
FieldMatrix ps_decode(const PsInstance& inst, std::span<const Answer> answers);

// Reads AB off the complete inter-server transcript: for every sender j the
// messages to the other servers interpolate to r_j A~_j B~_j at alpha = 0.
FieldMatrix recover_from_transcript(const PsInstance& inst,
                                    const std::vector<std::vector<FieldMatrix>>& messages);

}  // namespace gcsa::ps
