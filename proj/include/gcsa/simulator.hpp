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
#include <string>
#include <string_view>
#include <vector>

#include "gcsa/field.hpp"
#include "gcsa/gcsa_na.hpp"
#include "gcsa/topology.hpp"
#include "gcsa/trace.hpp"

namespace gcsa {

enum class TopologyKind { kComplete, kStar, kLine, kFile };

struct SimConfig {
  Scheme scheme = Scheme::kGcsaNa;
  SchemeShape shape;
  std::uint64_t modulus = 65537;
  std::uint64_t seed = 1;
  // Seed for the random inputs; the protocol randomness always uses `seed`.
  std::optional<std::uint64_t> data_seed;
  std::vector<std::size_t> stragglers;  // 0-based; overrides straggler_count
  std::size_t straggler_count = 0;
  TopologyKind topology = TopologyKind::kComplete;
  std::string topology_path;
  PointPolicy points = PointPolicy::kSequential;
};

// JSON object with keys scheme, S, X, ell, Kc, p, m, n, lambda, kappa, mu,
// modulus, seed, data_seed, stragglers (1-based ids), straggler_count,
// topology (complete | star | line | path-file), topology_path and
// points (sequential | random). Missing keys keep their defaults.
// Throws ConfigError.
SimConfig parse_config(std::string_view json_text);
SimConfig load_config(const std::string& path);

Topology make_topology(const SimConfig& config);

struct SimResult {
  TraceReport trace;
  std::vector<FieldMatrix> decoded;
  std::vector<FieldMatrix> expected;
  // Offline noise each server ends up holding (empty for PS).
  std::vector<FieldMatrix> noise_shares;

  bool pass() const { return trace.verified; }
};

// Runs every phase and checks the decoded products against mat_mul.
// Protocol errors (NotEnoughAnswers, MissingServer, ...) propagate.
SimResult run_simulation(const SimConfig& config);

std::string format_report(const SimResult& result);

}  // namespace gcsa
