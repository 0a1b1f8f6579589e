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
#include <string>
#include <string_view>
#include <vector>

#include "gcsa/gcsa_na.hpp"

namespace gcsa {

enum class Scheme { kGcsaNa, kPs, kStrassenNa };

std::string_view scheme_name(Scheme s);
// Accepts "gcsa-na", "ps", "strassen-na". Throws ConfigError otherwise.
Scheme parse_scheme(std::string_view name);

// kExchange is the polynomial-sharing re-sharing round; GCSA-NA never emits it.
enum class Phase { kOfflineNoise, kSharing, kExchange, kAnswer };

std::string_view phase_name(Phase p);

struct Endpoint {
  enum class Kind { kSourceA, kSourceB, kServer, kMaster };
  Kind kind = Kind::kServer;
  std::size_t server = 0;  // 0-based, only meaningful for kServer

  static Endpoint source_a() { return {Kind::kSourceA, 0}; }
  static Endpoint source_b() { return {Kind::kSourceB, 0}; }
  static Endpoint master() { return {Kind::kMaster, 0}; }
  static Endpoint node(std::size_t s) { return {Kind::kServer, s}; }

  std::string label() const;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Message {
  Phase phase = Phase::kSharing;
  Endpoint from;
  Endpoint to;
  std::uint64_t symbols = 0;
  // Links traversed; offline noise may be relayed, everything else is direct.
  std::size_t hops = 1;
  std::size_t instance = 0;  // repetition index for the PS baseline

  friend bool operator==(const Message&, const Message&) = default;
};

// Field operations by stage, from the thread-local counter. Informational.
struct OpCounts {
  std::uint64_t noise = 0;
  std::uint64_t sharing = 0;
  std::uint64_t compute = 0;
  std::uint64_t exchange = 0;
  std::uint64_t decode = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

struct TraceReport {
  Scheme scheme = Scheme::kGcsaNa;
  SchemeShape shape;
  std::uint64_t modulus = 0;
  std::uint64_t seed = 0;
  std::string topology;
  std::size_t threshold = 0;
  std::vector<Message> log;
  std::vector<std::size_t> stragglers;
  std::vector<std::size_t> decoded_from;
  bool complete = false;
  bool verified = false;
  OpCounts ops;

  void record(Phase phase, Endpoint from, Endpoint to, std::uint64_t symbols,
              std::size_t hops = 1, std::size_t instance = 0) {
    log.push_back(Message{phase, from, to, symbols, hops, instance});
  }
  std::size_t count(Phase phase) const;
  // True when no offline-noise entry appears after a sharing entry.
  bool offline_before_sharing() const;

  std::string to_json() const;
};

}  // namespace gcsa
