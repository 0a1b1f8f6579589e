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

#include <cstdint>
#include <random>
#include <string_view>

#include "gcsa/field.hpp"

namespace gcsa {

// Stream names. Each consumer of randomness draws from its own stream so
// changing, e.g., the input data never perturbs the server noise.
namespace streams {
inline constexpr std::string_view kSourceA = "source-A";
inline constexpr std::string_view kSourceB = "source-B";
inline constexpr std::string_view kDataA = "data-A";
inline constexpr std::string_view kDataB = "data-B";
inline constexpr std::string_view kServer = "server";
inline constexpr std::string_view kStragglers = "straggler-selection";
inline constexpr std::string_view kPoints = "points";
}  // namespace streams

// Seedable generator for one named stream. The engine and the sampling
// routines are fully specified, so draws are identical on every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound);
  Elem uniform(const PrimeField& field) { return below(field.modulus()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gcsa
