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
#include <vector>

#include <boost/rational.hpp>

#include "gcsa/gcsa_na.hpp"
#include "gcsa/trace.hpp"

namespace gcsa {

using Rational = boost::rational<std::int64_t>;

// Normalized costs, with the raw totals they come from. Uploads are per
// L*lambda*kappa (A) or L*kappa*mu (B) symbols; CC and D per L*lambda*mu.
struct CostReport {
  Scheme scheme = Scheme::kGcsaNa;
  SchemeShape shape;
  std::size_t threshold = 0;
  Rational upload_a;
  Rational upload_b;
  Rational server_comm;
  Rational download;

  std::uint64_t upload_a_symbols = 0;
  std::uint64_t upload_b_symbols = 0;
  std::uint64_t server_symbols = 0;
  std::uint64_t download_symbols = 0;
  std::size_t upload_messages = 0;  // both sources together
  std::size_t server_messages = 0;
  std::size_t download_messages = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

std::size_t gcsa_threshold(const SchemeShape& shape);
std::size_t ps_threshold(const SchemeShape& shape);

// Closed forms. GCSA-NA needs R <= S and the usual divisibility; the PS column
// needs S = 2pmn + 2X - 1 and counts L independent repetitions.
CostReport theoretical_costs(const SchemeShape& shape, Scheme scheme);

// Tallies a finished trace. Throws IncompleteTrace if decoding did not finish.
CostReport measured_costs(const TraceReport& trace);

enum class SweepAxis { kPartition, kBatch };

struct SweepSpec {
  SweepAxis axis = SweepAxis::kPartition;
  std::size_t colluding = 5;
  std::size_t split = 2;  // p = m = n on the batch axis
  std::size_t from = 1;
  std::size_t to = 4;
};

// Partition axis: p = m = n = v, L = 1. Batch axis: p = m = n = split,
// groups = 1, group_size = L. Every point runs at S = R for each scheme.
std::vector<CostReport> sweep(const SweepSpec& spec);

std::string csv_header();
std::string csv_row(const CostReport& r);
std::string to_csv(const std::vector<CostReport>& rows);

std::string format_costs(const CostReport& r);

}  // namespace gcsa
