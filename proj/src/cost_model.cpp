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

#include "gcsa/cost_model.hpp"

#include <sstream>

#include "gcsa/errors.hpp"

namespace gcsa {

namespace {

using I = std::int64_t;

void check_shape(const SchemeShape& s) {
  if (s.servers == 0 || s.colluding == 0 || s.groups == 0 || s.group_size == 0 ||
      s.inner_split == 0 || s.row_split == 0 || s.col_split == 0 || s.rows == 0 ||
      s.inner == 0 || s.cols == 0) {
    throw InvalidParameter("all shape parameters must be positive");
  }
  if (s.rows % s.row_split || s.inner % s.inner_split || s.cols % s.col_split) {
    throw NotDivisible("matrix dimensions must be divisible by m, p, n");
  }
}

void normalize(CostReport& r) {
  const auto& s = r.shape;
  const I batch = static_cast<I>(s.batch());
  r.upload_a = Rational(static_cast<I>(r.upload_a_symbols),
                        batch * static_cast<I>(s.rows * s.inner));
  r.upload_b = Rational(static_cast<I>(r.upload_b_symbols),
                        batch * static_cast<I>(s.inner * s.cols));
  const I out = batch * static_cast<I>(s.rows * s.cols);
  r.server_comm = Rational(static_cast<I>(r.server_symbols), out);
  r.download = Rational(static_cast<I>(r.download_symbols), out);
}

}  // namespace

std::size_t gcsa_threshold(const SchemeShape& s) {
  return s.inner_split * s.row_split * s.col_split * (s.groups + 1) * s.group_size +
         2 * s.colluding - 1;
}

std::size_t ps_threshold(const SchemeShape& s) {
  return 2 * s.inner_split * s.row_split * s.col_split + 2 * s.colluding - 1;
}

CostReport theoretical_costs(const SchemeShape& shape, Scheme scheme) {
  check_shape(shape);
  CostReport r;
  r.scheme = scheme;
  r.shape = shape;
  const std::uint64_t S = shape.servers, L = shape.batch();
  const std::uint64_t mn = shape.row_split * shape.col_split;
  const std::uint64_t a_block = (shape.rows / shape.row_split) * (shape.inner / shape.inner_split);
  const std::uint64_t b_block = (shape.inner / shape.inner_split) * (shape.cols / shape.col_split);
  const std::uint64_t c_block = (shape.rows / shape.row_split) * (shape.cols / shape.col_split);

  switch (scheme) {
    case Scheme::kGcsaNa: {
      r.threshold = gcsa_threshold(shape);
      if (r.threshold > S) {
        throw InsufficientServers("GCSA-NA needs " + std::to_string(r.threshold) + " servers");
      }
      // Each server holds one A and one B share per group.
      r.upload_a_symbols = S * shape.groups * a_block;
      r.upload_b_symbols = S * shape.groups * b_block;
      r.server_symbols = (S - 1) * c_block;
      r.download_symbols = r.threshold * c_block;
      r.upload_messages = 2 * S;
      r.server_messages = S - 1;
      r.download_messages = r.threshold;
      break;
    }
    case Scheme::kPs: {
      r.threshold = ps_threshold(shape);
      if (S != r.threshold) {
        throw InvalidParameter("polynomial sharing runs with S = 2pmn+2X-1 = " +
                               std::to_string(r.threshold));
      }
      r.upload_a_symbols = L * S * a_block;
      r.upload_b_symbols = L * S * b_block;
      r.server_symbols = L * S * (S - 1) * c_block;
      r.download_symbols = L * (mn + shape.colluding) * c_block;
      r.upload_messages = 2 * L * S;
      r.server_messages = L * S * (S - 1);
      r.download_messages = L * (mn + shape.colluding);
      break;
    }
    case Scheme::kStrassenNa:
      throw InvalidParameter("no closed-form cost model for the Strassen variant");
  }
  normalize(r);
  return r;
}

CostReport measured_costs(const TraceReport& trace) {
  if (!trace.complete) throw IncompleteTrace("trace has no finished decode");
  CostReport r;
  r.scheme = trace.scheme;
  r.shape = trace.shape;
  r.threshold = trace.threshold;
  using K = Endpoint::Kind;
  for (const auto& m : trace.log) {
    if (m.from.kind == K::kSourceA) {
      r.upload_a_symbols += m.symbols;
      ++r.upload_messages;
    } else if (m.from.kind == K::kSourceB) {
      r.upload_b_symbols += m.symbols;
      ++r.upload_messages;
    } else if (m.to.kind == K::kMaster) {
      r.download_symbols += m.symbols;
      ++r.download_messages;
    } else {
      r.server_symbols += m.symbols;
      ++r.server_messages;
    }
  }
  normalize(r);
  return r;
}

std::vector<CostReport> sweep(const SweepSpec& spec) {
  std::vector<CostReport> rows;
  for (std::size_t v = spec.from; v <= spec.to; ++v) {
    SchemeShape shape;
    shape.colluding = spec.colluding;
    const std::size_t split = spec.axis == SweepAxis::kPartition ? v : spec.split;
    shape.inner_split = shape.row_split = shape.col_split = split;
    shape.rows = shape.inner = shape.cols = split;
    shape.groups = 1;
    shape.group_size = spec.axis == SweepAxis::kBatch ? v : 1;
    for (Scheme scheme : {Scheme::kGcsaNa, Scheme::kPs}) {
      shape.servers = scheme == Scheme::kGcsaNa ? gcsa_threshold(shape) : ps_threshold(shape);
      rows.push_back(theoretical_costs(shape, scheme));
    }
  }
  return rows;
}

std::string csv_header() {
  return "scheme,p,m,n,ell,Kc,L,X,S,R,UA_num,UA_den,UB_num,UB_den,CC_num,CC_den,D_num,D_den";
}

std::string csv_row(const CostReport& r) {
  const auto& s = r.shape;
  std::ostringstream out;
  out << scheme_name(r.scheme) << ',' << s.inner_split << ',' << s.row_split << ','
      << s.col_split << ',' << s.groups << ',' << s.group_size << ',' << s.batch() << ','
      << s.colluding << ',' << s.servers << ',' << r.threshold;
  for (const Rational* q : {&r.upload_a, &r.upload_b, &r.server_comm, &r.download}) {
    out << ',' << q->numerator() << ',' << q->denominator();
  }
  return out.str();
}

std::string to_csv(const std::vector<CostReport>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

std::string format_costs(const CostReport& r) {
  auto q = [](const Rational& v) {
    return v.denominator() == 1
               ? std::to_string(v.numerator())
               : std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
  };
  std::ostringstream out;
  out << "scheme=" << scheme_name(r.scheme) << " S=" << r.shape.servers
      << " R=" << r.threshold << " UA=" << q(r.upload_a) << " UB=" << q(r.upload_b)
      << " CC=" << q(r.server_comm) << " D=" << q(r.download) << "\n"
      << "  upload: " << r.upload_messages << " messages, "
      << r.upload_a_symbols << " + " << r.upload_b_symbols << " symbols\n"
      << "  server: " << r.server_messages << " messages, " << r.server_symbols
      << " symbols\n"
      << "  download: " << r.download_messages << " messages, " << r.download_symbols
      << " symbols\n";
  return out.str();
}

}  // namespace gcsa
