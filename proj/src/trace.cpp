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

#include "gcsa/trace.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

#include "gcsa/errors.hpp"

namespace gcsa {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kGcsaNa:
      return "gcsa-na";
    case Scheme::kPs:
      return "ps";
    case Scheme::kStrassenNa:
      return "strassen-na";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::kGcsaNa, Scheme::kPs, Scheme::kStrassenNa}) {
    if (scheme_name(s) == name) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::kOfflineNoise:
      return "offline-noise";
    case Phase::kSharing:
      return "sharing";
    case Phase::kExchange:
      return "exchange";
    case Phase::kAnswer:
      return "answer";
  }
  return "?";
}

std::string Endpoint::label() const {
  switch (kind) {
    case Kind::kSourceA:
      return "source-A";
    case Kind::kSourceB:
      return "source-B";
    case Kind::kMaster:
      return "master";
    case Kind::kServer:
      break;
  }
  return "server-" + std::to_string(server + 1);
}

std::size_t TraceReport::count(Phase phase) const {
  return static_cast<std::size_t>(std::count_if(
      log.begin(), log.end(), [phase](const Message& m) { return m.phase == phase; }));
}

bool TraceReport::offline_before_sharing() const {
  bool seen_sharing = false;
  for (const auto& m : log) {
    if (m.phase == Phase::kSharing) seen_sharing = true;
    if (m.phase == Phase::kOfflineNoise && seen_sharing) return false;
  }
  return true;
}

std::string TraceReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["scheme"] = scheme_name(scheme);
  j["S"] = shape.servers;
  j["X"] = shape.colluding;
  j["ell"] = shape.groups;
  j["Kc"] = shape.group_size;
  j["p"] = shape.inner_split;
  j["m"] = shape.row_split;
  j["n"] = shape.col_split;
  j["lambda"] = shape.rows;
  j["kappa"] = shape.inner;
  j["mu"] = shape.cols;
  j["modulus"] = modulus;
  j["seed"] = seed;
  j["topology"] = topology;
  j["threshold"] = threshold;
  auto one_based = [](const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out;
    for (auto s : v) out.push_back(s + 1);
    return out;
  };
  j["stragglers"] = one_based(stragglers);
  j["decoded_from"] = one_based(decoded_from);
  j["complete"] = complete;
  j["verified"] = verified;
  j["ops"] = {{"noise", ops.noise},
              {"sharing", ops.sharing},
              {"compute", ops.compute},
              {"exchange", ops.exchange},
              {"decode", ops.decode}};
  ordered_json entries = ordered_json::array();
  for (const auto& m : log) {
    entries.push_back({{"phase", phase_name(m.phase)},
                       {"from", m.from.label()},
                       {"to", m.to.label()},
                       {"symbols", m.symbols},
                       {"hops", m.hops},
                       {"instance", m.instance}});
  }
  j["log"] = std::move(entries);
  return j.dump(2);
}

}  // namespace gcsa
