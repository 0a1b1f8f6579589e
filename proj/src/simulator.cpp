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

#include "gcsa/simulator.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "gcsa/cost_model.hpp"
#include "gcsa/errors.hpp"
#include "gcsa/ps_baseline.hpp"
#include "gcsa/rng.hpp"
#include "gcsa/strassen_na.hpp"

namespace gcsa {

namespace {

using nlohmann::json;

template <typename T>
void read_key(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

std::vector<std::size_t> pick_stragglers(const SimConfig& c) {
  const std::size_t S = c.shape.servers;
  if (!c.stragglers.empty()) {
    std::vector<std::size_t> out = c.stragglers;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      throw ConfigError("duplicate straggler id");
    }
    if (out.back() >= S) throw ConfigError("straggler id outside 1..S");
    return out;
  }
  if (c.straggler_count > S) throw ConfigError("more stragglers than servers");
  std::vector<std::size_t> ids(S);
  std::iota(ids.begin(), ids.end(), 0);
  Rng rng(c.seed, streams::kStragglers);
  for (std::size_t i = 0; i < c.straggler_count; ++i) {
    std::swap(ids[i], ids[i + rng.below(S - i)]);
  }
  ids.resize(c.straggler_count);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<FieldMatrix> random_batch(const PrimeField& f, std::size_t count,
                                      std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<FieldMatrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(FieldMatrix::random(f, rows, cols, rng));
  return out;
}

void init_trace(TraceReport& t, const SimConfig& c, const Topology& topo) {
  t.scheme = c.scheme;
  t.shape = c.shape;
  t.modulus = c.modulus;
  t.seed = c.seed;
  t.topology = topo.name();
}

SimResult run_gcsa(const SimConfig& c, const Topology& topo,
                   const std::vector<std::size_t>& stragglers) {
  const PrimeField f(c.modulus);
  const SchemeParams params = derive_params(c.shape, f);
  const SchemeShape& sh = c.shape;
  const std::size_t S = sh.servers, L = sh.batch();
  const EvalPoints points = choose_points(f, S, L, c.points, c.seed);

  SimResult res;
  TraceReport& t = res.trace;
  init_trace(t, c, topo);
  t.threshold = params.threshold;
  t.stragglers = stragglers;

  // Phase 0: server 1 draws the noise and routes every other server its share.
  const auto routes = topo.routes_from(0);
  {
    OpCountScope ops;
    Rng rng(c.seed, streams::kServer);
    const NoiseBundle noise = gen_server_noise(params, rng);
    for (std::size_t s = 0; s < S; ++s) {
      res.noise_shares.push_back(noise_share(noise, params, points, s));
    }
    t.ops.noise = ops.count();
  }
  const std::uint64_t c_block = params.a_block_rows() * params.b_block_cols();
  for (std::size_t s = 1; s < S; ++s) {
    t.record(Phase::kOfflineNoise, Endpoint::node(0), Endpoint::node(s), c_block,
             routes[s].size() - 1);
  }

  // Phase 1: sources draw inputs and upload shares.
  const std::uint64_t data_seed = c.data_seed.value_or(c.seed);
  Rng data_a(data_seed, streams::kDataA), data_b(data_seed, streams::kDataB);
  const auto a_batch = random_batch(f, L, sh.rows, sh.inner, data_a);
  const auto b_batch = random_batch(f, L, sh.inner, sh.cols, data_b);
  ShareBundle shares;
  {
    OpCountScope ops;
    Rng rng_a(c.seed, streams::kSourceA), rng_b(c.seed, streams::kSourceB);
    const SourceNoise sn = draw_source_noise(params, rng_a, rng_b);
    shares = make_shares(params, points, a_batch, b_batch, sn);
    t.ops.sharing = ops.count();
  }
  const std::uint64_t a_syms = sh.groups * params.a_block_rows() * params.a_block_cols();
  const std::uint64_t b_syms = sh.groups * params.a_block_cols() * params.b_block_cols();
  for (std::size_t s = 0; s < S; ++s) {
    t.record(Phase::kSharing, Endpoint::source_a(), Endpoint::node(s), a_syms);
  }
  for (std::size_t s = 0; s < S; ++s) {
    t.record(Phase::kSharing, Endpoint::source_b(), Endpoint::node(s), b_syms);
  }

  // Phase 2: responsive servers answer.
  std::vector<Answer> answers(S);
  {
    OpCountScope ops;
    for (std::size_t s = 0; s < S; ++s) {
      answers[s].server = s;
      if (!std::binary_search(stragglers.begin(), stragglers.end(), s)) {
        answers[s].value = server_answer(shares[s], res.noise_shares[s]);
      }
    }
    t.ops.compute = ops.count();
  }

  // Phase 3: the master downloads the first R answers and decodes.
  DecodeResult dec;
  {
    OpCountScope ops;
    dec = reconstruct(answers, params, points);
    t.ops.decode = ops.count();
  }
  for (auto s : dec.used_servers) {
    t.record(Phase::kAnswer, Endpoint::node(s), Endpoint::master(), c_block);
  }
  t.decoded_from = dec.used_servers;
  t.complete = true;

  res.decoded = std::move(dec.products);
  for (std::size_t g = 0; g < L; ++g) res.expected.push_back(mat_mul(a_batch[g], b_batch[g]));
  t.verified = res.decoded == res.expected;
  return res;
}

SimResult run_ps(const SimConfig& c, const Topology& topo,
                 const std::vector<std::size_t>& stragglers) {
  if (c.topology != TopologyKind::kComplete) {
    throw ConfigError("polynomial sharing needs a complete inter-server graph");
  }
  const PrimeField f(c.modulus);
  const SchemeShape& sh = c.shape;
  const ps::PsInstance inst = ps::make_instance(sh, f);
  const std::size_t S = sh.servers, L = sh.batch(), X = sh.colluding;

  SimResult res;
  TraceReport& t = res.trace;
  init_trace(t, c, topo);
  t.threshold = S;
  t.stragglers = stragglers;

  const std::uint64_t data_seed = c.data_seed.value_or(c.seed);
  Rng data_a(data_seed, streams::kDataA), data_b(data_seed, streams::kDataB);
  Rng rng_a(c.seed, streams::kSourceA), rng_b(c.seed, streams::kSourceB);
  Rng rng_s(c.seed, streams::kServer);
  const std::size_t bk = sh.inner / sh.inner_split;

  for (std::size_t rep = 0; rep < L; ++rep) {
    const FieldMatrix a = FieldMatrix::random(f, sh.rows, sh.inner, data_a);
    const FieldMatrix b = FieldMatrix::random(f, sh.inner, sh.cols, data_b);
    const auto za = random_batch(f, X, sh.rows, bk, rng_a);
    const auto zb = random_batch(f, X, bk, sh.cols, rng_b);

    std::vector<ps::PsShare> shares;
    {
      OpCountScope ops;
      for (std::size_t s = 0; s < S; ++s) shares.push_back(ps::ps_share(inst, a, b, za, zb, s));
      t.ops.sharing += ops.count();
    }
    for (std::size_t s = 0; s < S; ++s) {
      t.record(Phase::kSharing, Endpoint::source_a(), Endpoint::node(s), sh.rows * bk, 1, rep);
    }
    for (std::size_t s = 0; s < S; ++s) {
      t.record(Phase::kSharing, Endpoint::source_b(), Endpoint::node(s), bk * sh.cols, 1, rep);
    }

    std::vector<std::optional<FieldMatrix>> local(S);
    std::vector<std::vector<FieldMatrix>> noise;
    {
      OpCountScope ops;
      for (std::size_t s = 0; s < S; ++s) {
        if (!std::binary_search(stragglers.begin(), stragglers.end(), s)) {
          local[s] = mat_mul(shares[s].a, shares[s].b);
        }
        noise.push_back(random_batch(f, X, sh.rows, sh.cols, rng_s));
      }
      t.ops.compute += ops.count();
    }
    ps::PsRound round;
    {
      OpCountScope ops;
      round = ps::ps_round(inst, local, noise);
      t.ops.exchange += ops.count();
    }
    for (std::size_t from = 0; from < S; ++from) {
      for (std::size_t to = 0; to < S; ++to) {
        if (from != to) {
          t.record(Phase::kExchange, Endpoint::node(from), Endpoint::node(to),
                   sh.rows * sh.cols, 1, rep);
        }
      }
    }

    std::vector<Answer> answers;
    for (std::size_t s = 0; s <= X; ++s) answers.push_back(Answer{s, round.aggregates[s]});
    {
      OpCountScope ops;
      res.decoded.push_back(ps::ps_decode(inst, answers));
      t.ops.decode += ops.count();
    }
    for (const auto& ans : answers) {
      t.record(Phase::kAnswer, Endpoint::node(ans.server), Endpoint::master(),
               sh.rows * sh.cols, 1, rep);
      if (rep == 0) t.decoded_from.push_back(ans.server);
    }
    res.expected.push_back(mat_mul(a, b));
  }
  t.complete = true;
  t.verified = res.decoded == res.expected;
  return res;
}

SimResult run_strassen(const SimConfig& c, const Topology& topo,
                       const std::vector<std::size_t>& stragglers) {
  const SchemeShape& sh = c.shape;
  if (sh.colluding != 1 || sh.batch() != 1) {
    throw ConfigError("the Strassen variant runs with X = 1 and a single product");
  }
  const PrimeField f(c.modulus);
  const std::uint64_t data_seed = c.data_seed.value_or(c.seed);
  Rng data_a(data_seed, streams::kDataA), data_b(data_seed, streams::kDataB);
  const FieldMatrix a = FieldMatrix::random(f, sh.rows, sh.inner, data_a);
  const FieldMatrix b = FieldMatrix::random(f, sh.inner, sh.cols, data_b);

  auto run = strassen::strassen_na_run(a, b, sh.servers, c.seed, stragglers);
  SimResult res;
  res.trace = std::move(run.trace);
  res.trace.topology = topo.name();
  // The run delivers offline noise directly; apply the topology's routes.
  const auto routes = topo.routes_from(0);
  for (auto& m : res.trace.log) {
    if (m.phase == Phase::kOfflineNoise) m.hops = routes[m.to.server].size() - 1;
  }
  res.decoded.push_back(std::move(run.product));
  res.expected.push_back(mat_mul(a, b));
  res.noise_shares = std::move(run.noise_shares);
  return res;
}

}  // namespace

SimConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const char* const kKeys[] = {
      "scheme", "S",  "X",    "ell",   "Kc",      "p",         "m",
      "n",      "lambda", "kappa", "mu", "modulus", "seed",      "data_seed",
      "stragglers", "straggler_count", "topology", "topology_path", "points"};
  for (const auto& item : j.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) {
          return item.key() == k;
        }) == std::end(kKeys)) {
      throw ConfigError("unknown config key '" + item.key() + "'");
    }
  }

  SimConfig c;
  std::string text;
  if (j.contains("scheme")) {
    read_key(j, "scheme", text);
    c.scheme = parse_scheme(text);
  }
  SchemeShape& s = c.shape;
  read_key(j, "S", s.servers);
  read_key(j, "X", s.colluding);
  read_key(j, "ell", s.groups);
  read_key(j, "Kc", s.group_size);
  read_key(j, "p", s.inner_split);
  read_key(j, "m", s.row_split);
  read_key(j, "n", s.col_split);
  read_key(j, "lambda", s.rows);
  read_key(j, "kappa", s.inner);
  read_key(j, "mu", s.cols);
  read_key(j, "modulus", c.modulus);
  read_key(j, "seed", c.seed);
  if (j.contains("data_seed")) {
    std::uint64_t d = 0;
    read_key(j, "data_seed", d);
    c.data_seed = d;
  }
  std::vector<std::size_t> ids;
  read_key(j, "stragglers", ids);
  for (auto id : ids) {
    if (id == 0) throw ConfigError("straggler ids are 1-based");
    c.stragglers.push_back(id - 1);
  }
  read_key(j, "straggler_count", c.straggler_count);
  if (j.contains("topology")) {
    read_key(j, "topology", text);
    if (text == "complete") {
      c.topology = TopologyKind::kComplete;
    } else if (text == "star") {
      c.topology = TopologyKind::kStar;
    } else if (text == "line") {
      c.topology = TopologyKind::kLine;
    } else if (text == "path-file") {
      c.topology = TopologyKind::kFile;
    } else {
      throw ConfigError("unknown topology '" + text + "'");
    }
  }
  read_key(j, "topology_path", c.topology_path);
  if (c.topology == TopologyKind::kFile && c.topology_path.empty()) {
    throw ConfigError("topology path-file needs topology_path");
  }
  if (j.contains("points")) {
    read_key(j, "points", text);
    if (text == "sequential") {
      c.points = PointPolicy::kSequential;
    } else if (text == "random") {
      c.points = PointPolicy::kRandom;
    } else {
      throw ConfigError("unknown point policy '" + text + "'");
    }
  }
  return c;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Topology make_topology(const SimConfig& c) {
  const std::size_t S = c.shape.servers;
  switch (c.topology) {
    case TopologyKind::kComplete:
      return Topology::complete(S);
    case TopologyKind::kStar:
      return Topology::star(S);
    case TopologyKind::kLine:
      return Topology::line(S);
    case TopologyKind::kFile:
      break;
  }
  return Topology::from_file(c.topology_path, S);
}

SimResult run_simulation(const SimConfig& config) {
  const Topology topo = make_topology(config);
  if (!topo.connected()) {
    throw ConfigError("topology '" + topo.name() + "' is not connected");
  }
  const auto stragglers = pick_stragglers(config);
  switch (config.scheme) {
    case Scheme::kGcsaNa:
      return run_gcsa(config, topo, stragglers);
    case Scheme::kPs:
      return run_ps(config, topo, stragglers);
    case Scheme::kStrassenNa:
      break;
  }
  return run_strassen(config, topo, stragglers);
}

std::string format_report(const SimResult& r) {
  const TraceReport& t = r.trace;
  std::ostringstream out;
  out << "scheme " << scheme_name(t.scheme) << ", S=" << t.shape.servers
      << " X=" << t.shape.colluding << " ell=" << t.shape.groups << " Kc=" << t.shape.group_size
      << " p=" << t.shape.inner_split << " m=" << t.shape.row_split << " n=" << t.shape.col_split
      << ", q=" << t.modulus << ", seed " << t.seed << ", topology " << t.topology << "\n";
  out << "threshold R=" << t.threshold << ", stragglers:";
  if (t.stragglers.empty()) out << " none";
  for (auto s : t.stragglers) out << ' ' << s + 1;
  out << "\ndecoded from:";
  for (auto s : t.decoded_from) out << ' ' << s + 1;
  out << "\n";
  for (Phase p : {Phase::kOfflineNoise, Phase::kSharing, Phase::kExchange, Phase::kAnswer}) {
    std::uint64_t symbols = 0;
    std::size_t hops = 0;
    for (const auto& m : t.log) {
      if (m.phase == p) {
        symbols += m.symbols;
        hops += m.hops;
      }
    }
    out << "  " << phase_name(p) << ": " << t.count(p) << " messages, " << symbols
        << " symbols, " << hops << " link transfers\n";
  }
  out << "field ops: noise " << t.ops.noise << ", sharing " << t.ops.sharing << ", compute "
      << t.ops.compute << ", exchange " << t.ops.exchange << ", decode " << t.ops.decode
      << "\n";
  if (t.complete) {
    out << "measured: " << format_costs(measured_costs(t));
  }
  out << "verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace gcsa
