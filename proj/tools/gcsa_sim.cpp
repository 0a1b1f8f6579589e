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

// gcsa_sim: command-line front end for the simulator and cost model.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcsa/cost_model.hpp"
#include "gcsa/errors.hpp"
#include "gcsa/selftest.hpp"
#include "gcsa/simulator.hpp"

namespace {

struct ShapeFlags {
  std::optional<std::size_t> S, X, ell, Kc, p, m, n, lambda, kappa, mu;

  void attach(CLI::App* app) {
    app->add_option("-S,--S", S, "servers");
    app->add_option("-X,--X", X, "colluding servers tolerated");
    app->add_option("--ell", ell, "groups");
    app->add_option("--Kc", Kc, "instances per group");
    app->add_option("-p", p, "inner split");
    app->add_option("-m", m, "row split of A");
    app->add_option("-n", n, "column split of B");
    app->add_option("--lambda", lambda, "rows of A");
    app->add_option("--kappa", kappa, "columns of A");
    app->add_option("--mu", mu, "columns of B");
  }

  void apply(gcsa::SchemeShape& s) const {
    auto set = [](std::size_t& dst, const std::optional<std::size_t>& v) {
      if (v) dst = *v;
    };
    set(s.servers, S);
    set(s.colluding, X);
    set(s.groups, ell);
    set(s.group_size, Kc);
    set(s.inner_split, p);
    set(s.row_split, m);
    set(s.col_split, n);
    set(s.rows, lambda);
    set(s.inner, kappa);
    set(s.cols, mu);
  }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gcsa::ConfigError("cannot write " + path);
  out << text;
}

// Matrix dimensions default to one scalar per block.
void default_dims(gcsa::SchemeShape& s, const ShapeFlags& f) {
  if (!f.lambda) s.rows = s.row_split;
  if (!f.kappa) s.inner = s.inner_split;
  if (!f.mu) s.cols = s.col_split;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GCSA-NA secure batch matrix multiplication simulator"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run one simulation and print its report");
  std::string config_path, out_path, scheme_text, topo_kind, topo_path;
  std::vector<std::string> topology;
  std::optional<std::uint64_t> seed, modulus;
  std::optional<std::size_t> stragglers;
  ShapeFlags run_shape;
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--seed", seed, "protocol seed");
  run->add_option("--modulus", modulus, "prime field modulus");
  run->add_option("--scheme", scheme_text, "gcsa-na, ps or strassen-na");
  run->add_option("--stragglers", stragglers, "number of stragglers");
  run->add_option("--topology", topology, "complete, star, line or path-file PATH")
      ->expected(1, 2);
  run->add_option("--out", out_path, "write the trace as JSON");
  run_shape.attach(run);

  // sweep
  auto* sw = app.add_subcommand("sweep", "emit the theoretical cost sweep as CSV");
  std::string axis = "partition", sweep_out;
  gcsa::SweepSpec spec;
  sw->add_option("--axis", axis, "partition or batch")
      ->check(CLI::IsMember({"partition", "batch"}));
  sw->add_option("-X,--X", spec.colluding, "colluding servers tolerated");
  sw->add_option("--split", spec.split, "p = m = n on the batch axis");
  sw->add_option("--from", spec.from, "first axis value");
  sw->add_option("--to", spec.to, "last axis value");
  sw->add_option("--out", sweep_out, "CSV path");

  // costs
  auto* costs = app.add_subcommand("costs", "print theoretical costs");
  std::string cost_scheme = "gcsa-na";
  ShapeFlags cost_shape;
  costs->add_option("--scheme", cost_scheme, "gcsa-na or ps");
  cost_shape.attach(costs);

  auto* self = app.add_subcommand("selftest", "exhaustive small-field checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      gcsa::SimConfig c;
      if (!config_path.empty()) c = gcsa::load_config(config_path);
      run_shape.apply(c.shape);
      if (config_path.empty()) default_dims(c.shape, run_shape);
      if (seed) c.seed = *seed;
      if (modulus) c.modulus = *modulus;
      if (!scheme_text.empty()) c.scheme = gcsa::parse_scheme(scheme_text);
      if (stragglers) {
        c.stragglers.clear();
        c.straggler_count = *stragglers;
      }
      if (!topology.empty()) {
        const std::string& kind = topology[0];
        if (kind == "complete") {
          c.topology = gcsa::TopologyKind::kComplete;
        } else if (kind == "star") {
          c.topology = gcsa::TopologyKind::kStar;
        } else if (kind == "line") {
          c.topology = gcsa::TopologyKind::kLine;
        } else if (kind == "path-file" && topology.size() == 2) {
          c.topology = gcsa::TopologyKind::kFile;
          c.topology_path = topology[1];
        } else {
          throw gcsa::ConfigError("--topology expects complete, star, line or path-file PATH");
        }
      }
      const gcsa::SimResult r = gcsa::run_simulation(c);
      std::cout << gcsa::format_report(r);
      if (!out_path.empty()) write_output(out_path, r.trace.to_json() + "\n");
      return r.pass() ? 0 : 1;
    }
    if (*sw) {
      spec.axis = axis == "batch" ? gcsa::SweepAxis::kBatch : gcsa::SweepAxis::kPartition;
      write_output(sweep_out, gcsa::to_csv(gcsa::sweep(spec)));
      return 0;
    }
    if (*costs) {
      const gcsa::Scheme scheme = gcsa::parse_scheme(cost_scheme);
      gcsa::SchemeShape s;
      cost_shape.apply(s);
      default_dims(s, cost_shape);
      if (!cost_shape.S) {
        s.servers = scheme == gcsa::Scheme::kPs ? gcsa::ps_threshold(s) : gcsa::gcsa_threshold(s);
      }
      std::cout << gcsa::format_costs(gcsa::theoretical_costs(s, scheme));
      return 0;
    }
    if (*self) {
      bool ok = true;
      for (const auto& check : gcsa::run_selftest()) {
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << ": " << check.detail
                  << "\n";
        ok = ok && check.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const gcsa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
