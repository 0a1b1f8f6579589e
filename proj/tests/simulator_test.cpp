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

#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "gcsa/cost_model.hpp"
#include "gcsa/errors.hpp"
#include "gcsa/simulator.hpp"
#include "gcsa/topology.hpp"

namespace gcsa {
namespace {

SimConfig toy_config() {
  SimConfig c;
  c.shape = SchemeShape{11, 1, 1, 2, 2, 1, 1, 2, 2, 2};
  c.modulus = 13;
  c.seed = 5;
  return c;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(TopologyTest, Builders) {
  EXPECT_EQ(Topology::complete(5).edge_count(), 10u);
  EXPECT_EQ(Topology::star(5).edge_count(), 4u);
  EXPECT_EQ(Topology::line(5).edge_count(), 4u);
  EXPECT_TRUE(Topology::line(5).connected());
  EXPECT_TRUE(Topology::complete(1).connected());
  const auto routes = Topology::line(4).routes_from(0);
  EXPECT_EQ(routes[3], (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(Topology::star(4).routes_from(0)[3], (std::vector<std::size_t>{0, 3}));
}

TEST(TopologyTest, FromFile) {
  const auto ok = write_temp("ring.txt", "# ring\n1 2\n2 3\n3 4 # closing soon\n4 1\n");
  const Topology t = Topology::from_file(ok, 4);
  EXPECT_EQ(t.edge_count(), 4u);
  EXPECT_TRUE(t.connected());

  const auto split = write_temp("split.txt", "1 2\n3 4\n");
  const Topology d = Topology::from_file(split, 4);
  EXPECT_FALSE(d.connected());
  EXPECT_THROW(d.routes_from(0), ConfigError);

  EXPECT_THROW(Topology::from_file(write_temp("bad.txt", "1 x\n"), 4), ConfigError);
  EXPECT_THROW(Topology::from_file(write_temp("far.txt", "1 9\n"), 4), ConfigError);
  EXPECT_THROW(Topology::from_file("/nonexistent/edges", 4), ConfigError);
}

TEST(SimulatorTest, ScalarStar) {
  SimConfig c;
  c.shape = SchemeShape{3, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  c.modulus = 5;
  c.topology = TopologyKind::kStar;
  const SimResult r = run_simulation(c);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.trace.count(Phase::kOfflineNoise), 2u);
}

TEST(SimulatorTest, ToyWithStragglers) {
  SimConfig c = toy_config();
  c.straggler_count = 2;
  const SimResult r = run_simulation(c);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.trace.stragglers.size(), 2u);
  EXPECT_EQ(r.trace.decoded_from.size(), 9u);
  c.straggler_count = 3;
  EXPECT_THROW(run_simulation(c), NotEnoughAnswers);
}

TEST(SimulatorTest, ExplicitStragglers) {
  SimConfig c = toy_config();
  c.stragglers = {0, 10};
  const SimResult r = run_simulation(c);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.trace.decoded_from.front(), 1u);
  c.stragglers = {11};
  EXPECT_THROW(run_simulation(c), ConfigError);
}

TEST(SimulatorTest, PsRejectsStragglersAndSparseGraphs) {
  SimConfig c;
  c.scheme = Scheme::kPs;
  c.shape = SchemeShape{5, 1, 1, 1, 2, 1, 1, 2, 2, 2};
  EXPECT_TRUE(run_simulation(c).pass());
  c.straggler_count = 1;
  EXPECT_THROW(run_simulation(c), MissingServer);
  c.straggler_count = 0;
  c.topology = TopologyKind::kLine;
  EXPECT_THROW(run_simulation(c), ConfigError);
}

TEST(SimulatorTest, StrassenScheme) {
  SimConfig c;
  c.scheme = Scheme::kStrassenNa;
  c.shape = SchemeShape{17, 1, 1, 1, 2, 2, 2, 4, 4, 4};
  c.modulus = 101;
  c.straggler_count = 2;
  c.topology = TopologyKind::kLine;
  const SimResult r = run_simulation(c);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.trace.log.front().hops, 1u);
  EXPECT_EQ(r.trace.count(Phase::kOfflineNoise), 16u);
}

TEST(SimulatorTest, Deterministic) {
  SimConfig c = toy_config();
  c.straggler_count = 2;
  EXPECT_EQ(run_simulation(c).trace.to_json(), run_simulation(c).trace.to_json());
  SimConfig other = c;
  other.seed = 6;
  EXPECT_NE(run_simulation(c).trace.to_json(), run_simulation(other).trace.to_json());
}

TEST(SimulatorTest, TopologyIndependence) {
  SimConfig c = toy_config();
  c.straggler_count = 1;
  c.topology = TopologyKind::kComplete;
  const SimResult base = run_simulation(c);
  std::size_t hops_complete = 0;
  for (const auto& m : base.trace.log) hops_complete += m.hops;
  for (TopologyKind k : {TopologyKind::kStar, TopologyKind::kLine}) {
    c.topology = k;
    const SimResult r = run_simulation(c);
    EXPECT_EQ(r.decoded, base.decoded);
    EXPECT_EQ(measured_costs(r.trace), measured_costs(base.trace));
    EXPECT_TRUE(r.trace.offline_before_sharing());
    if (k == TopologyKind::kLine) {
      std::size_t hops = 0;
      for (const auto& m : r.trace.log) hops += m.hops;
      EXPECT_GT(hops, hops_complete);
    }
  }
}

TEST(SimulatorTest, RandomPoints) {
  SimConfig c;
  c.shape = SchemeShape{12, 2, 2, 2, 1, 1, 1, 3, 3, 3};
  c.modulus = 65537;
  c.points = PointPolicy::kRandom;
  EXPECT_TRUE(run_simulation(c).pass());
}

TEST(ConfigTest, ParsesKeys) {
  const SimConfig c = parse_config(R"({
    "scheme": "gcsa-na", "S": 11, "X": 1, "ell": 1, "Kc": 2, "p": 2, "m": 1, "n": 1,
    "lambda": 4, "kappa": 4, "mu": 4, "modulus": 13, "seed": 9,
    "stragglers": [2, 5], "topology": "star", "points": "random"
  })");
  EXPECT_EQ(c.shape, (SchemeShape{11, 1, 1, 2, 2, 1, 1, 4, 4, 4}));
  EXPECT_EQ(c.modulus, 13u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.stragglers, (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(c.topology, TopologyKind::kStar);
  EXPECT_EQ(c.points, PointPolicy::kRandom);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config("[1]"), ConfigError);
  EXPECT_THROW(parse_config(R"({"servers": 3})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"S": "three"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"scheme": "bgw"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"stragglers": [0]})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"topology": "path-file"})"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(ConfigTest, FileTopologyRun) {
  const auto edges = write_temp("toy_edges.txt", "1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n1 11\n");
  const auto cfg = write_temp("toy.json", R"({"S": 11, "Kc": 2, "p": 2, "lambda": 2, "kappa": 2,
    "mu": 2, "modulus": 13, "topology": "path-file", "topology_path": ")" + edges + R"("})");
  const SimResult r = run_simulation(load_config(cfg));
  EXPECT_TRUE(r.pass());

  const auto gap = write_temp("gap_edges.txt", "1 2\n");
  SimConfig c = toy_config();
  c.topology = TopologyKind::kFile;
  c.topology_path = gap;
  EXPECT_THROW(run_simulation(c), ConfigError);
}

}  // namespace
}  // namespace gcsa
