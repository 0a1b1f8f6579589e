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

#include "gcsa/topology.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "gcsa/errors.hpp"

namespace gcsa {

Topology::Topology(std::string name, std::size_t servers,
                   std::vector<std::pair<std::size_t, std::size_t>> edges)
    : name_(std::move(name)), adj_(servers) {
  if (servers == 0) throw ConfigError("topology needs at least one server");
  for (auto [u, v] : edges) {
    if (u >= servers || v >= servers) {
      throw ConfigError("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                        " names a server outside 1.." + std::to_string(servers));
    }
    if (u == v) continue;
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) continue;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edges_;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Topology Topology::complete(std::size_t servers) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < servers; ++u) {
    for (std::size_t v = u + 1; v < servers; ++v) e.emplace_back(u, v);
  }
  return Topology("complete", servers, std::move(e));
}

Topology Topology::star(std::size_t servers) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 1; v < servers; ++v) e.emplace_back(0, v);
  return Topology("star", servers, std::move(e));
}

Topology Topology::line(std::size_t servers) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 1; v < servers; ++v) e.emplace_back(v - 1, v);
  return Topology("line", servers, std::move(e));
}

Topology Topology::from_file(const std::string& path, std::size_t servers) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open topology file " + path);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest) || u < 1 || v < 1) {
      throw ConfigError(path + ":" + std::to_string(no) + ": expected two server ids");
    }
    e.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  return Topology("file:" + path, servers, std::move(e));
}

bool Topology::connected() const {
  std::vector<bool> seen(adj_.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (auto v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
    }
  }
  return count == adj_.size();
}

std::vector<std::vector<std::size_t>> Topology::routes_from(std::size_t root) const {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(adj_.size(), kNone);
  parent.at(root) = root;
  std::queue<std::size_t> q;
  q.push(root);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (auto v : adj_[u]) {
      if (parent[v] == kNone) {
        parent[v] = u;
        q.push(v);
      }
    }
  }
  std::vector<std::vector<std::size_t>> routes(adj_.size());
  for (std::size_t s = 0; s < adj_.size(); ++s) {
    if (parent[s] == kNone) {
      throw ConfigError("topology '" + name_ + "' is not connected: server " +
                        std::to_string(s + 1) + " unreachable");
    }
    for (std::size_t v = s; v != root; v = parent[v]) routes[s].push_back(v);
    routes[s].push_back(root);
    std::reverse(routes[s].begin(), routes[s].end());
  }
  return routes;
}

}  // namespace gcsa
