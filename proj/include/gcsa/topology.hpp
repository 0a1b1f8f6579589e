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
#include <string>
#include <utility>
#include <vector>

namespace gcsa {

// Undirected inter-server graph on servers 0..S-1.
class Topology {
 public:
  Topology(std::string name, std::size_t servers,
           std::vector<std::pair<std::size_t, std::size_t>> edges);

  static Topology complete(std::size_t servers);
  static Topology star(std::size_t servers);  // hub is server 0
  static Topology line(std::size_t servers);
  // One edge per line as two 1-based server ids; '#' starts a comment.
  // Throws ConfigError on malformed input.
  static Topology from_file(const std::string& path, std::size_t servers);

  const std::string& name() const { return name_; }
  std::size_t servers() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool connected() const;

  // BFS tree from root: route[s] lists the servers from root to s inclusive.
  // Throws ConfigError if some server is unreachable.
  std::vector<std::vector<std::size_t>> routes_from(std::size_t root) const;

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edges_ = 0;
};

}  // namespace gcsa
