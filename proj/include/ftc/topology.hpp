// Copyright 2026 The ftc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTC_TOPOLOGY_HPP_
#define FTC_TOPOLOGY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ftc {

// Undirected, connected graph over agents 0..K-1. Neighborhoods are
// self-inclusive: N_k = {l : (k,l) in E} + {k}, so the diagonal of a
// mixing matrix is always on the allowed support.
struct Topology {
  int K = 0;
  std::vector<std::pair<int, int>> edges;   // k < l, sorted, no duplicates
  std::vector<std::vector<int>> neighbors;  // ascending, includes self
  std::string family = "custom";            // generator tag, e.g. "hypercube(d=6)"

  int degree(int k) const { return static_cast<int>(neighbors[k].size()) - 1; }
  bool has_edge(int k, int l) const;
};

// Generators. All produced graphs are connected; invalid parameters throw
// std::invalid_argument.
Topology hypercube(int dimension);                              // K = 2^d
Topology barabasi_albert(int K, int m, std::uint64_t seed);     // clique seed
Topology ring(int K);                                           // cycle C_K

// Builds a Topology from raw parts, validating the invariants (no
// self-loops, no duplicates, connectivity).
Topology make_topology(int K, std::vector<std::pair<int, int>> edges,
                       std::string family = "custom");

struct GraphMetrics {
  int radius = 0;    // kInfiniteDistance when disconnected
  int diameter = 0;  // likewise
  std::vector<int> degrees;
  bool connected = false;
};

inline constexpr int kInfiniteDistance = -1;

GraphMetrics graph_metrics(const Topology& g);

// BFS distances from one source; kInfiniteDistance marks unreachable nodes.
std::vector<int> bfs_distances(const Topology& g, int source);

// Graph file format: header "K=<int>", then one "k l" pair per line
// (0-indexed, k < l).
void save_graph(const Topology& g, std::ostream& out);
void save_graph(const Topology& g, const std::string& path);
Topology load_graph(std::istream& in);
Topology load_graph(const std::string& path);

}  // namespace ftc

#endif  // FTC_TOPOLOGY_HPP_
