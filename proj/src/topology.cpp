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

#include "ftc/topology.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ftc/rng.hpp"

namespace ftc {

namespace {

void build_neighborhoods(Topology& g) {
  g.neighbors.assign(g.K, {});
  for (int k = 0; k < g.K; ++k) g.neighbors[k].push_back(k);
  for (const auto& [a, b] : g.edges) {
    g.neighbors[a].push_back(b);
    g.neighbors[b].push_back(a);
  }
  for (auto& nk : g.neighbors) std::sort(nk.begin(), nk.end());
}

bool is_connected(const Topology& g) {
  if (g.K <= 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kInfiniteDistance; });
}

void finalize(Topology& g) {
  std::sort(g.edges.begin(), g.edges.end());
  build_neighborhoods(g);
  if (!is_connected(g)) {
    throw std::invalid_argument("topology: graph is not connected");
  }
}

}  // namespace

bool Topology::has_edge(int k, int l) const {
  const auto& nk = neighbors[k];
  return k != l && std::binary_search(nk.begin(), nk.end(), l);
}

Topology hypercube(int dimension) {
  if (dimension < 1 || dimension > 16) {
    throw std::invalid_argument("hypercube: dimension must be in [1, 16]");
  }
  Topology g;
  g.K = 1 << dimension;
  for (int k = 0; k < g.K; ++k) {
    for (int b = 0; b < dimension; ++b) {
      const int l = k ^ (1 << b);
      if (k < l) g.edges.emplace_back(k, l);
    }
  }
  g.family = "hypercube(d=" + std::to_string(dimension) + ")";
  finalize(g);
  return g;
}

Topology barabasi_albert(int K, int m, std::uint64_t seed) {
  if (m < 1 || K <= m) {
    throw std::invalid_argument("barabasi_albert: need K > m >= 1");
  }
  Topology g;
  g.K = K;
  std::vector<int> degree(K, 0);
  // seed graph: clique on the first m nodes
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      g.edges.emplace_back(a, b);
      ++degree[a];
      ++degree[b];
    }
  }
  Rng rng(mix_keys(seed, 0x6261 /*"ba"*/));
  std::vector<int> chosen;
  for (int v = m; v < K; ++v) {
    chosen.clear();
    // each new node attaches to m distinct nodes, draw-by-draw with
    // probability proportional to current degree (uniform fallback when
    // every remaining candidate still has degree zero, e.g. m = 1)
    while (static_cast<int>(chosen.size()) < m) {
      double total = 0.0;
      for (int u = 0; u < v; ++u) {
        if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) {
          total += degree[u];
        }
      }
      int pick = -1;
      if (total > 0.0) {
        double r = rng.uniform() * total;
        for (int u = 0; u < v; ++u) {
          if (std::find(chosen.begin(), chosen.end(), u) != chosen.end())
            continue;
          r -= degree[u];
          if (r < 0.0) {
            pick = u;
            break;
          }
        }
        if (pick < 0) {  // guard against rounding at r == total
          for (int u = v - 1; u >= 0; --u) {
            if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) {
              pick = u;
              break;
            }
          }
        }
      } else {
        const int remaining = v - static_cast<int>(chosen.size());
        int idx = static_cast<int>(rng.uniform() * remaining);
        idx = std::min(idx, remaining - 1);
        for (int u = 0; u < v; ++u) {
          if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) {
            if (idx-- == 0) {
              pick = u;
              break;
            }
          }
        }
      }
      chosen.push_back(pick);
    }
    for (int u : chosen) {
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
      ++degree[u];
      ++degree[v];
    }
  }
  g.family = "barabasi_albert(K=" + std::to_string(K) +
             ",m=" + std::to_string(m) + ",seed=" + std::to_string(seed) + ")";
  finalize(g);
  return g;
}

Topology ring(int K) {
  if (K < 3) throw std::invalid_argument("ring: need K >= 3");
  Topology g;
  g.K = K;
  for (int k = 0; k + 1 < K; ++k) g.edges.emplace_back(k, k + 1);
  g.edges.emplace_back(0, K - 1);
  g.family = "ring(K=" + std::to_string(K) + ")";
  finalize(g);
  return g;
}

Topology make_topology(int K, std::vector<std::pair<int, int>> edges,
                       std::string family) {
  if (K < 1) throw std::invalid_argument("topology: K must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("topology: self-loop edge");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= K) throw std::invalid_argument("topology: edge out of range");
    if (!seen.insert({a, b}).second) {
      throw std::invalid_argument("topology: duplicate edge");
    }
  }
  Topology g;
  g.K = K;
  g.edges.assign(seen.begin(), seen.end());
  g.family = std::move(family);
  finalize(g);
  return g;
}

std::vector<int> bfs_distances(const Topology& g, int source) {
  std::vector<int> dist(g.K, kInfiniteDistance);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors[u]) {
      if (v != u && dist[v] == kInfiniteDistance) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

GraphMetrics graph_metrics(const Topology& g) {
  GraphMetrics m;
  m.degrees.resize(g.K);
  for (int k = 0; k < g.K; ++k) m.degrees[k] = g.degree(k);
  m.connected = true;
  int radius = -1, diameter = 0;
  for (int s = 0; s < g.K; ++s) {
    const auto dist = bfs_distances(g, s);
    int ecc = 0;
    for (int d : dist) {
      if (d == kInfiniteDistance) {
        m.connected = false;
        m.radius = kInfiniteDistance;
        m.diameter = kInfiniteDistance;
        return m;
      }
      ecc = std::max(ecc, d);
    }
    if (radius < 0 || ecc < radius) radius = ecc;
    diameter = std::max(diameter, ecc);
  }
  m.radius = radius;
  m.diameter = diameter;
  return m;
}

void save_graph(const Topology& g, std::ostream& out) {
  out << "K=" << g.K << "\n";
  for (const auto& [a, b] : g.edges) out << a << " " << b << "\n";
}

void save_graph(const Topology& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  save_graph(g, out);
}

Topology load_graph(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("K=", 0) != 0) {
    throw std::invalid_argument("graph file: expected 'K=<int>' header");
  }
  const int K = std::stoi(header.substr(2));
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a >> b)) {
      throw std::invalid_argument("graph file: malformed edge line: " + line);
    }
    edges.emplace_back(a, b);
  }
  return make_topology(K, std::move(edges), "custom");
}

Topology load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in);
}

}  // namespace ftc
