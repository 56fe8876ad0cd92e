#pragma once

#include <set>
#include <utility>

#include "maxcut/graph.hpp"
#include "maxcut/rng.hpp"

namespace maxcut::testutil {

// Connected random graph: a random spanning tree plus extra edges, integer
// weights in [1, wmax].
inline Graph random_connected_graph(SplitMix64& rng, int n,
                                    double extra_edge_prob = 0.3,
                                    int wmax = 5) {
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.below(v));
    edges.push_back({u, v, 1.0 + static_cast<double>(rng.below(wmax))});
    seen.insert({u, v});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!seen.count({u, v}) && rng.uniform() < extra_edge_prob)
        edges.push_back({u, v, 1.0 + static_cast<double>(rng.below(wmax))});
  return Graph::from_edges(n, std::move(edges));
}

inline Vector random_pm1(SplitMix64& rng, int n) {
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.coin() ? 1.0 : -1.0;
  return x;
}

inline Graph path3() {
  return Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
}

inline Graph triangle() {
  return Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

inline Graph cycle4() {
  return Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
}

inline Graph single_edge(double w = 1.0) {
  return Graph::from_edges(2, {{0, 1, w}});
}

}  // namespace maxcut::testutil
