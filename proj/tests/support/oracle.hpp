#pragma once

// Brute-force reference implementations used only by tests. The distance
// oracle enumerates vertex-simple strictly-increasing temporal paths and
// never shares code with the engine's label-scan DP.

#include <vector>

#include "dncg/distances.hpp"
#include "dncg/temporal_graph.hpp"

namespace test_oracle {

using dncg::DistanceSemantics;
using dncg::ExtDistance;
using dncg::TemporalGraph;
using dncg::TimeLabel;

struct PathVisitor {
  // label sequence of each discovered u->v path
  std::vector<std::vector<TimeLabel>> paths;
};

inline void enumerate_paths(const TemporalGraph& g, int u, int v, PathVisitor& out) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, TimeLabel>>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    for (TimeLabel t : e.labels) {
      adj[e.u].emplace_back(e.v, t);
      adj[e.v].emplace_back(e.u, t);
    }
  }
  std::vector<bool> visited(n, false);
  std::vector<TimeLabel> labels;
  visited[u] = true;
  auto dfs = [&](auto&& self, int at, TimeLabel last) -> void {
    for (auto [w, t] : adj[at]) {
      if (t <= last || visited[w]) continue;
      labels.push_back(t);
      if (w == v) {
        out.paths.push_back(labels);
      } else {
        visited[w] = true;
        self(self, w, t);
        visited[w] = false;
      }
      labels.pop_back();
    }
  };
  if (u != v) dfs(dfs, u, 0);
}

inline ExtDistance distance(const TemporalGraph& g, int u, int v, DistanceSemantics sem) {
  if (u == v) return ExtDistance::of(0);
  PathVisitor vis;
  enumerate_paths(g, u, v, vis);
  if (vis.paths.empty()) return ExtDistance::infinite();
  long long best = -1;
  for (const auto& p : vis.paths) {
    long long value = 0;
    switch (sem) {
      case DistanceSemantics::Shortest: value = static_cast<long long>(p.size()); break;
      case DistanceSemantics::Foremost: value = p.back(); break;
      case DistanceSemantics::Fastest: value = static_cast<long long>(p.back()) - p.front(); break;
    }
    if (best < 0 || value < best) best = value;
  }
  return ExtDistance::of(best);
}

}  // namespace test_oracle
