#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dncg/extended.hpp"
#include "dncg/temporal_graph.hpp"

namespace dncg {

enum class DistanceSemantics { Shortest, Foremost, Fastest };

inline const char* to_string(DistanceSemantics s) {
  switch (s) {
    case DistanceSemantics::Shortest: return "shortest";
    case DistanceSemantics::Foremost: return "foremost";
    case DistanceSemantics::Fastest: return "fastest";
  }
  return "?";
}

namespace detail {

struct Event {
  TimeLabel t;
  int u, v;
};

// Flattened (label, edge) instances sorted by label. Loops are dropped: a
// temporal path never repeats a vertex, so a loop can never be used.
inline std::vector<Event> event_list(const TemporalGraph& g) {
  std::vector<Event> ev;
  ev.reserve(g.label_count());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    for (TimeLabel t : e.labels) ev.push_back({t, e.u, e.v});
  }
  std::sort(ev.begin(), ev.end(),
            [](const Event& a, const Event& b) { return a.t < b.t; });
  return ev;
}

constexpr std::int64_t kUnreached = -1;

// Minimum hop counts over strictly increasing temporal walks from src.
// Walks and paths have the same optima: removing the loop between two visits
// of a vertex keeps labels strictly increasing. Events with equal labels
// cannot chain, so each equal-label batch relaxes from pre-batch values.
inline void shortest_from(const std::vector<Event>& ev, int n, int src,
                          std::vector<std::int64_t>& hops,
                          std::vector<std::pair<int, std::int64_t>>& batch) {
  hops.assign(n, kUnreached);
  hops[src] = 0;
  std::size_t i = 0;
  while (i < ev.size()) {
    const TimeLabel t = ev[i].t;
    batch.clear();
    for (; i < ev.size() && ev[i].t == t; ++i) {
      const auto& e = ev[i];
      if (hops[e.u] >= 0) batch.emplace_back(e.v, hops[e.u] + 1);
      if (hops[e.v] >= 0) batch.emplace_back(e.u, hops[e.v] + 1);
    }
    for (auto [w, h] : batch)
      if (hops[w] < 0 || h < hops[w]) hops[w] = h;
  }
}

// Earliest arrival labels; the first edge of a walk must carry a label
// >= min_start (pass 1 for unrestricted foremost). Within an equal-label
// batch an update sets arrival == t, which can never satisfy the strict
// "arrived before t" condition, so a single ascending pass is exact.
inline void earliest_from(const std::vector<Event>& ev, int n, int src,
                          TimeLabel min_start, std::vector<std::int64_t>& arr) {
  arr.assign(n, -2);  // -2 = unreached
  arr[src] = static_cast<std::int64_t>(min_start) - 1;
  for (const auto& e : ev) {
    if (e.t < min_start) continue;
    const std::int64_t t = e.t;
    const std::int64_t au = arr[e.u], av = arr[e.v];
    if (au != -2 && au < t && (av == -2 || t < av)) arr[e.v] = t;
    if (av != -2 && av < t && (au == -2 || t < au)) arr[e.u] = t;
  }
}

}  // namespace detail

// Exact single-source temporal distances under the chosen semantics.
inline std::vector<ExtDistance> single_source_distances(const TemporalGraph& g, int src,
                                                        DistanceSemantics sem) {
  const int n = g.vertex_count();
  if (src < 0 || src >= n) throw std::invalid_argument("single_source_distances: bad vertex");
  const auto ev = detail::event_list(g);
  std::vector<ExtDistance> out(n, ExtDistance::infinite());
  out[src] = ExtDistance::of(0);

  if (sem == DistanceSemantics::Shortest) {
    std::vector<std::int64_t> hops;
    std::vector<std::pair<int, std::int64_t>> batch;
    detail::shortest_from(ev, n, src, hops, batch);
    for (int v = 0; v < n; ++v)
      if (v != src && hops[v] >= 0) out[v] = ExtDistance::of(hops[v]);
    return out;
  }

  if (sem == DistanceSemantics::Foremost) {
    std::vector<std::int64_t> arr;
    detail::earliest_from(ev, n, src, 1, arr);
    for (int v = 0; v < n; ++v)
      if (v != src && arr[v] != -2) out[v] = ExtDistance::of(arr[v]);
    return out;
  }

  // Fastest: minimise arrival - start over all admissible start labels t1.
  // For the walk realizing the optimum, the term at t1 = (its first label)
  // equals its span; every other term only overestimates.
  std::vector<TimeLabel> starts;
  for (const auto& e : ev) starts.push_back(e.t);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::vector<std::int64_t> arr;
  for (TimeLabel t1 : starts) {
    detail::earliest_from(ev, n, src, t1, arr);
    for (int v = 0; v < n; ++v) {
      if (v == src || arr[v] == -2) continue;
      out[v] = min(out[v], ExtDistance::of(arr[v] - static_cast<std::int64_t>(t1)));
    }
  }
  return out;
}

inline ExtDistance temporal_distance(const TemporalGraph& g, int u, int v,
                                     DistanceSemantics sem) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("temporal_distance: bad vertex");
  return single_source_distances(g, u, sem)[v];
}

// Entry (u, v) is the temporal distance from u to v; not symmetric in general.
inline std::vector<std::vector<ExtDistance>> all_pairs_distances(const TemporalGraph& g,
                                                                 DistanceSemantics sem) {
  std::vector<std::vector<ExtDistance>> m;
  m.reserve(g.vertex_count());
  for (int s = 0; s < g.vertex_count(); ++s) m.push_back(single_source_distances(g, s, sem));
  return m;
}

// Sum of distances over all ordered vertex pairs; infinite as soon as any
// pair is unreachable.
inline ExtDistance communication_cost(const TemporalGraph& g, DistanceSemantics sem) {
  ExtDistance total = ExtDistance::of(0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    const auto d = single_source_distances(g, s, sem);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v == s) continue;
      total += d[v];
      if (total.is_infinite()) return total;
    }
  }
  return total;
}

inline ExtDistance temporal_diameter(const TemporalGraph& g, DistanceSemantics sem) {
  ExtDistance worst = ExtDistance::of(0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    const auto d = single_source_distances(g, s, sem);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != s) worst = max(worst, d[v]);
  }
  return worst;
}

inline bool is_temporally_connected(const TemporalGraph& g) {
  return communication_cost(g, DistanceSemantics::Shortest).is_finite();
}

// Exact number of vertex-simple strictly-increasing temporal paths from u
// to v, by exhaustive search. Exponential; guarded by a vertex-count cap.
inline std::uint64_t count_temporal_paths(const TemporalGraph& g, int u, int v,
                                          int vertex_cap = 16) {
  const int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("count_temporal_paths: bad vertex");
  if (n > vertex_cap)
    throw std::invalid_argument("count_temporal_paths: vertex count exceeds cap");
  if (u == v) return 1;  // the empty path

  // adjacency as (neighbor, label) pairs
  std::vector<std::vector<std::pair<int, TimeLabel>>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    for (TimeLabel t : e.labels) {
      adj[e.u].emplace_back(e.v, t);
      adj[e.v].emplace_back(e.u, t);
    }
  }
  std::uint64_t count = 0;
  std::vector<bool> visited(n, false);
  visited[u] = true;
  auto dfs = [&](auto&& self, int at, TimeLabel last) -> void {
    for (auto [w, t] : adj[at]) {
      if (t <= last || visited[w]) continue;
      if (w == v) {
        ++count;  // a u->v path ends at v; extensions would leave v
        continue;
      }
      visited[w] = true;
      self(self, w, t);
      visited[w] = false;
    }
  };
  dfs(dfs, u, 0);
  return count;
}

}  // namespace dncg
