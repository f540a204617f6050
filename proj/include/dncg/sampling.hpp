#pragma once

#include <cstdint>

#include "dncg/game.hpp"
#include "dncg/temporal_graph.hpp"

namespace dncg {

// SplitMix64. Used instead of <random> distributions so that sampled
// fixtures are bit-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound) by rejection
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do v = next(); while (v >= limit);
    return v % bound;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Uniformly places up to max_edges labelled edges (duplicates collapse).
inline TemporalGraph sample_graph(Rng& rng, int max_n, int max_edges, TimeLabel max_label) {
  const int n = rng.range(2, max_n);
  TemporalGraph g(n);
  const int m = rng.range(0, max_edges);
  for (int i = 0; i < m; ++i) {
    const int u = rng.range(0, n - 1);
    const int v = rng.range(0, n - 1);
    if (u == v) continue;
    g.add_label(u, v, static_cast<TimeLabel>(rng.range(1, static_cast<int>(max_label))));
  }
  return g;
}

inline StrategyProfile sample_profile(Rng& rng, int max_n, int max_purchases_each,
                                      TimeLabel max_label) {
  const int n = rng.range(2, max_n);
  StrategyProfile p(n);
  for (int v = 0; v < n; ++v) {
    const int k = rng.range(0, max_purchases_each);
    for (int i = 0; i < k; ++i) {
      const int w = rng.range(0, n - 1);
      if (w == v) continue;
      p.add(v, {w, static_cast<TimeLabel>(rng.range(1, static_cast<int>(max_label)))});
    }
  }
  return p;
}

}  // namespace dncg
