#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dncg/constructions.hpp"
#include "dncg/distances.hpp"
#include "dncg/game.hpp"
#include "dncg/rational.hpp"

namespace dncg {

namespace detail {
inline Rational rat(long long v) { return Rational(BigInt(v), BigInt(1)); }
}  // namespace detail

// Minimum social cost over all strategy profiles with n players.
//   alpha <= 2 : complete graph, any simple labelling.
//   alpha >= 2 : complete bipartite K_{2,n-2} with a suitable labelling,
//                which needs n >= 4 (three vertices cannot be temporally
//                connected with 2n-4 = 2 labels). Both branches agree at
//                alpha = 2.
inline Rational optimal_social_cost(const Rational& alpha, int n) {
  using detail::rat;
  if (n < 1) throw std::invalid_argument("optimal_social_cost: n >= 1 required");
  const Rational two = rat(2);
  if (alpha <= two)
    return rat(2LL * n * (n - 1)) + (alpha - two) * Rational(BigInt(n) * BigInt(n - 1), BigInt(2));
  if (n < 4)
    throw std::invalid_argument("optimal_social_cost: alpha >= 2 branch requires n >= 4");
  return rat(2LL * n * (n - 1)) + (alpha - two) * rat(2LL * n - 4);
}

// Worst-equilibrium to optimum ratio for 1 <= alpha < 2; always <= 4/3.
inline Rational poa_upper_formula(const Rational& alpha, int n) {
  using detail::rat;
  if (!(alpha >= rat(1) && alpha < rat(2)))
    throw std::invalid_argument("poa_upper_formula: requires 1 <= alpha < 2");
  if (n < 4) throw std::invalid_argument("poa_upper_formula: n >= 4 required");
  const Rational num =
      rat(4LL * n * n) + rat(4LL * n) * (alpha - rat(3)) - rat(8) * alpha + rat(16);
  const Rational den = (alpha + rat(2)) * rat(1LL * n * n - n);
  const Rational value = num / den;
  if (value > Rational(BigInt(4), BigInt(3)))
    throw std::logic_error("poa_upper_formula: value exceeded 4/3");
  return value;
}

inline Rational hypercube_cost_formula(int d, const Rational& alpha) {
  using detail::rat;
  if (d < 1) throw std::invalid_argument("hypercube_cost_formula: d >= 1 required");
  const long long half = 1LL << (d - 1);
  return rat(d) * alpha * rat(half) + rat(d) * rat(1LL << (2 * d - 1));
}

inline Rational dfan_cost_lower_bound(int n, const Rational& alpha) {
  using detail::rat;
  if (n < 5) throw std::invalid_argument("dfan_cost_lower_bound: n >= 5 required");
  return alpha * rat(2LL * n - 4) +
         Rational(BigInt(n - 2) * BigInt(n - 2) * BigInt(n - 2), BigInt(6));
}

struct RatioReport {
  std::string instance;
  Rational alpha;
  int n = 0;
  DistanceSemantics semantics = DistanceSemantics::Shortest;
  Rational numerator;    // social cost of the instance
  Rational denominator;  // optimal social cost at (alpha, n)
  Rational ratio;
};

// Ratio of the instance's social cost to the optimum. Makes no claim that
// the instance is the worst equilibrium at these parameters.
inline RatioReport ratio_report(const Instance& inst, const Rational& alpha,
                                const GameConfig& base_cfg) {
  GameConfig cfg = base_cfg;
  cfg.alpha = alpha;
  const ExtCost cost = social_cost_graph(inst.graph, cfg);
  if (cost.is_infinite())
    throw std::invalid_argument("ratio_report: instance is not temporally connected");
  RatioReport r;
  r.instance = inst.name;
  r.alpha = alpha;
  r.n = inst.graph.vertex_count();
  r.semantics = cfg.semantics;
  r.numerator = cost.value();
  r.denominator = optimal_social_cost(alpha, r.n);
  r.ratio = r.numerator / r.denominator;
  return r;
}

struct TinySearchResult {
  Rational min_cost;
  TemporalGraph witness;
  std::uint64_t examined = 0;
};

// Exact minimum social cost over every labelled graph on n <= 4 vertices
// with label sets drawn from [1, max_label] (subsets when multi_labels,
// single labels otherwise). Duplicate purchases are never optimal, so
// enumerating graphs instead of profiles loses nothing.
inline TinySearchResult tiny_optimal_search(int n, const Rational& alpha,
                                            TimeLabel max_label, bool multi_labels) {
  if (n < 2 || n > 4) throw std::invalid_argument("tiny_optimal_search: 2 <= n <= 4 required");
  if (max_label < 1 || max_label > 6)
    throw std::invalid_argument("tiny_optimal_search: 1 <= max_label <= 6 required");
  if (alpha <= Rational(BigInt(0), BigInt(1)))
    throw std::invalid_argument("tiny_optimal_search: alpha must be positive");

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::size_t m = pairs.size();
  const unsigned T = max_label;
  // per-edge state: a subset mask of [1,T] (multi) or a value 0..T (simple)
  const std::uint64_t per_edge = multi_labels ? (1ULL << T) : (T + 1);

  std::vector<unsigned> state(m, 0);
  std::vector<detail::Event> events;
  std::vector<std::int64_t> hops;
  std::vector<std::pair<int, std::int64_t>> batch;

  TinySearchResult result{Rational(BigInt(0), BigInt(1)), TemporalGraph(n), 0};
  bool have = false;
  Rational best(BigInt(0), BigInt(1));

  auto label_count = [&] {
    int c = 0;
    for (unsigned s : state)
      c += multi_labels ? __builtin_popcount(s) : (s != 0 ? 1 : 0);
    return c;
  };

  while (true) {
    ++result.examined;
    const int lc = label_count();
    int edge_count = 0;
    for (unsigned s : state)
      if (s != 0) ++edge_count;
    // every ordered adjacent pair costs >= 1, every other pair >= 2
    const long long comm_floor = 2LL * n * (n - 1) - 2LL * edge_count;
    const Rational floor_cost = alpha * detail::rat(lc) + detail::rat(comm_floor);
    if (!have || !(floor_cost > best)) {
      events.clear();
      for (std::size_t i = 0; i < m; ++i) {
        if (state[i] == 0) continue;
        if (multi_labels) {
          for (unsigned b = 0; b < T; ++b)
            if (state[i] & (1u << b))
              events.push_back({b + 1, pairs[i].first, pairs[i].second});
        } else {
          events.push_back({state[i], pairs[i].first, pairs[i].second});
        }
      }
      std::sort(events.begin(), events.end(),
                [](const detail::Event& a, const detail::Event& b) { return a.t < b.t; });
      long long comm = 0;
      bool connected = true;
      for (int s = 0; s < n && connected; ++s) {
        detail::shortest_from(events, n, s, hops, batch);
        for (int v = 0; v < n; ++v) {
          if (v == s) continue;
          if (hops[v] < 0) {
            connected = false;
            break;
          }
          comm += hops[v];
        }
      }
      if (connected) {
        const Rational total = alpha * detail::rat(lc) + detail::rat(comm);
        if (!have || total < best) {
          have = true;
          best = total;
          TemporalGraph w(n);
          for (const auto& e : events) w.add_label(e.u, e.v, e.t);
          result.witness = w;
        }
      }
    }
    // odometer
    std::size_t i = 0;
    while (i < m && ++state[i] == per_edge) state[i++] = 0;
    if (i == m) break;
  }
  result.min_cost = best;
  return result;
}

// Minimum total number of time labels a temporally connected graph on n
// vertices needs. Temporal connectivity only depends on the relative order
// (and equalities) of labels, so it is enough to enumerate edge multisets
// with rank patterns; ranks stay within [1, 2n].
inline int min_labels_for_connectivity(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("min_labels_for_connectivity: 2 <= n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  std::vector<detail::Event> events;
  std::vector<std::int64_t> hops;
  std::vector<std::pair<int, std::int64_t>> batch;

  auto connected = [&](const std::vector<int>& slots, const std::vector<unsigned>& pattern) {
    events.clear();
    for (std::size_t i = 0; i < slots.size(); ++i)
      events.push_back({pattern[i], pairs[slots[i]].first, pairs[slots[i]].second});
    std::sort(events.begin(), events.end(),
              [](const detail::Event& a, const detail::Event& b) { return a.t < b.t; });
    for (int s = 0; s < n; ++s) {
      detail::shortest_from(events, n, s, hops, batch);
      for (int v = 0; v < n; ++v)
        if (v != s && hops[v] < 0) return false;
    }
    return true;
  };

  for (int k = 1; k <= 2 * n; ++k) {
    // multisets of k edge slots
    std::vector<int> slots(k, 0);
    while (true) {
      // static spanning check first: every vertex must be covered
      std::vector<int> deg(n, 0);
      for (int s : slots) {
        ++deg[pairs[s].first];
        ++deg[pairs[s].second];
      }
      bool plausible = std::all_of(deg.begin(), deg.end(), [](int d) { return d > 0; });
      if (plausible) {
        std::vector<unsigned> pattern(k, 1);
        while (true) {
          bool valid = true;
          for (int i = 0; i < k && valid; ++i)
            for (int j = i + 1; j < k && valid; ++j)
              if (slots[i] == slots[j] && pattern[i] == pattern[j]) valid = false;
          if (valid && connected(slots, pattern)) return k;
          int i = 0;
          while (i < k && ++pattern[i] == static_cast<unsigned>(k) + 1) pattern[i++] = 1;
          if (i == k) break;
        }
      }
      // next multiset (non-decreasing sequences over pair indices)
      int i = k - 1;
      while (i >= 0 && slots[i] == static_cast<int>(pairs.size()) - 1) --i;
      if (i < 0) break;
      ++slots[i];
      for (int j = i + 1; j < k; ++j) slots[j] = slots[i];
    }
  }
  throw std::logic_error("min_labels_for_connectivity: no connected labelling found");
}

}  // namespace dncg
