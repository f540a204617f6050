#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dncg/distances.hpp"
#include "dncg/rational.hpp"
#include "dncg/temporal_graph.hpp"

namespace dncg {

// A single purchase (u, t) in a player's strategy: the buyer pays alpha for
// edge {buyer, u} being active at instant t.
struct Purchase {
  int endpoint = 0;
  TimeLabel label = 1;

  friend auto operator<=>(const Purchase&, const Purchase&) = default;
};

class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(int n) : strategies_(n) {
    if (n < 0) throw std::invalid_argument("StrategyProfile: negative player count");
  }

  int player_count() const { return static_cast<int>(strategies_.size()); }

  const std::vector<Purchase>& strategy(int player) const {
    return strategies_.at(player);
  }

  // Set semantics: inserting an already-held purchase is a no-op.
  void add(int player, Purchase p) {
    auto& s = strategies_.at(player);
    auto it = std::lower_bound(s.begin(), s.end(), p);
    if (it == s.end() || *it != p) s.insert(it, p);
  }

  void set_strategy(int player, std::vector<Purchase> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    strategies_.at(player) = std::move(s);
  }

  std::size_t purchase_count() const {
    std::size_t c = 0;
    for (const auto& s : strategies_) c += s.size();
    return c;
  }

  TimeLabel max_label() const {
    TimeLabel m = 0;
    for (const auto& s : strategies_)
      for (const auto& p : s) m = std::max(m, p.label);
    return m;
  }

  void validate(bool allow_loops = false) const {
    const int n = player_count();
    for (int v = 0; v < n; ++v)
      for (const auto& p : strategies_[v]) {
        if (p.endpoint < 0 || p.endpoint >= n)
          throw std::invalid_argument("StrategyProfile: endpoint out of range");
        if (p.label < 1) throw std::invalid_argument("StrategyProfile: label must be >= 1");
        if (p.endpoint == v && !allow_loops)
          throw std::invalid_argument("StrategyProfile: loop purchase");
      }
  }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<std::vector<Purchase>> strategies_;
};

enum class Direction { Out, In };

inline const char* to_string(Direction d) { return d == Direction::Out ? "out" : "in"; }

struct GameConfig {
  Rational alpha = Rational(BigInt(1), BigInt(1));
  Direction direction = Direction::Out;
  DistanceSemantics semantics = DistanceSemantics::Shortest;
  // 0 means "derive from the profile": deviation searches use candidate
  // labels in [1, L + changes] where L is the largest label present. A
  // positive value widens the universe to at least that label.
  TimeLabel label_horizon = 0;
  int deviation_budget = 1;
  // Upper bound on candidate strategies an exact search may enumerate.
  std::uint64_t exact_size_cap = 50'000'000;

  void check() const {
    if (alpha <= Rational(BigInt(0), BigInt(1)))
      throw std::invalid_argument("GameConfig: alpha must be positive");
    if (deviation_budget < 0) throw std::invalid_argument("GameConfig: negative budget");
  }
};

struct CostBreakdown {
  Rational construction;   // alpha * |s(v)|
  ExtDistance communication;
  ExtCost total;           // construction + communication, saturating
};

// Union of all purchases: edge {u,v} is active at t whenever either endpoint
// bought (other, t). Both endpoints buying the same (edge, label) yields a
// single label in the graph, although both paid for it.
inline TemporalGraph communication_graph(const StrategyProfile& p, bool allow_loops = false) {
  TemporalGraph g(p.player_count());
  for (int v = 0; v < p.player_count(); ++v)
    for (const auto& pur : p.strategy(v)) {
      if (pur.endpoint == v && !allow_loops)
        throw std::invalid_argument("communication_graph: loop purchase");
      g.add_label(v, pur.endpoint, pur.label);
    }
  g.validate(allow_loops);
  return g;
}

namespace detail {

inline ExtDistance communication_term(const TemporalGraph& g, int v, Direction dir,
                                      DistanceSemantics sem) {
  ExtDistance sum = ExtDistance::of(0);
  if (dir == Direction::Out) {
    const auto d = single_source_distances(g, v, sem);
    for (int w = 0; w < g.vertex_count(); ++w)
      if (w != v) sum += d[w];
  } else {
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (u == v) continue;
      sum += single_source_distances(g, u, sem)[v];
      if (sum.is_infinite()) return sum;
    }
  }
  return sum;
}

}  // namespace detail

inline CostBreakdown individual_cost(const StrategyProfile& p, int v, const GameConfig& cfg) {
  cfg.check();
  const TemporalGraph g = communication_graph(p);
  CostBreakdown out;
  out.construction = cfg.alpha * Rational(BigInt(p.strategy(v).size()), BigInt(1));
  out.communication = detail::communication_term(g, v, cfg.direction, cfg.semantics);
  out.total = ExtCost(out.construction) + ExtCost::of(out.communication);
  return out;
}

// Sum of individual costs. The same value for both directions: each ordered
// pair distance is counted exactly once either way.
inline ExtCost social_cost_profile(const StrategyProfile& p, const GameConfig& cfg) {
  cfg.check();
  const TemporalGraph g = communication_graph(p);
  ExtCost total = Rational(BigInt(0), BigInt(1));
  total += ExtCost(cfg.alpha * Rational(BigInt(p.purchase_count()), BigInt(1)));
  total += ExtCost::of(communication_cost(g, cfg.semantics));
  return total;
}

// alpha * (total labels) + sum of ordered-pair distances. Agrees with the
// profile cost whenever no (edge, label) was bought by both endpoints.
inline ExtCost social_cost_graph(const TemporalGraph& g, const GameConfig& cfg) {
  cfg.check();
  ExtCost total = Rational(BigInt(0), BigInt(1));
  total += ExtCost(cfg.alpha * Rational(BigInt(g.label_count()), BigInt(1)));
  total += ExtCost::of(communication_cost(g, cfg.semantics));
  return total;
}

}  // namespace dncg
