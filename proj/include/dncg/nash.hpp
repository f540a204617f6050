#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dncg/game.hpp"

namespace dncg {

struct Deviation {
  int player = -1;
  std::vector<Purchase> strategy;  // the full replacement strategy
  ExtCost old_cost;
  ExtCost new_cost;
};

struct PlayerSearchStats {
  int player = 0;
  std::uint64_t candidates = 0;
  bool improvement_found = false;
};

enum class NashStatus { Certified, Refuted, Inconclusive };

inline const char* to_string(NashStatus s) {
  switch (s) {
    case NashStatus::Certified: return "certified";
    case NashStatus::Refuted: return "refuted";
    case NashStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

// Certification result. Inconclusive is a first-class outcome: a
// budget-limited search that finds nothing is never promoted to a
// certificate.
struct NashOutcome {
  NashStatus status = NashStatus::Inconclusive;
  std::string mode;  // "exact" or "budget"
  int budget = 0;    // populated in budget mode
  std::optional<Deviation> witness;
  std::vector<PlayerSearchStats> player_stats;
};

namespace detail {

// Evaluates candidate strategies for one fixed deviating player without
// rebuilding a TemporalGraph per candidate: the other players' purchases
// are a frozen, label-sorted event list that candidate events merge into.
class DeviationEvaluator {
 public:
  DeviationEvaluator(const StrategyProfile& p, int player, const GameConfig& cfg)
      : n_(p.player_count()), player_(player), sem_(cfg.semantics), dir_(cfg.direction) {
    for (int v = 0; v < n_; ++v) {
      if (v == player) continue;
      for (const auto& pur : p.strategy(v)) {
        if (pur.endpoint == v) continue;  // loops never affect distances
        base_.push_back({pur.label, v, pur.endpoint});
      }
    }
    std::sort(base_.begin(), base_.end(),
              [](const Event& a, const Event& b) { return a.t < b.t; });
  }

  ExtDistance communication(const std::vector<Purchase>& strategy) {
    cand_.clear();
    for (const auto& pur : strategy) {
      if (pur.endpoint == player_) continue;
      cand_.push_back({pur.label, player_, pur.endpoint});
    }
    std::sort(cand_.begin(), cand_.end(),
              [](const Event& a, const Event& b) { return a.t < b.t; });
    merged_.resize(base_.size() + cand_.size());
    std::merge(base_.begin(), base_.end(), cand_.begin(), cand_.end(), merged_.begin(),
               [](const Event& a, const Event& b) { return a.t < b.t; });

    if (dir_ == Direction::Out) return sum_from(merged_, player_);

    if (sem_ == DistanceSemantics::Shortest) {
      // Reversing each label t to (T+1-t) bijects temporal paths u->v with
      // paths v->u of equal length, so the in-distances to the player are
      // one out-run on the reversed event list.
      const TimeLabel top = merged_.empty() ? TimeLabel{1} : merged_.back().t;
      reversed_.assign(merged_.rbegin(), merged_.rend());
      for (auto& e : reversed_) e.t = top + 1 - e.t;
      return sum_from(reversed_, player_);
    }

    // Foremost/fastest have no label-reversal symmetry; run per source.
    ExtDistance total = ExtDistance::of(0);
    for (int u = 0; u < n_; ++u) {
      if (u == player_) continue;
      total += dist_from(merged_, u)[player_];
      if (total.is_infinite()) return total;
    }
    return total;
  }

  ExtCost total_cost(const Rational& alpha, const std::vector<Purchase>& strategy) {
    const ExtDistance comm = communication(strategy);
    ExtCost c = ExtCost(alpha * Rational(BigInt(strategy.size()), BigInt(1)));
    return c + ExtCost::of(comm);
  }

  int unreachable_count(const std::vector<Purchase>& strategy) {
    cand_.clear();
    for (const auto& pur : strategy) {
      if (pur.endpoint == player_) continue;
      cand_.push_back({pur.label, player_, pur.endpoint});
    }
    std::sort(cand_.begin(), cand_.end(),
              [](const Event& a, const Event& b) { return a.t < b.t; });
    merged_.resize(base_.size() + cand_.size());
    std::merge(base_.begin(), base_.end(), cand_.begin(), cand_.end(), merged_.begin(),
               [](const Event& a, const Event& b) { return a.t < b.t; });
    int count = 0;
    if (dir_ == Direction::Out) {
      const auto d = dist_from(merged_, player_);
      for (int w = 0; w < n_; ++w)
        if (w != player_ && d[w].is_infinite()) ++count;
    } else {
      for (int u = 0; u < n_; ++u)
        if (u != player_ && dist_from(merged_, u)[player_].is_infinite()) ++count;
    }
    return count;
  }

 private:
  using Event = detail::Event;

  std::vector<ExtDistance> dist_from(const std::vector<Event>& ev, int src) {
    std::vector<ExtDistance> out(n_, ExtDistance::infinite());
    out[src] = ExtDistance::of(0);
    switch (sem_) {
      case DistanceSemantics::Shortest: {
        shortest_from(ev, n_, src, hops_, batch_);
        for (int v = 0; v < n_; ++v)
          if (v != src && hops_[v] >= 0) out[v] = ExtDistance::of(hops_[v]);
        break;
      }
      case DistanceSemantics::Foremost: {
        earliest_from(ev, n_, src, 1, arr_);
        for (int v = 0; v < n_; ++v)
          if (v != src && arr_[v] != -2) out[v] = ExtDistance::of(arr_[v]);
        break;
      }
      case DistanceSemantics::Fastest: {
        starts_.clear();
        for (const auto& e : ev) starts_.push_back(e.t);
        starts_.erase(std::unique(starts_.begin(), starts_.end()), starts_.end());
        for (TimeLabel t1 : starts_) {
          earliest_from(ev, n_, src, t1, arr_);
          for (int v = 0; v < n_; ++v) {
            if (v == src || arr_[v] == -2) continue;
            out[v] = min(out[v], ExtDistance::of(arr_[v] - static_cast<std::int64_t>(t1)));
          }
        }
        break;
      }
    }
    return out;
  }

  ExtDistance sum_from(const std::vector<Event>& ev, int src) {
    if (sem_ == DistanceSemantics::Shortest) {
      shortest_from(ev, n_, src, hops_, batch_);
      std::int64_t total = 0;
      for (int v = 0; v < n_; ++v) {
        if (v == src) continue;
        if (hops_[v] < 0) return ExtDistance::infinite();
        total += hops_[v];
      }
      return ExtDistance::of(total);
    }
    const auto d = dist_from(ev, src);
    ExtDistance total = ExtDistance::of(0);
    for (int v = 0; v < n_; ++v)
      if (v != src) total += d[v];
    return total;
  }

  int n_;
  int player_;
  DistanceSemantics sem_;
  Direction dir_;
  std::vector<Event> base_;
  std::vector<Event> cand_, merged_, reversed_;
  std::vector<std::int64_t> hops_, arr_;
  std::vector<std::pair<int, std::int64_t>> batch_;
  std::vector<TimeLabel> starts_;
};

// Candidate label universe for deviations that change at most `changes`
// purchases: any label above the largest one present is order-equivalent to
// some label in [1, L + changes]. label_horizon can only widen the range.
inline TimeLabel deviation_label_bound(const StrategyProfile& p, int changes,
                                       const GameConfig& cfg) {
  const TimeLabel base = p.max_label() + static_cast<TimeLabel>(changes);
  return std::max<TimeLabel>(std::max<TimeLabel>(base, 1), cfg.label_horizon);
}

}  // namespace detail

// Exhaustively searches all deviations of player v that change at most
// cfg.deviation_budget purchases, where one change adds, removes or
// relabels a single purchase. Returns the deviation with the lowest
// resulting cost (ties: fewer changes, then lexicographically smallest
// strategy), or nothing when no strict improvement exists in budget.
inline std::optional<Deviation> find_improving_deviation(
    const StrategyProfile& p, int v, const GameConfig& cfg,
    PlayerSearchStats* stats = nullptr) {
  cfg.check();
  p.validate();
  const int n = p.player_count();
  if (v < 0 || v >= n) throw std::invalid_argument("find_improving_deviation: bad player");

  detail::DeviationEvaluator eval(p, v, cfg);
  const std::vector<Purchase> current = p.strategy(v);
  const ExtCost current_cost = eval.total_cost(cfg.alpha, current);

  const TimeLabel max_lab = detail::deviation_label_bound(p, cfg.deviation_budget, cfg);

  std::set<std::vector<Purchase>> seen;
  seen.insert(current);
  std::vector<std::vector<Purchase>> frontier{current};

  std::uint64_t examined = 0;
  std::optional<Deviation> best;
  int best_depth = 0;

  auto consider = [&](const std::vector<Purchase>& s, int depth) {
    ++examined;
    const ExtCost c = eval.total_cost(cfg.alpha, s);
    if (!(c < current_cost)) return;
    if (!best || c < best->new_cost ||
        (c == best->new_cost &&
         (depth < best_depth || (depth == best_depth && s < best->strategy)))) {
      best = Deviation{v, s, current_cost, c};
      best_depth = depth;
    }
  };

  for (int depth = 1; depth <= cfg.deviation_budget; ++depth) {
    std::vector<std::vector<Purchase>> next;
    for (const auto& s : frontier) {
      auto push = [&](std::vector<Purchase> t) {
        std::sort(t.begin(), t.end());
        if (seen.insert(t).second) {
          consider(t, depth);
          next.push_back(std::move(t));
        }
      };
      for (std::size_t i = 0; i < s.size(); ++i) {  // remove one
        std::vector<Purchase> t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        push(std::move(t));
      }
      for (int w = 0; w < n; ++w) {  // add one
        if (w == v) continue;
        for (TimeLabel t = 1; t <= max_lab; ++t) {
          Purchase q{w, t};
          if (std::binary_search(s.begin(), s.end(), q)) continue;
          std::vector<Purchase> u = s;
          u.push_back(q);
          push(std::move(u));
        }
      }
      for (std::size_t i = 0; i < s.size(); ++i)  // relabel one
        for (TimeLabel t = 1; t <= max_lab; ++t) {
          if (t == s[i].label) continue;
          Purchase q{s[i].endpoint, t};
          if (std::binary_search(s.begin(), s.end(), q)) continue;
          std::vector<Purchase> u = s;
          u[i] = q;
          push(std::move(u));
        }
    }
    frontier = std::move(next);
  }

  if (stats) {
    stats->player = v;
    stats->candidates = examined;
    stats->improvement_found = best.has_value();
  }
  return best;
}

struct BestResponse {
  std::vector<Purchase> strategy;
  ExtCost cost;
  std::uint64_t candidates = 0;
};

// Exact minimiser of the individual cost over all strategies, via the
// pruning bound: under the shortest semantics a finite communication term
// is at most (n-1)^2, so once alpha exceeds that, no strategy larger than
// the current one (plus one repair edge per unreachable vertex) can win.
inline BestResponse best_response(const StrategyProfile& p, int v, const GameConfig& cfg) {
  cfg.check();
  p.validate();
  const int n = p.player_count();
  if (v < 0 || v >= n) throw std::invalid_argument("best_response: bad player");
  if (cfg.semantics != DistanceSemantics::Shortest)
    throw std::invalid_argument(
        "best_response: exact pruning search is defined for the shortest semantics");
  const Rational bound(BigInt(n - 1) * BigInt(n - 1), BigInt(1));
  if (!(cfg.alpha > bound))
    throw std::invalid_argument(
        "best_response: requires alpha > (n-1)^2; got alpha = " + to_string(cfg.alpha) +
        " with n = " + std::to_string(n));

  detail::DeviationEvaluator eval(p, v, cfg);
  const std::vector<Purchase> current = p.strategy(v);
  const ExtCost current_cost = eval.total_cost(cfg.alpha, current);

  std::size_t size_bound = current.size();
  if (current_cost.is_infinite()) {
    // With unreachable vertices the current cost gives no pruning handle;
    // the repair strategy (one direct edge per missing vertex) does.
    size_bound += static_cast<std::size_t>(eval.unreachable_count(current));
  }

  const TimeLabel max_lab =
      detail::deviation_label_bound(p, static_cast<int>(size_bound), cfg);
  std::vector<Purchase> universe;
  for (int w = 0; w < n; ++w) {
    if (w == v) continue;
    for (TimeLabel t = 1; t <= max_lab; ++t) universe.push_back({w, t});
  }

  // guard: sum_{k<=size_bound} C(|universe|, k)
  {
    long double total = 0, c = 1;
    for (std::size_t k = 0; k <= size_bound; ++k) {
      total += c;
      c = c * static_cast<long double>(universe.size() - k) / static_cast<long double>(k + 1);
      if (total > static_cast<long double>(cfg.exact_size_cap))
        throw std::invalid_argument("best_response: search space exceeds exact_size_cap");
    }
  }

  BestResponse best{current, current_cost, 0};
  std::vector<Purchase> strat;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= size_bound; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > universe.size()) break;
    while (true) {
      strat.clear();
      for (std::size_t i : idx) strat.push_back(universe[i]);
      ++best.candidates;
      const ExtCost c = eval.total_cost(cfg.alpha, strat);
      // strict improvement only: on ties the current strategy stands
      if (c < best.cost) {
        best.cost = c;
        best.strategy = strat;
      }
      if (k == 0) break;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == universe.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return best;
}

// Exact mode: every player's best response is computed; Certified means no
// player can strictly improve. Budget mode is a necessary-condition pass:
// it can refute but never certify, so "nothing found" is Inconclusive.
inline NashOutcome certify_nash(const StrategyProfile& p, const GameConfig& cfg,
                                bool exact_mode) {
  cfg.check();
  p.validate();
  NashOutcome out;
  out.mode = exact_mode ? "exact" : "budget";
  out.budget = exact_mode ? 0 : cfg.deviation_budget;

  auto better_witness = [](const Deviation& a, const Deviation& b) {
    // larger improvement first; an infinite old cost dominates
    const bool ainf = a.old_cost.is_infinite(), binf = b.old_cost.is_infinite();
    if (ainf != binf) return ainf;
    if (ainf) return a.new_cost < b.new_cost;
    const Rational ia = a.old_cost.value() - a.new_cost.value();
    const Rational ib = b.old_cost.value() - b.new_cost.value();
    if (ia != ib) return ia > ib;
    return a.player < b.player;
  };

  std::optional<Deviation> witness;
  for (int v = 0; v < p.player_count(); ++v) {
    PlayerSearchStats st;
    st.player = v;
    std::optional<Deviation> dev;
    if (exact_mode) {
      const BestResponse br = best_response(p, v, cfg);
      const ExtCost cur = individual_cost(p, v, cfg).total;
      st.candidates = br.candidates;
      if (br.cost < cur) dev = Deviation{v, br.strategy, cur, br.cost};
    } else {
      dev = find_improving_deviation(p, v, cfg, &st);
    }
    st.improvement_found = dev.has_value();
    out.player_stats.push_back(st);
    if (dev && (!witness || better_witness(*dev, *witness))) witness = dev;
  }

  if (witness) {
    out.status = NashStatus::Refuted;
    out.witness = witness;
  } else {
    out.status = exact_mode ? NashStatus::Certified : NashStatus::Inconclusive;
  }
  return out;
}

struct DynamicsStep {
  int round = 0;
  int player = 0;
  std::vector<Purchase> new_strategy;
  ExtCost old_cost;
  ExtCost new_cost;
};

enum class DynamicsStop { FixedPoint, Cycle, MaxRounds };

inline const char* to_string(DynamicsStop s) {
  switch (s) {
    case DynamicsStop::FixedPoint: return "fixed_point";
    case DynamicsStop::Cycle: return "cycle";
    case DynamicsStop::MaxRounds: return "max_rounds";
  }
  return "?";
}

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  DynamicsStop stop = DynamicsStop::FixedPoint;
  StrategyProfile final_profile;
};

// Round-robin improving moves. Exploratory tooling: the game is not known
// to be a potential game, so cycles are detected by profile recurrence.
inline DynamicsTrace best_response_dynamics(StrategyProfile p, const GameConfig& cfg,
                                            int max_rounds) {
  cfg.check();
  DynamicsTrace trace;
  std::set<std::vector<std::vector<Purchase>>> seen;
  auto snapshot = [&p] {
    std::vector<std::vector<Purchase>> s;
    for (int v = 0; v < p.player_count(); ++v) s.push_back(p.strategy(v));
    return s;
  };
  seen.insert(snapshot());

  for (int round = 0; round < max_rounds; ++round) {
    bool moved = false;
    for (int v = 0; v < p.player_count(); ++v) {
      auto dev = find_improving_deviation(p, v, cfg);
      if (!dev) continue;
      p.set_strategy(v, dev->strategy);
      trace.steps.push_back({round, v, dev->strategy, dev->old_cost, dev->new_cost});
      moved = true;
      if (!seen.insert(snapshot()).second) {
        trace.stop = DynamicsStop::Cycle;
        trace.final_profile = p;
        return trace;
      }
    }
    if (!moved) {
      trace.stop = DynamicsStop::FixedPoint;
      trace.final_profile = p;
      return trace;
    }
  }
  trace.stop = DynamicsStop::MaxRounds;
  trace.final_profile = p;
  return trace;
}

}  // namespace dncg
