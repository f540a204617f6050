#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dncg/distances.hpp"
#include "dncg/temporal_graph.hpp"

namespace dncg {

enum class LabellingSpace { Permutations, Functions };

inline const char* to_string(LabellingSpace s) {
  return s == LabellingSpace::Permutations ? "permutations" : "functions";
}

struct LabellingSearchRequest {
  TemporalGraph union_graph;  // only the edge set is used
  DistanceSemantics semantics = DistanceSemantics::Shortest;
  LabellingSpace space = LabellingSpace::Permutations;
  TimeLabel horizon = 0;  // label universe [1, horizon] for the Functions space
  // Vertex permutations generating automorphisms of the union graph; used
  // both to cut the enumeration and to report counts up to symmetry.
  std::vector<std::vector<int>> automorphism_generators;
  int jobs = 4;
  std::string checkpoint_path;  // empty: no checkpointing
  std::size_t witness_cap = 32;
  std::size_t optima_cap = 500'000;  // stored optimal labellings (for counting)
  bool allow_large = false;
  std::uint64_t sample = 0;  // > 0: random sampling instead of exhaustion (non-exact)
  std::uint64_t seed = 0;
  std::atomic<bool>* cancel = nullptr;
};

struct LabellingSearchResult {
  std::string space;
  std::string semantics;
  bool exact = true;       // false in sampling mode or when cancelled
  bool cancelled = false;
  ExtDistance min_cost = ExtDistance::infinite();
  std::uint64_t raw_count = 0;    // optimal labellings in the full space
  std::uint64_t orbit_count = 0;  // optimal labellings up to automorphisms
  bool counts_exact = true;
  std::vector<std::vector<TimeLabel>> witnesses;  // label per edge, by edge index
  std::vector<std::pair<int, int>> edge_order;
  int group_order = 1;
  std::uint64_t evaluated = 0;
  std::uint64_t blocks_total = 0;
  std::uint64_t blocks_resumed = 0;
  double elapsed_seconds = 0;
};

namespace labelling_detail {

constexpr long long kDisconnected = -1;

// Communication cost evaluators specialised for one fixed edge set.
struct Evaluator {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  DistanceSemantics sem = DistanceSemantics::Shortest;
  std::vector<int> hops, arr, best_span;

  // Permutation labellings: edge_of_label[t-1] is the edge carrying label t.
  // All labels distinct, so no equal-label batching is needed.
  long long eval_perm(const std::vector<int>& eol) {
    const int m = static_cast<int>(edges.size());
    long long total = 0;
    for (int src = 0; src < n; ++src) {
      switch (sem) {
        case DistanceSemantics::Shortest: {
          hops.assign(n, -1);
          hops[src] = 0;
          for (int t = 0; t < m; ++t) {
            const auto [u, v] = edges[eol[t]];
            const int au = hops[u], av = hops[v];
            if (au >= 0 && (hops[v] < 0 || au + 1 < hops[v])) hops[v] = au + 1;
            if (av >= 0 && (hops[u] < 0 || av + 1 < hops[u])) hops[u] = av + 1;
          }
          for (int v = 0; v < n; ++v) {
            if (v == src) continue;
            if (hops[v] < 0) return kDisconnected;
            total += hops[v];
          }
          break;
        }
        case DistanceSemantics::Foremost: {
          arr.assign(n, -1);
          arr[src] = 0;
          for (int t = 0; t < m; ++t) {
            const auto [u, v] = edges[eol[t]];
            if (arr[u] >= 0 && arr[u] < t + 1 && arr[v] < 0) arr[v] = t + 1;
            else if (arr[v] >= 0 && arr[v] < t + 1 && arr[u] < 0) arr[u] = t + 1;
          }
          for (int v = 0; v < n; ++v) {
            if (v == src) continue;
            if (arr[v] < 0) return kDisconnected;
            total += arr[v];
          }
          break;
        }
        case DistanceSemantics::Fastest: {
          best_span.assign(n, -1);
          for (int t1 = 1; t1 <= m; ++t1) {
            // the first edge of an optimal walk is incident to the source
            const auto [su, sv] = edges[eol[t1 - 1]];
            if (su != src && sv != src) continue;
            arr.assign(n, -1);
            arr[src] = t1 - 1;
            for (int t = t1; t <= m; ++t) {
              const auto [u, v] = edges[eol[t - 1]];
              if (arr[u] >= 0 && arr[u] < t && arr[v] < 0) arr[v] = t;
              else if (arr[v] >= 0 && arr[v] < t && arr[u] < 0) arr[u] = t;
            }
            for (int v = 0; v < n; ++v) {
              if (v == src || arr[v] < 0) continue;
              const int span = arr[v] - t1;
              if (best_span[v] < 0 || span < best_span[v]) best_span[v] = span;
            }
          }
          for (int v = 0; v < n; ++v) {
            if (v == src) continue;
            if (best_span[v] < 0) return kDisconnected;
            total += best_span[v];
          }
          break;
        }
      }
    }
    return total;
  }

  // Function labellings over [1, T]: labels may repeat, so relaxations at a
  // label t only read states established at labels < t.
  long long eval_function(const std::vector<TimeLabel>& lab, TimeLabel T) {
    const int m = static_cast<int>(edges.size());
    long long total = 0;
    std::vector<std::pair<int, int>> batch;
    for (int src = 0; src < n; ++src) {
      switch (sem) {
        case DistanceSemantics::Shortest: {
          hops.assign(n, -1);
          hops[src] = 0;
          for (TimeLabel t = 1; t <= T; ++t) {
            batch.clear();
            for (int i = 0; i < m; ++i) {
              if (lab[i] != t) continue;
              const auto [u, v] = edges[i];
              if (hops[u] >= 0) batch.emplace_back(v, hops[u] + 1);
              if (hops[v] >= 0) batch.emplace_back(u, hops[v] + 1);
            }
            for (auto [w, h] : batch)
              if (hops[w] < 0 || h < hops[w]) hops[w] = h;
          }
          for (int v = 0; v < n; ++v) {
            if (v == src) continue;
            if (hops[v] < 0) return kDisconnected;
            total += hops[v];
          }
          break;
        }
        case DistanceSemantics::Foremost:
        case DistanceSemantics::Fastest: {
          const bool fastest = sem == DistanceSemantics::Fastest;
          best_span.assign(n, -1);
          for (TimeLabel t1 = 1; t1 <= (fastest ? T : 1); ++t1) {
            if (fastest) {
              bool incident = false;
              for (int i = 0; i < m && !incident; ++i)
                incident = lab[i] >= t1 && (edges[i].first == src || edges[i].second == src);
              if (!incident) continue;
            }
            arr.assign(n, -1);
            arr[src] = static_cast<int>(t1) - 1;
            for (TimeLabel t = t1; t <= T; ++t)
              for (int i = 0; i < m; ++i) {
                if (lab[i] != t) continue;
                const auto [u, v] = edges[i];
                const int ti = static_cast<int>(t);
                if (arr[u] >= 0 && arr[u] < ti && arr[v] < 0) arr[v] = ti;
                else if (arr[v] >= 0 && arr[v] < ti && arr[u] < 0) arr[u] = ti;
              }
            for (int v = 0; v < n; ++v) {
              if (v == src || arr[v] < 0) continue;
              const int val = fastest ? arr[v] - static_cast<int>(t1) : arr[v];
              if (best_span[v] < 0 || val < best_span[v]) best_span[v] = val;
            }
          }
          for (int v = 0; v < n; ++v) {
            if (v == src) continue;
            if (best_span[v] < 0) return kDisconnected;
            total += best_span[v];
          }
          break;
        }
      }
    }
    return total;
  }
};

// Closes the generator set into the full group of edge permutations.
inline std::vector<std::vector<int>> edge_group(
    const std::vector<std::pair<int, int>>& edges, int n,
    const std::vector<std::vector<int>>& vertex_gens) {
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);

  auto to_edge_perm = [&](const std::vector<int>& p) {
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("automorphism generator has wrong size");
    std::vector<int> ep(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int u = p[edges[i].first], v = p[edges[i].second];
      if (u > v) std::swap(u, v);
      auto it = index.find({u, v});
      if (it == index.end())
        throw std::invalid_argument("generator is not an automorphism of the union graph");
      ep[i] = it->second;
    }
    return ep;
  };

  std::vector<int> id(edges.size());
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> group{id};
  std::vector<std::vector<int>> gens;
  for (const auto& g : vertex_gens) gens.push_back(to_edge_perm(g));

  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        std::vector<int> comp(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) comp[i] = g[h[i]];
        if (group.insert(comp).second) next.push_back(std::move(comp));
        if (group.size() > 1'000'000)
          throw std::invalid_argument("automorphism group too large");
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

// lab composed with an edge permutation: edge i takes the label of pi(i).
inline std::vector<TimeLabel> act(const std::vector<TimeLabel>& lab,
                                  const std::vector<int>& pi) {
  std::vector<TimeLabel> out(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) out[i] = lab[pi[i]];
  return out;
}

struct BlockRecord {
  long long min = kDisconnected;  // kDisconnected encodes "none finite"
  std::uint64_t count = 0;
  std::uint64_t evaluated = 0;
  std::vector<std::vector<TimeLabel>> optima;  // possibly truncated
  bool truncated = false;
};

inline std::string encode_record(std::uint64_t id, const BlockRecord& r) {
  std::ostringstream os;
  os << id << ' ' << r.min << ' ' << r.count << ' ' << r.evaluated << ' '
     << (r.truncated ? 1 : 0) << ' ' << r.optima.size();
  for (const auto& o : r.optima) {
    os << ' ';
    for (std::size_t i = 0; i < o.size(); ++i) os << (i ? "," : "") << o[i];
  }
  return os.str();
}

inline bool decode_record(const std::string& line, std::uint64_t& id, BlockRecord& r) {
  std::istringstream is(line);
  std::size_t optima = 0;
  int trunc = 0;
  if (!(is >> id >> r.min >> r.count >> r.evaluated >> trunc >> optima)) return false;
  r.truncated = trunc != 0;
  r.optima.clear();
  for (std::size_t k = 0; k < optima; ++k) {
    std::string tok;
    if (!(is >> tok)) return false;
    std::vector<TimeLabel> lab;
    std::istringstream ts(tok);
    std::string part;
    while (std::getline(ts, part, ',')) lab.push_back(static_cast<TimeLabel>(std::stoul(part)));
    r.optima.push_back(std::move(lab));
  }
  return true;
}

}  // namespace labelling_detail

// Exact minimum communication cost over a space of simple labellings of the
// given union graph, with optimum counting and symmetry support. Witnesses
// are re-verified through the general distance engine before returning.
inline LabellingSearchResult search_optimal_labelling(const LabellingSearchRequest& req) {
  namespace ld = labelling_detail;
  const auto t_start = std::chrono::steady_clock::now();

  std::vector<std::pair<int, int>> edges;
  for (const auto& e : req.union_graph.edges()) {
    if (e.u == e.v) throw std::invalid_argument("search_optimal_labelling: loop edge");
    edges.emplace_back(e.u, e.v);
  }
  const int n = req.union_graph.vertex_count();
  const int m = static_cast<int>(edges.size());
  if (m == 0) throw std::invalid_argument("search_optimal_labelling: empty edge set");

  LabellingSearchResult res;
  res.space = to_string(req.space);
  res.semantics = to_string(req.semantics);
  res.edge_order = edges;

  const auto group = ld::edge_group(edges, n, req.automorphism_generators);
  res.group_order = static_cast<int>(group.size());
  const bool trivial_group = group.size() == 1;

  // ---- space planning ----
  struct Block {
    std::vector<int> prefix;  // edge_of_label prefix (Permutations)
    TimeLabel first = 0;      // first edge label (Functions)
  };
  std::vector<Block> blocks;
  TimeLabel horizon = req.horizon;

  if (req.space == LabellingSpace::Permutations) {
    if (m > 14)
      throw std::invalid_argument("search_optimal_labelling: permutation space needs |E| <= 14");
    // One slice per edge orbit: label 1 pinned to the orbit representative.
    // Every labelling orbit has a member in some slice, and cost is
    // invariant under the group, so the minimum and (expanded) counts are
    // those of the full space.
    std::vector<int> reps;
    {
      std::vector<bool> covered(m, false);
      for (int e = 0; e < m; ++e) {
        if (covered[e]) continue;
        reps.push_back(e);
        for (const auto& g : group)
          for (int i = 0; i < m; ++i)
            if (g[i] == e) covered[i] = true;
      }
    }
    long double slice_work = 1;
    for (int i = 1; i < m; ++i) slice_work *= i;
    if (!req.allow_large && !req.sample &&
        slice_work * static_cast<long double>(reps.size()) > 6e9L)
      throw std::invalid_argument(
          "search_optimal_labelling: space too large without symmetry reduction; "
          "pass allow_large to override");
    for (int r : reps) {
      if (m == 1) {
        blocks.push_back({{r}, 0});
        continue;
      }
      for (int e1 = 0; e1 < m; ++e1) {
        if (e1 == r) continue;
        if (m == 2) {
          blocks.push_back({{r, e1}, 0});
          continue;
        }
        for (int e2 = 0; e2 < m; ++e2) {
          if (e2 == r || e2 == e1) continue;
          blocks.push_back({{r, e1, e2}, 0});
        }
      }
    }
  } else {
    if (horizon < 1)
      throw std::invalid_argument("search_optimal_labelling: functions space needs a horizon");
    long double work = 1;
    for (int i = 0; i < m; ++i) work *= static_cast<long double>(horizon);
    if (!req.allow_large && !req.sample && work > 2e8L)
      throw std::invalid_argument(
          "search_optimal_labelling: functions space too large; pass allow_large to override");
    for (TimeLabel t = 1; t <= horizon; ++t) blocks.push_back({{}, t});
  }
  res.blocks_total = blocks.size();

  // ---- sampling mode: cheap, clearly non-exact ----
  if (req.sample > 0) {
    ld::Evaluator ev{n, edges, req.semantics, {}, {}, {}};
    std::uint64_t state = req.seed + 0x9E3779B97F4A7C15ULL;
    auto next_rand = [&state] {
      state += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      return z ^ (z >> 31);
    };
    long long best = ld::kDisconnected;
    std::set<std::vector<TimeLabel>> wit;
    for (std::uint64_t k = 0; k < req.sample; ++k) {
      std::vector<TimeLabel> lab(m);
      long long c = ld::kDisconnected;
      if (req.space == LabellingSpace::Permutations) {
        std::vector<int> eol(m);
        std::iota(eol.begin(), eol.end(), 0);
        for (int i = m - 1; i > 0; --i)
          std::swap(eol[i], eol[next_rand() % static_cast<std::uint64_t>(i + 1)]);
        for (int t = 0; t < m; ++t) lab[eol[t]] = static_cast<TimeLabel>(t + 1);
        c = ev.eval_perm(eol);
      } else {
        for (int i = 0; i < m; ++i)
          lab[i] = static_cast<TimeLabel>(next_rand() % horizon + 1);
        c = ev.eval_function(lab, horizon);
      }
      res.evaluated++;
      if (c == ld::kDisconnected) continue;
      if (best == ld::kDisconnected || c < best) { best = c; wit.clear(); }
      if (c == best && wit.size() < req.witness_cap) wit.insert(lab);
    }
    res.exact = false;
    res.counts_exact = false;
    if (best != ld::kDisconnected) res.min_cost = ExtDistance::of(best);
    res.witnesses.assign(wit.begin(), wit.end());
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return res;
  }

  // ---- resume ----
  std::map<std::uint64_t, ld::BlockRecord> done;
  if (!req.checkpoint_path.empty()) {
    std::ifstream in(req.checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      std::uint64_t id;
      ld::BlockRecord r;
      if (ld::decode_record(line, id, r) && id < blocks.size()) done[id] = std::move(r);
    }
  }
  res.blocks_resumed = done.size();

  // ---- parallel enumeration ----
  std::mutex merge_mu, ckpt_mu;
  std::ofstream ckpt;
  if (!req.checkpoint_path.empty())
    ckpt.open(req.checkpoint_path, std::ios::app);

  long long global_min = ld::kDisconnected;
  std::uint64_t global_count = 0;
  std::uint64_t global_evaluated = 0;
  std::vector<std::vector<TimeLabel>> global_optima;
  bool optima_truncated = false;

  auto merge_record = [&](std::uint64_t, const ld::BlockRecord& r) {
    global_evaluated += r.evaluated;
    if (r.min == ld::kDisconnected) return;
    if (global_min == ld::kDisconnected || r.min < global_min) {
      global_min = r.min;
      global_count = 0;
      global_optima.clear();
      optima_truncated = false;
    }
    if (r.min == global_min) {
      global_count += r.count;
      optima_truncated = optima_truncated || r.truncated;
      for (const auto& o : r.optima) {
        if (global_optima.size() >= req.optima_cap) {
          optima_truncated = true;
          break;
        }
        global_optima.push_back(o);
      }
    }
  };
  for (const auto& [id, r] : done) merge_record(id, r);

  std::atomic<std::size_t> next_block{0};
  std::atomic<std::uint64_t> blocks_done{done.size()};
  const int jobs = std::max(1, req.jobs);

  auto worker = [&] {
    ld::Evaluator ev{n, edges, req.semantics, {}, {}, {}};
    std::vector<int> eol(m);
    std::vector<TimeLabel> lab(m);
    while (true) {
      if (req.cancel && req.cancel->load()) return;
      const std::size_t b = next_block.fetch_add(1);
      if (b >= blocks.size()) return;
      if (done.count(b)) continue;

      ld::BlockRecord rec;
      auto note = [&](long long cost, const std::vector<TimeLabel>& form) {
        ++rec.evaluated;
        if (cost == ld::kDisconnected) return;
        if (rec.min == ld::kDisconnected || cost < rec.min) {
          rec.min = cost;
          rec.count = 0;
          rec.optima.clear();
          rec.truncated = false;
        }
        if (cost == rec.min) {
          ++rec.count;
          if (rec.optima.size() < req.optima_cap) rec.optima.push_back(form);
          else rec.truncated = true;
        }
      };

      if (req.space == LabellingSpace::Permutations) {
        const auto& prefix = blocks[b].prefix;
        std::vector<int> suffix;
        for (int e = 0; e < m; ++e)
          if (std::find(prefix.begin(), prefix.end(), e) == prefix.end())
            suffix.push_back(e);
        std::sort(suffix.begin(), suffix.end());
        do {
          std::copy(prefix.begin(), prefix.end(), eol.begin());
          std::copy(suffix.begin(), suffix.end(), eol.begin() + prefix.size());
          const long long c = ev.eval_perm(eol);
          if (c != ld::kDisconnected) {
            for (int t = 0; t < m; ++t) lab[eol[t]] = static_cast<TimeLabel>(t + 1);
            note(c, lab);
          } else {
            ++rec.evaluated;
          }
        } while (std::next_permutation(suffix.begin(), suffix.end()));
      } else {
        // odometer over edges 1..m-1; edge 0 fixed to the block label
        lab.assign(m, 1);
        lab[0] = blocks[b].first;
        while (true) {
          note(ev.eval_function(lab, horizon), lab);
          int i = 1;
          while (i < m && ++lab[i] == horizon + 1) lab[i++] = 1;
          if (i == m) break;
        }
      }

      {
        std::lock_guard<std::mutex> lk(merge_mu);
        merge_record(b, rec);
      }
      blocks_done.fetch_add(1);
      if (ckpt.is_open()) {
        std::lock_guard<std::mutex> lk(ckpt_mu);
        ckpt << ld::encode_record(b, rec) << '\n';
        ckpt.flush();
      }
    }
  };

  {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (blocks_done.load() < blocks.size()) {
    res.cancelled = true;
    res.exact = false;
  }

  res.evaluated = global_evaluated;
  if (global_min != ld::kDisconnected) res.min_cost = ExtDistance::of(global_min);

  // ---- counts ----
  if (global_min == ld::kDisconnected) {
    res.raw_count = res.orbit_count = 0;
  } else if (trivial_group) {
    res.raw_count = global_count;
    res.orbit_count = global_count;
    res.counts_exact = !res.cancelled;
  } else {
    // Orbit representatives via canonical forms; full-space count via
    // orbit-stabilizer. Exact as long as every optimum was retained.
    std::set<std::vector<TimeLabel>> canons;
    for (const auto& o : global_optima) {
      std::vector<TimeLabel> canon = o;
      for (const auto& g : group) canon = std::min(canon, ld::act(o, g));
      canons.insert(std::move(canon));
    }
    res.orbit_count = canons.size();
    std::uint64_t raw = 0;
    for (const auto& c : canons) {
      std::uint64_t stab = 0;
      for (const auto& g : group)
        if (ld::act(c, g) == c) ++stab;
      raw += group.size() / stab;
    }
    res.raw_count = raw;
    res.counts_exact = !optima_truncated && !res.cancelled;
  }

  // ---- witnesses: deterministic order, re-verified by the engine ----
  {
    std::set<std::vector<TimeLabel>> unique(global_optima.begin(), global_optima.end());
    for (const auto& w : unique) {
      if (res.witnesses.size() >= req.witness_cap) break;
      res.witnesses.push_back(w);
    }
    for (const auto& w : res.witnesses) {
      TemporalGraph g(n);
      for (int i = 0; i < m; ++i) g.add_label(edges[i].first, edges[i].second, w[i]);
      const ExtDistance c = communication_cost(g, req.semantics);
      if (c != res.min_cost)
        throw std::logic_error("search_optimal_labelling: witness failed re-verification");
    }
  }

  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return res;
}

}  // namespace dncg
