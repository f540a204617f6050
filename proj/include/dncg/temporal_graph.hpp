#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dncg {

// Time instant at which an edge is active. Valid labels are >= 1.
using TimeLabel = std::uint32_t;

struct TemporalEdge {
  int u = 0;  // canonical u <= v
  int v = 0;
  std::vector<TimeLabel> labels;  // sorted, unique, non-empty

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Undirected graph whose edges carry sets of integer time labels. An edge
// absent from the list means the pair is not connected at any instant.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  explicit TemporalGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("TemporalGraph: negative vertex count");
  }

  int vertex_count() const { return n_; }
  const std::vector<TemporalEdge>& edges() const { return edges_; }

  bool has_edges() const { return !edges_.empty(); }

  // Inserts label t on edge {u, v}; duplicates collapse (label sets).
  void add_label(int u, int v, TimeLabel t) {
    if (u > v) std::swap(u, v);
    auto it = lower_bound(u, v);
    if (it != edges_.end() && it->u == u && it->v == v) {
      auto pos = std::lower_bound(it->labels.begin(), it->labels.end(), t);
      if (pos == it->labels.end() || *pos != t) it->labels.insert(pos, t);
    } else {
      edges_.insert(it, TemporalEdge{u, v, {t}});
    }
  }

  const TemporalEdge* find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = lower_bound(u, v);
    if (it != edges_.end() && it->u == u && it->v == v) return &*it;
    return nullptr;
  }

  // Total number of time labels, sum over edges of |lambda(e)|.
  std::size_t label_count() const {
    std::size_t s = 0;
    for (const auto& e : edges_) s += e.labels.size();
    return s;
  }

  TimeLabel max_label() const {
    TimeLabel m = 0;
    for (const auto& e : edges_)
      if (!e.labels.empty()) m = std::max(m, e.labels.back());
    return m;
  }

  bool has_simple_labelling() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const TemporalEdge& e) { return e.labels.size() == 1; });
  }

  // Checks all representation invariants. Loops are rejected unless
  // allow_loops is set; they never appear on a temporal path either way.
  void validate(bool allow_loops = false) const {
    for (const auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw std::invalid_argument("TemporalGraph: endpoint out of range");
      if (e.u == e.v && !allow_loops)
        throw std::invalid_argument("TemporalGraph: loop on vertex " + std::to_string(e.u));
      if (e.labels.empty())
        throw std::invalid_argument("TemporalGraph: empty label set");
      for (TimeLabel t : e.labels)
        if (t < 1) throw std::invalid_argument("TemporalGraph: label must be >= 1");
    }
  }

  // Replaces every label by its rank among the distinct label values of the
  // whole graph. Shortest distances only depend on the relative order of
  // labels, so they are preserved exactly. Foremost and fastest distances
  // depend on absolute values and spans and are generally NOT preserved.
  TemporalGraph canonicalized_labels() const {
    std::vector<TimeLabel> all;
    for (const auto& e : edges_)
      all.insert(all.end(), e.labels.begin(), e.labels.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    TemporalGraph out(n_);
    for (const auto& e : edges_)
      for (TimeLabel t : e.labels) {
        auto rank = std::lower_bound(all.begin(), all.end(), t) - all.begin();
        out.add_label(e.u, e.v, static_cast<TimeLabel>(rank + 1));
      }
    return out;
  }

  friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

 private:
  std::vector<TemporalEdge>::iterator lower_bound(int u, int v) {
    return std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                            [](const TemporalEdge& e, const std::pair<int, int>& k) {
                              return std::pair{e.u, e.v} < k;
                            });
  }
  std::vector<TemporalEdge>::const_iterator lower_bound(int u, int v) const {
    return std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                            [](const TemporalEdge& e, const std::pair<int, int>& k) {
                              return std::pair{e.u, e.v} < k;
                            });
  }

  int n_ = 0;
  std::vector<TemporalEdge> edges_;
};

}  // namespace dncg
