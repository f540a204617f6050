#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dncg/game.hpp"
#include "dncg/temporal_graph.hpp"

namespace dncg {

// A named labelled instance, optionally together with the strategy profile
// that realizes it as a communication graph.
struct Instance {
  TemporalGraph graph;
  std::optional<StrategyProfile> profile;
  std::string name;
  int param = 0;  // n, or d for hypercubes
};

// K_n, every edge labelled 1. Diameter 1: longer temporal paths would need
// strictly increasing labels. The lower-indexed endpoint buys each edge;
// any assignment gives the same graph.
inline Instance complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
  Instance inst{TemporalGraph(n), StrategyProfile(n), "K_" + std::to_string(n), n};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      inst.graph.add_label(u, v, 1);
      inst.profile->add(u, {v, 1});
    }
  return inst;
}

// K_{2,n-2} with hubs a=0, b=1 and leaves 2..n-1. Leaf with hub-a label i
// carries hub-b label n-1-i, so each hub sees labels 1..n-2 exactly once
// and every leaf's two labels sum to n-1. Purchases: a buys its label-(n-2)
// edge, b likewise, the two leaves covered that way buy their opposite
// edge at label 1, and every other leaf buys both of its edges.
inline Instance biclique_optimal(int n) {
  if (n < 4) throw std::invalid_argument("biclique_optimal: n >= 4 required");
  Instance inst{TemporalGraph(n), StrategyProfile(n), "K_{2," + std::to_string(n - 2) + "}", n};
  auto& g = inst.graph;
  auto& s = *inst.profile;
  for (int j = 2; j < n; ++j) {
    const TimeLabel i = static_cast<TimeLabel>(j - 1);  // 1..n-2
    g.add_label(0, j, i);
    g.add_label(1, j, static_cast<TimeLabel>(n - 1) - i);
  }
  const int c = n - 1;  // leaf with a-label n-2 (so b-label 1)
  const int d = 2;      // leaf with a-label 1 (so b-label n-2)
  s.add(0, {c, static_cast<TimeLabel>(n - 2)});
  s.add(1, {d, static_cast<TimeLabel>(n - 2)});
  s.add(c, {1, 1});
  s.add(d, {0, 1});
  for (int j = 2; j < n; ++j) {
    if (j == c || j == d) continue;
    const TimeLabel i = static_cast<TimeLabel>(j - 1);
    s.add(j, {0, i});
    s.add(j, {1, static_cast<TimeLabel>(n - 1) - i});
  }
  return inst;
}

// Q_d on 2^d vertices identified with their binary numbers; the edge between
// two vertices differing in one bit is labelled with that bit's position,
// 1-based from the least significant bit. The lower-numbered endpoint buys.
inline Instance hypercube(int d) {
  if (d < 1) throw std::invalid_argument("hypercube: d >= 1 required");
  if (d > 10) throw std::invalid_argument("hypercube: d > 10 exceeds size guard");
  const int n = 1 << d;
  Instance inst{TemporalGraph(n), StrategyProfile(n), "Q_" + std::to_string(d), d};
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b) {
      const int v = u ^ (1 << b);
      if (u < v) {
        inst.graph.add_label(u, v, static_cast<TimeLabel>(b + 1));
        inst.profile->add(u, {v, static_cast<TimeLabel>(b + 1)});
      }
    }
  return inst;
}

// Vertex permutations generating the automorphism group of the hypercube
// union graph (bit transpositions and one bit flip; order d! * 2^d).
inline std::vector<std::vector<int>> hypercube_automorphism_generators(int d) {
  const int n = 1 << d;
  std::vector<std::vector<int>> gens;
  for (int b = 0; b + 1 < d; ++b) {  // swap bits b and b+1
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) {
      int w = v & ~((1 << b) | (1 << (b + 1)));
      if (v & (1 << b)) w |= 1 << (b + 1);
      if (v & (1 << (b + 1))) w |= 1 << b;
      perm[v] = w;
    }
    gens.push_back(std::move(perm));
  }
  std::vector<int> flip(n);
  for (int v = 0; v < n; ++v) flip[v] = v ^ 1;
  gens.push_back(std::move(flip));
  return gens;
}

// Diminished fan dF_{n-1}: hub v0 adjacent to v1 and v3..v_{n-1}; the path
// v1..v_{n-1} along the outside. Labels: path edge v_i v_{i+1} gets n-3+i,
// hub edge v0 v1 gets 2n-4, hub edge v0 v_i gets n-i for i >= 3. Each path
// edge is bought by its lower-indexed endpoint; every hub neighbour buys
// its hub edge; v0 buys nothing.
inline Instance diminished_fan(int n) {
  if (n < 5) throw std::invalid_argument("diminished_fan: n >= 5 required");
  Instance inst{TemporalGraph(n), StrategyProfile(n), "dF_" + std::to_string(n - 1), n};
  auto& g = inst.graph;
  auto& s = *inst.profile;
  for (int i = 1; i < n - 1; ++i) {
    const TimeLabel t = static_cast<TimeLabel>(n - 3 + i);
    g.add_label(i, i + 1, t);
    s.add(i, {i + 1, t});
  }
  g.add_label(0, 1, static_cast<TimeLabel>(2 * n - 4));
  s.add(1, {0, static_cast<TimeLabel>(2 * n - 4)});
  for (int i = 3; i < n; ++i) {
    const TimeLabel t = static_cast<TimeLabel>(n - i);
    g.add_label(0, i, t);
    s.add(i, {0, t});
  }
  return inst;
}

namespace detail {

// Transcribed 8-vertex fixture: an outer square, an inner square with one
// diagonal, and three connector edges. Kept as a data table so every entry
// can be audited against the drawing position it came from; the buyer is
// the vertex the edge's arrow originates from.
struct Figure1Edge {
  int u, v;
  TimeLabel label;
  int buyer;
  std::string_view position;
};

// vertex ids: 0=OTL 1=OTR 2=OBL 3=OBR (outer), 4=ITL(a) 5=ITR 6=IBL 7=IBR (inner)
inline constexpr std::array<Figure1Edge, 12> kFigure1Edges{{
    {0, 1, 8, 1, "outer top, OTL-OTR, arrow into OTL"},
    {0, 2, 10, 0, "outer left, OTL-OBL, arrow into OBL"},
    {1, 3, 9, 1, "outer right, OTR-OBR, arrow into OBR"},
    {2, 3, 1, 3, "outer bottom, OBL-OBR, arrow into OBL"},
    {4, 5, 7, 4, "inner top, ITL-ITR, arrow into ITR"},
    {4, 6, 11, 4, "inner left, ITL-IBL, arrow into IBL"},
    {5, 7, 4, 7, "inner right, ITR-IBR, arrow into ITR"},
    {6, 7, 3, 6, "inner bottom, IBL-IBR, arrow into IBR"},
    {4, 7, 8, 4, "inner diagonal, ITL-IBR, arrow into IBR"},
    {0, 4, 6, 4, "connector OTL-ITL, arrow into OTL"},
    {1, 5, 5, 1, "connector OTR-ITR, arrow into ITR"},
    {2, 6, 2, 2, "connector OBL-IBL, arrow into IBL"},
}};

}  // namespace detail

// The 8-vertex, 12-edge asymmetry fixture with its strategy profile.
// Vertex 4 is the distinguished vertex "a".
inline Instance figure1_fixture() {
  Instance inst{TemporalGraph(8), StrategyProfile(8), "figure1", 8};
  for (const auto& e : detail::kFigure1Edges) {
    inst.graph.add_label(e.u, e.v, e.label);
    const int other = (e.buyer == e.u) ? e.v : e.u;
    inst.profile->add(e.buyer, {other, e.label});
  }
  return inst;
}

inline constexpr int kFigure1VertexA = 4;

inline Instance make_instance(const std::string& family, int param) {
  if (family == "complete") return complete(param);
  if (family == "biclique") return biclique_optimal(param);
  if (family == "hypercube") return hypercube(param);
  if (family == "dfan") return diminished_fan(param);
  if (family == "figure1") return figure1_fixture();
  throw std::invalid_argument("unknown instance family: " + family);
}

}  // namespace dncg
