#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dncg/analysis.hpp"
#include "dncg/game.hpp"
#include "dncg/labelling_search.hpp"
#include "dncg/nash.hpp"
#include "dncg/rational.hpp"
#include "dncg/temporal_graph.hpp"

namespace dncg {

using nlohmann::json;

// ---------- temporal graph ----------
// {"n": int, "edges": [{"u": int, "v": int, "labels": [int, ...]}, ...]}

inline json graph_to_json(const TemporalGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"labels", e.labels}});  // labels kept sorted
  }
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline TemporalGraph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json: expected keys n and edges");
  TemporalGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    const int u = e.at("u").get<int>();
    const int v = e.at("v").get<int>();
    if (e.at("labels").empty())
      throw std::invalid_argument("graph json: edge with empty label set");
    for (const auto& t : e.at("labels")) g.add_label(u, v, t.get<TimeLabel>());
  }
  g.validate();
  return g;
}

// ---------- strategy profile ----------
// {"n": int, "strategies": [[[endpoint, label], ...], ...]} indexed by player

inline json profile_to_json(const StrategyProfile& p) {
  json strategies = json::array();
  for (int v = 0; v < p.player_count(); ++v) {
    json s = json::array();
    for (const auto& pur : p.strategy(v)) s.push_back({pur.endpoint, pur.label});
    strategies.push_back(s);
  }
  return json{{"n", p.player_count()}, {"strategies", strategies}};
}

inline StrategyProfile profile_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("strategies"))
    throw std::invalid_argument("profile json: expected keys n and strategies");
  const int n = j.at("n").get<int>();
  StrategyProfile p(n);
  const auto& all = j.at("strategies");
  if (static_cast<int>(all.size()) != n)
    throw std::invalid_argument("profile json: strategies must have one entry per player");
  for (int v = 0; v < n; ++v)
    for (const auto& pur : all[v]) {
      if (!pur.is_array() || pur.size() != 2)
        throw std::invalid_argument("profile json: purchase must be [endpoint, label]");
      p.add(v, {pur[0].get<int>(), pur[1].get<TimeLabel>()});
    }
  p.validate();
  return p;
}

// ---------- nash outcome ----------

inline json cost_to_json(const ExtCost& c) {
  if (c.is_infinite()) return "inf";
  return to_string(c.value());
}

inline json nash_outcome_to_json(const NashOutcome& o, const GameConfig& cfg) {
  json players = json::array();
  for (const auto& s : o.player_stats)
    players.push_back({{"player", s.player},
                       {"candidates", s.candidates},
                       {"improvement_found", s.improvement_found}});
  json j{{"outcome", to_string(o.status)},
         {"mode", o.mode},
         {"alpha", to_string(cfg.alpha)},
         {"direction", to_string(cfg.direction)},
         {"semantics", to_string(cfg.semantics)},
         {"players", players}};
  if (o.mode == "budget") j["budget"] = o.budget;
  if (o.witness) {
    json strat = json::array();
    for (const auto& p : o.witness->strategy) strat.push_back({p.endpoint, p.label});
    j["witness"] = {{"player", o.witness->player},
                    {"strategy", strat},
                    {"old_cost", cost_to_json(o.witness->old_cost)},
                    {"new_cost", cost_to_json(o.witness->new_cost)}};
  }
  return j;
}

// ---------- labelling search result ----------

inline json search_result_to_json(const LabellingSearchResult& r) {
  json edges = json::array();
  for (auto [u, v] : r.edge_order) edges.push_back({u, v});
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(w);
  return json{{"space", r.space},
              {"semantics", r.semantics},
              {"exact", r.exact},
              {"cancelled", r.cancelled},
              {"min_cost", r.min_cost.is_infinite() ? json("inf") : json(r.min_cost.value())},
              {"raw_count", r.raw_count},
              {"orbit_count", r.orbit_count},
              {"counts_exact", r.counts_exact},
              {"group_order", r.group_order},
              {"evaluated", r.evaluated},
              {"blocks_total", r.blocks_total},
              {"blocks_resumed", r.blocks_resumed},
              {"elapsed_seconds", r.elapsed_seconds},
              {"edge_order", edges},
              {"witnesses", witnesses}};
}

// ---------- DOT export ----------
// One line per (edge, label) instance so every time step is visible.

inline std::string to_dot(const TemporalGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges())
    for (TimeLabel t : e.labels)
      os << "  " << e.u << " -- " << e.v << " [label=\"t=" << t << "\"];\n";
  os << "}\n";
  return os.str();
}

// ---------- CSV ----------

inline std::string ratio_csv_header() {
  return "alpha,n,instance,numerator,denominator,ratio,ratio_decimal";
}

inline std::string ratio_csv_row(const RatioReport& r) {
  std::ostringstream os;
  os << to_string(r.alpha) << ',' << r.n << ',' << r.instance << ',' << to_string(r.numerator)
     << ',' << to_string(r.denominator) << ',' << to_string(r.ratio) << ',' << std::setprecision(12)
     << to_double(r.ratio);
  return os.str();
}

// ---------- run manifest ----------

inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
  return os.str();
}

constexpr const char* kToolVersion = "0.1.0";

// Sibling metadata describing a run; data files stay schema-pure.
inline json run_manifest(const std::string& command, const json& parameters,
                         const json& input_hashes, double elapsed_seconds,
                         const json& result_summary) {
  return json{{"command", command},
              {"parameters", parameters},
              {"input_hashes", input_hashes},
              {"tool_version", kToolVersion},
              {"elapsed_seconds", elapsed_seconds},
              {"result_summary", result_summary}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace dncg
