// Command-line front end: instance generators, cost reports, Nash
// certification, labelling search and formula reports, with reproducible
// run manifests next to every output file.

#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dncg/analysis.hpp"
#include "dncg/constructions.hpp"
#include "dncg/io.hpp"
#include "dncg/labelling_search.hpp"
#include "dncg/nash.hpp"

namespace {

// exit codes (also documented in the README):
//   0 success / certified        1 nash: refuted       2 nash: inconclusive
//   3 disconnected or cancelled  4 input/parse error   5 bad parameters
constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitParse = 4;
constexpr int kExitParams = 5;

std::atomic<bool> g_cancel{false};

void handle_signal(int) { g_cancel.store(true); }

using namespace dncg;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void write_manifest(const std::string& out_path, const std::string& command,
                    const json& parameters, const json& input_hashes, double elapsed,
                    const json& summary) {
  const json m = run_manifest(command, parameters, input_hashes, elapsed, summary);
  write_file(out_path + ".manifest.json", m.dump(2) + "\n");
}

DistanceSemantics parse_semantics(const std::string& s) {
  if (s == "shortest") return DistanceSemantics::Shortest;
  if (s == "foremost") return DistanceSemantics::Foremost;
  if (s == "fastest") return DistanceSemantics::Fastest;
  throw CLI::ValidationError("--semantics", "expected shortest|foremost|fastest");
}

Direction parse_direction(const std::string& s) {
  if (s == "out") return Direction::Out;
  if (s == "in") return Direction::In;
  throw CLI::ValidationError("--direction", "expected out|in");
}

int cmd_gen(const std::string& family, int param, const std::string& out,
            const std::string& dot) {
  Timer timer;
  Instance inst;
  try {
    inst = make_instance(family, param);
  } catch (const std::invalid_argument& e) {
    std::cerr << "gen: " << e.what() << "\n";
    return kExitParams;
  }
  const std::string graph_path = out + ".graph.json";
  const std::string graph_text = graph_to_json(inst.graph).dump(2) + "\n";
  write_file(graph_path, graph_text);
  json hashes{{"graph", fnv1a64_hex(graph_text)}};
  json summary{{"name", inst.name},
               {"n", inst.graph.vertex_count()},
               {"edges", inst.graph.edges().size()},
               {"labels", inst.graph.label_count()}};
  if (inst.profile) {
    const std::string profile_path = out + ".profile.json";
    const std::string profile_text = profile_to_json(*inst.profile).dump(2) + "\n";
    write_file(profile_path, profile_text);
    hashes["profile"] = fnv1a64_hex(profile_text);
  }
  if (!dot.empty()) write_file(dot, to_dot(inst.graph, "g"));
  write_manifest(graph_path, "gen",
                 json{{"family", family}, {"param", param}, {"out", out}}, hashes,
                 timer.seconds(), summary);
  std::cout << "wrote " << graph_path << (inst.profile ? " and profile" : "") << "\n";
  return kExitOk;
}

int cmd_cost(const std::string& graph_path, const std::string& profile_path,
             const std::string& alpha_text, const std::string& semantics_text,
             const std::string& direction_text, const std::string& out,
             const std::string& dot) {
  Timer timer;
  GameConfig cfg;
  cfg.alpha = parse_rational(alpha_text);
  cfg.semantics = parse_semantics(semantics_text);
  cfg.direction = parse_direction(direction_text);

  json report;
  json hashes = json::object();
  ExtCost total = ExtCost::infinite();
  if (!profile_path.empty()) {
    const std::string text = read_file(profile_path);
    const StrategyProfile p = profile_from_json(json::parse(text));
    hashes["profile"] = fnv1a64_hex(text);
    const TemporalGraph g = communication_graph(p);
    if (!dot.empty()) write_file(dot, to_dot(g, "g"));
    total = social_cost_profile(p, cfg);
    json players = json::array();
    for (int v = 0; v < p.player_count(); ++v) {
      const CostBreakdown c = individual_cost(p, v, cfg);
      players.push_back({{"player", v},
                         {"construction", to_string(c.construction)},
                         {"communication",
                          c.communication.is_infinite() ? json("inf") : json(c.communication.value())},
                         {"total", cost_to_json(c.total)}});
    }
    report["players"] = players;
    report["construction"] =
        to_string(cfg.alpha * Rational(BigInt(p.purchase_count()), BigInt(1)));
    const ExtDistance comm = communication_cost(g, cfg.semantics);
    report["communication"] = comm.is_infinite() ? json("inf") : json(comm.value());
  } else {
    const std::string text = read_file(graph_path);
    const TemporalGraph g = graph_from_json(json::parse(text));
    hashes["graph"] = fnv1a64_hex(text);
    if (!dot.empty()) write_file(dot, to_dot(g, "g"));
    total = social_cost_graph(g, cfg);
    report["construction"] =
        to_string(cfg.alpha * Rational(BigInt(g.label_count()), BigInt(1)));
    const ExtDistance comm = communication_cost(g, cfg.semantics);
    report["communication"] = comm.is_infinite() ? json("inf") : json(comm.value());
  }
  report["total"] = cost_to_json(total);
  report["alpha"] = to_string(cfg.alpha);
  report["semantics"] = semantics_text;
  report["direction"] = direction_text;

  std::cout << report.dump(2) << "\n";
  if (!out.empty()) {
    write_file(out, report.dump(2) + "\n");
    write_manifest(out, "cost",
                   json{{"alpha", alpha_text},
                        {"semantics", semantics_text},
                        {"direction", direction_text}},
                   hashes, timer.seconds(), json{{"total", cost_to_json(total)}});
  }
  return total.is_infinite() ? kExitDisconnected : kExitOk;
}

int cmd_nash(const std::string& profile_path, const std::string& alpha_text,
             const std::string& semantics_text, const std::string& direction_text,
             const std::string& mode, int budget, TimeLabel horizon,
             const std::string& out) {
  Timer timer;
  GameConfig cfg;
  cfg.alpha = parse_rational(alpha_text);
  cfg.semantics = parse_semantics(semantics_text);
  cfg.direction = parse_direction(direction_text);
  cfg.deviation_budget = budget;
  cfg.label_horizon = horizon;

  const std::string text = read_file(profile_path);
  const StrategyProfile p = profile_from_json(json::parse(text));

  const bool exact = mode == "exact";
  if (!exact && mode != "budget") {
    std::cerr << "nash: --mode must be exact or budget\n";
    return kExitParams;
  }
  if (exact) {
    const int n = p.player_count();
    const Rational bound(BigInt(n - 1) * BigInt(n - 1), BigInt(1));
    if (!(cfg.alpha > bound)) {
      std::cerr << "nash: exact mode requires alpha > (n-1)^2 = " << to_string(bound)
                << " so that no optimal strategy can exceed the current size; "
                << "got alpha = " << alpha_text << ". Use --mode budget instead.\n";
      return kExitParams;
    }
  }

  const NashOutcome o = certify_nash(p, cfg, exact);
  const json report = nash_outcome_to_json(o, cfg);
  std::cout << report.dump(2) << "\n";
  if (!out.empty()) {
    write_file(out, report.dump(2) + "\n");
    write_manifest(out, "nash",
                   json{{"alpha", alpha_text},
                        {"semantics", semantics_text},
                        {"direction", direction_text},
                        {"mode", mode},
                        {"budget", budget}},
                   json{{"profile", fnv1a64_hex(text)}}, timer.seconds(),
                   json{{"outcome", to_string(o.status)}});
  }
  switch (o.status) {
    case NashStatus::Certified: return kExitOk;
    case NashStatus::Refuted: return kExitRefuted;
    case NashStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitParams;
}

int cmd_search(const std::string& graph_path, const std::string& semantics_text,
               const std::string& space_text, TimeLabel horizon,
               const std::string& symmetry, int jobs, const std::string& checkpoint,
               std::uint64_t sample, std::uint64_t seed, bool allow_large,
               const std::string& out) {
  Timer timer;
  const std::string text = read_file(graph_path);

  LabellingSearchRequest req;
  req.union_graph = graph_from_json(json::parse(text));
  req.semantics = parse_semantics(semantics_text);
  req.horizon = horizon;
  req.jobs = jobs;
  req.checkpoint_path = checkpoint;
  req.sample = sample;
  req.seed = seed;
  req.allow_large = allow_large;
  req.cancel = &g_cancel;
  if (space_text == "perm") req.space = LabellingSpace::Permutations;
  else if (space_text == "functions") req.space = LabellingSpace::Functions;
  else {
    std::cerr << "search: --space must be perm or functions\n";
    return kExitParams;
  }
  if (symmetry == "hypercube") {
    const int n = req.union_graph.vertex_count();
    int d = 0;
    while ((1 << d) < n) ++d;
    if ((1 << d) != n) {
      std::cerr << "search: --symmetry hypercube requires 2^d vertices\n";
      return kExitParams;
    }
    req.automorphism_generators = hypercube_automorphism_generators(d);
  } else if (symmetry != "none") {
    std::cerr << "search: --symmetry must be none or hypercube\n";
    return kExitParams;
  }

  std::signal(SIGINT, handle_signal);
  const LabellingSearchResult r = search_optimal_labelling(req);

  const json jr = search_result_to_json(r);
  std::cout << jr.dump(2) << "\n";
  if (!out.empty()) {
    write_file(out, jr.dump(2) + "\n");
    // CSV summary next to the JSON result
    std::ostringstream csv;
    csv << "semantics,space,min_cost,raw_count,orbit_count,counts_exact,evaluated\n"
        << r.semantics << ',' << r.space << ','
        << (r.min_cost.is_infinite() ? std::string("inf") : std::to_string(r.min_cost.value()))
        << ',' << r.raw_count << ',' << r.orbit_count << ',' << (r.counts_exact ? 1 : 0) << ','
        << r.evaluated << "\n";
    write_file(out + ".csv", csv.str());
    write_manifest(out, "search",
                   json{{"semantics", semantics_text},
                        {"space", space_text},
                        {"symmetry", symmetry},
                        {"jobs", jobs},
                        {"sample", sample},
                        {"seed", seed}},
                   json{{"graph", fnv1a64_hex(text)}}, timer.seconds(),
                   json{{"min_cost",
                         r.min_cost.is_infinite() ? json("inf") : json(r.min_cost.value())},
                        {"raw_count", r.raw_count},
                        {"orbit_count", r.orbit_count}});
  }
  if (r.cancelled) {
    std::cerr << "search: cancelled; checkpoint flushed\n";
    return kExitDisconnected;
  }
  return kExitOk;
}

int cmd_report(const std::string& kind, const std::string& alpha_text, int n_min, int n_max,
               const std::string& family, int param, const std::string& out) {
  Timer timer;
  const Rational alpha = parse_rational(alpha_text);
  std::ostringstream csv;
  json summary;

  if (kind == "poa-formula") {
    csv << "alpha,n,value,value_decimal,error\n";
    for (int n = n_min; n <= n_max; ++n) {
      csv << alpha_text << ',' << n << ',';
      try {
        const Rational v = poa_upper_formula(alpha, n);
        csv << to_string(v) << ',' << std::setprecision(12) << to_double(v) << ",\n";
      } catch (const std::exception& e) {
        csv << ",," << e.what() << "\n";
      }
    }
  } else if (kind == "optimum") {
    csv << "alpha,n,optimal_social_cost,decimal,error\n";
    for (int n = n_min; n <= n_max; ++n) {
      csv << alpha_text << ',' << n << ',';
      try {
        const Rational v = optimal_social_cost(alpha, n);
        csv << to_string(v) << ',' << std::setprecision(12) << to_double(v) << ",\n";
      } catch (const std::exception& e) {
        csv << ",," << e.what() << "\n";
      }
    }
  } else if (kind == "ratios") {
    csv << ratio_csv_header() << ",error\n";
    GameConfig cfg;
    cfg.alpha = alpha;
    try {
      const Instance inst = make_instance(family, param);
      const RatioReport r = ratio_report(inst, alpha, cfg);
      csv << ratio_csv_row(r) << ",\n";
      summary = json{{"ratio", to_string(r.ratio)}};
    } catch (const std::exception& e) {
      std::cerr << "report: " << e.what() << "\n";
      return kExitParams;
    }
  } else {
    std::cerr << "report: --kind must be poa-formula, optimum or ratios\n";
    return kExitParams;
  }

  if (out.empty()) {
    std::cout << csv.str();
  } else {
    write_file(out, csv.str());
    write_manifest(out, "report",
                   json{{"kind", kind},
                        {"alpha", alpha_text},
                        {"n_min", n_min},
                        {"n_max", n_max},
                        {"family", family},
                        {"param", param}},
                   json::object(), timer.seconds(), summary);
    std::cout << "wrote " << out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic network creation game toolkit"};
  app.require_subcommand(1);

  std::string family, out, dot, graph_path, profile_path;
  std::string alpha = "1", semantics = "shortest", direction = "out";
  std::string mode = "budget", space = "perm", symmetry = "none", checkpoint, kind;
  int param = 0, budget = 1, jobs = 4, n_min = 4, n_max = 4;
  TimeLabel horizon = 0;
  std::uint64_t sample = 0, seed = 0;
  bool allow_large = false;

  auto* gen = app.add_subcommand("gen", "generate a named instance");
  gen->add_option("--family", family, "complete|biclique|hypercube|dfan|figure1")->required();
  gen->add_option("--n", param, "vertex count (complete/biclique/dfan)");
  gen->add_option("--dim", param, "dimension (hypercube)");
  gen->add_option("--out", out, "output path prefix")->required();
  gen->add_option("--dot", dot, "also write a DOT rendering");

  auto* cost = app.add_subcommand("cost", "evaluate game costs");
  cost->add_option("--graph", graph_path, "temporal graph json");
  cost->add_option("--profile", profile_path, "strategy profile json");
  cost->add_option("--alpha", alpha, "atomic cost, exact fraction like 3/2")->required();
  cost->add_option("--semantics", semantics, "shortest|foremost|fastest");
  cost->add_option("--direction", direction, "out|in");
  cost->add_option("--out", out, "write the report json here");
  cost->add_option("--dot", dot, "also write a DOT rendering");

  auto* nash = app.add_subcommand("nash", "certify or refute a Nash equilibrium");
  nash->add_option("--profile", profile_path, "strategy profile json")->required();
  nash->add_option("--alpha", alpha, "atomic cost, exact fraction")->required();
  nash->add_option("--semantics", semantics, "shortest|foremost|fastest");
  nash->add_option("--direction", direction, "out|in");
  nash->add_option("--mode", mode, "exact|budget");
  nash->add_option("--budget", budget, "max purchases changed per deviation");
  nash->add_option("--horizon", horizon, "widen the candidate label range");
  nash->add_option("--out", out, "write the outcome json here");

  auto* search = app.add_subcommand("search", "exhaustive optimal labelling search");
  search->add_option("--graph", graph_path, "union graph json")->required();
  search->add_option("--semantics", semantics, "shortest|foremost|fastest");
  search->add_option("--space", space, "perm|functions");
  search->add_option("--horizon", horizon, "label universe for the functions space");
  search->add_option("--symmetry", symmetry, "none|hypercube");
  search->add_option("--jobs", jobs, "worker threads");
  search->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
  search->add_option("--sample", sample, "random sampling instead of exhaustion (non-exact)");
  search->add_option("--seed", seed, "seed for --sample");
  search->add_flag("--allow-large", allow_large, "override the search-space guard");
  search->add_option("--out", out, "write the result json here");

  auto* report = app.add_subcommand("report", "CSV tables for formulas and ratios");
  report->add_option("--kind", kind, "poa-formula|optimum|ratios")->required();
  report->add_option("--alpha", alpha, "atomic cost, exact fraction")->required();
  report->add_option("--n-min", n_min, "first n");
  report->add_option("--n-max", n_max, "last n");
  report->add_option("--family", family, "instance family for ratios");
  report->add_option("--param", param, "instance parameter for ratios");
  report->add_option("--out", out, "write the CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(family, param, out, dot);
    if (cost->parsed()) {
      if (graph_path.empty() == profile_path.empty()) {
        std::cerr << "cost: pass exactly one of --graph / --profile\n";
        return kExitParams;
      }
      return cmd_cost(graph_path, profile_path, alpha, semantics, direction, out, dot);
    }
    if (nash->parsed())
      return cmd_nash(profile_path, alpha, semantics, direction, mode, budget, horizon, out);
    if (search->parsed())
      return cmd_search(graph_path, semantics, space, horizon, symmetry, jobs, checkpoint,
                        sample, seed, allow_large, out);
    if (report->parsed())
      return cmd_report(kind, alpha, n_min, n_max, family, param, out);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    // file/format problems exit 4, semantic parameter problems exit 5
    const std::string msg = e.what();
    if (msg.find("cannot open") != std::string::npos ||
        msg.find("json") != std::string::npos || msg.find("fraction") != std::string::npos)
      return kExitParse;
    return kExitParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParams;
  }
  return kExitParams;
}
