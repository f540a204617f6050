#include <catch2/catch_amalgamated.hpp>

#include "dncg/constructions.hpp"
#include "dncg/game.hpp"
#include "dncg/sampling.hpp"

#include "support/seed.hpp"

using namespace dncg;

namespace {
GameConfig cfg_of(const char* alpha, Direction dir = Direction::Out,
                  DistanceSemantics sem = DistanceSemantics::Shortest) {
  GameConfig cfg;
  cfg.alpha = parse_rational(alpha);
  cfg.direction = dir;
  cfg.semantics = sem;
  return cfg;
}
}  // namespace

TEST_CASE("communication graph is the union of purchases") {
  StrategyProfile p(3);
  p.add(0, {1, 3});
  p.add(1, {0, 3});  // same (edge, label) bought twice: one label in the graph
  p.add(1, {2, 5});
  const TemporalGraph g = communication_graph(p);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.find_edge(0, 1)->labels == std::vector<TimeLabel>{3});
  CHECK(g.find_edge(1, 2)->labels == std::vector<TimeLabel>{5});

  CHECK_FALSE(communication_graph(StrategyProfile(4)).has_edges());

  StrategyProfile loop(2);
  loop.add(0, {0, 1});
  CHECK_THROWS_AS(communication_graph(loop), std::invalid_argument);
}

TEST_CASE("profiles of the bundled instances rebuild their graphs") {
  for (const auto& inst :
       {complete(8), biclique_optimal(8), hypercube(3), diminished_fan(8), figure1_fixture(),
        biclique_optimal(4), diminished_fan(5), hypercube(1), complete(2)}) {
    REQUIRE(inst.profile.has_value());
    CHECK(communication_graph(*inst.profile) == inst.graph);
  }
}

TEST_CASE("individual cost of an isolated player is infinite") {
  StrategyProfile p(3);
  p.add(1, {2, 1});  // player 0 has no purchases and no incident edges
  const CostBreakdown c = individual_cost(p, 0, cfg_of("5"));
  CHECK(c.construction == parse_rational("0"));
  CHECK(c.communication.is_infinite());
  CHECK(c.total.is_infinite());
}

TEST_CASE("individual costs on the asymmetry fixture") {
  const auto f = figure1_fixture();
  const CostBreakdown out = individual_cost(*f.profile, kFigure1VertexA, cfg_of("100"));
  CHECK(out.construction == parse_rational("400"));  // four purchases
  CHECK(out.communication.value() == 11);
  CHECK(out.total.value() == parse_rational("411"));
  const CostBreakdown in =
      individual_cost(*f.profile, kFigure1VertexA, cfg_of("100", Direction::In));
  CHECK(in.communication.value() == 11);
}

TEST_CASE("hub of the optimal biclique pays one purchase") {
  const auto b = biclique_optimal(8);
  const CostBreakdown c = individual_cost(*b.profile, 0, cfg_of("2"));
  CHECK(c.construction == parse_rational("2"));
  CHECK(c.communication.value() == 8);
  CHECK(c.total.value() == parse_rational("10"));
}

TEST_CASE("social cost identity over random profiles") {
  Rng rng(test_support::seed(555));
  for (int it = 0; it < 200; ++it) {
    const StrategyProfile p = sample_profile(rng, 5, 3, 6);
    const GameConfig out = cfg_of("7/3");
    const GameConfig in = cfg_of("7/3", Direction::In);

    ExtCost sum_out = Rational(BigInt(0), BigInt(1));
    ExtCost sum_in = Rational(BigInt(0), BigInt(1));
    for (int v = 0; v < p.player_count(); ++v) {
      sum_out += individual_cost(p, v, out).total;
      sum_in += individual_cost(p, v, in).total;
    }
    const ExtCost social = social_cost_profile(p, out);
    CHECK(sum_out == social);
    CHECK(sum_in == social);

    // graph cost differs from the profile cost by alpha per duplicated purchase
    int dups = 0;
    for (int v = 0; v < p.player_count(); ++v)
      for (const auto& pur : p.strategy(v))
        if (v < pur.endpoint)
          for (const auto& back : p.strategy(pur.endpoint))
            if (back.endpoint == v && back.label == pur.label) ++dups;
    const ExtCost graph_cost = social_cost_graph(communication_graph(p), out);
    const ExtCost adjusted =
        graph_cost + ExtCost(out.alpha * Rational(BigInt(dups), BigInt(1)));
    CHECK(social == adjusted);
  }
}

TEST_CASE("duplicate purchases are paid twice but labelled once") {
  StrategyProfile p(2);
  p.add(0, {1, 4});
  p.add(1, {0, 4});
  const GameConfig cfg = cfg_of("3");
  CHECK(social_cost_profile(p, cfg).value() == parse_rational("8"));  // 2*3 + 2
  CHECK(social_cost_graph(communication_graph(p), cfg).value() == parse_rational("5"));
}

TEST_CASE("social graph costs of the named instances") {
  CHECK(social_cost_graph(hypercube(3).graph, cfg_of("3")).value() == parse_rational("132"));
  CHECK(social_cost_graph(complete(8).graph, cfg_of("2")).value() == parse_rational("112"));
  CHECK(social_cost_graph(biclique_optimal(8).graph, cfg_of("2")).value() ==
        parse_rational("112"));
  CHECK(social_cost_profile(*biclique_optimal(8).profile, cfg_of("2")).value() ==
        parse_rational("112"));
  CHECK(social_cost_graph(TemporalGraph(2), cfg_of("1")).is_infinite());
  CHECK(social_cost_graph(complete(4).graph, cfg_of("1")).value() == parse_rational("18"));
}

TEST_CASE("game config validation") {
  StrategyProfile p(2);
  p.add(0, {1, 1});
  GameConfig bad;
  bad.alpha = parse_rational("0");
  CHECK_THROWS_AS(individual_cost(p, 0, bad), std::invalid_argument);

  StrategyProfile out_of_range(2);
  out_of_range.add(0, {5, 1});
  CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);
}
