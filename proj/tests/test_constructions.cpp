#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dncg/constructions.hpp"
#include "dncg/distances.hpp"

using namespace dncg;

TEST_CASE("complete instances") {
  const auto k8 = complete(8);
  CHECK(k8.graph.edges().size() == 28);
  CHECK(k8.graph.has_simple_labelling());
  CHECK(temporal_diameter(k8.graph, DistanceSemantics::Shortest).value() == 1);
  const auto k1 = complete(1);
  CHECK(k1.graph.edges().empty());
  CHECK(is_temporally_connected(k1.graph));
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("biclique labelling satisfies the hub and leaf constraints") {
  for (int n : {4, 5, 8, 10}) {
    const auto inst = biclique_optimal(n);
    CHECK(static_cast<int>(inst.graph.edges().size()) == 2 * n - 4);
    CHECK(inst.graph.has_simple_labelling());
    CHECK(temporal_diameter(inst.graph, DistanceSemantics::Shortest).value() == 2);

    std::set<TimeLabel> a_labels, b_labels;
    for (int leaf = 2; leaf < n; ++leaf) {
      const TimeLabel la = inst.graph.find_edge(0, leaf)->labels[0];
      const TimeLabel lb = inst.graph.find_edge(1, leaf)->labels[0];
      a_labels.insert(la);
      b_labels.insert(lb);
      CHECK(la + lb == static_cast<TimeLabel>(n - 1));
    }
    // each hub sees every label 1..n-2 exactly once
    CHECK(a_labels.size() == static_cast<std::size_t>(n - 2));
    CHECK(*a_labels.begin() == 1);
    CHECK(*a_labels.rbegin() == static_cast<TimeLabel>(n - 2));
    CHECK(a_labels == b_labels);
  }
  CHECK_THROWS_AS(biclique_optimal(3), std::invalid_argument);
}

TEST_CASE("biclique at n=8 matches the drawn labelling") {
  const auto inst = biclique_optimal(8);
  // leaves 2..7 carry hub-a labels 1..6 and hub-b labels 6..1
  for (int leaf = 2; leaf < 8; ++leaf) {
    CHECK(inst.graph.find_edge(0, leaf)->labels[0] == static_cast<TimeLabel>(leaf - 1));
    CHECK(inst.graph.find_edge(1, leaf)->labels[0] == static_cast<TimeLabel>(8 - leaf));
  }
  // purchases: hubs buy their label-6 edges, the covered leaves answer at 1
  CHECK(inst.profile->strategy(0) == std::vector<Purchase>{{7, 6}});
  CHECK(inst.profile->strategy(1) == std::vector<Purchase>{{2, 6}});
  CHECK(inst.profile->strategy(7) == std::vector<Purchase>{{1, 1}});
  CHECK(inst.profile->strategy(2) == std::vector<Purchase>{{0, 1}});
  CHECK(inst.profile->strategy(3) == std::vector<Purchase>{{0, 2}, {1, 5}});
}

TEST_CASE("hypercube bit labelling") {
  const auto q3 = hypercube(3);
  CHECK(q3.graph.edges().size() == 12);
  for (const auto& e : q3.graph.edges()) {
    REQUIRE(e.labels.size() == 1);
    CHECK(e.labels[0] >= 1);
    CHECK(e.labels[0] <= 3);
    // label = 1-based index of the differing bit
    CHECK((e.u ^ e.v) == (1 << (e.labels[0] - 1)));
  }
  CHECK(temporal_diameter(q3.graph, DistanceSemantics::Shortest).value() == 3);

  const auto q1 = hypercube(1);
  REQUIRE(q1.graph.edges().size() == 1);
  CHECK(q1.graph.edges()[0].labels == std::vector<TimeLabel>{1});

  CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
  CHECK_THROWS_AS(hypercube(11), std::invalid_argument);
}

TEST_CASE("hypercube communication cost follows the closed form") {
  for (int d = 1; d <= 4; ++d) {
    const auto inst = hypercube(d);
    const long long expected = static_cast<long long>(d) << (2 * d - 1);
    CHECK(communication_cost(inst.graph, DistanceSemantics::Shortest).value() == expected);
  }
}

TEST_CASE("every ordered pair of the four-cube has a unique temporal path") {
  const auto q4 = hypercube(4);
  int pairs = 0;
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v) {
      if (u == v) continue;
      ++pairs;
      REQUIRE(count_temporal_paths(q4.graph, u, v) == 1);
    }
  CHECK(pairs == 240);
}

TEST_CASE("hypercube automorphism generators map the edge set onto itself") {
  for (int d : {1, 2, 3}) {
    const auto inst = hypercube(d);
    for (const auto& perm : hypercube_automorphism_generators(d)) {
      REQUIRE(static_cast<int>(perm.size()) == (1 << d));
      for (const auto& e : inst.graph.edges())
        CHECK(inst.graph.find_edge(perm[e.u], perm[e.v]) != nullptr);
    }
  }
}

TEST_CASE("diminished fan shape, labels and purchases") {
  const auto inst = diminished_fan(8);
  CHECK(inst.graph.edges().size() == 12);  // 2n-4
  CHECK(temporal_diameter(inst.graph, DistanceSemantics::Shortest).value() == 6);

  CHECK(inst.graph.find_edge(0, 1)->labels[0] == 12);  // 2n-4
  CHECK(inst.graph.find_edge(0, 2) == nullptr);        // the removed chord
  for (int i = 3; i < 8; ++i)
    CHECK(inst.graph.find_edge(0, i)->labels[0] == static_cast<TimeLabel>(8 - i));
  for (int i = 1; i < 7; ++i)
    CHECK(inst.graph.find_edge(i, i + 1)->labels[0] == static_cast<TimeLabel>(5 + i));

  // degrees: the hub has n-2, v1 and v2 have 2, the rest have 3
  std::vector<int> deg(8, 0);
  for (const auto& e : inst.graph.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  CHECK(deg[0] == 6);
  CHECK(deg[1] == 2);
  CHECK(deg[2] == 2);
  for (int i = 3; i < 7; ++i) CHECK(deg[i] == 3);

  CHECK(inst.profile->strategy(0).empty());  // the hub buys nothing
  CHECK(inst.profile->strategy(1) == std::vector<Purchase>{{0, 12}, {2, 6}});
  CHECK(inst.profile->strategy(7) == std::vector<Purchase>{{0, 1}});

  CHECK_THROWS_AS(diminished_fan(4), std::invalid_argument);
  CHECK_NOTHROW(diminished_fan(5));
}

TEST_CASE("figure fixture transcription") {
  const auto inst = figure1_fixture();
  CHECK(inst.graph.vertex_count() == 8);
  CHECK(inst.graph.edges().size() == 12);
  CHECK(inst.graph.has_simple_labelling());
  // vertex a holds exactly the purchases for the edges labelled 6, 7, 8, 11
  CHECK(inst.profile->strategy(kFigure1VertexA) ==
        std::vector<Purchase>{{0, 6}, {5, 7}, {6, 11}, {7, 8}});
  // outer square
  CHECK(inst.graph.find_edge(0, 1)->labels[0] == 8);
  CHECK(inst.graph.find_edge(2, 3)->labels[0] == 1);
  // total purchases = total labels (nothing bought twice)
  std::size_t purchases = 0;
  for (int v = 0; v < 8; ++v) purchases += inst.profile->strategy(v).size();
  CHECK(purchases == inst.graph.label_count());
}

TEST_CASE("family dispatch") {
  CHECK(make_instance("hypercube", 3).name == "Q_3");
  CHECK(make_instance("complete", 5).name == "K_5");
  CHECK(make_instance("biclique", 6).name == "K_{2,4}");
  CHECK(make_instance("dfan", 8).name == "dF_7");
  CHECK(make_instance("figure1", 0).name == "figure1");
  CHECK_THROWS_AS(make_instance("petersen", 10), std::invalid_argument);
}
