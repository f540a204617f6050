#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dncg/distances.hpp"
#include "dncg/labelling_search.hpp"

using namespace dncg;

namespace {

TemporalGraph triangle() {
  TemporalGraph g(3);
  g.add_label(0, 1, 1);
  g.add_label(0, 2, 1);
  g.add_label(1, 2, 1);
  return g;
}

TemporalGraph square() {
  TemporalGraph g(4);
  g.add_label(0, 1, 1);
  g.add_label(1, 2, 1);
  g.add_label(2, 3, 1);
  g.add_label(0, 3, 1);
  return g;
}

// exhaustive reference over all label permutations through the public engine
std::pair<ExtDistance, std::uint64_t> brute_perm(const TemporalGraph& shape,
                                                 DistanceSemantics sem) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : shape.edges()) edges.emplace_back(e.u, e.v);
  std::vector<TimeLabel> labels(edges.size());
  std::iota(labels.begin(), labels.end(), 1);
  ExtDistance best = ExtDistance::infinite();
  std::uint64_t count = 0;
  do {
    TemporalGraph g(shape.vertex_count());
    for (std::size_t i = 0; i < edges.size(); ++i)
      g.add_label(edges[i].first, edges[i].second, labels[i]);
    const ExtDistance c = communication_cost(g, sem);
    if (c < best) {
      best = c;
      count = 0;
    }
    if (c.is_finite() && c == best) ++count;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return {best, count};
}

LabellingSearchRequest base_request(const TemporalGraph& g, DistanceSemantics sem) {
  LabellingSearchRequest req;
  req.union_graph = g;
  req.semantics = sem;
  req.jobs = 2;
  return req;
}

}  // namespace

TEST_CASE("triangle permutations: one orbit of six labellings") {
  auto req = base_request(triangle(), DistanceSemantics::Shortest);
  req.automorphism_generators = {{1, 0, 2}, {1, 2, 0}};
  const auto r = search_optimal_labelling(req);
  CHECK(r.min_cost.value() == 6);
  CHECK(r.raw_count == 6);
  CHECK(r.orbit_count == 1);
  CHECK(r.group_order == 6);
  CHECK(r.counts_exact);
  CHECK(!r.witnesses.empty());

  req.automorphism_generators.clear();
  const auto plain = search_optimal_labelling(req);
  CHECK(plain.min_cost.value() == 6);
  CHECK(plain.raw_count == 6);
  CHECK(plain.orbit_count == 6);  // trivial group: every labelling is its own orbit
  CHECK(plain.group_order == 1);
}

TEST_CASE("two-edge path admits no temporally connected permutation labelling") {
  TemporalGraph g(3);
  g.add_label(0, 1, 1);
  g.add_label(1, 2, 1);
  const auto r = search_optimal_labelling(base_request(g, DistanceSemantics::Shortest));
  CHECK(r.min_cost.is_infinite());
  CHECK(r.raw_count == 0);
  CHECK(r.orbit_count == 0);
  CHECK(r.witnesses.empty());
}

TEST_CASE("square search agrees with brute force under all semantics") {
  const TemporalGraph g = square();
  for (auto sem : {DistanceSemantics::Shortest, DistanceSemantics::Foremost,
                   DistanceSemantics::Fastest}) {
    const auto [bmin, bcount] = brute_perm(g, sem);
    INFO(to_string(sem));

    auto plain = base_request(g, sem);
    const auto r0 = search_optimal_labelling(plain);
    CHECK(r0.min_cost == bmin);
    CHECK(r0.raw_count == bcount);

    auto sym = base_request(g, sem);
    sym.automorphism_generators = {{1, 2, 3, 0}, {1, 0, 3, 2}};  // dihedral group
    const auto r1 = search_optimal_labelling(sym);
    CHECK(r1.group_order == 8);
    CHECK(r1.min_cost == bmin);
    CHECK(r1.raw_count == bcount);
    CHECK(r1.orbit_count >= 1);
    CHECK(r1.orbit_count * 1 <= bcount);
  }
}

TEST_CASE("functions space enumerates every assignment") {
  // brute force over all T^3 assignments of the triangle through the engine
  const TemporalGraph g = triangle();
  for (TimeLabel T : {TimeLabel{2}, TimeLabel{3}}) {
    ExtDistance best = ExtDistance::infinite();
    std::uint64_t count = 0;
    std::vector<TimeLabel> lab(3, 1);
    while (true) {
      TemporalGraph t(3);
      t.add_label(0, 1, lab[0]);
      t.add_label(0, 2, lab[1]);
      t.add_label(1, 2, lab[2]);
      const ExtDistance c = communication_cost(t, DistanceSemantics::Foremost);
      if (c < best) {
        best = c;
        count = 0;
      }
      if (c.is_finite() && c == best) ++count;
      std::size_t i = 0;
      while (i < 3 && ++lab[i] == T + 1) lab[i++] = 1;
      if (i == 3) break;
    }
    auto req = base_request(g, DistanceSemantics::Foremost);
    req.space = LabellingSpace::Functions;
    req.horizon = T;
    const auto r = search_optimal_labelling(req);
    INFO("T=" << T);
    CHECK(r.min_cost == best);
    CHECK(r.raw_count == count);
    CHECK(r.evaluated == static_cast<std::uint64_t>(T) * T * T);
  }
}

TEST_CASE("checkpointed runs resume to the identical result") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "dncg_ckpt_test.log";
  std::error_code ec;
  fs::remove(path, ec);

  auto req = base_request(square(), DistanceSemantics::Foremost);
  req.automorphism_generators = {{1, 2, 3, 0}, {1, 0, 3, 2}};
  req.checkpoint_path = path.string();
  const auto first = search_optimal_labelling(req);
  CHECK(first.blocks_resumed == 0);

  const auto resumed = search_optimal_labelling(req);
  CHECK(resumed.blocks_resumed == resumed.blocks_total);
  CHECK(resumed.min_cost == first.min_cost);
  CHECK(resumed.raw_count == first.raw_count);
  CHECK(resumed.orbit_count == first.orbit_count);
  CHECK(resumed.witnesses == first.witnesses);

  // truncate to simulate an interrupted run; the rest is recomputed
  {
    std::ifstream in(path);
    std::string line, keep;
    int kept = 0;
    while (std::getline(in, line) && kept < 2) {
      keep += line + "\n";
      ++kept;
    }
    in.close();
    std::ofstream out(path, std::ios::trunc);
    out << keep;
  }
  const auto partial = search_optimal_labelling(req);
  CHECK(partial.blocks_resumed == 2);
  CHECK(partial.min_cost == first.min_cost);
  CHECK(partial.raw_count == first.raw_count);
  CHECK(partial.witnesses == first.witnesses);
  fs::remove(path, ec);
}

TEST_CASE("sampling mode is marked non-exact and never beats the optimum") {
  auto req = base_request(square(), DistanceSemantics::Shortest);
  req.sample = 50;
  req.seed = 7;
  const auto sampled = search_optimal_labelling(req);
  CHECK_FALSE(sampled.exact);
  CHECK_FALSE(sampled.counts_exact);

  req.sample = 0;
  const auto full = search_optimal_labelling(req);
  CHECK(full.exact);
  CHECK(sampled.min_cost >= full.min_cost);
}

TEST_CASE("space guards") {
  TemporalGraph big(7);  // 15 edges > the permutation-space cap
  int added = 0;
  for (int u = 0; u < 7 && added < 15; ++u)
    for (int v = u + 1; v < 7 && added < 15; ++v) {
      big.add_label(u, v, 1);
      ++added;
    }
  CHECK_THROWS_AS(search_optimal_labelling(base_request(big, DistanceSemantics::Shortest)),
                  std::invalid_argument);

  auto nohorizon = base_request(triangle(), DistanceSemantics::Shortest);
  nohorizon.space = LabellingSpace::Functions;
  CHECK_THROWS_AS(search_optimal_labelling(nohorizon), std::invalid_argument);

  auto badgen = base_request(square(), DistanceSemantics::Shortest);
  badgen.automorphism_generators = {{0, 2, 1, 3}};  // not an automorphism of the square
  CHECK_THROWS_AS(search_optimal_labelling(badgen), std::invalid_argument);
}
