#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bei/bei.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using bei::classification;
using bei::cm_status;
using bei::graph;
using bei::vertex_set;

namespace {

// A recorded violation must be a real cutset of its component with
// c != |T| + 1, with parts exactly the component-local ones.
void verify_violation(const graph& g, const classification& cls) {
  REQUIRE(cls.violation);
  const bei::cutset& w = *cls.violation;
  REQUIRE_FALSE(w.t.empty());
  std::uint64_t comp = 0;
  for (std::uint64_t cm : bei::component_masks(g))
    if (cm & w.t.bits) comp = cm;
  REQUIRE(comp != 0);
  REQUIRE(w.t.subset_of(vertex_set(comp)));
  graph h = g.induced_edges(comp);
  CHECK(bei::is_cutset(h, w.t));
  std::vector<std::uint64_t> expect;
  for (std::uint64_t p : bei::component_masks(h, w.t.bits))
    if (std::popcount(p) > 1 || h.degree(vertex_set(p).min()) > 0) expect.push_back(p);
  CHECK(w.parts == expect);
  CHECK(w.c() != w.t.size() + 1);
}

cm_status status_of(const graph& g) { return bei::classify(g).status; }

}  // namespace

TEST_CASE("paths and trees") {
  for (int n = 2; n <= 8; ++n) CHECK(status_of(fx::path(n)) == cm_status::cohen_macaulay);

  auto star = bei::classify(fx::star(3));
  CHECK(star.status == cm_status::not_unmixed);
  CHECK(star.condition == "block-graph-not-a-tree");
  REQUIRE(star.violation);
  CHECK(star.violation->t == vertex_set{1});
  CHECK(star.violation->c() == 3);
  verify_violation(fx::star(3), star);

  // spider: subdivided star still has a degree-3 branch vertex
  graph spider = fx::from_edges(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});
  CHECK(status_of(spider) == cm_status::not_unmixed);
}

TEST_CASE("cycles") {
  CHECK(status_of(fx::cycle(3)) == cm_status::cohen_macaulay);

  auto c4 = bei::classify(fx::cycle(4));
  CHECK(c4.status == cm_status::not_unmixed);
  CHECK(c4.condition == "c4-without-two-adjacent-cutpoints");
  REQUIRE(c4.violation);
  CHECK(c4.violation->t == vertex_set{2, 4});  // neighbors of vertex 1
  CHECK(c4.violation->c() == 2);

  for (int n = 5; n <= 8; ++n) {
    auto cls = bei::classify(fx::cycle(n));
    CHECK(cls.status == cm_status::not_unmixed);
    CHECK(cls.condition == "cycle-block-longer-than-c4");
    verify_violation(fx::cycle(n), cls);
  }
}

TEST_CASE("block chains") {
  using fx::bk;
  SECTION("admissible chains are Cohen-Macaulay") {
    std::vector<std::vector<bk>> good = {
        {bk::k2, bk::c4, bk::k2},
        {bk::k3, bk::c4, bk::k2},
        {bk::k2, bk::c4, bk::c4, bk::k2},
        {bk::k2, bk::c4, bk::k3, bk::c4, bk::k2},
        {bk::k3, bk::c4, bk::c4, bk::c4, bk::k3},
    };
    for (const auto& ks : good) {
      graph g = fx::chain(ks);
      INFO("chain: " << bei::compact_edge_list(g));
      auto cls = bei::classify(g);
      CHECK(cls.status == cm_status::cohen_macaulay);
      CHECK(cls.condition == "pieces-admissible");
      REQUIRE(cls.pieces);
      CHECK(cls.pieces->pieces.size() == 1);
      REQUIRE(cls.patterns.size() == 1);
    }
  }
  SECTION("a pendant square fails the adjacency condition") {
    graph g = fx::chain({bk::c4, bk::k2});
    auto cls = bei::classify(g);
    CHECK(cls.status == cm_status::not_unmixed);
    CHECK(cls.condition == "c4-without-two-adjacent-cutpoints");
    verify_violation(g, cls);
  }
  SECTION("squares with cut vertices on opposite corners fail") {
    graph g = fx::chain({bk::k2, bk::c4_opp, bk::k2});
    auto cls = bei::classify(g);
    CHECK(cls.status == cm_status::not_unmixed);
    CHECK(cls.condition == "c4-without-two-adjacent-cutpoints");
    verify_violation(g, cls);
  }
  SECTION("interior edge between two squares, frozen witness") {
    graph g = fx::chain({bk::k2, bk::c4, bk::k2, bk::c4, bk::k2});
    auto cls = bei::classify(g);
    CHECK(cls.status == cm_status::not_unmixed);
    CHECK(cls.condition == "edge-block-between-two-c4-blocks");
    REQUIRE(cls.violation);
    CHECK(cls.violation->t == vertex_set{3, 5, 6, 8});
    CHECK(cls.violation->c() == 4);
    verify_violation(g, cls);
  }
  SECTION("edge chained to a triangle splits and passes") {
    CHECK(status_of(fx::chain({bk::k2, bk::c4, bk::k3, bk::k2})) == cm_status::cohen_macaulay);
  }
  SECTION("two squares meeting at one cut vertex fail") {
    // C4 - C4 directly glued: second-block condition cannot hold
    graph g = fx::chain({bk::c4, bk::c4});
    CHECK(bei::classify(g).status == cm_status::not_unmixed);
  }
}

TEST_CASE("path piece rule on hand-built patterns") {
  using fx::bk;
  auto verdict = [](const graph& g) {
    return bei::classify_path_piece(bei::block_path_pattern(g));
  };
  CHECK(verdict(fx::path(2)).condition == "single-complete-block");
  CHECK(verdict(fx::cycle(3)).condition == "single-complete-block");
  CHECK(verdict(fx::chain({bk::k2, bk::c4, bk::k2})).condition == "path-piece-admissible");

  // conditions that decompose() normally removes before classification
  CHECK(verdict(fx::path(4)).condition == "second-or-penultimate-block-not-c4");
  CHECK(verdict(fx::path(3)).condition == "second-or-penultimate-block-not-c4");
  CHECK(verdict(fx::chain({bk::k2, bk::c4, bk::k3, bk::k3, bk::c4, bk::k2})).condition ==
        "triangle-block-not-followed-by-c4");
  CHECK(verdict(fx::chain({bk::k2, bk::c4, bk::k3, bk::c4, bk::k2})).condition ==
        "path-piece-admissible");

  CHECK_THROWS_AS(verdict(fx::complete(4)), bei::error);          // not a cactus block
  CHECK_THROWS_AS(verdict(fx::chain({bk::k2, bk::dia_23, bk::k2})), bei::error);
}

TEST_CASE("theta templates") {
  SECTION("the four unmixed configurations") {
    auto a = bei::classify(fx::theta({1, 2, 2}, {1}));
    CHECK(a.status == cm_status::cohen_macaulay);
    CHECK(a.theta_template == "theta(1,2,2)+pendant-at-branch");
    REQUIRE(a.theta);
    CHECK(a.theta->lengths == std::array<int, 3>{1, 2, 2});

    auto b = bei::classify(fx::theta({1, 2, 3}, {1, 4}));
    CHECK(b.status == cm_status::cohen_macaulay);
    CHECK(b.theta_template == "theta(1,2,3)+pendants-at-branch-and-adjacent-internal");

    auto c = bei::classify(fx::theta({2, 2, 2}, {3, 4}));
    CHECK(c.status == cm_status::unmixed_not_cm);
    CHECK(c.theta_template == "theta(2,2,2)+pendants-at-two-midpoints");

    auto d = bei::classify(fx::theta({2, 2, 3}, {3, 5, 6}));
    CHECK(d.status == cm_status::unmixed_not_cm);
    CHECK(d.theta_template == "theta(2,2,3)+pendants-at-midpoint-and-both-long-internals");
  }
  SECTION("mirror image of the (1,2,3) template") {
    // pendants at branch b and the b-side internal of the long path
    auto cls = bei::classify(fx::theta({1, 2, 3}, {2, 5}));
    CHECK(cls.status == cm_status::cohen_macaulay);
    CHECK(cls.theta_template == "theta(1,2,3)+pendants-at-branch-and-adjacent-internal");
  }
  SECTION("wrong whisker placements are not unmixed") {
    std::vector<graph> bad = {
        fx::theta({1, 2, 2}),                 // bare
        fx::theta({2, 2, 2}),                 // bare K_{2,3}
        fx::theta({1, 2, 2}, {3}),            // pendant at an internal
        fx::theta({1, 2, 2}, {1, 2}),         // pendants at both branches
        fx::theta({1, 2, 3}, {1, 5}),         // branch and far internal
        fx::theta({1, 2, 3}, {1, 3}),         // branch and short-path internal
        fx::theta({2, 2, 2}, {3}),            // one midpoint only
        fx::theta({2, 2, 2}, {1, 3}),         // branch and midpoint
        fx::theta({2, 2, 2}, {3, 4, 5}),      // all three midpoints
        fx::theta({2, 2, 3}, {3, 5}),         // missing one long internal
        fx::theta({2, 2, 3}, {5, 6}),         // both long internals, no midpoint
    };
    for (const auto& g : bad) {
      INFO("graph: " << bei::compact_edge_list(g));
      auto cls = bei::classify(g);
      CHECK(cls.status == cm_status::not_unmixed);
      CHECK(cls.condition == "theta-whisker-configuration");
      CHECK_FALSE(oracle::ref_unmixed(g));
    }
  }
  SECTION("oversized whiskers are rejected") {
    graph g = fx::theta({2, 2, 2}, {3, 4});  // the unmixed template...
    graph h(9);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(6, 8);  // ...with one pendant grown into a 2-path
    h.add_edge(8, 9);
    // the middle of the 2-path splits off, leaving the template piece intact
    CHECK(bei::classify(h).status == cm_status::unmixed_not_cm);

    graph two(9);  // two pendants at the same midpoint instead
    for (auto [u, v] : fx::theta({2, 2, 2}, {3, 3, 4}).edges()) two.add_edge(u, v);
    CHECK(bei::classify(two).status == cm_status::not_unmixed);
    CHECK_FALSE(oracle::ref_unmixed(two));
  }
  SECTION("inadmissible path lengths") {
    std::vector<graph> bad = {fx::theta({1, 2, 4}), fx::theta({2, 3, 3}), fx::theta({3, 3, 3}),
                              fx::theta({2, 2, 4}, {3}), fx::theta({1, 3, 3}, {1})};
    for (const auto& g : bad) {
      INFO("graph: " << bei::compact_edge_list(g));
      auto cls = bei::classify(g);
      CHECK(cls.status == cm_status::not_unmixed);
      CHECK(cls.condition == "theta-path-lengths");
      CHECK_FALSE(oracle::ref_unmixed(g));
    }
  }
}

TEST_CASE("exhaustive whisker matrix agrees with enumeration") {
  // every single-pendant placement set on every admissible length triple
  for (auto L : {std::array{1, 2, 2}, std::array{1, 2, 3}, std::array{2, 2, 2},
                 std::array{2, 2, 3}}) {
    int base = 2 + (L[0] - 1) + (L[1] - 1) + (L[2] - 1);
    std::vector<int> positions;
    for (int v = 1; v <= base; ++v) positions.push_back(v);
    for (unsigned mask = 0; mask < (1u << positions.size()); ++mask) {
      std::vector<int> at;
      for (std::size_t i = 0; i < positions.size(); ++i)
        if (mask >> i & 1) at.push_back(positions[i]);
      if (at.size() > 4) continue;
      graph g = fx::theta(L, at);
      INFO("graph: " << bei::compact_edge_list(g));
      auto cls = bei::classify(g);
      REQUIRE(cls.status != cm_status::unknown_cm);
      CHECK((cls.status != cm_status::not_unmixed) == oracle::ref_unmixed(g));
    }
  }
}

TEST_CASE("triangle hub with three squares") {
  graph g;
  for (const auto& s : bei::sample_graphs())
    if (s.name == "triangle-with-three-squares") g = s.g;
  auto cls = bei::classify(g);
  CHECK(cls.status == cm_status::not_unmixed);
  CHECK(cls.condition == "triangle-block-with-three-c4-blocks");
  REQUIRE(cls.violation);
  CHECK(cls.violation->t == vertex_set{1, 2, 3, 5, 8, 11});
  CHECK(cls.violation->t.size() == 6);
  CHECK(cls.violation->c() == 6);
  verify_violation(g, cls);
}

TEST_CASE("multi-piece cactus certificates") {
  graph g;
  for (const auto& s : bei::sample_graphs())
    if (s.name == "four-piece-cactus") g = s.g;
  auto cls = bei::classify(g);
  CHECK(cls.status == cm_status::cohen_macaulay);
  REQUIRE(cls.pieces);
  CHECK(cls.pieces->pieces.size() == 4);
  CHECK(cls.pieces->split_vertices == vertex_set{2, 5, 10});
  REQUIRE(cls.patterns.size() == 4);
  std::vector<std::string> pats;
  for (const auto& p : cls.patterns) pats.push_back(p.str());
  std::sort(pats.begin(), pats.end());
  CHECK(pats == std::vector<std::string>{"[C3,C4,K2]", "[C3]", "[K2,C4,C3,C4,C4,K2]", "[K2]"});
}

TEST_CASE("outside the classified families") {
  SECTION("complete graphs past K3 stay unknown, oracle confirms unmixed") {
    auto cls = bei::classify(fx::complete(4));
    CHECK(cls.status == cm_status::unknown_cm);
    CHECK(cls.condition == "outside-classified-families");
    REQUIRE(cls.oracle_unmixed);
    CHECK(*cls.oracle_unmixed);
  }
  SECTION("fallback can refute unmixedness") {
    graph k33(6);
    for (int u = 1; u <= 3; ++u)
      for (int v = 4; v <= 6; ++v) k33.add_edge(u, v);
    auto cls = bei::classify(k33);
    CHECK(cls.status == cm_status::not_unmixed);
    verify_violation(k33, cls);
  }
  SECTION("fallback can be disabled") {
    auto cls = bei::classify(fx::complete(4), {.oracle_fallback = false});
    CHECK(cls.status == cm_status::unknown_cm);
    CHECK_FALSE(cls.oracle_unmixed.has_value());
  }
  SECTION("cap leaves the verdict unknown") {
    // K4 plus a long tail of squares: far over the 4-vertex cap
    graph g = fx::chain({fx::bk::k4, fx::bk::c4, fx::bk::c4, fx::bk::c4, fx::bk::c4});
    auto cls = bei::classify(g, {.cap = 4});
    CHECK(cls.status == cm_status::unknown_cm);
    CHECK_FALSE(cls.oracle_unmixed.has_value());
  }
}

TEST_CASE("disconnected graphs") {
  SECTION("worst component wins") {
    graph g = fx::disjoint(fx::cycle(3), fx::cycle(4));
    auto cls = bei::classify(g);
    CHECK(cls.status == cm_status::not_unmixed);
    REQUIRE(cls.violation);
    CHECK(cls.violation->t == vertex_set{5, 7});  // neighbors of 4 in the shifted C4
    verify_violation(g, cls);
  }
  SECTION("all pieces admissible across components") {
    graph g = fx::disjoint(fx::path(3), fx::cycle(3));
    auto cls = bei::classify(g);
    CHECK(cls.status == cm_status::cohen_macaulay);
    REQUIRE(cls.pieces);
    CHECK(cls.pieces->pieces.size() == 3);  // two edges and a triangle
  }
  SECTION("unmixed-not-cm beats cohen-macaulay") {
    graph g = fx::disjoint(fx::theta({2, 2, 2}, {3, 4}), fx::path(2));
    auto cls = bei::classify(g);
    CHECK(cls.status == cm_status::unmixed_not_cm);
    CHECK(cls.theta_template == "theta(2,2,2)+pendants-at-two-midpoints");
    REQUIRE(cls.pieces);
    CHECK(cls.pieces->pieces.size() == 2);
  }
  SECTION("unknown beats unmixed-not-cm") {
    graph g = fx::disjoint(fx::complete(4), fx::theta({2, 2, 2}, {3, 4}));
    CHECK(bei::classify(g).status == cm_status::unknown_cm);
  }
  SECTION("isolated vertices are ignored") {
    graph g(5);
    g.add_edge(2, 4);
    auto cls = bei::classify(g);
    CHECK(cls.status == cm_status::cohen_macaulay);
    CHECK(bei::classify(graph(3)).condition == "no-edges");
    CHECK(bei::classify(graph(0)).status == cm_status::cohen_macaulay);
  }
}

TEST_CASE("family entry points validate their input") {
  CHECK_THROWS_AS(bei::classify_cactus(fx::theta({2, 2, 2})), bei::error);
  CHECK_THROWS_AS(bei::classify_cactus(fx::disjoint(fx::cycle(3), fx::cycle(3))), bei::error);
  CHECK_THROWS_AS(bei::classify_bicyclic(fx::cycle(4)), bei::error);
  CHECK_THROWS_AS(bei::classify_bicyclic(fx::disjoint(fx::cycle(3), fx::cycle(3))), bei::error);
  CHECK(bei::classify_cactus(fx::cycle(3)).status == cm_status::cohen_macaulay);
  CHECK(bei::classify_bicyclic(fx::theta({1, 2, 2}, {1})).status == cm_status::cohen_macaulay);
  // a cactus with two independent cycles is bicyclic too and takes the cactus route
  graph g = fx::chain({fx::bk::k2, fx::bk::c4, fx::bk::c4, fx::bk::k2});
  CHECK(bei::classify_bicyclic(g).status == cm_status::cohen_macaulay);
}

TEST_CASE("built-in samples classify as recorded") {
  for (const auto& s : bei::sample_graphs()) {
    INFO("sample: " << s.name);
    auto cls = bei::classify(s.g);
    CHECK(cls.status == s.expected);
    CHECK(bei::is_unmixed(s.g).unmixed == (s.expected != cm_status::not_unmixed));
    if (cls.status == cm_status::not_unmixed && cls.violation) verify_violation(s.g, cls);
  }
}
