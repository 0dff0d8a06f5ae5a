#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <string>
#include <vector>

#include "bei/bei.hpp"
#include "fixtures.hpp"

using bei::census_options;
using bei::census_summary;
using bei::graph;
using bei::run_census;

namespace {

// the two producers the CLI exposes, wrapped for reuse
auto cactus_producer(int blocks, std::vector<int> kinds) {
  return [blocks, kinds](auto&& sink) { bei::generate_cactus_corpus(blocks, kinds, sink); };
}

auto exhaustive_producer(int max_n) {
  return [max_n](auto&& sink) {
    for (int n = 1; n <= max_n; ++n) bei::generate_connected_graphs(n, sink);
  };
}

}  // namespace

TEST_CASE("check name resolution") {
  const auto& catalog = bei::census_check_catalog();
  CHECK(catalog.size() == 12);
  CHECK(bei::detail::resolve_checks({"all"}) == catalog);
  CHECK(bei::detail::resolve_checks({}) == bei::default_census_checks());
  // canonical catalog order, duplicates dropped
  CHECK(bei::detail::resolve_checks({"gluing", "free-not-in-cutset", "gluing"}) ==
        std::vector<std::string>{"free-not-in-cutset", "gluing"});
  CHECK_THROWS_MATCHES(bei::detail::resolve_checks({"no-such-check"}), bei::error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("unknown census check")));
}

TEST_CASE("generator counts and validation") {
  std::array<std::size_t, 5> expected{1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    bei::generate_connected_graphs(n, [&](const graph&) { ++count; });
    CHECK(count == expected[n - 1]);
  }
  CHECK_THROWS_AS(bei::generate_connected_graphs(0, [](const graph&) {}), bei::error);
  CHECK_THROWS_AS(bei::generate_connected_graphs(9, [](const graph&) {}), bei::error);
  CHECK_THROWS_AS(bei::generate_cactus_corpus(0, {2}, [](const graph&) {}), bei::error);
  CHECK_THROWS_AS(bei::generate_cactus_corpus(7, {2}, [](const graph&) {}), bei::error);
  CHECK_THROWS_AS(bei::generate_cactus_corpus(2, {}, [](const graph&) {}), bei::error);
  CHECK_THROWS_AS(bei::generate_cactus_corpus(2, {6}, [](const graph&) {}), bei::error);
}

TEST_CASE("corpus stream order is seeds first, then attachments") {
  std::vector<std::string> first;
  bei::generate_cactus_corpus(2, {2, 3}, [&](const graph& g) {
    if (first.size() < 6) first.push_back(bei::compact_edge_list(g));
  });
  CHECK(first == std::vector<std::string>{
                     "2:1-2",
                     "3:1-2,1-3",
                     "4:1-2,1-3,1-4,3-4",
                     "3:1-2,2-3",
                     "4:1-2,2-3,2-4,3-4",
                     "3:1-2,1-3,2-3",
                 });
}

TEST_CASE("census over the three-block cactus corpus") {
  census_summary sum = run_census(cactus_producer(3, {2, 3, 4}));
  CHECK(sum.graphs == 453);
  CHECK(sum.cap_exceeded == 0);
  CHECK(sum.status_counts == std::array<std::size_t, 4>{126, 0, 327, 0});
  CHECK(sum.checks == bei::default_census_checks());
  CHECK(sum.violations.empty());
}

TEST_CASE("census with every check over all small connected graphs") {
  census_options opt;
  opt.checks = {"all"};
  census_summary sum = run_census(exhaustive_producer(5), opt);
  CHECK(sum.graphs == 772);
  CHECK(sum.cap_exceeded == 0);
  CHECK(sum.status_counts == std::array<std::size_t, 4>{285, 0, 310, 177});
  CHECK(sum.violations.empty());
}

TEST_CASE("summary text is byte-identical for any job count") {
  census_options one, four;
  one.jobs = 1;
  four.jobs = 4;
  CHECK(run_census(cactus_producer(3, {2, 3, 4}), one).text() ==
        run_census(cactus_producer(3, {2, 3, 4}), four).text());
  CHECK(run_census(exhaustive_producer(5), one).text() ==
        run_census(exhaustive_producer(5), four).text());
}

TEST_CASE("graphs past the enumeration cap are counted, not dropped") {
  auto produce = [](auto&& sink) {
    sink(fx::path(3));
    sink(fx::path(30));  // 28 non-free candidate vertices > default cap
    sink(fx::cycle(4));
  };
  census_summary sum = run_census(produce);
  CHECK(sum.graphs == 3);
  CHECK(sum.cap_exceeded == 1);
  // classification is structural and still succeeds on the long path
  CHECK(sum.status_counts == std::array<std::size_t, 4>{2, 0, 1, 0});
  CHECK(sum.violations.empty());
}

TEST_CASE("summary text format") {
  census_summary sum;
  sum.graphs = 2;
  sum.cap_exceeded = 1;
  sum.status_counts = {1, 0, 1, 0};
  sum.checks = {"gluing"};
  sum.violations.push_back({5, "gluing", "3:1-2", "detail text"});
  CHECK(sum.text() ==
        "graphs=2 cap_exceeded=1\n"
        "status cohen_macaulay=1 unmixed_not_cm=0 not_unmixed=1 unknown_cm=0\n"
        "checks gluing\n"
        "violations=1\n"
        "violation index=5 check=gluing graph=3:1-2 detail=detail text\n");
}
