#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bei/classify.hpp"

namespace bei {

// Built-in example graphs with their known classification, used by the CLI
// selfcheck and as shared test fixtures.  Names describe the structure.
struct sample {
  std::string name;
  graph g;
  cm_status expected;
};

namespace detail {

inline graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
  graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

// chain of blocks glued at shared cut vertices: entry of each block is the
// exit of the previous one; C4 blocks get adjacent entry/exit
inline graph sample_chain(const std::vector<int>& kinds) {
  // count vertices: first block contributes kind, later ones kind-1 (2=edge)
  auto verts = [](int k) { return k == 2 ? 2 : k; };
  int n = verts(kinds[0]);
  for (std::size_t i = 1; i < kinds.size(); ++i) n += verts(kinds[i]) - 1;
  graph g(n);
  int cur = 1, next = 2;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    int k = kinds[i];
    if (k == 2) {
      g.add_edge(cur, next);
      cur = next++;
    } else if (k == 3) {
      g.add_edge(cur, next);
      g.add_edge(next, next + 1);
      g.add_edge(next + 1, cur);
      cur = next;  // entry and exit adjacent
      next += 2;
    } else {  // cycle, entry/exit adjacent: cur - x - p.. - q - cur
      int x = next, first_inner = next + 1;
      g.add_edge(cur, x);
      int prev = x;
      for (int j = 0; j < k - 2; ++j) {
        g.add_edge(prev, first_inner + j);
        prev = first_inner + j;
      }
      g.add_edge(prev, cur);
      cur = x;
      next += k - 1;
    }
  }
  return g;
}

}  // namespace detail

inline std::vector<sample> sample_graphs() {
  using detail::from_edges;
  using detail::sample_chain;
  std::vector<sample> out;
  auto add = [&](std::string name, graph g, cm_status s) {
    out.push_back({std::move(name), std::move(g), s});
  };

  add("edge", from_edges(2, {{1, 2}}), cm_status::cohen_macaulay);
  add("triangle", from_edges(3, {{1, 2}, {2, 3}, {3, 1}}), cm_status::cohen_macaulay);
  add("square", from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}), cm_status::not_unmixed);
  add("square-with-two-pendants", sample_chain({2, 4, 2}), cm_status::cohen_macaulay);
  add("edge-square-triangle-chain", sample_chain({2, 4, 3}), cm_status::cohen_macaulay);
  add("edge-square-square-edge-chain", sample_chain({2, 4, 4, 2}), cm_status::cohen_macaulay);
  add("complete-bipartite-2-3",
      from_edges(5, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}}), cm_status::not_unmixed);
  add("theta-122-pendant-at-branch",
      from_edges(5, {{1, 2}, {1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}}), cm_status::cohen_macaulay);
  add("theta-123-pendants-branch-and-internal",
      from_edges(7, {{1, 2}, {1, 3}, {3, 2}, {1, 4}, {4, 5}, {5, 2}, {1, 6}, {4, 7}}),
      cm_status::cohen_macaulay);
  add("theta-222-pendants-at-two-midpoints",
      from_edges(7, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}, {3, 6}, {4, 7}}),
      cm_status::unmixed_not_cm);
  add("theta-223-pendants-midpoint-and-long-internals",
      from_edges(9, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 6}, {6, 2}, {3, 7}, {5, 8},
                     {6, 9}}),
      cm_status::unmixed_not_cm);
  // C3 hub whose three vertices each continue into a C4, one pendant per C4
  add("triangle-with-three-squares",
      from_edges(15, {{1, 2},  {2, 3},   {3, 1},                       // hub
                      {1, 4},  {4, 5},   {5, 6},  {6, 1},              // C4 at 1
                      {2, 7},  {7, 8},   {8, 9},  {9, 2},              // C4 at 2
                      {3, 10}, {10, 11}, {11, 12}, {12, 3},            // C4 at 3
                      {4, 13}, {7, 14},  {10, 15}}),
      cm_status::not_unmixed);
  // splits at three free cut vertices into four admissible path pieces
  add("four-piece-cactus",
      from_edges(23, {{1, 2},   {1, 5},   {2, 5},   {2, 4},   {5, 6},             // C3 + two K2
                      {4, 8},   {3, 7},   {4, 3},   {8, 7},                       // C4
                      {8, 10},  {8, 12},  {10, 12},                               // C3
                      {9, 10},  {9, 13},  {10, 13},                               // C3
                      {13, 14}, {14, 19}, {19, 18}, {13, 18}, {18, 22},           // C4 + K2
                      {12, 16}, {11, 15}, {12, 11}, {16, 15},                     // C4
                      {17, 21}, {16, 20}, {17, 16}, {21, 20}, {20, 23}}),         // C4 + K2
      cm_status::cohen_macaulay);
  return out;
}

}  // namespace bei
