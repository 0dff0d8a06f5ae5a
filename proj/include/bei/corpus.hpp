#pragma once

#include <vector>

#include "bei/graph.hpp"

namespace bei {

namespace detail {

// kind k = 2 appends an edge, k >= 3 a k-cycle, sharing exactly `at` with g.
inline graph attach_block(const graph& g, int at, int kind) {
  graph h(g.n() + kind - 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  int prev = at;
  for (int i = 1; i < kind; ++i) {
    h.add_edge(prev, g.n() + i);
    prev = g.n() + i;
  }
  if (kind >= 3) h.add_edge(prev, at);
  return h;
}

template <class F>
void grow_corpus(const graph& g, int used, int max_blocks, const std::vector<int>& kinds, F& sink) {
  sink(g);
  if (used == max_blocks) return;
  for (int at = 1; at <= g.n(); ++at)
    for (int kind : kinds)
      grow_corpus(attach_block(g, at, kind), used + 1, max_blocks, kinds, sink);
}

}  // namespace detail

// Streams every cactus obtainable by starting from one block and repeatedly
// attaching a fresh block at an existing vertex, up to max_blocks blocks, with
// block kinds drawn from `kinds` (2 = edge, k = k-cycle).  Graphs with one
// block come first, then their one-attachment children in depth-first order;
// isomorphic duplicates are streamed as-is.
template <class F>
void generate_cactus_corpus(int max_blocks, const std::vector<int>& kinds, F&& sink) {
  if (max_blocks < 1 || max_blocks > 6)
    throw error(errc::range_error, "block budget must be between 1 and 6");
  if (kinds.empty()) throw error(errc::range_error, "need at least one block kind");
  for (int kind : kinds)
    if (kind < 2 || kind > 5)
      throw error(errc::range_error, "block kind " + std::to_string(kind) +
                                         " not supported (2 = edge, 3..5 = cycle)");
  for (int kind : kinds) {
    graph seed(kind == 2 ? 2 : kind);
    if (kind == 2) {
      seed.add_edge(1, 2);
    } else {
      for (int i = 1; i < kind; ++i) seed.add_edge(i, i + 1);
      seed.add_edge(kind, 1);
    }
    detail::grow_corpus(seed, 1, max_blocks, kinds, sink);
  }
}

// All 2^(n(n-1)/2) labeled graphs on n vertices in edge-mask order, restricted
// to the connected ones.
template <class F>
void generate_connected_graphs(int n, F&& sink) {
  if (n < 1 || n > 8) throw error(errc::range_error, "exhaustive scan limited to 1..8 vertices");
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    graph g(n);
    int idx = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++idx)
        if (mask >> idx & 1) g.add_edge(i, j);
    if (is_connected(g)) sink(g);
  }
}

}  // namespace bei
