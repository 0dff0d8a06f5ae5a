#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// A block = maximal 2-connected subgraph (or a bridge edge). Two distinct
// blocks share at most one vertex, so a block's edges are exactly the induced
// edges on its vertex set.
struct block {
  std::uint64_t members = 0;
  int vertex_c = 0;
  int edge_c = 0;

  bool is_edge() const { return vertex_c == 2; }
  bool is_complete() const { return edge_c == vertex_c * (vertex_c - 1) / 2; }
  bool is_diamond() const { return vertex_c == 4 && edge_c == 5; }
};

inline bool is_cycle_block(const graph& g, const block& b) {
  if (b.vertex_c < 3 || b.vertex_c != b.edge_c) return false;
  for (int v : iterate(b.members))
    if (std::popcount(g.neighbors(v) & b.members) != 2) return false;
  return true;
}

struct block_decomposition {
  std::vector<block> blocks;
  std::uint64_t cutpoints = 0;
  std::vector<std::vector<int>> blocks_of_vertex;  // index v-1 -> block indices
  std::vector<std::vector<int>> block_adjacency;   // blocks sharing a cutpoint
  // Shape of the block graph, per connected component (true only if every
  // component qualifies). A component's block graph is a tree iff each of its
  // cutpoints lies in exactly 2 blocks; a path additionally needs <= 2
  // cutpoints per block.
  bool is_tree = false;
  bool is_path = false;

  int block_count(int v) const { return static_cast<int>(blocks_of_vertex[v - 1].size()); }
  int cutpoints_in(const block& b) const { return std::popcount(b.members & cutpoints); }
};

namespace detail {

struct block_dfs {
  const graph& g;
  std::array<int, 65> disc{}, low{};
  std::vector<std::pair<int, int>> estack;
  std::vector<block> out;
  std::uint64_t cutpoints = 0;
  int timer = 0;

  explicit block_dfs(const graph& gr) : g(gr) {}

  void pop_block(int u, int v) {
    block b;
    while (true) {
      auto [a, c] = estack.back();
      estack.pop_back();
      b.members |= vertex_set::bit(a) | vertex_set::bit(c);
      ++b.edge_c;
      if (a == u && c == v) break;
    }
    b.vertex_c = std::popcount(b.members);
    out.push_back(b);
  }

  void dfs(int v, int parent) {
    disc[v] = low[v] = ++timer;
    int children = 0;
    for (int w : iterate(g.neighbors(v))) {
      if (w == parent) continue;  // simple graph: at most one parent edge
      if (!disc[w]) {
        ++children;
        estack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          pop_block(v, w);
          if (parent != 0 || children > 1) cutpoints |= vertex_set::bit(v);
        }
      } else if (disc[w] < disc[v]) {
        estack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace detail

inline block_decomposition blocks(const graph& g) {
  detail::block_dfs dfs(g);
  for (int v = 1; v <= g.n(); ++v)
    if (!dfs.disc[v]) dfs.dfs(v, 0);

  block_decomposition bd;
  bd.blocks = std::move(dfs.out);
  std::sort(bd.blocks.begin(), bd.blocks.end(), [](const block& a, const block& b) {
    return std::pair(vertex_set(a.members).min(), a.members) <
           std::pair(vertex_set(b.members).min(), b.members);
  });
  bd.cutpoints = dfs.cutpoints;

  bd.blocks_of_vertex.assign(static_cast<std::size_t>(g.n()), {});
  for (int i = 0; i < static_cast<int>(bd.blocks.size()); ++i)
    for (int v : iterate(bd.blocks[i].members)) bd.blocks_of_vertex[v - 1].push_back(i);

  bd.block_adjacency.assign(bd.blocks.size(), {});
  for (int v : iterate(bd.cutpoints)) {
    const auto& at = bd.blocks_of_vertex[v - 1];
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        bd.block_adjacency[at[i]].push_back(at[j]);
        bd.block_adjacency[at[j]].push_back(at[i]);
      }
  }
  for (auto& a : bd.block_adjacency) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  bd.is_tree = true;
  for (int v : iterate(bd.cutpoints))
    if (bd.block_count(v) > 2) bd.is_tree = false;
  bd.is_path = bd.is_tree;
  for (const auto& b : bd.blocks)
    if (bd.cutpoints_in(b) > 2) bd.is_path = false;
  return bd;
}

struct graph_metrics {
  int n = 0;
  int m = 0;
  int component_count = 0;
  int deviation = 0;  // m - n + component_count, the cycle rank
  bool is_forest = false;
  bool is_cactus = false;    // every block is an edge or a cycle
  bool is_bicyclic = false;  // connected with deviation 2
};

inline graph_metrics metrics(const graph& g, const block_decomposition& bd) {
  graph_metrics mt;
  mt.n = g.n();
  mt.m = g.edge_count();
  mt.component_count = component_count(g);
  mt.deviation = mt.m - mt.n + mt.component_count;
  mt.is_forest = mt.deviation == 0;
  mt.is_cactus = true;
  for (const auto& b : bd.blocks)
    if (!b.is_edge() && !is_cycle_block(g, b)) mt.is_cactus = false;
  mt.is_bicyclic = mt.component_count == 1 && mt.deviation == 2;
  return mt;
}

inline graph_metrics metrics(const graph& g) { return metrics(g, blocks(g)); }

}  // namespace bei
