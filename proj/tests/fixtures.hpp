#pragma once

// Shared graph builders for the test suite.

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bei/bei.hpp"

namespace fx {

inline bei::graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
  bei::graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

inline bei::graph path(int n) {
  bei::graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline bei::graph cycle(int n) {
  bei::graph g = path(n);
  g.add_edge(n, 1);
  return g;
}

inline bei::graph complete(int n) {
  bei::graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

inline bei::graph star(int leaves) {
  bei::graph g(leaves + 1);
  for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

// disjoint union, relabeling b after a
inline bei::graph disjoint(const bei::graph& a, const bei::graph& b) {
  bei::graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.n(), v + a.n());
  return g;
}

// ------------------------------------------------------------ block chains

// Block kinds for paths of blocks glued at shared cut vertices.  c4 attaches
// entry and exit on adjacent corners, c4_opp on opposite corners.  Diamonds
// are K4 minus an edge; the two degree-3 vertices carry the chord.
enum class bk { k2, k3, k4, k5, c4, c4_opp, dia_23, dia_32, dia_33 };

inline const char* bk_name(bk k) {
  switch (k) {
    case bk::k2: return "K2";
    case bk::k3: return "K3";
    case bk::k4: return "K4";
    case bk::k5: return "K5";
    case bk::c4: return "C4";
    case bk::c4_opp: return "C4opp";
    case bk::dia_23: return "D23";
    case bk::dia_32: return "D32";
    case bk::dia_33: return "D33";
  }
  return "?";
}

inline int bk_extra_vertices(bk k) {
  switch (k) {
    case bk::k2: return 1;
    case bk::k3: return 2;
    case bk::k4: return 3;
    case bk::k5: return 4;
    default: return 3;
  }
}

// Builds the chain B_1 .. B_l; block i enters at the exit vertex of block
// i-1.  Labels are assigned left to right starting from 1.
inline bei::graph chain(const std::vector<bk>& ks) {
  int n = 1;
  for (bk k : ks) n += bk_extra_vertices(k);
  bei::graph g(n);
  int cur = 1, next = 2;
  for (bk k : ks) {
    int x = next;  // exit vertex of this block
    switch (k) {
      case bk::k2:
        g.add_edge(cur, x);
        next += 1;
        break;
      case bk::k3:
      case bk::k4:
      case bk::k5: {
        int size = k == bk::k3 ? 3 : k == bk::k4 ? 4 : 5;
        std::vector<int> vs{cur};
        for (int j = 0; j < size - 1; ++j) vs.push_back(next + j);
        for (std::size_t i = 0; i < vs.size(); ++i)
          for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
        next += size - 1;
        break;
      }
      case bk::c4:  // cur - x - p - q - cur
        g.add_edge(cur, x);
        g.add_edge(x, next + 1);
        g.add_edge(next + 1, next + 2);
        g.add_edge(next + 2, cur);
        next += 3;
        break;
      case bk::c4_opp:  // cur - p - x - q - cur, exit opposite the entry
        x = next + 1;
        g.add_edge(cur, next);
        g.add_edge(next, x);
        g.add_edge(x, next + 2);
        g.add_edge(next + 2, cur);
        next += 3;
        break;
      case bk::dia_23: {  // entry degree 2, exit degree 3
        int u = next + 1, f = next + 2;
        g.add_edge(cur, x);
        g.add_edge(x, u);
        g.add_edge(u, f);
        g.add_edge(f, cur);
        g.add_edge(x, f);  // chord between the degree-3 pair
        next += 3;
        break;
      }
      case bk::dia_32: {  // entry degree 3, exit degree 2
        int u = next + 1, f = next + 2;
        g.add_edge(x, cur);
        g.add_edge(cur, u);
        g.add_edge(u, f);
        g.add_edge(f, x);
        g.add_edge(cur, f);
        next += 3;
        break;
      }
      case bk::dia_33: {  // chord joins entry and exit (inadmissible interior)
        int u = next + 1, f = next + 2;
        g.add_edge(cur, u);
        g.add_edge(u, x);
        g.add_edge(x, f);
        g.add_edge(f, cur);
        g.add_edge(cur, x);
        next += 3;
        break;
      }
    }
    cur = x;
  }
  return g;
}

// ------------------------------------------------------------ theta graphs

// Theta graph on branch vertices 1 and 2 with path lengths L (ascending,
// L[0] may be 1), internals labeled 3.. path by path, then one pendant leaf
// per listed attachment vertex.
inline bei::graph theta(std::array<int, 3> L, const std::vector<int>& pendant_at = {}) {
  int internal = (L[0] - 1) + (L[1] - 1) + (L[2] - 1);
  int n = 2 + internal + static_cast<int>(pendant_at.size());
  bei::graph g(n);
  int next = 3;
  for (int p = 0; p < 3; ++p) {
    if (L[p] == 1) {
      g.add_edge(1, 2);
      continue;
    }
    int prev = 1;
    for (int j = 0; j < L[p] - 1; ++j) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 2);
  }
  for (int at : pendant_at) {
    g.add_edge(at, next);
    ++next;
  }
  return g;
}

// ------------------------------------------------------------ random graphs

// random connected block tree: blocks are cliques K2..K5 or cycles C3..C6
inline bei::graph random_block_tree(std::mt19937_64& rng, int max_blocks) {
  std::uniform_int_distribution<int> nblocks(1, max_blocks);
  std::uniform_int_distribution<int> kind(0, 7);  // K2..K5, C3..C6
  int want = nblocks(rng);
  std::vector<std::array<int, 2>> edges;  // built incrementally
  int n = 1;
  for (int i = 0; i < want; ++i) {
    std::uniform_int_distribution<int> attach(1, n);
    int at = attach(rng);
    int k = kind(rng);
    if (k < 4) {  // clique on at + (k+1) fresh vertices
      std::vector<int> vs{at};
      for (int j = 0; j <= k; ++j) vs.push_back(++n);
      for (std::size_t x = 0; x < vs.size(); ++x)
        for (std::size_t y = x + 1; y < vs.size(); ++y) edges.push_back({vs[x], vs[y]});
    } else {  // cycle of length k-1 (3..6) through at
      int len = k - 1;
      int prev = at;
      for (int j = 0; j < len - 1; ++j) {
        edges.push_back({prev, n + 1});
        prev = ++n;
      }
      edges.push_back({prev, at});
    }
    if (n > 40) break;
  }
  bei::graph g(n);
  for (auto [u, v] : edges)
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

inline bei::graph random_gnp(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  bei::graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace fx
