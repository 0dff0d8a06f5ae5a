#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bei/errors.hpp"

namespace bei {

// Vertices are labeled 1..n, n <= 64; sets of vertices are 64-bit masks
// with bit (v-1) standing for vertex v.
struct vertex_set {
  std::uint64_t bits = 0;

  constexpr vertex_set() = default;
  constexpr explicit vertex_set(std::uint64_t b) : bits(b) {}
  vertex_set(std::initializer_list<int> vs) {
    for (int v : vs) add(v);
  }

  static constexpr vertex_set full(int n) {
    return vertex_set(n >= 64 ? ~0ull : (1ull << n) - 1);
  }
  static constexpr std::uint64_t bit(int v) { return 1ull << (v - 1); }

  constexpr bool contains(int v) const { return bits & bit(v); }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr int min() const { return std::countr_zero(bits) + 1; }  // pre: nonempty
  void add(int v) { bits |= bit(v); }
  void remove(int v) { bits &= ~bit(v); }

  constexpr bool subset_of(vertex_set o) const { return (bits & ~o.bits) == 0; }
  constexpr vertex_set operator|(vertex_set o) const { return vertex_set(bits | o.bits); }
  constexpr vertex_set operator&(vertex_set o) const { return vertex_set(bits & o.bits); }
  constexpr vertex_set operator-(vertex_set o) const { return vertex_set(bits & ~o.bits); }
  constexpr bool operator==(const vertex_set&) const = default;

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  // "{1,3}"; "{}" when empty
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_list()) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }
};

// iterate set bits as vertex labels: for (int v : iterate(mask)) ...
struct bit_range {
  std::uint64_t bits;
  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest) + 1; }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};
inline bit_range iterate(std::uint64_t bits) { return {bits}; }
inline bit_range iterate(vertex_set s) { return {s.bits}; }

// Simple undirected graph on 1..n as an adjacency-mask array.
class graph {
 public:
  graph() = default;
  explicit graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 64) throw error(errc::range_error, "vertex count must be in 0..64");
  }

  int n() const { return n_; }
  std::uint64_t vertices() const { return vertex_set::full(n_).bits; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw error(errc::self_loop, "self loop at " + std::to_string(u));
    adj_[u - 1] |= vertex_set::bit(v);
    adj_[v - 1] |= vertex_set::bit(u);
  }

  bool has_edge(int u, int v) const { return adj_[u - 1] & vertex_set::bit(v); }
  std::uint64_t neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const { return std::popcount(adj_[v - 1]); }

  int edge_count() const {
    int twice = 0;
    for (auto a : adj_) twice += std::popcount(a);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
      for (int v : iterate(adj_[u - 1] & ~(vertex_set::bit(u + 1) - 1))) out.emplace_back(u, v);
    return out;
  }

  // edges of g restricted to `keep`, on the same vertex universe
  graph induced_edges(std::uint64_t keep) const {
    graph h(n_);
    for (int v = 1; v <= n_; ++v)
      if (keep & vertex_set::bit(v)) h.adj_[v - 1] = adj_[v - 1] & keep;
    return h;
  }

  bool operator==(const graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw error(errc::range_error, "vertex " + std::to_string(v) + " out of 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Connected components of the induced subgraph on V \ removed, as vertex
// masks sorted by smallest member. Isolated vertices are singleton parts.
inline std::vector<std::uint64_t> component_masks(const graph& g, std::uint64_t removed = 0) {
  std::vector<std::uint64_t> parts;
  std::uint64_t todo = g.vertices() & ~removed;
  while (todo) {
    std::uint64_t comp = todo & (~todo + 1);  // lowest remaining vertex
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t grow = 0;
      for (int v : iterate(frontier)) grow |= g.neighbors(v);
      grow &= todo & ~comp;
      comp |= grow;
      frontier = grow;
    }
    parts.push_back(comp);
    todo &= ~comp;
  }
  return parts;
}

inline int component_count(const graph& g, std::uint64_t removed = 0) {
  return static_cast<int>(component_masks(g, removed).size());
}

inline bool is_connected(const graph& g) { return g.n() <= 1 || component_count(g) == 1; }

/// v is free iff its neighborhood is a clique (equivalently v lies in exactly
/// one maximal clique). No cutset ever contains a free vertex.
inline bool is_free_vertex(const graph& g, int v) {
  std::uint64_t nb = g.neighbors(v);
  for (int u : iterate(nb))
    if ((nb & ~g.neighbors(u) & ~vertex_set::bit(u)) != 0) return false;
  return true;
}

inline std::uint64_t free_vertices(const graph& g) {
  std::uint64_t out = 0;
  for (int v = 1; v <= g.n(); ++v)
    if (is_free_vertex(g, v)) out |= vertex_set::bit(v);
  return out;
}

/// closure at v: add every missing edge between neighbors of v, making v free
inline graph closure_at(const graph& g, int v) {
  graph h = g;
  auto nb = vertex_set(g.neighbors(v)).to_list();
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!h.has_edge(nb[i], nb[j])) h.add_edge(nb[i], nb[j]);
  return h;
}

}  // namespace bei
