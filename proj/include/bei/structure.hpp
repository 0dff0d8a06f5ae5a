#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bei/blocks.hpp"
#include "bei/cutsets.hpp"
#include "bei/graph.hpp"

namespace bei {

// ---------------------------------------------------------------- decompose

struct decomposition {
  std::vector<graph> pieces;                   // edge-disjoint, same vertex universe
  std::vector<std::uint64_t> piece_vertices;   // sorted by (smallest vertex, mask)
  vertex_set split_vertices;                   // vertices the graph was split at
};

namespace detail {

// v's neighbors within one of its blocks form a clique?
inline bool clique_side(const graph& g, const block& b, int v) {
  std::uint64_t nb = g.neighbors(v) & b.members;
  for (int u : iterate(nb))
    if ((nb & ~g.neighbors(u) & ~vertex_set::bit(u)) != 0) return false;
  return true;
}

struct union_find {
  std::vector<int> parent;
  explicit union_find(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// A graph is decomposable at a cutpoint v lying in exactly two blocks when
// v's neighborhood restricted to either block is a clique; splitting there
// leaves v free on both sides. Pieces are the fully split (indecomposable)
// parts; the eligibility of a cutpoint is unaffected by other splits, so the
// result is independent of split order.
inline decomposition decompose(const graph& g, const block_decomposition& bd) {
  detail::union_find uf(bd.blocks.size());
  vertex_set splits;
  for (int v : iterate(bd.cutpoints)) {
    const auto& at = bd.blocks_of_vertex[v - 1];
    bool eligible = at.size() == 2 && detail::clique_side(g, bd.blocks[at[0]], v) &&
                    detail::clique_side(g, bd.blocks[at[1]], v);
    if (eligible)
      splits.add(v);
    else
      for (std::size_t i = 1; i < at.size(); ++i) uf.unite(at[0], at[i]);
  }

  std::vector<std::uint64_t> groups(bd.blocks.size(), 0);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    groups[uf.find(static_cast<int>(i))] |= bd.blocks[i].members;

  decomposition d;
  d.split_vertices = splits;
  for (std::uint64_t m : groups)
    if (m) d.piece_vertices.push_back(m);
  std::sort(d.piece_vertices.begin(), d.piece_vertices.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return std::pair(vertex_set(a).min(), a) < std::pair(vertex_set(b).min(), b);
            });
  for (std::uint64_t m : d.piece_vertices) d.pieces.push_back(g.induced_edges(m));
  return d;
}

inline decomposition decompose(const graph& g) { return decompose(g, blocks(g)); }

// ------------------------------------------------------- path-of-blocks

enum class block_shape { k2, c3, c4, cycle, complete, diamond, other };

struct pattern_block {
  std::uint64_t members = 0;
  int vertex_c = 0;
  int edge_c = 0;
  int entry = 0;          // cutpoint shared with the previous block (0 first)
  int exit = 0;           // cutpoint shared with the next block (0 last)
  bool cut_adjacent = false;  // both cutpoints present and adjacent
  int v_prime = 0;        // C4: entry's other neighbor; diamond: the degree-3 non-cutpoint
  int w_prime = 0;        // C4: exit's other neighbor
  int f = 0;              // diamond: the degree-2 non-cutpoint (free)

  block_shape shape() const {
    if (vertex_c == 2) return block_shape::k2;
    if (vertex_c == 3 && edge_c == 3) return block_shape::c3;
    if (vertex_c == 4 && edge_c == 4) return block_shape::c4;
    if (vertex_c == 4 && edge_c == 5) return block_shape::diamond;
    if (edge_c == vertex_c * (vertex_c - 1) / 2) return block_shape::complete;
    if (edge_c == vertex_c) return block_shape::cycle;
    return block_shape::other;
  }
  bool is_complete() const {
    auto s = shape();
    return s == block_shape::k2 || s == block_shape::c3 || s == block_shape::complete;
  }
  std::string shape_str() const {
    switch (shape()) {
      case block_shape::k2: return "K2";
      case block_shape::c3: return "C3";
      case block_shape::c4: return "C4";
      case block_shape::cycle: return "C" + std::to_string(vertex_c);
      case block_shape::complete: return "K" + std::to_string(vertex_c);
      case block_shape::diamond: return "D";
      case block_shape::other: return "B(" + std::to_string(vertex_c) + "," + std::to_string(edge_c) + ")";
    }
    return "?";
  }
};

struct path_block_pattern {
  std::vector<pattern_block> seq;  // B_1 .. B_l in path order
  std::vector<int> cutpoints;      // shared vertices, size l-1

  int length() const { return static_cast<int>(seq.size()); }
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) s += ',';
      s += seq[i].shape_str();
    }
    return s + "]";
  }
};

// Orders the blocks of a connected piece whose block graph is a path;
// isolated vertices are ignored. Throws NotAPath otherwise. The endpoint
// block containing the smallest vertex label comes first.
inline path_block_pattern block_path_pattern(const graph& g, const block_decomposition& bd) {
  if (bd.blocks.empty()) throw error(errc::not_a_path, "graph has no edges");
  std::size_t l = bd.blocks.size();
  for (const auto& adj : bd.block_adjacency)
    if (adj.size() > 2) throw error(errc::not_a_path, "a block meets more than two others");

  int start = -1;
  for (std::size_t i = 0; i < l; ++i) {
    if (bd.block_adjacency[i].size() <= 1) {
      if (start < 0 ||
          std::pair(vertex_set(bd.blocks[i].members).min(), bd.blocks[i].members) <
              std::pair(vertex_set(bd.blocks[start].members).min(), bd.blocks[start].members))
        start = static_cast<int>(i);
    }
  }
  if (start < 0) throw error(errc::not_a_path, "block graph contains a cycle");

  std::vector<int> order;
  int prev = -1, cur = start;
  while (true) {
    order.push_back(cur);
    int next = -1;
    for (int j : bd.block_adjacency[cur])
      if (j != prev) next = j;
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if (order.size() != l) throw error(errc::not_a_path, "block graph is not connected");

  path_block_pattern pat;
  for (std::size_t i = 0; i < l; ++i) {
    const block& b = bd.blocks[order[i]];
    pattern_block pb;
    pb.members = b.members;
    pb.vertex_c = b.vertex_c;
    pb.edge_c = b.edge_c;
    if (i > 0) {
      std::uint64_t shared = b.members & bd.blocks[order[i - 1]].members;
      pb.entry = vertex_set(shared).min();
      pat.cutpoints.push_back(pb.entry);
    }
    if (i + 1 < l) {
      std::uint64_t shared = b.members & bd.blocks[order[i + 1]].members;
      pb.exit = vertex_set(shared).min();
    }
    if (pb.entry && pb.exit)
      pb.cut_adjacent = g.has_edge(pb.entry, pb.exit);
    if (pb.shape() == block_shape::c4 && pb.cut_adjacent) {
      pb.v_prime = vertex_set(g.neighbors(pb.entry) & b.members & ~vertex_set::bit(pb.exit)).min();
      pb.w_prime = vertex_set(g.neighbors(pb.exit) & b.members & ~vertex_set::bit(pb.entry)).min();
    }
    if (pb.shape() == block_shape::diamond && pb.entry && pb.exit) {
      int de = std::popcount(g.neighbors(pb.entry) & b.members);
      int dx = std::popcount(g.neighbors(pb.exit) & b.members);
      if ((de == 2 && dx == 3) || (de == 3 && dx == 2)) {
        for (int u : iterate(b.members & ~vertex_set::bit(pb.entry) & ~vertex_set::bit(pb.exit))) {
          if (std::popcount(g.neighbors(u) & b.members) == 3)
            pb.v_prime = u;
          else
            pb.f = u;
        }
      }
    }
    pat.seq.push_back(pb);
  }
  return pat;
}

inline path_block_pattern block_path_pattern(const graph& g) {
  return block_path_pattern(g, blocks(g));
}

// ------------------------------------------------------------ theta graphs

struct theta_signature {
  int a = 0, b = 0;                       // branch vertices, a < b
  std::array<int, 3> lengths{};           // path edge counts, ascending
  std::array<std::vector<int>, 3> paths;  // internal vertices, same order as lengths
  // theta vertex -> all tree vertices hanging off it, sorted; entries with
  // nonempty attachment only, sorted by theta vertex
  std::vector<std::pair<int, std::vector<int>>> whiskers;

  std::string lengths_str() const {
    return "(" + std::to_string(lengths[0]) + "," + std::to_string(lengths[1]) + "," +
           std::to_string(lengths[2]) + ")";
  }
};

// Recognizes graphs whose 2-core is a theta (two degree-3 vertices joined by
// three internally disjoint paths) with arbitrary trees hanging off it.
// Isolated vertices are ignored. Throws NotTheta otherwise.
inline theta_signature detect_theta(const graph& g) {
  std::uint64_t support = 0;
  for (int v = 1; v <= g.n(); ++v)
    if (g.neighbors(v)) support |= vertex_set::bit(v);
  if (!support) throw error(errc::not_theta, "graph has no edges");
  {
    auto comps = component_masks(g, g.vertices() & ~support);
    if (comps.size() != 1) throw error(errc::not_theta, "graph is not connected");
  }

  // strip degree-<=1 vertices to reach the 2-core
  std::uint64_t core = support;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : iterate(core))
      if (std::popcount(g.neighbors(v) & core) <= 1) {
        core &= ~vertex_set::bit(v);
        changed = true;
      }
  }
  if (!core) throw error(errc::not_theta, "graph is a forest");

  int br[2] = {0, 0};
  int nbranch = 0;
  for (int v : iterate(core)) {
    int d = std::popcount(g.neighbors(v) & core);
    if (d == 3) {
      if (nbranch < 2) br[nbranch] = v;
      ++nbranch;
    } else if (d != 2) {
      throw error(errc::not_theta, "2-core has a vertex of degree " + std::to_string(d));
    }
  }
  if (nbranch != 2) throw error(errc::not_theta, "2-core has " + std::to_string(nbranch) +
                                                     " branch vertices, want 2");
  if (std::popcount(core) + 1 != [&] {
        int e = 0;
        for (int v : iterate(core)) e += std::popcount(g.neighbors(v) & core);
        return e / 2;
      }())
    throw error(errc::not_theta, "2-core is not a theta");

  theta_signature sig;
  sig.a = std::min(br[0], br[1]);
  sig.b = std::max(br[0], br[1]);

  struct walk {
    std::vector<int> internal;
    int len = 0;
  };
  std::vector<walk> walks;
  for (int s : iterate(g.neighbors(sig.a) & core)) {
    walk w;
    int prev = sig.a, cur = s;
    while (cur != sig.b) {
      // a walk that re-enters a branch vertex or forks is no theta path
      // (catches e.g. two cycles joined by a path, which matches the degree
      // profile but is not a theta)
      if (cur == sig.a || static_cast<int>(w.internal.size()) > g.n())
        throw error(errc::not_theta, "2-core is not a theta");
      w.internal.push_back(cur);
      std::uint64_t nx = g.neighbors(cur) & core & ~vertex_set::bit(prev);
      if (std::popcount(nx) != 1) throw error(errc::not_theta, "2-core is not a theta");
      prev = cur;
      cur = vertex_set(nx).min();
    }
    w.len = static_cast<int>(w.internal.size()) + 1;
    walks.push_back(std::move(w));
  }
  if (walks.size() != 3) throw error(errc::not_theta, "2-core is not a theta");
  std::sort(walks.begin(), walks.end(), [](const walk& x, const walk& y) {
    int fx = x.internal.empty() ? 0 : x.internal.front();
    int fy = y.internal.empty() ? 0 : y.internal.front();
    return std::pair(x.len, fx) < std::pair(y.len, fy);
  });
  for (int i = 0; i < 3; ++i) {
    sig.lengths[i] = walks[i].len;
    sig.paths[i] = std::move(walks[i].internal);
  }

  // hanging trees: components after deleting the core, attached at one core vertex each
  std::vector<std::pair<int, std::vector<int>>> wh;
  for (std::uint64_t tree : component_masks(g, (g.vertices() & ~support) | core)) {
    int at = 0;
    for (int v : iterate(core))
      if (g.neighbors(v) & tree) at = v;
    for (auto& [v, list] : wh)
      if (v == at) {
        for (int u : iterate(tree)) list.push_back(u);
        at = 0;
        break;
      }
    if (at) wh.emplace_back(at, vertex_set(tree).to_list());
  }
  for (auto& [v, list] : wh) std::sort(list.begin(), list.end());
  std::sort(wh.begin(), wh.end());
  sig.whiskers = std::move(wh);
  return sig;
}

// -------------------------------------------------- predicted cutset family

// For a path of blocks B_1..B_l with complete endpoints and interior blocks
// drawn from completes on >= 3 vertices, C4s with adjacent cutpoints and
// diamonds with one degree-2 and one degree-3 cutpoint, the cutsets are
// exactly the subsets T of {cutpoints} + {off-cutpoint labels} with
//   (1) v' in T  ==>  w in T and v not in T
//   (2) w' in T  ==>  v in T and w not in T
// per C4 (v = entry, w = exit) and rule (1) per diamond (v = the degree-2
// cutpoint, w = the degree-3 cutpoint, v' = the degree-3 non-cutpoint).
// Interior edge blocks fall outside the family: on [K2,C4,K2,C4,K2] the set
// {exit_1, v'_1, entry_2, w'_2} passes both rules but has c = |T|.
// Throws HypothesisViolated when the pattern is outside this family.
inline cutset_family predicted_path_cutsets(const graph& g, const path_block_pattern& pat) {
  struct rule {
    int who, requires_in, requires_out;
  };
  std::vector<rule> rules;
  std::uint64_t candidates = 0;
  for (int v : pat.cutpoints) candidates |= vertex_set::bit(v);

  for (std::size_t i = 0; i < pat.seq.size(); ++i) {
    const pattern_block& pb = pat.seq[i];
    bool endpoint = i == 0 || i + 1 == pat.seq.size();
    if (endpoint) {
      if (!pb.is_complete())
        throw error(errc::hypothesis_violated, "endpoint block " + pb.shape_str() + " is not complete");
      continue;
    }
    switch (pb.shape()) {
      case block_shape::k2:
        throw error(errc::hypothesis_violated, "interior edge block has fewer than 3 vertices");
      case block_shape::c3:
      case block_shape::complete:
        break;
      case block_shape::c4: {
        if (!pb.cut_adjacent)
          throw error(errc::hypothesis_violated, "interior C4 cutpoints not adjacent");
        candidates |= vertex_set::bit(pb.v_prime) | vertex_set::bit(pb.w_prime);
        rules.push_back({pb.v_prime, pb.exit, pb.entry});
        rules.push_back({pb.w_prime, pb.entry, pb.exit});
        break;
      }
      case block_shape::diamond: {
        if (!pb.v_prime)
          throw error(errc::hypothesis_violated,
                      "interior diamond cutpoints are not one degree-2 and one degree-3 vertex");
        int de = std::popcount(g.neighbors(pb.entry) & pb.members);
        int d2 = de == 2 ? pb.entry : pb.exit;
        int d3 = de == 2 ? pb.exit : pb.entry;
        candidates |= vertex_set::bit(pb.v_prime);
        rules.push_back({pb.v_prime, d3, d2});
        break;
      }
      default:
        throw error(errc::hypothesis_violated, "interior block " + pb.shape_str() + " unsupported");
    }
  }

  auto cand = vertex_set(candidates).to_list();
  int k = static_cast<int>(cand.size());
  cutset_family fam;
  std::vector<int> idx;
  std::vector<std::uint64_t> parts;
  for (int s = 0; s <= k; ++s) {
    idx.resize(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      std::uint64_t t = 0;
      for (int i : idx) t |= vertex_set::bit(cand[i]);
      bool ok = true;
      for (const rule& r : rules)
        if ((t & vertex_set::bit(r.who)) &&
            (!(t & vertex_set::bit(r.requires_in)) || (t & vertex_set::bit(r.requires_out)))) {
          ok = false;
          break;
        }
      if (ok) {
        detail::component_masks_into(g, t, parts);
        fam.push_back(cutset{vertex_set(t), parts});
      }
      int i = s - 1;
      while (i >= 0 && idx[i] == k - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return fam;
}

}  // namespace bei
