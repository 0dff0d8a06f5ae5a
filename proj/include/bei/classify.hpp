#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bei/blocks.hpp"
#include "bei/cutsets.hpp"
#include "bei/graph.hpp"
#include "bei/structure.hpp"

namespace bei {

enum class cm_status { cohen_macaulay, unmixed_not_cm, not_unmixed, unknown_cm };

inline const char* to_string(cm_status s) {
  switch (s) {
    case cm_status::cohen_macaulay: return "cohen_macaulay";
    case cm_status::unmixed_not_cm: return "unmixed_not_cm";
    case cm_status::not_unmixed: return "not_unmixed";
    case cm_status::unknown_cm: return "unknown_cm";
  }
  return "?";
}

// worse verdicts dominate when combining components
inline int severity(cm_status s) {
  switch (s) {
    case cm_status::not_unmixed: return 3;
    case cm_status::unknown_cm: return 2;
    case cm_status::unmixed_not_cm: return 1;
    case cm_status::cohen_macaulay: return 0;
  }
  return 0;
}

struct classification {
  cm_status status = cm_status::cohen_macaulay;
  std::string condition;                     // the rule that decided
  std::optional<cutset> violation;           // explicit violating cutset, when constructed
  std::optional<decomposition> pieces;
  std::vector<path_block_pattern> patterns;  // patterns of the path pieces
  std::optional<theta_signature> theta;
  std::string theta_template;
  std::optional<bool> oracle_unmixed;        // set when the enumeration fallback ran
};

/// true iff the C4 block has exactly two cutpoints and they are adjacent
inline bool c4_condition(const graph& g, const block_decomposition& bd, const block& b) {
  if (!(b.vertex_c == 4 && b.edge_c == 4)) return false;
  std::uint64_t cp = b.members & bd.cutpoints;
  if (std::popcount(cp) != 2) return false;
  int u = vertex_set(cp).min();
  int w = vertex_set(cp & ~vertex_set::bit(u)).min();
  return g.has_edge(u, w);
}

struct piece_verdict {
  cm_status status = cm_status::cohen_macaulay;
  std::string condition;
  int block_index = -1;  // offending position in the pattern, when failing
};

// Admissibility of an indecomposable path piece B_1..B_l:
//   l = 1 with B_1 in {K2, C3}, or
//   l >= 3 with complete endpoints in {K2, C3}, B_2 = B_{l-1} = C4, interior
//   blocks in {C3, C4}, every C3 interior followed by a C4, and every C4
//   carrying exactly two adjacent cutpoints.
// Pieces passing this are Cohen-Macaulay; failing ones are not even unmixed.
inline piece_verdict classify_path_piece(const path_block_pattern& pat) {
  int l = pat.length();
  for (int i = 0; i < l; ++i) {
    block_shape s = pat.seq[i].shape();
    if (s == block_shape::diamond || s == block_shape::complete || s == block_shape::other)
      throw error(errc::unsupported_block,
                  "block " + pat.seq[i].shape_str() + " cannot occur in a cactus piece");
  }
  for (int i = 0; i < l; ++i)
    if (pat.seq[i].shape() == block_shape::cycle)
      return {cm_status::not_unmixed, "cycle-block-longer-than-c4", i};
  for (int i = 0; i < l; ++i) {
    const pattern_block& pb = pat.seq[i];
    if (pb.shape() == block_shape::c4 && !(pb.entry && pb.exit && pb.cut_adjacent))
      return {cm_status::not_unmixed, "c4-without-two-adjacent-cutpoints", i};
  }
  if (l == 1) return {cm_status::cohen_macaulay, "single-complete-block", -1};
  if (l < 3 || pat.seq[1].shape() != block_shape::c4 ||
      pat.seq[l - 2].shape() != block_shape::c4) {
    int i = l < 3 ? l - 1 : (pat.seq[1].shape() != block_shape::c4 ? 1 : l - 2);
    return {cm_status::not_unmixed, "second-or-penultimate-block-not-c4", i};
  }
  for (int i = 2; i < l - 2; ++i) {
    if (pat.seq[i].shape() == block_shape::k2)
      return {cm_status::not_unmixed, "edge-block-between-two-c4-blocks", i};
    if (pat.seq[i].shape() == block_shape::c3 && pat.seq[i + 1].shape() != block_shape::c4)
      return {cm_status::not_unmixed, "triangle-block-not-followed-by-c4", i};
  }
  return {cm_status::cohen_macaulay, "path-piece-admissible", -1};
}

namespace detail {

inline std::optional<cutset> checked_violation(const graph& g, vertex_set t) {
  std::vector<std::uint64_t> parts;
  component_masks_into(g, t.bits, parts);
  // classification runs per component on an induced graph over the full
  // vertex universe; isolated vertices belong to other components and are
  // not parts of this one
  std::erase_if(parts, [&](std::uint64_t p) {
    return std::popcount(p) == 1 && g.degree(vertex_set(p).min()) == 0;
  });
  if (!all_touch_two_parts(g, t.bits, parts)) return std::nullopt;
  if (static_cast<int>(parts.size()) == t.size() + 1) return std::nullopt;
  return cutset{t, parts};
}

inline const block* find_block(const block_decomposition& bd, std::uint64_t members) {
  for (const auto& b : bd.blocks)
    if (b.members == members) return &b;
  return nullptr;
}

inline std::vector<int> cycle_order(const graph& g, const block& b) {
  std::vector<int> cyc;
  int start = vertex_set(b.members).min();
  int prev = 0, cur = start;
  do {
    cyc.push_back(cur);
    std::uint64_t nx = g.neighbors(cur) & b.members & ~vertex_set::bit(prev);
    prev = cur;
    cur = vertex_set(nx).min();
  } while (cur != start);
  return cyc;
}

// violating cutset for a cycle block of length >= 5 (such a block always
// breaks unmixedness, whatever hangs off it)
inline std::optional<cutset> witness_long_cycle(const graph& g, const block_decomposition& bd,
                                                const block& b) {
  auto cyc = cycle_order(g, b);
  int l = static_cast<int>(cyc.size());
  auto pos_of = [&](int v) {
    return static_cast<int>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin());
  };
  std::vector<int> cuts = vertex_set(b.members & bd.cutpoints).to_list();
  vertex_set t;
  if (cuts.empty()) {
    t = {cyc[0], cyc[2]};
  } else if (cuts.size() == 1) {
    int p = pos_of(cuts[0]);
    t = {cyc[(p + 1) % l], cyc[(p + l - 1) % l]};
  } else {
    int u = -1, w = -1;
    for (std::size_t i = 0; i < cuts.size() && u < 0; ++i)
      for (std::size_t j = i + 1; j < cuts.size(); ++j)
        if (!g.has_edge(cuts[i], cuts[j])) {
          u = cuts[i];
          w = cuts[j];
          break;
        }
    if (u >= 0) {
      t = {u, w};
    } else {
      // exactly two adjacent cutpoints: take their outer cycle neighbors
      int pu = pos_of(cuts[0]), pw = pos_of(cuts[1]);
      int du = (pu + 1) % l == pw ? l - 1 : 1;  // step away from w
      t = {cyc[(pu + du) % l], cyc[(pw + (l - du)) % l]};
    }
  }
  return checked_violation(g, t);
}

// violating cutset for a C4 block failing the two-adjacent-cutpoints condition
inline std::optional<cutset> witness_c4(const graph& g, const block_decomposition& bd,
                                        const block& b) {
  std::vector<int> cuts = vertex_set(b.members & bd.cutpoints).to_list();
  vertex_set t;
  if (cuts.empty()) {
    int d = vertex_set(b.members).min();
    t = vertex_set(g.neighbors(d) & b.members);
  } else if (cuts.size() == 1) {
    t = vertex_set(g.neighbors(cuts[0]) & b.members);
  } else {
    for (std::size_t i = 0; i < cuts.size() && t.empty(); ++i)
      for (std::size_t j = i + 1; j < cuts.size(); ++j)
        if (!g.has_edge(cuts[i], cuts[j])) {
          t = {cuts[i], cuts[j]};
          break;
        }
  }
  if (t.empty()) return std::nullopt;
  return checked_violation(g, t);
}

// violating cutset for a triangle block whose three vertices all continue
// into C4 blocks: the triangle plus each C4's opposite corner
inline std::optional<cutset> witness_triangle_hub(const graph& g, const block_decomposition& bd,
                                                  const block& c3, int c3_index) {
  vertex_set t;
  for (int v : iterate(c3.members)) {
    t.add(v);
    const auto& at = bd.blocks_of_vertex[v - 1];
    int other = -1;
    for (int bi : at)
      if (bi != c3_index) other = bi;
    if (other < 0) return std::nullopt;
    const block& c4 = bd.blocks[other];
    std::uint64_t opp = c4.members & ~g.neighbors(v) & ~vertex_set::bit(v);
    if (std::popcount(opp) != 1) return std::nullopt;
    t.add(vertex_set(opp).min());
  }
  return checked_violation(g, t);
}

// violating cutset for an interior edge block sandwiched between two C4s
inline std::optional<cutset> witness_interior_edge(const graph& g, const path_block_pattern& pat,
                                                   int i) {
  if (i <= 0 || i + 1 >= pat.length()) return std::nullopt;
  const pattern_block& left = pat.seq[i - 1];
  const pattern_block& mid = pat.seq[i];
  const pattern_block& right = pat.seq[i + 1];
  if (!left.v_prime || !right.w_prime) return std::nullopt;
  return checked_violation(g, vertex_set{mid.entry, left.v_prime, mid.exit, right.w_prime});
}

struct theta_match {
  cm_status status;
  std::string name;
};

// the four unmixed whisker configurations on an admissible theta
inline theta_match match_theta_template(const theta_signature& sig) {
  const auto& L = sig.lengths;
  auto single = [&](int v) {
    for (const auto& [at, list] : sig.whiskers)
      if (at == v) return list.size() == 1;
    return false;
  };
  std::size_t nw = sig.whiskers.size();

  if (L == std::array{1, 2, 2}) {
    if (nw == 1 && (single(sig.a) || single(sig.b)))
      return {cm_status::cohen_macaulay, "theta(1,2,2)+pendant-at-branch"};
  } else if (L == std::array{1, 2, 3}) {
    const auto& in3 = sig.paths[2];  // internals of the length-3 path, a-side first
    if (nw == 2 && ((single(sig.a) && single(in3[0])) || (single(sig.b) && single(in3[1]))))
      return {cm_status::cohen_macaulay, "theta(1,2,3)+pendants-at-branch-and-adjacent-internal"};
  } else if (L == std::array{2, 2, 2}) {
    int hit = 0;
    for (int i = 0; i < 3; ++i)
      if (single(sig.paths[i][0])) ++hit;
    if (nw == 2 && hit == 2)
      return {cm_status::unmixed_not_cm, "theta(2,2,2)+pendants-at-two-midpoints"};
  } else if (L == std::array{2, 2, 3}) {
    bool mids = single(sig.paths[0][0]) || single(sig.paths[1][0]);
    if (nw == 3 && mids && single(sig.paths[2][0]) && single(sig.paths[2][1]))
      return {cm_status::unmixed_not_cm,
              "theta(2,2,3)+pendants-at-midpoint-and-both-long-internals"};
  }
  return {cm_status::not_unmixed, ""};
}

inline bool admissible_theta_lengths(const std::array<int, 3>& L) {
  return L == std::array{1, 2, 2} || L == std::array{1, 2, 3} || L == std::array{2, 2, 2} ||
         L == std::array{2, 2, 3};
}

// Shared flow for a connected graph whose blocks are edges and cycles, plus
// at most one theta block when allow_theta. Isolated vertices are tolerated
// (piece graphs carry the full vertex universe).
inline classification classify_connected(const graph& g, const block_decomposition& bd,
                                         bool allow_theta) {
  classification out;

  // a cutpoint in >= 3 blocks denies unmixedness outright
  for (int v : iterate(bd.cutpoints))
    if (bd.block_count(v) > 2) {
      out.status = cm_status::not_unmixed;
      out.condition = "block-graph-not-a-tree";
      out.violation = checked_violation(g, vertex_set{v});
      return out;
    }

  int theta_block = -1;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const block& b = bd.blocks[i];
    if (b.is_edge() || is_cycle_block(g, b)) continue;
    if (allow_theta && theta_block < 0 && b.edge_c == b.vertex_c + 1) {
      theta_block = static_cast<int>(i);
      continue;
    }
    throw error(allow_theta ? errc::not_bicyclic : errc::not_cactus,
                "block on " + vertex_set(b.members).str() + " is neither an edge nor a cycle");
  }

  decomposition dec = decompose(g, bd);
  cm_status status = cm_status::cohen_macaulay;

  for (std::size_t pi = 0; pi < dec.pieces.size(); ++pi) {
    const graph& piece = dec.pieces[pi];
    bool has_theta =
        theta_block >= 0 && (bd.blocks[theta_block].members & ~dec.piece_vertices[pi]) == 0;

    if (has_theta) {
      theta_signature sig = detect_theta(piece);
      theta_match m = match_theta_template(sig);
      out.theta = sig;
      if (m.status == cm_status::not_unmixed) {
        out.status = cm_status::not_unmixed;
        out.condition = admissible_theta_lengths(sig.lengths) ? "theta-whisker-configuration"
                                                              : "theta-path-lengths";
        out.pieces = std::move(dec);
        return out;
      }
      out.theta_template = m.name;
      if (severity(m.status) > severity(status)) status = m.status;
      continue;
    }

    // cactus piece
    auto piece_bd = blocks(piece);
    std::string condition;
    std::optional<cutset> witness;

    bool path_shaped = true;
    for (const auto& adj : piece_bd.block_adjacency)
      if (adj.size() > 2) path_shaped = false;

    if (!path_shaped) {
      // find the decisive over-branched structure; after the long-cycle and
      // C4 checks only a triangle continuing into three C4s remains
      for (const auto& b : piece_bd.blocks) {
        if (is_cycle_block(piece, b) && b.vertex_c >= 5) {
          condition = "cycle-block-longer-than-c4";
          witness = witness_long_cycle(g, piece_bd, b);
          break;
        }
        if (b.vertex_c == 4 && b.edge_c == 4 && !c4_condition(piece, piece_bd, b)) {
          condition = "c4-without-two-adjacent-cutpoints";
          witness = witness_c4(g, piece_bd, b);
          break;
        }
      }
      if (condition.empty()) {
        for (std::size_t i = 0; i < piece_bd.blocks.size(); ++i)
          if (piece_bd.blocks[i].vertex_c == 3 &&
              piece_bd.cutpoints_in(piece_bd.blocks[i]) == 3) {
            condition = "triangle-block-with-three-c4-blocks";
            witness =
                witness_triangle_hub(g, piece_bd, piece_bd.blocks[i], static_cast<int>(i));
            break;
          }
      }
      if (condition.empty()) condition = "piece-block-graph-not-a-path";
    } else {
      path_block_pattern pat = block_path_pattern(piece, piece_bd);
      piece_verdict v = classify_path_piece(pat);
      if (v.status != cm_status::cohen_macaulay) {
        condition = v.condition;
        if (v.condition == "cycle-block-longer-than-c4") {
          if (const block* b = find_block(piece_bd, pat.seq[v.block_index].members))
            witness = witness_long_cycle(g, piece_bd, *b);
        } else if (v.condition == "c4-without-two-adjacent-cutpoints") {
          if (const block* b = find_block(piece_bd, pat.seq[v.block_index].members))
            witness = witness_c4(g, piece_bd, *b);
        } else if (v.condition == "edge-block-between-two-c4-blocks") {
          witness = witness_interior_edge(g, pat, v.block_index);
        }
      }
      out.patterns.push_back(std::move(pat));
    }

    if (!condition.empty()) {
      out.status = cm_status::not_unmixed;
      out.condition = condition;
      out.violation = std::move(witness);
      out.pieces = std::move(dec);
      return out;
    }
  }

  out.status = status;
  out.condition = "pieces-admissible";
  out.pieces = std::move(dec);
  return out;
}

}  // namespace detail

/// connected cactus classification: Cohen-Macaulay iff unmixed iff every
/// piece of the free-vertex decomposition is an admissible path of blocks
inline classification classify_cactus(const graph& g) {
  auto bd = blocks(g);
  int edge_comps = 0;
  for (std::uint64_t c : component_masks(g))
    if (std::popcount(c) > 1) ++edge_comps;
  if (edge_comps > 1) throw error(errc::not_cactus, "graph is not connected");
  return detail::classify_connected(g, bd, false);
}

/// connected bicyclic classification; cactus bicyclics take the cactus route,
/// the rest match the theta-with-pendants templates
inline classification classify_bicyclic(const graph& g) {
  auto bd = blocks(g);
  auto mt = metrics(g, bd);
  int isolated = 0;
  for (std::uint64_t c : component_masks(g))
    if (std::popcount(c) == 1) ++isolated;
  if (mt.component_count - isolated != 1 || mt.deviation != 2)
    throw error(errc::not_bicyclic, "graph is not connected with cycle rank 2");
  return detail::classify_connected(g, bd, !mt.is_cactus);
}

struct classify_options {
  int cap = default_cutset_cap;
  bool oracle_fallback = true;  // decide unmixedness by enumeration outside the families
};

// Per-component dispatch over the classified families, combined by taking the
// worst verdict (NotUnmixed > UnknownCM > UnmixedNotCM > CohenMacaulay).
// Components outside the families (cycle rank >= 3 that is not a cactus) stay
// unknown_cm unless the enumeration fallback can at least refute unmixedness;
// a fallback hitting the cap leaves oracle_unmixed unset.
inline classification classify(const graph& g, const classify_options& opt = {}) {
  classification overall;
  int worst = -1;
  std::optional<theta_signature> theta;
  std::string theta_template;

  for (std::uint64_t comp : component_masks(g)) {
    if (std::popcount(comp) == 1) continue;
    graph h = g.induced_edges(comp);
    auto bd = blocks(h);
    auto mt = metrics(h, bd);
    classification c;
    if (mt.is_cactus) {
      c = detail::classify_connected(h, bd, false);
    } else if (mt.deviation == 2) {
      c = detail::classify_connected(h, bd, true);
    } else {
      c.status = cm_status::unknown_cm;
      c.condition = "outside-classified-families";
      if (opt.oracle_fallback) {
        try {
          auto res = is_unmixed(h, opt.cap);
          c.oracle_unmixed = res.unmixed;
          if (!res.unmixed) {
            c.status = cm_status::not_unmixed;
            c.violation = std::move(res.violation->witness);
          }
        } catch (const error& e) {
          if (e.code() != errc::cap_exceeded) throw;
        }
      }
    }
    if (!c.theta_template.empty() && !theta) {
      theta = c.theta;
      theta_template = c.theta_template;
    }
    if (severity(c.status) > worst) {
      worst = severity(c.status);
      overall = std::move(c);
    }
  }

  if (worst < 0) {
    overall.condition = "no-edges";
    return overall;
  }
  if (overall.status == cm_status::cohen_macaulay ||
      overall.status == cm_status::unmixed_not_cm) {
    // rebuild the certificate over the whole graph
    overall.pieces = decompose(g);
    overall.patterns.clear();
    for (const graph& piece : overall.pieces->pieces) {
      try {
        overall.patterns.push_back(block_path_pattern(piece));
      } catch (const error& e) {
        if (e.code() != errc::not_a_path) throw;  // the theta piece has no pattern
      }
    }
    overall.condition = "pieces-admissible";
    if (theta) {
      overall.theta = theta;
      overall.theta_template = theta_template;
    }
  }
  return overall;
}

}  // namespace bei
