#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

inline constexpr int default_cutset_cap = 24;

// T is a cutset iff every v in T is a cut vertex of the induced graph on
// (V \ T) + v; equivalently v has neighbors in at least two components of
// the induced graph on V \ T.
struct cutset {
  vertex_set t;
  std::vector<std::uint64_t> parts;  // components of V \ T, sorted by smallest member

  int c() const { return static_cast<int>(parts.size()); }
};

// in (|T|, lexicographic vertex list) order
using cutset_family = std::vector<cutset>;

// The minimal prime P_T of the binomial edge ideal, indexed by its cutset.
// height P_T = n + |T| - c(T).
struct minimal_prime {
  cutset cs;
  int height = 0;
};

namespace detail {

inline void component_masks_into(const graph& g, std::uint64_t removed,
                                 std::vector<std::uint64_t>& parts) {
  parts.clear();
  std::uint64_t todo = g.vertices() & ~removed;
  while (todo) {
    std::uint64_t comp = todo & (~todo + 1);
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
}

inline bool all_touch_two_parts(const graph& g, std::uint64_t t,
                                const std::vector<std::uint64_t>& parts) {
  for (int v : iterate(t)) {
    std::uint64_t nb = g.neighbors(v) & ~t;
    int touched = 0;
    for (std::uint64_t p : parts) {
      if (nb & p) {
        if (++touched == 2) break;
      }
    }
    if (touched < 2) return false;
  }
  return true;
}

// Visits every cutset contained in `domain` in (size, lex) order, restricting
// attention to non-free vertices (free vertices never occur in cutsets).
// Component parts are computed with everything outside `domain` removed.
// fn(t_mask, parts) -> bool; returning false stops the scan.
template <class F>
void scan_cutsets(const graph& g, std::uint64_t domain, int cap, int max_size, F&& fn) {
  std::uint64_t outside = g.vertices() & ~domain;
  std::vector<int> cand;
  for (int v : iterate(domain))
    if (!is_free_vertex(g, v)) cand.push_back(v);
  int k = static_cast<int>(cand.size());
  if (k > cap)
    throw error(errc::cap_exceeded, std::to_string(k) + " candidate vertices exceed cap " +
                                        std::to_string(cap));

  std::vector<std::uint64_t> parts;
  std::vector<int> idx;
  for (int s = 0; s <= std::min(k, max_size); ++s) {
    idx.resize(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      std::uint64_t t = 0;
      for (int i : idx) t |= vertex_set::bit(cand[i]);
      component_masks_into(g, outside | t, parts);
      if (all_touch_two_parts(g, t, parts)) {
        if (!fn(t, parts)) return;
      }
      // next s-combination in lex order
      int i = s - 1;
      while (i >= 0 && idx[i] == k - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

template <class F>
void scan_cutsets(const graph& g, std::uint64_t domain, int cap, F&& fn) {
  scan_cutsets(g, domain, cap, 64, fn);
}

}  // namespace detail

inline bool is_cutset(const graph& g, vertex_set t) {
  std::vector<std::uint64_t> parts;
  detail::component_masks_into(g, t.bits, parts);
  return detail::all_touch_two_parts(g, t.bits, parts);
}

inline cutset_family enumerate_cutsets(const graph& g, int cap = default_cutset_cap) {
  cutset_family fam;
  detail::scan_cutsets(g, g.vertices(), cap, [&](std::uint64_t t, const std::vector<std::uint64_t>& parts) {
    fam.push_back(cutset{vertex_set(t), parts});
    return true;
  });
  return fam;
}

// Size-bounded variant: scans subset sizes 0..max_size only and therefore
// does not apply the candidate cap.
inline cutset_family enumerate_cutsets_bounded(const graph& g, int max_size) {
  cutset_family fam;
  detail::scan_cutsets(g, g.vertices(), 64, max_size,
                       [&](std::uint64_t t, const std::vector<std::uint64_t>& parts) {
                         fam.push_back(cutset{vertex_set(t), parts});
                         return true;
                       });
  return fam;
}

inline std::vector<minimal_prime> minimal_primes(const graph& g, int cap = default_cutset_cap) {
  std::vector<minimal_prime> out;
  for (auto& cs : enumerate_cutsets(g, cap)) {
    int h = g.n() + cs.t.size() - cs.c();
    out.push_back(minimal_prime{std::move(cs), h});
  }
  return out;
}

// P_{a} <= P_{b}, decided combinatorially: the cutset of a must be contained
// in b's, and each component of a must fall (minus b's cutset) inside a single
// component of b.
inline bool prime_contains(const graph&, const cutset& a, const cutset& b) {
  if (!a.t.subset_of(b.t)) return false;
  for (std::uint64_t x : a.parts) {
    std::uint64_t rest = x & ~b.t.bits;
    if (!rest) continue;
    bool inside_one = false;
    for (std::uint64_t y : b.parts)
      if ((rest & ~y) == 0) {
        inside_one = true;
        break;
      }
    if (!inside_one) return false;
  }
  return true;
}

struct unmixed_violation {
  std::uint64_t component = 0;  // vertex mask of the component scanned
  cutset witness;               // parts are local to that component
  int expected = 0;             // |T| + 1
};

struct unmixed_result {
  bool unmixed = true;
  std::optional<unmixed_violation> violation;
  explicit operator bool() const { return unmixed; }
};

// A connected graph is unmixed iff c(T) = |T| + 1 for every cutset T; a
// disconnected one iff every component is. Scans per component in (size, lex)
// order and stops at the first violation.
inline unmixed_result is_unmixed(const graph& g, int cap = default_cutset_cap) {
  for (std::uint64_t comp : component_masks(g)) {
    unmixed_result res;
    detail::scan_cutsets(g, comp, cap, [&](std::uint64_t t, const std::vector<std::uint64_t>& parts) {
      if (static_cast<int>(parts.size()) != std::popcount(t) + 1) {
        res.unmixed = false;
        res.violation = unmixed_violation{comp, cutset{vertex_set(t), parts},
                                          std::popcount(t) + 1};
        return false;
      }
      return true;
    });
    if (!res.unmixed) return res;
  }
  return {};
}

// Krull dimension of S/J(G): max over cutsets of n - |T| + c(T). Computed per
// component (the maxima add), after checking the global candidate cap.
inline int krull_dim(const graph& g, int cap = default_cutset_cap) {
  int free_count = 0;
  for (int v = 1; v <= g.n(); ++v)
    if (is_free_vertex(g, v)) ++free_count;
  if (g.n() - free_count > cap)
    throw error(errc::cap_exceeded, std::to_string(g.n() - free_count) +
                                        " candidate vertices exceed cap " + std::to_string(cap));
  int total = g.n();
  for (std::uint64_t comp : component_masks(g)) {
    int best = 1;  // T = {} contributes c = 1 per component
    detail::scan_cutsets(g, comp, cap, [&](std::uint64_t t, const std::vector<std::uint64_t>& parts) {
      best = std::max(best, static_cast<int>(parts.size()) - std::popcount(t));
      return true;
    });
    total += best;
  }
  return total;
}

}  // namespace bei
