#pragma once

#include <algorithm>
#include <array>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bei/classify.hpp"
#include "bei/edge_list.hpp"

namespace bei {

// A check is skipped on graphs where its hypothesis fails or where the work
// would be unbounded (vertex counts above full_scan_limit for subset scans,
// families above pair_scan_limit for pairwise scans).
inline constexpr int full_scan_limit = 12;
inline constexpr std::size_t pair_scan_limit = 512;

inline const std::vector<std::string>& census_check_catalog() {
  static const std::vector<std::string> catalog = {
      "free-not-in-cutset",  "unmixed-block-tree", "unmixed-cycle-lengths",
      "c4-condition",        "theta-lengths",      "gluing",
      "prime-incomparability", "classifier-oracle", "closure-filtration",
      "pruned-vs-full",      "unmixed-heights",    "decompose-sound",
  };
  return catalog;
}

inline const std::vector<std::string>& default_census_checks() {
  static const std::vector<std::string> def = {
      "free-not-in-cutset", "unmixed-block-tree",    "unmixed-cycle-lengths",
      "c4-condition",       "theta-lengths",         "gluing",
      "prime-incomparability",
  };
  return def;
}

struct census_violation {
  std::size_t index;  // position in the input stream, 0-based
  std::string check;
  std::string graph;  // compact edge list
  std::string detail;
};

struct census_options {
  std::vector<std::string> checks;  // empty = default set, "all" = full catalog
  int jobs = 1;
  int cap = default_cutset_cap;
};

struct census_summary {
  std::size_t graphs = 0;
  std::size_t cap_exceeded = 0;  // graphs whose cutset enumeration was skipped
  std::array<std::size_t, 4> status_counts{};  // indexed by cm_status
  std::vector<std::string> checks;
  std::vector<census_violation> violations;

  std::string text() const {
    std::string s = "graphs=" + std::to_string(graphs) +
                    " cap_exceeded=" + std::to_string(cap_exceeded) + "\n";
    s += "status";
    for (int i = 0; i < 4; ++i)
      s += std::string(" ") + to_string(static_cast<cm_status>(i)) + "=" +
           std::to_string(status_counts[i]);
    s += "\nchecks ";
    for (std::size_t i = 0; i < checks.size(); ++i) s += (i ? "," : "") + checks[i];
    s += "\nviolations=" + std::to_string(violations.size()) + "\n";
    for (const auto& v : violations)
      s += "violation index=" + std::to_string(v.index) + " check=" + v.check +
           " graph=" + v.graph + " detail=" + v.detail + "\n";
    return s;
  }
};

namespace detail {

inline std::vector<std::string> resolve_checks(const std::vector<std::string>& wanted) {
  const auto& catalog = census_check_catalog();
  if (wanted.size() == 1 && wanted[0] == "all") return catalog;
  const auto& src = wanted.empty() ? default_census_checks() : wanted;
  for (const auto& w : src)
    if (std::find(catalog.begin(), catalog.end(), w) == catalog.end())
      throw error(errc::parse_error, "unknown census check '" + w + "'");
  std::vector<std::string> out;  // canonical catalog order, duplicates dropped
  for (const auto& c : catalog)
    if (std::find(src.begin(), src.end(), c) != src.end()) out.push_back(c);
  return out;
}

// Lazily computed per-graph state shared between checks.
struct census_ctx {
  const graph& g;
  int cap;
  std::optional<block_decomposition> bd_;
  std::optional<unmixed_result> unmixed_;
  bool unmixed_capped = false;
  std::optional<cutset_family> family_;
  bool family_capped = false;

  explicit census_ctx(const graph& gg, int c) : g(gg), cap(c) {}

  const block_decomposition& bd() {
    if (!bd_) bd_ = blocks(g);
    return *bd_;
  }
  const unmixed_result* unmixed() {
    if (!unmixed_ && !unmixed_capped) {
      try {
        unmixed_ = is_unmixed(g, cap);
      } catch (const error& e) {
        if (e.code() != errc::cap_exceeded) throw;
        unmixed_capped = true;
      }
    }
    return unmixed_ ? &*unmixed_ : nullptr;
  }
  const cutset_family* family() {
    if (!family_ && !family_capped) {
      try {
        family_ = enumerate_cutsets(g, cap);
      } catch (const error& e) {
        if (e.code() != errc::cap_exceeded) throw;
        family_capped = true;
      }
    }
    return family_ ? &*family_ : nullptr;
  }
};

template <class Emit>
void run_one_check(const std::string& check, census_ctx& cx, Emit&& emit) {
  const graph& g = cx.g;
  if (check == "free-not-in-cutset") {
    if (g.n() > full_scan_limit) return;
    vertex_set fr(free_vertices(g));
    if (fr.empty()) return;
    std::uint64_t all = vertex_set::full(g.n()).bits;
    for (std::uint64_t t = 0; t <= all; ++t) {
      if ((t & ~all) != 0 || (t & fr.bits) == 0) continue;
      if (is_cutset(g, vertex_set(t)))
        emit(check, "T=" + vertex_set(t).str() + " is a cutset containing a free vertex");
    }
    return;
  }
  if (check == "unmixed-block-tree") {
    auto* u = cx.unmixed();
    if (u && u->unmixed && !cx.bd().is_tree)
      emit(check, "unmixed but the block graph contains a cycle");
    return;
  }
  if (check == "unmixed-cycle-lengths") {
    auto* u = cx.unmixed();
    if (!u || !u->unmixed) return;
    auto gm = metrics(g, cx.bd());
    if (!gm.is_cactus) return;
    for (const auto& b : cx.bd().blocks)
      if (is_cycle_block(g, b) && b.vertex_c >= 5)
        emit(check, "unmixed with a cycle block of length " + std::to_string(b.vertex_c));
    return;
  }
  if (check == "c4-condition") {
    auto* u = cx.unmixed();
    if (!u || !u->unmixed) return;
    for (std::size_t i = 0; i < cx.bd().blocks.size(); ++i) {
      const auto& b = cx.bd().blocks[i];
      if (is_cycle_block(g, b) && b.vertex_c == 4 && !c4_condition(g, cx.bd(), b))
        emit(check, "unmixed but the 4-cycle on " + vertex_set(b.members).str() +
                        " lacks two adjacent cutpoints");
    }
    return;
  }
  if (check == "theta-lengths") {
    auto* u = cx.unmixed();
    if (!u || !u->unmixed) return;
    auto gm = metrics(g, cx.bd());
    if (!gm.is_bicyclic || gm.is_cactus) return;
    auto dec = decompose(g, cx.bd());
    for (const auto& piece : dec.pieces) {
      theta_signature sig;
      try {
        sig = detect_theta(piece);
      } catch (const error& e) {
        if (e.code() != errc::not_theta) throw;
        continue;
      }
      if (!admissible_theta_lengths(sig.lengths)) {
        emit(check, "unmixed with path lengths " + sig.lengths_str());
      } else if (sig.lengths[0] == 1) {
        int attached = (cx.bd().block_count(sig.a) > 1 ? 1 : 0) +
                       (cx.bd().block_count(sig.b) > 1 ? 1 : 0);
        if (attached != 1)
          emit(check, "lengths " + sig.lengths_str() + " need exactly one attached branch vertex, got " +
                          std::to_string(attached));
      }
    }
    return;
  }
  if (check == "gluing") {
    auto* u = cx.unmixed();
    if (!u) return;
    auto dec = decompose(g, cx.bd());
    if (dec.split_vertices.empty()) return;
    bool pieces_unmixed = true;
    for (const auto& piece : dec.pieces)
      if (!is_unmixed(piece, cx.cap).unmixed) {
        pieces_unmixed = false;
        break;
      }
    if (u->unmixed != pieces_unmixed)
      emit(check, std::string("whole graph unmixed=") + (u->unmixed ? "1" : "0") +
                      " but split pieces unmixed=" + (pieces_unmixed ? "1" : "0"));
    return;
  }
  if (check == "prime-incomparability") {
    auto* fam = cx.family();
    if (!fam || fam->size() > pair_scan_limit) return;
    for (std::size_t i = 0; i < fam->size(); ++i)
      for (std::size_t j = 0; j < fam->size(); ++j)
        if (i != j && prime_contains(g, (*fam)[i], (*fam)[j]))
          emit(check, "prime of T=" + (*fam)[i].t.str() + " contains prime of T=" + (*fam)[j].t.str());
    return;
  }
  if (check == "classifier-oracle") {
    classify_options copt;
    copt.cap = cx.cap;
    copt.oracle_fallback = false;
    auto cls = classify(g, copt);
    if (cls.status == cm_status::unknown_cm) return;
    auto* u = cx.unmixed();
    if (!u) return;
    bool classified_unmixed = cls.status != cm_status::not_unmixed;
    if (classified_unmixed != u->unmixed)
      emit(check, std::string("classifier says ") + to_string(cls.status) + " (" + cls.condition +
                      ") but enumeration says unmixed=" + (u->unmixed ? "1" : "0"));
    return;
  }
  if (check == "closure-filtration") {
    if (g.n() > full_scan_limit) return;
    auto* fam = cx.family();
    if (!fam) return;
    for (int v = 1; v <= g.n(); ++v) {
      cutset_family expect;
      for (const auto& cs : *fam)
        if (!cs.t.contains(v)) expect.push_back(cs);
      cutset_family got;
      try {
        got = enumerate_cutsets(closure_at(g, v), cx.cap);
      } catch (const error& e) {
        if (e.code() != errc::cap_exceeded) throw;
        continue;
      }
      bool same = got.size() == expect.size();
      for (std::size_t i = 0; same && i < got.size(); ++i)
        same = got[i].t.bits == expect[i].t.bits && got[i].parts == expect[i].parts;
      if (!same)
        emit(check, "closure at " + std::to_string(v) + " has " + std::to_string(got.size()) +
                        " cutsets, expected " + std::to_string(expect.size()) +
                        " (those avoiding the vertex)");
    }
    return;
  }
  if (check == "pruned-vs-full") {
    if (g.n() > full_scan_limit) return;
    auto* fam = cx.family();
    if (!fam) return;
    std::vector<std::uint64_t> full;
    std::uint64_t all = vertex_set::full(g.n()).bits;
    for (std::uint64_t t = 0; t <= all; ++t)
      if ((t & ~all) == 0 && is_cutset(g, vertex_set(t))) full.push_back(t);
    std::vector<std::uint64_t> pruned;
    for (const auto& cs : *fam) pruned.push_back(cs.t.bits);
    std::sort(pruned.begin(), pruned.end());
    if (full != pruned)
      emit(check, "pruned enumeration found " + std::to_string(pruned.size()) +
                      " cutsets, full subset scan found " + std::to_string(full.size()));
    return;
  }
  if (check == "unmixed-heights") {
    auto* u = cx.unmixed();
    if (!u || !u->unmixed || !is_connected(g) || g.n() == 0) return;
    auto* fam = cx.family();
    if (!fam) return;
    for (const auto& cs : *fam) {
      int height = g.n() + static_cast<int>(cs.t.size()) - cs.c();
      if (height != g.n() - 1)
        emit(check, "unmixed but T=" + cs.t.str() + " has height " + std::to_string(height) +
                        ", expected " + std::to_string(g.n() - 1));
    }
    int d = krull_dim(g, cx.cap);
    if (d != g.n() + 1)
      emit(check, "unmixed connected but dimension is " + std::to_string(d) + ", expected " +
                      std::to_string(g.n() + 1));
    return;
  }
  if (check == "decompose-sound") {
    auto dec = decompose(g, cx.bd());
    std::size_t edge_total = 0;
    for (const auto& piece : dec.pieces) edge_total += piece.edge_count();
    if (edge_total != static_cast<std::size_t>(g.edge_count()))
      emit(check, "piece edges total " + std::to_string(edge_total) + ", graph has " +
                      std::to_string(g.edge_count()));
    for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
      for (int v : dec.split_vertices.to_list())
        if ((dec.piece_vertices[i] & vertex_set::bit(v)) && !is_free_vertex(dec.pieces[i], v))
          emit(check, "split vertex " + std::to_string(v) + " is not free in its piece");
      if (!decompose(dec.pieces[i]).split_vertices.empty())
        emit(check, "piece on " + vertex_set(dec.piece_vertices[i]).str() + " can be split further");
    }
    return;
  }
}

struct census_chunk {
  std::size_t seq = 0;
  std::size_t base = 0;  // stream index of the first graph
  std::vector<graph> graphs;
};

struct chunk_result {
  std::size_t cap_exceeded = 0;
  std::array<std::size_t, 4> status_counts{};
  std::vector<census_violation> violations;
};

inline chunk_result process_census_chunk(const census_chunk& ch,
                                         const std::vector<std::string>& checks, int cap) {
  chunk_result out;
  classify_options copt;
  copt.cap = cap;
  copt.oracle_fallback = false;
  for (std::size_t k = 0; k < ch.graphs.size(); ++k) {
    const graph& g = ch.graphs[k];
    census_ctx cx(g, cap);
    auto cls = classify(g, copt);
    ++out.status_counts[static_cast<int>(cls.status)];
    for (const auto& check : checks)
      run_one_check(check, cx, [&](const std::string& c, const std::string& detail) {
        out.violations.push_back({ch.base + k, c, compact_edge_list(g), detail});
      });
    if (cx.unmixed_capped || cx.family_capped) ++out.cap_exceeded;
  }
  return out;
}

}  // namespace detail

// Runs the selected checks over every graph the producer pushes.  The summary
// is deterministic: identical input streams yield byte-identical text() for
// any job count, because chunks are merged back in stream order.
template <class Producer>
census_summary run_census(Producer&& produce, const census_options& opt = {}) {
  census_summary sum;
  sum.checks = detail::resolve_checks(opt.checks);
  const int jobs = std::max(1, opt.jobs);
  constexpr std::size_t chunk_size = 256;

  std::vector<detail::chunk_result> results;
  detail::census_chunk current;

  if (jobs == 1) {
    auto flush = [&] {
      if (current.graphs.empty()) return;
      results.push_back(detail::process_census_chunk(current, sum.checks, opt.cap));
      current.base += current.graphs.size();
      current.graphs.clear();
    };
    produce([&](const graph& g) {
      ++sum.graphs;
      current.graphs.push_back(g);
      if (current.graphs.size() >= chunk_size) flush();
    });
    flush();
  } else {
    std::mutex mu;
    std::condition_variable cv_work, cv_space;
    std::deque<detail::census_chunk> queue;
    bool done = false;
    std::exception_ptr failure;
    const std::size_t max_pending = static_cast<std::size_t>(jobs) * 4;

    auto worker = [&] {
      for (;;) {
        detail::census_chunk ch;
        {
          std::unique_lock lock(mu);
          cv_work.wait(lock, [&] { return !queue.empty() || done || failure; });
          if (failure || (queue.empty() && done)) return;
          ch = std::move(queue.front());
          queue.pop_front();
          cv_space.notify_all();
        }
        try {
          auto res = detail::process_census_chunk(ch, sum.checks, opt.cap);
          std::lock_guard lock(mu);
          if (results.size() <= ch.seq) results.resize(ch.seq + 1);
          results[ch.seq] = std::move(res);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          cv_work.notify_all();
          cv_space.notify_all();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

    std::size_t seq = 0;
    auto flush = [&] {
      if (current.graphs.empty()) return;
      current.seq = seq++;
      std::unique_lock lock(mu);
      cv_space.wait(lock, [&] { return queue.size() < max_pending || failure; });
      if (!failure) {
        std::size_t count = current.graphs.size();
        queue.push_back(std::move(current));
        current = {};
        current.base = queue.back().base + count;
        cv_work.notify_one();
      }
    };
    produce([&](const graph& g) {
      ++sum.graphs;
      current.graphs.push_back(g);
      if (current.graphs.size() >= chunk_size) flush();
    });
    flush();
    {
      std::lock_guard lock(mu);
      done = true;
    }
    cv_work.notify_all();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    if (results.size() < seq) results.resize(seq);
  }

  for (const auto& res : results) {
    sum.cap_exceeded += res.cap_exceeded;
    for (int i = 0; i < 4; ++i) sum.status_counts[i] += res.status_counts[i];
    sum.violations.insert(sum.violations.end(), res.violations.begin(), res.violations.end());
  }
  return sum;
}

}  // namespace bei
