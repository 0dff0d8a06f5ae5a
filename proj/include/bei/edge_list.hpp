#pragma once

#include <istream>
#include <sstream>
#include <string>

#include "bei/graph.hpp"

namespace bei {

// Text format: '#' starts a comment, blank lines are skipped, the first data
// line is the vertex count, every further line one "u v" edge (1-based).
inline graph parse_edge_list(std::istream& in) {
  graph g;
  bool have_n = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_n) {
      long long n;
      if (!(ls >> n)) {
        std::string junk;
        if (ls.clear(), ls.str(line), ls >> junk)
          throw error(errc::parse_error, "line " + std::to_string(lineno) + ": expected vertex count");
        continue;  // blank / comment-only
      }
      if (n < 0 || n > 64)
        throw error(errc::range_error,
                    "line " + std::to_string(lineno) + ": vertex count " + std::to_string(n) +
                        " not in 0..64");
      std::string rest;
      if (ls >> rest)
        throw error(errc::parse_error, "line " + std::to_string(lineno) + ": trailing data after vertex count");
      g = graph(static_cast<int>(n));
      have_n = true;
      continue;
    }
    long long u, v;
    if (!(ls >> u)) {
      std::string junk;
      if (ls.clear(), ls.str(line), ls >> junk)
        throw error(errc::parse_error, "line " + std::to_string(lineno) + ": expected an edge");
      continue;
    }
    if (!(ls >> v))
      throw error(errc::parse_error, "line " + std::to_string(lineno) + ": edge needs two endpoints");
    std::string rest;
    if (ls >> rest)
      throw error(errc::parse_error, "line " + std::to_string(lineno) + ": trailing data after edge");
    if (u < 1 || u > g.n() || v < 1 || v > g.n())
      throw error(errc::range_error, "line " + std::to_string(lineno) + ": endpoint out of 1.." +
                                         std::to_string(g.n()));
    if (u == v) throw error(errc::self_loop, "line " + std::to_string(lineno) + ": self loop at " +
                                                 std::to_string(u));
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw error(errc::duplicate_edge, "line " + std::to_string(lineno) + ": duplicate edge " +
                                            std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_n) throw error(errc::parse_error, "missing vertex count line");
  return g;
}

inline graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string format_edge_list(const graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// one-line rendering used in census violation reports: "n:u-v,u-v"
inline std::string compact_edge_list(const graph& g) {
  std::string out = std::to_string(g.n()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace bei
