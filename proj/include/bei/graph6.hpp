#pragma once

#include <string>
#include <string_view>

#include "bei/graph.hpp"

namespace bei {

// One graph per line, vertices 0..61 encoded as printable bytes 63..125.
// Pair bits run over the upper triangle column by column: (0,1), (0,2),
// (1,2), (0,3), ... with the most significant of each 6-bit group first.
inline graph parse_graph6(std::string_view line) {
  if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
    line.remove_suffix(1);
  if (line.empty()) throw error(errc::parse_error, "empty graph6 line");
  if (line[0] == '~')
    throw error(errc::unsupported, "graph6 long form (more than 62 vertices) is not supported");
  for (char ch : line)
    if (ch < 63 || ch > 126)
      throw error(errc::parse_error, std::string("invalid graph6 byte '") + ch + "'");
  int n = line[0] - 63;
  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t want = 1 + (pairs + 5) / 6;
  if (line.size() != want)
    throw error(errc::parse_error, "graph6 line has " + std::to_string(line.size()) +
                                       " bytes, expected " + std::to_string(want));
  graph g(n);
  std::size_t idx = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i, ++idx) {
      int group = line[1 + idx / 6] - 63;
      if (group >> (5 - idx % 6) & 1) g.add_edge(i, j);
    }
  return g;
}

inline std::string encode_graph6(const graph& g) {
  if (g.n() > 62) throw error(errc::unsupported, "graph6 output limited to 62 vertices");
  std::string out(1, static_cast<char>(63 + g.n()));
  std::size_t idx = 0;
  int group = 0;
  for (int j = 2; j <= g.n(); ++j)
    for (int i = 1; i < j; ++i, ++idx) {
      if (g.has_edge(i, j)) group |= 1 << (5 - idx % 6);
      if (idx % 6 == 5) {
        out += static_cast<char>(63 + group);
        group = 0;
      }
    }
  if (idx % 6 != 0) out += static_cast<char>(63 + group);
  return out;
}

}  // namespace bei
