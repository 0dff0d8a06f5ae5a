#pragma once

#include <string>

#include "bei/graph.hpp"

namespace bei {

enum class cas_dialect { m2, singular };

// Script computing dim, depth, the Cohen-Macaulay flag and the minimal primes
// of the binomial edge ideal in 2n variables over the rationals (exact
// characteristic-zero arithmetic, so the answers are field-independent for
// this class of ideals).
inline std::string export_cas_script(const graph& g, cas_dialect d) {
  const int n = g.n();
  std::string s;
  if (d == cas_dialect::m2) {
    s += "-- binomial edge ideal of a graph with " + std::to_string(n) + " vertices and " +
         std::to_string(g.edge_count()) + " edges\n";
    s += "S = QQ[x_1..x_" + std::to_string(n) + ", y_1..y_" + std::to_string(n) + "];\n";
    if (g.edge_count() == 0) {
      s += "J = ideal(0_S);\n";
    } else {
      s += "J = ideal(";
      bool first = true;
      for (auto [u, v] : g.edges()) {
        if (!first) s += ",\n          ";
        s += "x_" + std::to_string(u) + "*y_" + std::to_string(v) + " - x_" + std::to_string(v) +
             "*y_" + std::to_string(u);
        first = false;
      }
      s += ");\n";
    }
    s += "M = S^1/J;\n";
    s += "d = dim M;\n";
    s += "dep = " + std::to_string(2 * n) + " - pdim M;  -- depth via Auslander-Buchsbaum\n";
    s += "print(\"dim = \" | toString d);\n";
    s += "print(\"depth = \" | toString dep);\n";
    s += "print(\"cm = \" | toString(d == dep));\n";
    s += "print(\"minimal primes:\");\n";
    s += "scan(minimalPrimes J, P -> print toString P);\n";
  } else {
    s += "// binomial edge ideal of a graph with " + std::to_string(n) + " vertices and " +
         std::to_string(g.edge_count()) + " edges\n";
    s += "LIB \"primdec.lib\";\n";
    s += "ring S = 0, (x(1.." + std::to_string(n) + "), y(1.." + std::to_string(n) + ")), dp;\n";
    if (g.edge_count() == 0) {
      s += "ideal J = 0;\n";
    } else {
      s += "ideal J =";
      bool first = true;
      for (auto [u, v] : g.edges()) {
        s += first ? " " : ",\n          ";
        s += "x(" + std::to_string(u) + ")*y(" + std::to_string(v) + ") - x(" + std::to_string(v) +
             ")*y(" + std::to_string(u) + ")";
        first = false;
      }
      s += ";\n";
    }
    s += "int d = dim(std(J));\n";
    s += "resolution re = mres(J, 0);\n";
    s += "int dep = nvars(S) - (size(re) - 1);  // depth via Auslander-Buchsbaum\n";
    s += "\"dim =\", d;\n";
    s += "\"depth =\", dep;\n";
    s += "\"cm =\", (d == dep);\n";
    s += "\"minimal primes:\";\n";
    s += "minAssGTZ(J);\n";
  }
  return s;
}

}  // namespace bei
