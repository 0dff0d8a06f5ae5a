#pragma once

#include <optional>
#include <string>

#include "bei/classify.hpp"

namespace bei {

// Everything the one-line summary reports about a single graph.
struct report {
  graph_metrics gm;
  bool block_tree = false;
  vertex_set free;
  classification cls;
  std::optional<bool> unmixed;          // unset when the enumeration was skipped
  std::optional<std::size_t> cutset_count;
  std::optional<int> dim;

  std::string certificate() const {
    std::string c = cls.condition;
    if (cls.violation) c += ":T=" + cls.violation->t.str() + ",c=" + std::to_string(cls.violation->c());
    if (!cls.patterns.empty() && (cls.status == cm_status::cohen_macaulay ||
                                  cls.status == cm_status::unmixed_not_cm)) {
      c += ":";
      for (std::size_t i = 0; i < cls.patterns.size(); ++i) {
        if (i) c += ',';
        c += cls.patterns[i].str();
      }
    }
    if (!cls.theta_template.empty()) c += ";template=" + cls.theta_template;
    if (cls.status == cm_status::unknown_cm && cls.oracle_unmixed)
      c += ";unmixed-by-enumeration=" + std::to_string(*cls.oracle_unmixed ? 1 : 0);
    return c;
  }

  std::string line() const {
    std::string s;
    s += "n=" + std::to_string(gm.n);
    s += " m=" + std::to_string(gm.m);
    s += " components=" + std::to_string(gm.component_count);
    s += " deviation=" + std::to_string(gm.deviation);
    s += " cactus=" + std::to_string(gm.is_cactus ? 1 : 0);
    s += " bicyclic=" + std::to_string(gm.is_bicyclic ? 1 : 0);
    s += " forest=" + std::to_string(gm.is_forest ? 1 : 0);
    s += " block_tree=" + std::to_string(block_tree ? 1 : 0);
    s += " free=";
    if (free.empty()) {
      s += "-";
    } else {
      bool first = true;
      for (int v : free.to_list()) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
      }
    }
    s += " unmixed=";
    s += unmixed ? (*unmixed ? "1" : "0") : "skipped";
    s += " cm=" + std::string(to_string(cls.status));
    s += " cert=" + certificate();
    if (cutset_count) s += " cutsets=" + std::to_string(*cutset_count);
    if (dim) s += " dim=" + std::to_string(*dim);
    return s;
  }
};

// `enumerate` additionally counts cutsets and computes the dimension, which
// needs a full scan; it is skipped (fields left unset) past the capacity cap.
inline report make_report(const graph& g, const classify_options& opt = {}, bool enumerate = true) {
  report r;
  auto bd = blocks(g);
  r.gm = metrics(g, bd);
  r.block_tree = bd.is_tree;
  r.free = vertex_set(free_vertices(g));
  r.cls = classify(g, opt);
  switch (r.cls.status) {
    case cm_status::cohen_macaulay:
    case cm_status::unmixed_not_cm: r.unmixed = true; break;
    case cm_status::not_unmixed: r.unmixed = false; break;
    case cm_status::unknown_cm:
      if (r.cls.oracle_unmixed) r.unmixed = *r.cls.oracle_unmixed;
      break;
  }
  if (enumerate) {
    try {
      r.cutset_count = enumerate_cutsets(g, opt.cap).size();
      r.dim = krull_dim(g, opt.cap);
    } catch (const error& e) {
      if (e.code() != errc::cap_exceeded) throw;
    }
  }
  return r;
}

}  // namespace bei
