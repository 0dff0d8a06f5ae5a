// Command line front end: reads a graph (edge list or graph6), prints
// cutsets, minimal primes, unmixedness, dimension, decompositions and the
// Cohen-Macaulay classification, exports computer algebra scripts, and runs
// invariant censuses over generated or supplied graph streams.
//
// Exit codes: 0 success, 1 violation/mismatch found, 2 bad input,
// 3 capacity cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bei/bei.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_cap = 3;

struct input_options {
  std::string path;  // "-" = stdin
  bool graph6 = false;
};

void add_input(CLI::App* cmd, input_options& in) {
  cmd->add_option("file", in.path, "input file, or - for stdin")->required();
  cmd->add_flag("--graph6", in.graph6, "input is one graph6 line instead of an edge list");
}

bei::graph load_graph(const input_options& in) {
  std::string text;
  if (in.path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(in.path);
    if (!f) throw bei::error(bei::errc::parse_error, "cannot open " + in.path);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  if (in.graph6) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::string trimmed = line;
      while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
        trimmed.pop_back();
      if (!trimmed.empty()) return bei::parse_graph6(trimmed);
    }
    throw bei::error(bei::errc::parse_error, "no graph6 line in input");
  }
  return bei::parse_edge_list(text);
}

std::string join_vertices(std::uint64_t mask) {
  if (!mask) return "-";
  std::string s;
  for (int v : bei::vertex_set(mask).to_list()) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

int cmd_info(const input_options& in) {
  auto g = load_graph(in);
  auto bd = bei::blocks(g);
  auto gm = bei::metrics(g, bd);
  std::cout << "n=" << gm.n << " m=" << gm.m << " components=" << gm.component_count
            << " deviation=" << gm.deviation << " cactus=" << gm.is_cactus
            << " bicyclic=" << gm.is_bicyclic << " forest=" << gm.is_forest
            << " block_tree=" << bd.is_tree << " block_path=" << bd.is_path
            << " cutpoints=" << join_vertices(bd.cutpoints)
            << " free=" << join_vertices(bei::free_vertices(g)) << "\n";
  for (const auto& b : bd.blocks) {
    std::cout << "block " << bei::vertex_set(b.members).str() << " vertices=" << b.vertex_c
              << " edges=" << b.edge_c;
    if (b.is_edge())
      std::cout << " shape=edge";
    else if (bei::is_cycle_block(g, b))
      std::cout << " shape=cycle";
    else if (b.is_complete())
      std::cout << " shape=complete";
    else if (b.is_diamond())
      std::cout << " shape=diamond";
    else
      std::cout << " shape=other";
    std::cout << "\n";
  }
  return exit_ok;
}

int cmd_cutsets(const input_options& in, int cap, int max_size, bool primes) {
  auto g = load_graph(in);
  bei::cutset_family fam = max_size >= 0 ? bei::enumerate_cutsets_bounded(g, max_size)
                                         : bei::enumerate_cutsets(g, cap);
  for (const auto& cs : fam) {
    std::cout << "T=" << cs.t.str() << " c=" << cs.c();
    if (primes) std::cout << " height=" << g.n() + cs.t.size() - cs.c();
    std::cout << " parts=";
    for (std::size_t i = 0; i < cs.parts.size(); ++i)
      std::cout << (i ? "," : "") << bei::vertex_set(cs.parts[i]).str();
    std::cout << "\n";
  }
  std::cout << "total=" << fam.size() << "\n";
  return exit_ok;
}

int cmd_unmixed(const input_options& in, int cap) {
  auto g = load_graph(in);
  auto res = bei::is_unmixed(g, cap);
  if (res.unmixed) {
    std::cout << "unmixed=1\n";
    return exit_ok;
  }
  const auto& v = *res.violation;
  std::cout << "unmixed=0 T=" << v.witness.t.str() << " c=" << v.witness.c()
            << " expected=" << v.expected << " component=" << bei::vertex_set(v.component).str()
            << "\n";
  return exit_violation;
}

int cmd_dim(const input_options& in, int cap) {
  auto g = load_graph(in);
  std::cout << "dim=" << bei::krull_dim(g, cap) << " ring_vars=" << 2 * g.n() << "\n";
  return exit_ok;
}

int cmd_decompose(const input_options& in) {
  auto g = load_graph(in);
  auto dec = bei::decompose(g);
  std::cout << "splits=" << join_vertices(dec.split_vertices.bits) << " pieces=" << dec.pieces.size()
            << "\n";
  for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
    const auto& piece = dec.pieces[i];
    std::cout << "piece " << bei::vertex_set(dec.piece_vertices[i]).str();
    try {
      std::cout << " pattern=" << bei::block_path_pattern(piece).str();
    } catch (const bei::error& e) {
      if (e.code() != bei::errc::not_a_path) throw;
      std::cout << " pattern=-";
    }
    std::cout << " edges=";
    auto es = piece.edges();
    for (std::size_t k = 0; k < es.size(); ++k)
      std::cout << (k ? "," : "") << es[k].first << "-" << es[k].second;
    std::cout << "\n";
  }
  return exit_ok;
}

int cmd_classify(const input_options& in, int cap, bool verify) {
  auto g = load_graph(in);
  bei::classify_options opt;
  opt.cap = cap;
  auto r = bei::make_report(g, opt);
  std::cout << r.line() << "\n";
  if (verify) {
    auto oracle = bei::is_unmixed(g, cap);  // cap overruns propagate: exit 3
    bool classified = r.cls.status == bei::cm_status::cohen_macaulay ||
                      r.cls.status == bei::cm_status::unmixed_not_cm;
    if (r.cls.status == bei::cm_status::unknown_cm) {
      std::cout << "verify=skipped (outside the classified families; enumeration says unmixed="
                << oracle.unmixed << ")\n";
    } else if (classified == oracle.unmixed) {
      std::cout << "verify=ok\n";
    } else {
      std::cout << "verify=MISMATCH classifier=" << bei::to_string(r.cls.status)
                << " enumeration_unmixed=" << oracle.unmixed << "\n";
      return exit_violation;
    }
  }
  return r.cls.status == bei::cm_status::not_unmixed ? exit_violation : exit_ok;
}

int cmd_export(const input_options& in, const std::string& dialect) {
  auto g = load_graph(in);
  auto d = dialect == "m2" ? bei::cas_dialect::m2 : bei::cas_dialect::singular;
  std::cout << bei::export_cas_script(g, d);
  return exit_ok;
}

int cmd_census(const std::string& graph6_path, int cactus_blocks,
               const std::vector<int>& cactus_kinds, int exhaustive_n,
               const std::vector<std::string>& checks, int jobs, int cap) {
  bei::census_options opt;
  opt.checks = checks;
  opt.jobs = jobs;
  opt.cap = cap;
  bei::census_summary sum;
  if (!graph6_path.empty()) {
    std::ifstream f;
    std::istream* src = &std::cin;
    if (graph6_path != "-") {
      f.open(graph6_path);
      if (!f) throw bei::error(bei::errc::parse_error, "cannot open " + graph6_path);
      src = &f;
    }
    sum = bei::run_census(
        [&](auto&& sink) {
          std::string line;
          while (std::getline(*src, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) sink(bei::parse_graph6(line));
          }
        },
        opt);
    std::cout << "mode=graph6 source=" << graph6_path << "\n";
  } else if (cactus_blocks > 0) {
    sum = bei::run_census(
        [&](auto&& sink) { bei::generate_cactus_corpus(cactus_blocks, cactus_kinds, sink); }, opt);
    std::cout << "mode=cactus max_blocks=" << cactus_blocks << " kinds=";
    for (std::size_t i = 0; i < cactus_kinds.size(); ++i)
      std::cout << (i ? "," : "") << cactus_kinds[i];
    std::cout << "\n";
  } else {
    if (exhaustive_n > 7)
      throw bei::error(bei::errc::range_error, "exhaustive census limited to 7 vertices");
    sum = bei::run_census(
        [&](auto&& sink) {
          for (int n = 1; n <= exhaustive_n; ++n) bei::generate_connected_graphs(n, sink);
        },
        opt);
    std::cout << "mode=exhaustive max_n=" << exhaustive_n << "\n";
  }
  std::cout << sum.text();
  return sum.violations.empty() ? exit_ok : exit_violation;
}

int cmd_selfcheck() {
  int failed = 0;
  for (const auto& s : bei::sample_graphs()) {
    auto r = bei::make_report(s.g);
    auto ux = bei::is_unmixed(s.g);
    bool status_ok = r.cls.status == s.expected;
    bool oracle_ok = ux.unmixed == (s.expected != bei::cm_status::not_unmixed);
    bool ok = status_ok && oracle_ok;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << s.name << " n=" << s.g.n()
              << " status=" << bei::to_string(r.cls.status)
              << " expected=" << to_string(s.expected) << " unmixed=" << (ux.unmixed ? 1 : 0)
              << " cert=" << r.certificate() << "\n";
  }
  std::cout << "selfcheck " << (failed ? "FAILED" : "passed") << " (" << failed << " failures)\n";
  return failed ? exit_violation : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideal toolkit: cutsets, minimal primes, unmixedness and "
               "Cohen-Macaulay classification for cactus and bicyclic graphs"};
  app.require_subcommand(1);

  input_options in;
  int cap = bei::default_cutset_cap;
  int max_size = -1;
  bool verify = false;
  std::string dialect = "m2";
  std::string census_graph6;
  int census_blocks = 0;
  std::vector<int> census_kinds = {2, 3, 4, 5};
  int census_n = 0;
  std::vector<std::string> census_checks;
  int jobs = 1;

  auto* c_info = app.add_subcommand("info", "block structure and basic metrics");
  add_input(c_info, in);

  auto* c_cut = app.add_subcommand("cutsets", "enumerate all cutsets with their components");
  add_input(c_cut, in);
  c_cut->add_option("--cap", cap, "candidate vertex cap for full enumeration");
  c_cut->add_option("--max-size", max_size, "only cutsets up to this size (skips the cap)");

  auto* c_pr = app.add_subcommand("primes", "enumerate minimal primes with heights");
  add_input(c_pr, in);
  c_pr->add_option("--cap", cap, "candidate vertex cap for full enumeration");

  auto* c_un = app.add_subcommand("unmixed", "decide unmixedness by enumeration");
  add_input(c_un, in);
  c_un->add_option("--cap", cap, "candidate vertex cap for full enumeration");

  auto* c_dim = app.add_subcommand("dim", "Krull dimension of the quotient ring");
  add_input(c_dim, in);
  c_dim->add_option("--cap", cap, "candidate vertex cap for full enumeration");

  auto* c_dec = app.add_subcommand("decompose", "split at free cut vertices into pieces");
  add_input(c_dec, in);

  auto* c_cls = app.add_subcommand("classify", "Cohen-Macaulay classification with certificate");
  add_input(c_cls, in);
  c_cls->add_option("--cap", cap, "candidate vertex cap for enumeration fallbacks");
  c_cls->add_flag("--verify", verify, "cross-check the verdict against enumeration");

  auto* c_exp = app.add_subcommand("export", "emit a computer algebra script for the ideal");
  add_input(c_exp, in);
  c_exp->add_option("--dialect", dialect, "m2 or singular")
      ->check(CLI::IsMember({"m2", "singular"}));

  auto* c_cen = app.add_subcommand("census", "run invariant checks over a stream of graphs");
  c_cen->add_option("--graph6", census_graph6, "graph6 file to scan, - for stdin");
  c_cen->add_option("--cactus", census_blocks, "generate cacti with up to this many blocks")
      ->check(CLI::Range(1, 6));
  c_cen->add_option("--kinds", census_kinds, "block kinds for --cactus (2=edge, 3..5=cycle)")
      ->delimiter(',');
  c_cen->add_option("--exhaustive", census_n, "all connected graphs with up to this many vertices")
      ->check(CLI::Range(1, 7));
  c_cen->add_option("--checks", census_checks, "check names, comma separated, or 'all' (default: core set)")
      ->delimiter(',');
  c_cen->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  c_cen->add_option("--cap", cap, "candidate vertex cap for enumeration");

  auto* c_self =
      app.add_subcommand("selfcheck", "classify the built-in sample graphs and verify each");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? exit_bad_input : exit_ok;
  }

  try {
    if (c_info->parsed()) return cmd_info(in);
    if (c_cut->parsed()) return cmd_cutsets(in, cap, max_size, false);
    if (c_pr->parsed()) return cmd_cutsets(in, cap, -1, true);
    if (c_un->parsed()) return cmd_unmixed(in, cap);
    if (c_dim->parsed()) return cmd_dim(in, cap);
    if (c_dec->parsed()) return cmd_decompose(in);
    if (c_cls->parsed()) return cmd_classify(in, cap, verify);
    if (c_exp->parsed()) return cmd_export(in, dialect);
    if (c_cen->parsed()) {
      if ((census_graph6.empty() ? 0 : 1) + (census_blocks > 0 ? 1 : 0) + (census_n > 0 ? 1 : 0) != 1)
        throw bei::error(bei::errc::parse_error,
                         "census needs exactly one of --graph6, --cactus, --exhaustive");
      return cmd_census(census_graph6, census_blocks, census_kinds, census_n, census_checks, jobs,
                        cap);
    }
    if (c_self->parsed()) return cmd_selfcheck();
  } catch (const bei::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == bei::errc::cap_exceeded ? exit_cap : exit_bad_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
  return exit_ok;
}
