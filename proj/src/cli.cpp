#include "spotted/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spotted/cancelpairs.hpp"
#include "spotted/pushcalc.hpp"
#include "spotted/qicert.hpp"
#include "spotted/torustree.hpp"
#include "spotted/whitehead.hpp"
#include "spotted/words.hpp"

namespace spotted::cli {

namespace {

std::string show(const ReducedWord& w) { return w.empty() ? "e" : to_string(w); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open " + path + " for writing");
  file << content;
}

unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

LatticePoint parse_point(const std::string& text) {
  LatticePoint p;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    std::size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size()) throw ParseError("malformed lattice coordinate '" + item + "'");
    p.push_back(v);
  }
  return p;
}

struct WgArgs {
  std::string word;
  int rank = 2;
  std::string dot;
  bool support_only = false;
};

int cmd_wg(const WgArgs& a, std::ostream& out) {
  const auto w = parse(a.word, a.rank);
  const auto graph = whitehead_graph(w);
  const auto convention = a.support_only ? CutVertexConvention::SupportOnly : CutVertexConvention::FullVertexSet;
  out << "word: " << show(w) << "\n";
  out << "vertices:";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) out << ' ' << vertex_label(static_cast<int>(v), a.rank);
  out << "\nedges: " << graph.edge_count() << "\n";
  for (const auto& [x, y] : graph.edges) {
    out << "  " << vertex_label(x, a.rank) << " -- " << vertex_label(y, a.rank) << "\n";
  }
  out << "cut vertex: " << (has_cut_vertex(graph, convention) ? "yes" : "no") << "\n";
  if (!a.dot.empty()) write_file(a.dot, to_dot(graph));
  return kExitOk;
}

struct SimpleLengthArgs {
  std::string word;
  int rank = 2;
  bool witness = false;
  bool oracle = false;
  std::size_t oracle_cap = kDefaultBruteforceCap;
};

int cmd_simple_length(const SimpleLengthArgs& a, std::ostream& out, std::ostream& err) {
  const auto w = parse(a.word, a.rank);
  const auto result = simple_length(w);
  out << "simple length: " << result.value << "\n";
  if (a.witness) {
    for (std::size_t i = 0; i < result.pieces.size(); ++i) {
      out << "piece " << i + 1 << ": " << to_string(result.pieces[i]) << "\n";
    }
  }
  if (a.oracle) {
    const int reference = simple_length_bruteforce(w, a.oracle_cap);
    out << "oracle: " << reference << " " << (reference == result.value ? "agree" : "disagree") << "\n";
    if (reference != result.value) {
      err << "error: dynamic programme and brute force disagree\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

struct CrArgs {
  std::string word;
  int rank = 2;
  CrSearchBounds bounds;
  std::size_t family_cap = kDefaultFamilyCap;
};

int cmd_cr_bounds(const CrArgs& a, std::ostream& out, std::ostream& err) {
  const auto w = parse(a.word, a.rank);
  const Rational lower = cr_lower_bound(w, a.family_cap);
  const auto cr = cr_bruteforce(w, a.bounds);
  const int simple = simple_length_value(w);
  out << to_string(lower) << ' ' << cr.value << ' ' << simple << "\n";
  for (const auto& f : cr.decomposition) {
    out << "factor: v = " << show(f.v) << ", u = " << show(f.u) << "\n";
  }
  if (lower > Rational(cr.value) || cr.value > simple) {
    err << "error: sandwich lower <= cr <= simple violated\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct QiArgs {
  CertifyOptions options;
  std::string csv;
  int budget = 6;
};

int cmd_qi_cert(QiArgs a, std::ostream& out) {
  a.options.budget = a.budget == 4 ? PushBudget::large_genus : PushBudget::conservative;
  const auto rows = certify_grid(a.options);
  const auto summary = summarize(rows, a.options);
  out << "k\tl\tdisplacement\tlower\tupper\tratio\n";
  for (const auto& r : rows) {
    out << format_point(r.k) << '\t' << format_point(r.l) << '\t' << r.displacement << '\t' << to_string(r.lower)
        << '\t' << r.upper << '\t' << to_fixed(r.ratio, 6) << "\n";
  }
  out << "rows: " << summary.rows << "\n";
  out << "rows with displacement > 0: " << summary.moving_rows << "\n";
  out << "min ratio: " << to_string(summary.min_ratio) << "\n";
  out << "max ratio: " << to_string(summary.max_ratio) << "\n";
  out << "sandwich lower <= upper: " << (summary.sandwich_holds ? "yes" : "no") << "\n";
  out << "lambda injective: " << (summary.injective ? "yes" : "no") << "\n";
  if (!a.csv.empty()) write_file(a.csv, to_csv(rows, a.options.n, a.options.g));
  return summary.sandwich_holds && summary.injective ? kExitOk : kExitFailure;
}

struct PushArgs {
  int rank = 2;
  std::string arc;
  std::string loop;
  int c_index = 0;
};

int cmd_push(const PushArgs& a, std::ostream& out) {
  const ArcLabel arc{parse(a.arc, a.rank)};
  const auto loop = parse(a.loop, a.rank);
  const auto pushed = push_arc(arc, loop);
  const int c = a.c_index == 0 ? default_c_index(a.rank) : a.c_index;
  out << "arc: " << to_string(pushed.word) << "\n";
  out << "q: " << to_string(q_class(arc, pushed)) << "\n";
  out << "disk: " << to_string(disk_normalize(pushed.word, c).coset_rep) << "\n";
  return kExitOk;
}

struct BoundArgs {
  int rank = 4;
  std::string k;
  std::string l;
  int budget = 6;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const auto trace = upper_bound(parse_point(a.k), parse_point(a.l), a.rank,
                                 a.budget == 4 ? PushBudget::large_genus : PushBudget::conservative);
  out << trace.to_table();
  return kExitOk;
}

struct TorusArgs {
  int radius = 0;
  int valency = 1;
  int leaves = 0;
  std::string dot;
};

int cmd_torus_ball(const TorusArgs& a, std::ostream& out) {
  const auto ball = build_ball(a.radius, a.valency, a.leaves);
  const auto check = check_ball(ball);
  out << "vertices: " << ball.vertices.size() << "\n";
  out << "edges: " << ball.edges.size() << "\n";
  out << "tree: " << (check.is_tree() ? "yes" : "no") << "\n";
  out << "separating leaves have degree 1: " << (check.separating_leaves_ok ? "yes" : "no") << "\n";
  if (!a.dot.empty()) write_file(a.dot, to_dot(ball));
  return check.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-group word invariants, point-pushing bounds and quasi-isometry certificates"};
  app.require_subcommand(1);

  WgArgs wg;
  auto* wg_cmd = app.add_subcommand("wg", "Whitehead graph and cut-vertex verdict");
  wg_cmd->add_option("word", wg.word, "word in token (x1 X2) or compact (aB) form")->required();
  wg_cmd->add_option("--rank", wg.rank, "rank g")->required();
  wg_cmd->add_option("--dot", wg.dot, "write Graphviz output to this path");
  wg_cmd->add_flag("--support-only", wg.support_only, "test 2-connectivity on used letters only");

  SimpleLengthArgs sl;
  auto* sl_cmd = app.add_subcommand("simple-length", "simple g+1-length by dynamic programming");
  sl_cmd->add_option("word", sl.word)->required();
  sl_cmd->add_option("--rank", sl.rank)->required();
  sl_cmd->add_flag("--witness", sl.witness, "print the factors");
  sl_cmd->add_flag("--oracle", sl.oracle, "cross-check against exhaustive enumeration");
  sl_cmd->add_option("--oracle-cap", sl.oracle_cap, "longest word the exhaustive check accepts");

  CrArgs cr;
  auto* cr_cmd = app.add_subcommand("cr-bounds", "lower bound, bounded search and simple length for |w|^cr");
  cr_cmd->add_option("word", cr.word)->required();
  cr_cmd->add_option("--rank", cr.rank)->required();
  cr_cmd->add_option("--max-ell", cr.bounds.max_ell);
  cr_cmd->add_option("--max-piece", cr.bounds.max_piece);
  cr_cmd->add_option("--max-conj", cr.bounds.max_conj);
  cr_cmd->add_option("--work-limit", cr.bounds.work_limit, "0 for unlimited");
  cr_cmd->add_option("--family-cap", cr.family_cap, "longest word for nested-family enumeration");

  QiArgs qi;
  qi.options.jobs = default_jobs();
  auto* qi_cmd = app.add_subcommand("qi-cert", "lower/upper bound certificate for Lambda on a lattice grid");
  qi_cmd->add_option("--rank", qi.options.g)->required();
  qi_cmd->add_option("--n", qi.options.n)->required();
  qi_cmd->add_option("--grid-max", qi.options.grid_max)->required();
  qi_cmd->add_option("--csv", qi.csv, "write rows as CSV to this path");
  qi_cmd->add_option("--jobs", qi.options.jobs, std::string("worker threads (default from ") + kJobsEnv + ")")
      ->check(CLI::PositiveNumber);
  qi_cmd->add_option("--budget", qi.budget, "per-power displacement budget")->check(CLI::IsMember({4, 6}));
  qi_cmd->add_option("--max-word-length", qi.options.max_word_length);

  PushArgs push;
  auto* push_cmd = app.add_subcommand("push", "push an arc along a loop");
  push_cmd->add_option("--rank", push.rank)->required();
  push_cmd->add_option("--arc", push.arc)->required();
  push_cmd->add_option("--loop", push.loop)->required();
  push_cmd->add_option("--c", push.c_index, "distinguished generator for the disk coset (default: rank)");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "upper-bound derivation between two lattice points");
  bound_cmd->add_option("--rank", bound.rank);
  bound_cmd->add_option("--k", bound.k, "';'-joined coordinates")->required();
  bound_cmd->add_option("--l", bound.l, "';'-joined coordinates")->required();
  bound_cmd->add_option("--budget", bound.budget)->check(CLI::IsMember({4, 6}));

  TorusArgs torus;
  auto* torus_cmd = app.add_subcommand("torus-ball", "ball in the disk graph of a solid torus with two spots");
  torus_cmd->add_option("--radius", torus.radius)->required();
  torus_cmd->add_option("--valency", torus.valency)->required();
  torus_cmd->add_option("--leaves", torus.leaves)->required();
  torus_cmd->add_option("--dot", torus.dot);

  std::vector<std::string> argv_storage{"spotted"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*wg_cmd) return cmd_wg(wg, out);
    if (*sl_cmd) return cmd_simple_length(sl, out, err);
    if (*cr_cmd) return cmd_cr_bounds(cr, out, err);
    if (*qi_cmd) return cmd_qi_cert(qi, out);
    if (*push_cmd) return cmd_push(push, out);
    if (*bound_cmd) return cmd_bound(bound, out);
    if (*torus_cmd) return cmd_torus_ball(torus, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace spotted::cli
