#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dichro/dichro.hpp"

namespace dichro::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFlags {
  std::optional<long long> n;
  std::optional<long long> d;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "cycle modulus (n >= 2)");
    app->add_option("--d", d, "sequence length (d >= 1)");
  }

  Params require(const std::string& command) const {
    if (!n || !d) throw UsageError(command + " requires --n and --d");
    return make_params(*n, *d);
  }
};

struct Options {
  InstanceFlags instance;
  std::string out_path;
  std::string input_path;
  std::string coloring_path;
  std::uint64_t edge_cap = kDefaultEdgeCap;
  Code vertex_cap = 4096;
  std::uint64_t node_limit = 0;
  unsigned workers = 1;
  bool brute = false;
  bool no_lower_bound = false;
  unsigned depth = 1;
  long long n_max = 0;
  long long d_max = 0;
  Code report_cap = 512;
  unsigned trials = 0;
  std::uint64_t seed = 1;
};

// Text goes to the output file when one was given, otherwise to stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file_atomically(o.out_path, text);
  }
}

ExplicitDigraph load_graph(const std::string& path) {
  EdgeListFile file = read_edge_list(path);
  return ExplicitDigraph(file.params.vertex_count(), file.edges);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Params p = o.instance.require("gen");
  emit(o, out, format_edge_list(p, materialize(p, o.edge_cap)));
  return kExitOk;
}

int cmd_girth(const Options& o, std::ostream& out) {
  std::ostringstream text;
  if (!o.input_path.empty()) {
    if (o.instance.n || o.instance.d) throw UsageError("girth takes either --input or --n/--d");
    const auto result = directed_girth(load_graph(o.input_path), o.workers);
    if (!result) {
      text << "girth=none\n";
    } else {
      text << "girth=" << result->length << "\nwitness=" << format_cycle(result->witness) << '\n';
    }
  } else {
    const Params p = o.instance.require("girth");
    GirthOptions opts;
    opts.workers = o.workers;
    opts.use_lower_bound = !o.no_lower_bound;
    const GirthResult result = directed_girth(p, opts);
    text << "girth=" << result.length << "\nwitness=" << format_cycle(result.witness) << '\n';
  }
  out << text.str();
  return kExitOk;
}

int cmd_chi(const Options& o, std::ostream& out) {
  SolverBudget budget;
  budget.vertex_cap = o.vertex_cap;
  budget.node_limit = o.node_limit;
  budget.workers = o.workers;
  if (o.brute && !o.out_path.empty()) throw UsageError("--brute does not produce a witness for --out");

  if (!o.input_path.empty()) {
    if (o.instance.n || o.instance.d) throw UsageError("chi takes either --input or --n/--d");
    if (o.brute) throw UsageError("--brute applies to D(n,d) instances only");
    EdgeListFile file = read_edge_list(o.input_path);
    const ExplicitDigraph g(file.params.vertex_count(), file.edges);
    const GraphChiResult result = dichromatic_number(g, budget);
    out << "chi=" << result.chi << '\n';
    if (o.workers > 1) out << "witness=nondeterministic\n";
    if (!o.out_path.empty()) write_coloring(Coloring(file.params, result.witness), o.out_path);
    return kExitOk;
  }

  const Params p = o.instance.require("chi");
  if (o.brute) {
    out << "chi=" << brute_force_chi(p) << '\n';
    return kExitOk;
  }
  const ChiResult result = dichromatic_number(p, budget);
  out << "chi=" << result.chi << '\n';
  if (!result.witness_deterministic) out << "witness=nondeterministic\n";
  if (!o.out_path.empty()) write_coloring(result.witness, o.out_path);
  return kExitOk;
}

int cmd_refute(const Options& o, std::ostream& out) {
  const Params p = o.instance.require("refute");
  if (o.coloring_path.empty()) throw UsageError("refute requires --coloring");
  const Coloring c = read_coloring(o.coloring_path);
  if (!(c.params() == p)) {
    throw InvalidArgument("coloring file is for D(" + std::to_string(c.params().n()) + "," +
                          std::to_string(c.params().d()) + "), not D(" + std::to_string(p.n()) +
                          "," + std::to_string(p.d()) + ")");
  }
  const Refutation r = refute(c);
  check_cycle(p, r.cycle);
  std::ostringstream text;
  text << "cycle=" << format_cycle(r.cycle) << '\n';
  text << "color=" << *r.cycle.color << '\n';
  text << "trace=";
  for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
    if (i) text << ',';
    text << r.trace.steps[i].eliminated << ':' << r.trace.steps[i].child;
  }
  text << "\nprefix=" << to_string(r.trace.final_prefix) << '\n';
  out << text.str();
  return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const Params p = o.instance.require("export-dot");
  DotOptions opts;
  opts.depth = o.depth;
  emit(o, out, export_dot(p, opts));
  return kExitOk;
}

Coloring random_coloring(const Params& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> palette(1, p.d());
  const unsigned k = palette(rng);
  std::uniform_int_distribution<Color> pick(0, k - 1);
  std::vector<Color> colors(p.vertex_count());
  for (auto& c : colors) c = pick(rng);
  return Coloring(p, std::move(colors));
}

int cmd_report(const Options& o, std::ostream& out) {
  if (o.n_max < 2 || o.d_max < 1) throw UsageError("report requires --n-max >= 2 and --d-max >= 1");
  SolverBudget budget;
  budget.vertex_cap = o.report_cap;
  budget.node_limit = o.node_limit;
  budget.workers = o.workers;
  std::mt19937_64 rng(o.seed);

  std::ostringstream text;
  text << "# cap=" << o.report_cap << " node_limit=" << o.node_limit << " trials=" << o.trials
       << " seed=" << o.seed << '\n';
  text << std::left << std::setw(4) << "n" << std::setw(4) << "d" << std::setw(10) << "vertices"
       << std::setw(7) << "girth" << std::setw(8) << "chi" << std::setw(10) << "refuted"
       << "ms\n";
  for (long long n = 2; n <= o.n_max; ++n) {
    for (long long d = 1; d <= o.d_max; ++d) {
      // n^d only grows with d; stop before make_params could overflow.
      Code count = 1;
      for (long long i = 0; i < d && count <= o.report_cap; ++i) count *= static_cast<Code>(n);
      if (count > o.report_cap) break;
      const Params p = make_params(n, d);
      const auto start = std::chrono::steady_clock::now();
      const GirthResult girth = directed_girth(p);
      std::string chi;
      try {
        chi = std::to_string(dichromatic_number(p, budget).chi);
      } catch (const CapExceeded&) {
        chi = ">=" + std::to_string(d + 1);
      }
      unsigned refuted = 0;
      for (unsigned t = 0; t < o.trials; ++t) {
        const Coloring c = random_coloring(p, rng);
        const Refutation r = refute(c);
        if (!cycle_defect(p, r.cycle) && r.cycle.length() == p.n()) ++refuted;
      }
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      text << std::setw(4) << n << std::setw(4) << d << std::setw(10) << p.vertex_count()
           << std::setw(7) << girth.length << std::setw(8) << chi << std::setw(10)
           << (std::to_string(refuted) + "/" + std::to_string(o.trials)) << ms << '\n';
    }
  }
  emit(o, out, text.str());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explore the nested-block digraphs D(n, d): girth, dichromatic number, refutation"};
  app.name("dichro");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "print the edge list of D(n, d)");
  o.instance.add_to(gen);
  gen->add_option("--out", o.out_path, "write to a file instead of stdout");
  gen->add_option("--cap", o.edge_cap, "refuse instances with more edges than this");

  auto* girth = app.add_subcommand("girth", "shortest directed cycle with a witness");
  o.instance.add_to(girth);
  girth->add_option("--input", o.input_path, "edge-list file to analyse instead of D(n, d)");
  girth->add_option("--workers", o.workers, "parallel BFS workers")->check(CLI::PositiveNumber);
  girth->add_flag("--no-lower-bound", o.no_lower_bound, "search every start vertex");

  auto* chi = app.add_subcommand("chi", "exact dichromatic number");
  o.instance.add_to(chi);
  chi->add_option("--input", o.input_path, "edge-list file to solve instead of D(n, d)");
  chi->add_flag("--brute", o.brute, "use the exhaustive reference (n^d <= 12)");
  chi->add_option("--out", o.out_path, "write the witness coloring here");
  chi->add_option("--cap", o.vertex_cap, "largest instance the solver accepts");
  chi->add_option("--node-limit", o.node_limit, "search nodes per decision, 0 = unlimited");
  chi->add_option("--workers", o.workers, "parallel search workers")->check(CLI::PositiveNumber);

  auto* ref = app.add_subcommand("refute", "monochromatic n-cycle in a coloring with <= d colors");
  o.instance.add_to(ref);
  ref->add_option("--coloring", o.coloring_path, "coloring file");

  auto* dot = app.add_subcommand("export-dot", "Graphviz drawing with nested block clusters");
  o.instance.add_to(dot);
  dot->add_option("--depth", o.depth, "cluster blocks with prefixes up to this length")->required();
  dot->add_option("--out", o.out_path, "write to a file instead of stdout");

  auto* report = app.add_subcommand("report", "girth / chi / refuter table over a sweep");
  report->add_option("--n-max", o.n_max, "largest n")->required();
  report->add_option("--d-max", o.d_max, "largest d")->required();
  report->add_option("--cap", o.report_cap, "skip instances with more vertices");
  report->add_option("--node-limit", o.node_limit, "solver nodes per decision, 0 = unlimited");
  report->add_option("--trials", o.trials, "random colorings to refute per instance");
  report->add_option("--seed", o.seed, "seed for the random colorings");
  report->add_option("--workers", o.workers, "parallel solver workers")->check(CLI::PositiveNumber);
  report->add_option("--out", o.out_path, "write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (girth->parsed()) return cmd_girth(o, out);
    if (chi->parsed()) return cmd_chi(o, out);
    if (ref->parsed()) return cmd_refute(o, out);
    if (dot->parsed()) return cmd_export_dot(o, out);
    if (report->parsed()) return cmd_report(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace dichro::cli
