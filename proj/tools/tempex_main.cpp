// tempex: generate, inspect, explore and validate temporal graph instances.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "tempex/bench.hpp"
#include "tempex/explorer.hpp"
#include "tempex/generators.hpp"
#include "tempex/io.hpp"
#include "tempex/oracle.hpp"
#include "tempex/validator.hpp"

namespace {

using namespace tempex;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::bad_spec:
    case Errc::parse_error:
    case Errc::version_mismatch:
    case Errc::instance_too_large:
    case Errc::start_out_of_range:
    case Errc::invalid_vertex:
      return 2;  // bad input from the user
    default:
      return 1;
  }
}

struct GenerateArgs {
  std::string kind;
  std::string out;
  bool body = false;
  std::int64_t rows = 2, cols = 2, deg = 5;
  std::int64_t n = 8, horizon = 16;
  std::string tree_kind = "uniform-spanning-tree";
  std::int64_t d = 3;
  std::uint64_t seed = 0;
};

TemporalGraph generate_graph(const GenerateArgs& a) {
  if (a.kind == "grid-leaves")
    return gen::gen_grid_leaves({a.rows, a.cols, a.deg}).first;
  if (a.kind == "random-trees") {
    const std::optional<gen::TreeKind> kind = gen::tree_kind_from_name(a.tree_kind);
    if (!kind) raise(Errc::bad_spec, "unknown tree kind '" + a.tree_kind + "'");
    return gen::gen_random_trees(static_cast<std::uint32_t>(a.n), a.horizon, *kind, a.seed);
  }
  if (a.kind == "rotating-star")
    return gen::gen_rotating_star(static_cast<std::uint32_t>(a.n), a.horizon);
  if (a.kind == "bounded-degree")
    return gen::gen_bounded_degree(static_cast<std::uint32_t>(a.n), a.horizon,
                                   static_cast<std::uint32_t>(a.d), a.seed);
  raise(Errc::bad_spec, "unknown generator kind '" + a.kind + "'");
}

int cmd_stats(const std::string& path) {
  const TemporalGraph g = io::load_instance(path);
  std::cout << "n " << g.vertex_count() << "\n";
  std::cout << "T " << g.horizon() << "\n";
  Rational d{0, g.vertex_count()};
  bool connected = true;
  if (g.horizon() >= 1) {
    d = degree_profile(g, {1, g.horizon()}).average();
    connected = check_always_connected(g, {1, g.horizon()});
  }
  std::cout << "D " << d.num << "/" << d.den << " (= " << d.value() << ")\n";
  std::cout << "always-connected " << (connected ? "true" : "false") << "\n";
  // the bound formula assumes D >= 1, which always-connectedness implies
  const Rational d_for_bound = d.num >= d.den ? d : Rational{1, 1};
  std::cout << "theorem-bound " << explorer::theorem_bound(g.vertex_count(), d_for_bound) << "\n";
  return 0;
}

void write_report(std::ostream& os, const std::string& algo, const TemporalGraph& g,
                  VertexId start, const explorer::ExplorationReport& report, bool has_bound) {
  os << "algo " << algo << "\n";
  os << "n " << g.vertex_count() << "\n";
  os << "T " << g.horizon() << "\n";
  os << "start " << start << "\n";
  os << "span " << report.walk.span() << "\n";
  if (has_bound) {
    os << "D " << report.D.num << "/" << report.D.den << "\n";
    os << "bound " << report.bound << "\n";
    os << "phases " << report.phases.size() << "\n";
  } else {
    os << "D -\n";
    os << "bound -\n";
    os << "phases -\n";
  }
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", report.seconds);
  os << "seconds " << seconds << "\n";
}

int cmd_explore(const std::string& algo, const std::string& in, std::uint32_t start,
                const std::string& out, const std::string& report_path, std::uint32_t oracle_cap) {
  const TemporalGraph g = io::load_instance(in);
  explorer::ExplorationReport report;
  bool has_bound = false;
  if (algo == "thm1") {
    report = explorer::explore(g, start);
    has_bound = true;
  } else if (algo == "greedy") {
    report = explorer::greedy_explore(g, start);
  } else if (algo == "oracle") {
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<TemporalWalk> walk =
        oracle::optimal_exploration(g, start, g.horizon(), oracle_cap);
    if (!walk) {
      std::cerr << "no exploration exists within the horizon\n";
      return 1;
    }
    report.walk = *walk;
    report.n = g.vertex_count();
    report.horizon = g.horizon();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } else {
    raise(Errc::bad_spec, "unknown algorithm '" + algo + "'");
  }

  if (!out.empty()) io::save_walk(report.walk, out);
  write_report(std::cout, algo, g, start, report, has_bound);
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) raise(Errc::parse_error, "cannot open " + report_path + " for writing");
    write_report(f, algo, g, start, report, has_bound);
  }
  return 0;
}

int cmd_validate(const std::string& graph_path, const std::string& walk_path, std::uint32_t start,
                 bool check_bound) {
  const TemporalGraph g = io::load_instance(graph_path);
  const TemporalWalk walk = io::load_walk(walk_path);
  validate::ValidationOutcome outcome = validate::check_exploration(g, walk, start);
  if (check_bound) {
    explorer::ExplorationReport report;
    report.walk = walk;
    report.n = g.vertex_count();
    report.horizon = g.horizon();
    const validate::ValidationOutcome bound = validate::check_theorem_bound(g, report);
    for (const validate::Violation& v : bound.violations) {
      outcome.ok = false;
      outcome.violations.push_back(v);
    }
  }
  if (outcome.ok) {
    std::cout << "ok\n";
    return 0;
  }
  for (const validate::Violation& v : outcome.violations)
    std::cerr << "violation " << validate::violation_kind_name(v.kind) << " " << v.time << " "
              << v.detail << "\n";
  return 1;
}

int cmd_bench(const std::string& suite, const std::string& csv_path, int jobs) {
  bench::BenchOptions options;
  options.suite = suite;
  options.jobs = jobs;
  const std::string csv = bench::rows_to_csv(bench::run_suite(options));
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) raise(Errc::parse_error, "cannot open " + csv_path + " for writing");
    f << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal graph exploration toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  CLI::App* c_gen = app.add_subcommand("generate", "write an instance file");
  c_gen->add_option("--kind", gen_args.kind,
                    "grid-leaves | random-trees | rotating-star | bounded-degree")
      ->required();
  c_gen->add_option("--out", gen_args.out, "output instance file")->required();
  c_gen->add_flag("--body", gen_args.body, "materialize snapshots instead of a gen line");
  c_gen->add_option("--rows", gen_args.rows, "grid-leaves rows");
  c_gen->add_option("--cols", gen_args.cols, "grid-leaves columns");
  c_gen->add_option("--deg", gen_args.deg, "grid-leaves degree parameter (>= 5)");
  c_gen->add_option("--n", gen_args.n, "vertex count");
  c_gen->add_option("--horizon", gen_args.horizon, "number of snapshots");
  c_gen->add_option("--tree-kind", gen_args.tree_kind,
                    "uniform-spanning-tree | random-star | random-path");
  c_gen->add_option("--d", gen_args.d, "bounded-degree cap");
  c_gen->add_option("--seed", gen_args.seed, "PRNG seed (seeded families)");

  std::string stats_path;
  CLI::App* c_stats = app.add_subcommand("stats", "print n, T, D, connectivity and the bound");
  c_stats->add_option("file", stats_path, "instance file")->required();

  std::string ex_algo = "thm1", ex_in, ex_out, ex_report;
  std::uint32_t ex_start = 0, oracle_cap = 12;
  CLI::App* c_explore = app.add_subcommand("explore", "compute an exploration");
  c_explore->add_option("--algo", ex_algo, "thm1 | greedy | oracle");
  c_explore->add_option("--in", ex_in, "instance file")->required();
  c_explore->add_option("--start", ex_start, "start vertex");
  c_explore->add_option("--out", ex_out, "walk file to write");
  c_explore->add_option("--report", ex_report, "report file to write");
  c_explore->add_option("--oracle-cap", oracle_cap, "max n accepted by the exact solver");

  std::string v_graph, v_walk;
  std::uint32_t v_start = 0;
  bool v_bound = false;
  CLI::App* c_validate = app.add_subcommand("validate", "check a walk file");
  c_validate->add_option("--graph", v_graph, "instance file")->required();
  c_validate->add_option("--walk", v_walk, "walk file")->required();
  c_validate->add_option("--start", v_start, "required start vertex");
  c_validate->add_flag("--check-bound", v_bound, "also compare the span against L(n, D)");

  std::string b_suite = "default", b_csv;
  int b_jobs = 0;
  CLI::App* c_bench = app.add_subcommand("bench", "run a benchmark suite");
  c_bench->add_option("--suite", b_suite, "default | bounded-degree | rotating-star");
  c_bench->add_option("--csv", b_csv, "CSV output file (stdout when omitted)");
  c_bench->add_option("--jobs", b_jobs, "parallel cells (default: TEMPEX_JOBS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_gen) {
      TemporalGraph g = generate_graph(gen_args);
      if (gen_args.body) g = materialized(g);
      io::save_instance(g, gen_args.out);
      return 0;
    }
    if (*c_stats) return cmd_stats(stats_path);
    if (*c_explore)
      return cmd_explore(ex_algo, ex_in, ex_start, ex_out, ex_report, oracle_cap);
    if (*c_validate) return cmd_validate(v_graph, v_walk, v_start, v_bound);
    if (*c_bench) {
      if (b_jobs <= 0) {
        const char* env = std::getenv("TEMPEX_JOBS");
        b_jobs = env ? std::atoi(env) : 1;
        if (b_jobs <= 0) b_jobs = 1;
      }
      return cmd_bench(b_suite, b_csv, b_jobs);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
