#include "tempex/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "tempex/explorer.hpp"
#include "tempex/generators.hpp"
#include "tempex/validator.hpp"

namespace tempex::bench {

std::string csv_header() { return "family,n,T,D_num,D_den,algo,seed,span,bound,seconds"; }

std::string csv_line(const BenchRow& row) {
  // milliseconds rendered by hand: no locale can swap the decimal separator
  const long long ms = std::llround(row.seconds * 1000.0);
  char seconds[40];
  std::snprintf(seconds, sizeof seconds, "%lld.%03lld", ms / 1000, ms % 1000);
  std::string out = row.family;
  out += ',' + std::to_string(row.n);
  out += ',' + std::to_string(row.horizon);
  out += ',' + std::to_string(row.d_num);
  out += ',' + std::to_string(row.d_den);
  out += ',' + row.algo;
  out += ',' + std::to_string(row.seed);
  out += ',' + std::to_string(row.span);
  out += ',' + std::to_string(row.bound);
  out += ',';
  out += seconds;
  return out;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const BenchRow& row : rows) out += csv_line(row) + "\n";
  return out;
}

namespace {

struct Cell {
  std::string family;
  std::uint32_t n;
  std::uint64_t seed;
  std::function<TemporalGraph()> make;
};

std::vector<Cell> suite_cells(const std::string& suite) {
  std::vector<Cell> cells;
  const std::uint64_t seeds[] = {1, 2, 3};

  if (suite == "default") {
    // independent uniformly shuffled paths; D < 2, so horizon L(n, 2) is safe
    for (std::uint32_t n : {32u, 64u, 128u, 256u})
      for (std::uint64_t seed : seeds) {
        const TimeStep horizon = gen::required_horizon(n, Rational{2, 1});
        cells.push_back({"random-trees", n, seed, [n, horizon, seed] {
                           return gen::gen_random_trees(n, horizon, gen::TreeKind::random_path,
                                                        seed);
                         }});
      }
    return cells;
  }
  if (suite == "bounded-degree") {
    for (std::uint32_t d : {3u, 5u})
      for (std::uint32_t n : {64u, 128u})
        for (std::uint64_t seed : seeds) {
          const TimeStep horizon = gen::required_horizon(n, Rational{d, 1});
          cells.push_back({"bounded-degree-d" + std::to_string(d), n, seed,
                           [n, horizon, d, seed] {
                             return gen::gen_bounded_degree(n, horizon, d, seed);
                           }});
        }
    return cells;
  }
  if (suite == "rotating-star") {
    for (std::uint32_t n : {16u, 32u, 64u}) {
      const TimeStep horizon = gen::required_horizon(n, Rational{n - 1, 1});
      cells.push_back(
          {"rotating-star", n, 0, [n, horizon] { return gen::gen_rotating_star(n, horizon); }});
    }
    return cells;
  }
  raise(Errc::bad_spec, "unknown bench suite '" + suite + "'");
}

std::pair<BenchRow, BenchRow> run_cell(const Cell& cell) {
  const TemporalGraph g = cell.make();
  const DegreeProfile profile = degree_profile(g, {1, g.horizon()});
  const std::int64_t bound = explorer::theorem_bound(g.vertex_count(), profile.average());

  BenchRow base;
  base.family = cell.family;
  base.n = g.vertex_count();
  base.horizon = g.horizon();
  base.d_num = profile.sum;
  base.d_den = g.vertex_count();
  base.seed = cell.seed;
  base.bound = bound;

  auto measure = [&](const std::string& algo) {
    const explorer::ExplorationReport report = algo == "thm1"
                                                   ? explorer::explore(g, 0)
                                                   : explorer::greedy_explore(g, 0);
    const validate::ValidationOutcome outcome = validate::check_exploration(g, report.walk, 0);
    if (!outcome.ok)
      raise(Errc::bound_violated, cell.family + " n=" + std::to_string(base.n) + " seed=" +
                                      std::to_string(cell.seed) + " " + algo +
                                      ": invalid exploration: " + outcome.violations[0].detail);
    if (algo == "thm1" && report.walk.span() > bound)
      raise(Errc::bound_violated, cell.family + " n=" + std::to_string(base.n) +
                                      ": span " + std::to_string(report.walk.span()) +
                                      " above bound " + std::to_string(bound));
    BenchRow row = base;
    row.algo = algo;
    row.span = report.walk.span();
    row.seconds = report.seconds;
    return row;
  };
  return {measure("thm1"), measure("greedy")};
}

}  // namespace

std::vector<BenchRow> run_suite(const BenchOptions& options) {
  const std::vector<Cell> cells = suite_cells(options.suite);
  std::vector<std::pair<BenchRow, BenchRow>> results(cells.size());

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run_cell(cells[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
            results[i] = run_cell(cells[i]);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    for (std::thread& t : workers) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<BenchRow> rows;
  rows.reserve(cells.size() * 2);
  for (auto& [thm1, greedy] : results) {
    rows.push_back(std::move(thm1));
    rows.push_back(std::move(greedy));
  }
  return rows;
}

}  // namespace tempex::bench
