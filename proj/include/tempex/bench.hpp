#pragma once
// Benchmark harness. A suite is a fixed grid of (family, n, seed) cells;
// each cell builds its instance, measures the requested algorithms and
// validates every walk before its row is emitted. Output is deterministic
// given the seeds (the seconds column aside), also under --jobs > 1.

#include <cstdint>
#include <string>
#include <vector>

#include "tempex/graph.hpp"

namespace tempex::bench {

struct BenchOptions {
  std::string suite = "default";
  int jobs = 1;
};

struct BenchRow {
  std::string family;
  std::uint32_t n = 0;
  TimeStep horizon = 0;
  std::uint64_t d_num = 0;
  std::uint64_t d_den = 1;
  std::string algo;
  std::uint64_t seed = 0;
  std::int64_t span = 0;
  std::int64_t bound = 0;
  double seconds = 0.0;
};

// "family,n,T,D_num,D_den,algo,seed,span,bound,seconds"
std::string csv_header();
std::string csv_line(const BenchRow& row);

// Suites: "default" (random trees), "bounded-degree", "rotating-star".
// Throws Error(bad_spec) for unknown names and on any validation failure.
std::vector<BenchRow> run_suite(const BenchOptions& options);

std::string rows_to_csv(const std::vector<BenchRow>& rows);

}  // namespace tempex::bench
