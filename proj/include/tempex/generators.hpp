#pragma once
// Instance families. Every generator returns a procedural TemporalGraph:
// snapshot t is regenerated on demand from (spec, seed, t), so horizons in
// the millions cost no memory. Seeded families draw from one splitmix64
// substream per snapshot (see rng.hpp); given the same spec string and seed
// the emitted edges are identical everywhere.

#include <optional>
#include <string>
#include <utility>

#include "tempex/graph.hpp"

namespace tempex::gen {

// Horizon-many snapshots of a rows x cols grid; snapshot t additionally
// hangs deg-4 leaves off every vertex of row t, reusing the same leaf pool
// throughout. Grid vertex (r, c) is (r-1)*cols + (c-1); leaf i of column c
// is rows*cols + (c-1)*(deg-4) + i. No two leaves can ever reach each other.
struct GridLeavesSpec {
  std::int64_t rows = 1;
  std::int64_t cols = 1;
  std::int64_t deg = 5;  // at least 5

  std::uint32_t vertex_count() const {
    return static_cast<std::uint32_t>(rows * cols + (deg - 4) * cols);
  }
  TimeStep horizon() const { return rows; }
  std::uint32_t leaf_count() const { return static_cast<std::uint32_t>((deg - 4) * cols); }
};

// Returns the instance together with its leaf set X.
std::pair<TemporalGraph, VertexSet> gen_grid_leaves(const GridLeavesSpec& spec);

enum class TreeKind { uniform_spanning_tree, random_star, random_path };

const char* tree_kind_name(TreeKind kind);
std::optional<TreeKind> tree_kind_from_name(std::string_view name);

// Independent random tree per snapshot: a uniform labeled tree (Wilson's
// loop-erased random walk on the complete graph), a star with a uniform
// center, or a uniformly shuffled path.
TemporalGraph gen_random_trees(std::uint32_t n, TimeStep horizon, TreeKind kind,
                               std::uint64_t seed);

// Snapshot t is a star centered at vertex t mod n; once horizon >= n every
// vertex has been a center, so D = n-1 exactly.
TemporalGraph gen_rotating_star(std::uint32_t n, TimeStep horizon);

// Random Hamiltonian path plus extra random edges, inserted only while both
// endpoint degrees stay strictly below d. d = 2 therefore yields exactly the
// path; max degree never exceeds d.
TemporalGraph gen_bounded_degree(std::uint32_t n, TimeStep horizon, std::uint32_t d,
                                 std::uint64_t seed);

// Horizon large enough that explore() can never run out: theorem_bound(n, D_upper).
TimeStep required_horizon(std::uint32_t n, Rational D_upper);

// Rebuilds an instance from its one-line spec string, e.g.
//   grid-leaves rows=5 cols=3 deg=8
//   random-trees kind=random-path n=64 T=100   (requires a seed)
//   rotating-star n=8 T=64
//   bounded-degree n=48 T=100 d=4              (requires a seed)
TemporalGraph from_spec(const std::string& spec, std::optional<std::uint64_t> seed);

}  // namespace tempex::gen
