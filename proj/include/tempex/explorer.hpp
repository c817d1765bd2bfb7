#pragma once
// Exploration construction. explore() builds a complete exploration in
// phases of 2n time steps: phase i travels anywhere within
// [2in+1, (2i+1)n-1] (always possible in n-1 steps on an always-connected
// instance) and then runs a covering walk on [(2i+1)n, 2(i+1)n-1] that
// visits at least m+1 not-yet-covered vertices, with
// m = floor(sqrt(|X|/(D log2 |X|)) / 8). Once at most two vertices remain,
// two point-to-point hops finish the job. The explicit span bound is
//   L(n, D) = 2n * (i0 + 1),
//   i0 = sum_{k=0}^{ceil(log2 n)} ceil(4 sqrt(2 D (n/2^k) max(1, log2(n/2^k)))).

#include <optional>

#include "tempex/graph.hpp"

namespace tempex::explorer {

// L(n, D) as above; 0 when n <= 1. Monotone in n and D.
std::int64_t theorem_bound(std::uint32_t n, Rational D);

struct CoverParams {
  std::int64_t m = 0;  // sub-interval count; 0 means a stationary walk suffices
  std::int64_t k = 0;  // dominator parameter
};

// m and k for a covering walk over a set of x_size >= 2 vertices.
CoverParams cover_params(std::uint64_t x_size, Rational D);

// I split into m windows of floor(|I|/m) steps, the remainder on the last.
std::vector<TimeInterval> partition_windows(TimeInterval I, std::int64_t m);

// Walk within I covering at least m+1 vertices of X (one vertex when m = 0).
// Requires |I| >= n, |X| >= 2 and an always-connected instance.
TemporalWalk cover_many(const TemporalGraph& g, TimeInterval I, const VertexSet& X);
TemporalWalk cover_many(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                        std::uint64_t dmax_sum);

enum class PhaseAction { cover_many, final_two, done };

struct PhasePlan {
  std::int64_t index = 0;
  TimeInterval travel;  // [2in+1, (2i+1)n-1]
  TimeInterval cover;   // [(2i+1)n, 2(i+1)n-1]
  VertexSet remaining;  // vertices not yet covered when the phase began
  PhaseAction action = PhaseAction::done;
};

struct ExplorationReport {
  TemporalWalk walk;
  std::vector<PhasePlan> phases;
  std::int64_t bound = 0;  // L(n, D); 0 when no guarantee applies (greedy)
  Rational D;
  std::uint32_t n = 0;
  TimeStep horizon = 0;
  double seconds = 0.0;
};

// Phase-structured exploration with span <= theorem_bound(n, D). Requires
// an always-connected instance and horizon >= theorem_bound(n, D).
ExplorationReport explore(const TemporalGraph& g, VertexId start);

// Baseline: repeatedly take an earliest-arrival walk to the nearest
// unvisited vertex (ties: smallest arrival time, then smallest id).
// No span guarantee; report.bound is 0 and report.D is left unset.
ExplorationReport greedy_explore(const TemporalGraph& g, VertexId start);

namespace detail {
// Chaining core of cover_many with explicit m >= 1 and k >= 2: partitions I,
// draws a dominator set per sub-interval, then links one dominator vertex
// per sub-interval back-to-front.
TemporalWalk cover_chain(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                         std::int64_t m, std::int64_t k, std::uint64_t dmax_sum);
}  // namespace detail

}  // namespace tempex::explorer
