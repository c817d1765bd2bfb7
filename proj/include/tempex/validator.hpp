#pragma once
// Independent checkers. Everything is recomputed from raw snapshot edge
// lists; nothing here trusts adjacency, degree sums or bounds cached by the
// code under test. Violations are data, not errors.

#include <string>
#include <vector>

#include "tempex/explorer.hpp"
#include "tempex/graph.hpp"

namespace tempex::validate {

enum class ViolationKind {
  bad_vertex,        // vertex id outside 0..n-1
  empty_walk,        // walk has no positions
  out_of_horizon,    // a step uses a snapshot outside [1, T]
  bad_edge,          // consecutive vertices not adjacent in that snapshot
  late_start,        // exploration does not begin at time step 1
  wrong_start,       // exploration does not begin at the required vertex
  uncovered,         // exploration misses at least one vertex
  span_exceeds_bound,
  x_pair_reachable,  // two distinct members of X connected by a walk
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  TimeStep time = 0;
  std::string detail;
};

struct ValidationOutcome {
  bool ok = true;
  std::vector<Violation> violations;

  void add(ViolationKind kind, TimeStep time, std::string detail) {
    ok = false;
    violations.push_back({kind, time, std::move(detail)});
  }
  explicit operator bool() const { return ok; }
};

// Every step either waits or crosses an edge of the step's snapshot.
ValidationOutcome check_walk(const TemporalGraph& g, const TemporalWalk& walk);

// check_walk, plus: starts at time 1, starts at `start`, covers everything.
ValidationOutcome check_exploration(const TemporalGraph& g, const TemporalWalk& walk,
                                    VertexId start);

// Span within L(n, D), with D recomputed here from the snapshots.
ValidationOutcome check_theorem_bound(const TemporalGraph& g,
                                      const explorer::ExplorationReport& report);

// No member of X can reach another member of X within I.
ValidationOutcome check_no_x_pair_reachable(const TemporalGraph& g, const VertexSet& X,
                                            TimeInterval I);

}  // namespace tempex::validate
