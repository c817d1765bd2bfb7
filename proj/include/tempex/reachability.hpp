#pragma once
// Forward/backward temporal reachability. Layers follow the recurrences
//   F(u,t) = F(u,t-1) ∪ N_{G_t}(F(u,t-1)),  F(u,lo-1) = {u}
//   B(u,t) = B(u,t+1) ∪ N_{G_t}(B(u,t+1)),  B(u,hi+1) = {u}
// Forward traces carry parent pointers for witness reconstruction; ties go
// to the smallest predecessor id at the earliest time, so witnesses are
// deterministic.

#include <span>
#include <vector>

#include "tempex/graph.hpp"

namespace tempex::reach {

enum class Direction { forward, backward };

struct ReachTrace {
  VertexId origin = 0;
  TimeInterval interval;
  Direction direction = Direction::forward;
  // layers[0] is the base {origin}; forward layers advance in time,
  // backward layers walk from hi+1 down to lo
  std::vector<VertexSet> layers;
  // forward only: time of first reach (0 = never) and predecessor
  std::vector<TimeStep> first_time;
  std::vector<VertexId> parent;

  const VertexSet& final_layer() const { return layers.back(); }
  // forward: F(origin, t) for t in [lo-1, hi]
  const VertexSet& layer_after(TimeStep t) const {
    return layers[static_cast<std::size_t>(t - interval.lo + 1)];
  }
  // backward: B(origin, t) for t in [lo, hi+1]
  const VertexSet& layer_from(TimeStep t) const {
    return layers[static_cast<std::size_t>(interval.hi + 1 - t)];
  }
};

ReachTrace forward_trace(const TemporalGraph& g, VertexId u, TimeInterval I);
ReachTrace backward_trace(const TemporalGraph& g, VertexId u, TimeInterval I);

// Witness walk from the trace origin to target, waits filled in explicitly.
// Requires a forward trace whose final layer contains target.
TemporalWalk extract_walk(const ReachTrace& trace, VertexId target);

// Walk from u to v guaranteed whenever g is always-connected on I and
// |I| >= n-1. Returns the shortest witness (no trailing padding).
TemporalWalk universal_walk(const TemporalGraph& g, VertexId u, VertexId v, TimeInterval I);

// Step-at-a-time forward expansion with parent tracking; one snapshot is
// consumed per step() call. Used wherever layers are not worth storing.
class ForwardScanner {
 public:
  ForwardScanner(const TemporalGraph& g, VertexId origin, TimeStep start_time);

  const VertexSet& layer() const { return layer_; }
  std::uint64_t reached_count() const { return reached_; }
  // snapshot the next step() call will use
  TimeStep next_time() const { return t_; }
  // expands one step; returns false when the layer did not grow
  bool step();
  // witness from origin to target at the current layer, starting at start_time
  TemporalWalk walk_to(VertexId target) const;

  std::span<const TimeStep> first_times() const { return first_time_; }
  std::span<const VertexId> parents() const { return parent_; }

 private:
  const TemporalGraph* g_;
  SnapshotCursor cursor_;
  VertexId origin_;
  TimeStep start_;
  TimeStep t_;
  std::uint64_t reached_ = 1;
  VertexSet layer_, prev_;
  std::vector<TimeStep> first_time_;
  std::vector<VertexId> parent_;
};

// Final forward layers of many sources computed in one sweep over I, in
// input order. Equivalent to forward_trace(g, s, I).final_layer() for each
// source, but snapshots are streamed once and frontiers advance together
// through the word kernels.
std::vector<VertexSet> multi_forward_final(const TemporalGraph& g,
                                           std::span<const VertexId> sources, TimeInterval I);

}  // namespace tempex::reach
