#pragma once
// Temporal graph core: a fixed vertex set 0..n-1 with one undirected simple
// graph per time step 1..T, plus temporal walks, time intervals and degree
// statistics. A TemporalGraph is immutable after construction and safe to
// share across threads; per-caller SnapshotCursor objects hold the lazily
// built adjacency of the snapshot they currently point at, so instances with
// horizons in the millions can be streamed without materializing them.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tempex/errors.hpp"
#include "tempex/vertex_set.hpp"

namespace tempex {

using VertexId = std::uint32_t;
using TimeStep = std::int64_t;

struct Edge {
  VertexId a = 0, b = 0;  // canonical form keeps a < b
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId x, VertexId y) {
  if (x == y) raise(Errc::self_loop, "edge endpoints must differ (" + std::to_string(x) + ")");
  return x < y ? Edge{x, y} : Edge{y, x};
}

// Inclusive range of time steps [lo, hi]; hi = lo - 1 denotes an empty range.
struct TimeInterval {
  TimeStep lo = 1;
  TimeStep hi = 0;
  TimeStep length() const { return hi - lo + 1; }
  bool empty() const { return hi < lo; }
  bool contains(TimeStep t) const { return lo <= t && t <= hi; }
  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

// Agent positions over consecutive time steps: vertices[j] is where the agent
// is at time start + j. Step j moves (or waits) during snapshot start + j.
struct TemporalWalk {
  TimeStep start = 1;
  std::vector<VertexId> vertices;

  static TemporalWalk stationary(TimeStep at, VertexId v) { return {at, {v}}; }

  TimeStep span() const { return static_cast<TimeStep>(vertices.size()) - 1; }
  VertexId first_vertex() const { return vertices.front(); }
  VertexId last_vertex() const { return vertices.back(); }
  // time of the final position
  TimeStep end_time() const { return start + span(); }

  VertexSet covered(std::uint32_t n) const {
    VertexSet s(n);
    for (VertexId v : vertices) s.set(v);
    return s;
  }
  friend bool operator==(const TemporalWalk&, const TemporalWalk&) = default;
};

// Joins two walks; w2 must start where w1 ends, at the same or a later time.
// Any time gap is bridged by waiting at the shared vertex.
TemporalWalk concat(const TemporalWalk& w1, const TemporalWalk& w2);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Per-vertex maximum degree over an interval. The average D is kept exact as
// sum/n; floating point enters only inside square-root formulas downstream.
struct DegreeProfile {
  std::vector<std::uint32_t> d_max;
  std::uint64_t sum = 0;

  std::uint32_t n() const { return static_cast<std::uint32_t>(d_max.size()); }
  Rational average() const { return {sum, n()}; }
};

// Pure edge supplier for one instance: emit(t) depends only on t, never on
// call order, so snapshots can be generated on demand and in parallel.
class SnapshotSource {
 public:
  virtual ~SnapshotSource() = default;
  // appends snapshot t's edges (canonical: a < b, sorted, deduplicated)
  virtual void emit(TimeStep t, std::vector<Edge>& out) const = 0;
  // non-null when the snapshot is materialized in memory
  virtual const std::vector<Edge>* stored(TimeStep t) const {
    (void)t;
    return nullptr;
  }
};

class TemporalGraph {
 public:
  TemporalGraph() : TemporalGraph(1, 0, nullptr, "", std::nullopt) {}

  static TemporalGraph from_source(std::uint32_t n, TimeStep horizon,
                                   std::shared_ptr<const SnapshotSource> source,
                                   std::string gen_spec = "",
                                   std::optional<std::uint64_t> gen_seed = std::nullopt) {
    return TemporalGraph(n, horizon, std::move(source), std::move(gen_spec), gen_seed);
  }

  std::uint32_t vertex_count() const { return n_; }
  TimeStep horizon() const { return horizon_; }
  const SnapshotSource& source() const { return *source_; }

  // set for generator-backed instances; drives the "gen" header line
  const std::string& gen_spec() const { return gen_spec_; }
  std::optional<std::uint64_t> gen_seed() const { return gen_seed_; }
  bool is_procedural() const { return !gen_spec_.empty(); }

 private:
  TemporalGraph(std::uint32_t n, TimeStep horizon, std::shared_ptr<const SnapshotSource> source,
                std::string gen_spec, std::optional<std::uint64_t> gen_seed)
      : n_(n),
        horizon_(horizon),
        source_(std::move(source)),
        gen_spec_(std::move(gen_spec)),
        gen_seed_(gen_seed) {}

  std::uint32_t n_;
  TimeStep horizon_;
  std::shared_ptr<const SnapshotSource> source_;
  std::string gen_spec_;
  std::optional<std::uint64_t> gen_seed_;
};

// Validates endpoints, rejects self-loops, sorts and deduplicates each
// snapshot. snapshots.size() must equal T.
TemporalGraph build(std::uint32_t n, TimeStep horizon, std::vector<std::vector<Edge>> snapshots);

// Adjacency view of one snapshot at a time. Cheap to re-point at consecutive
// time steps; not thread-safe (use one cursor per thread).
class SnapshotCursor {
 public:
  explicit SnapshotCursor(const TemporalGraph& g);
  explicit SnapshotCursor(const TemporalGraph&&) = delete;  // must outlive the cursor

  void load(TimeStep t);
  TimeStep loaded() const { return t_; }

  std::span<const Edge> edges() const;
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(VertexId x, VertexId y) const;

 private:
  const TemporalGraph* g_;
  TimeStep t_ = 0;  // 0 = nothing loaded
  const std::vector<Edge>* stored_ = nullptr;
  std::vector<Edge> scratch_;
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> adj_;
};

// Throws unless I is a well-formed interval inside [1, horizon].
// allow_empty permits hi = lo - 1.
void require_interval(const TemporalGraph& g, TimeInterval I, bool allow_empty = false);

std::uint32_t degree(const TemporalGraph& g, VertexId v, TimeStep t);

DegreeProfile degree_profile(const TemporalGraph& g, TimeInterval I);

// true iff every snapshot in I is connected on all n vertices
bool check_always_connected(const TemporalGraph& g, TimeInterval I);

// Streams snapshot edge lists over I without building adjacency.
// F is invoked as f(TimeStep t, std::span<const Edge> edges).
template <class F>
void for_each_snapshot(const TemporalGraph& g, TimeInterval I, F&& f) {
  require_interval(g, I, /*allow_empty=*/true);
  std::vector<Edge> scratch;
  for (TimeStep t = I.lo; t <= I.hi; ++t) {
    if (const std::vector<Edge>* stored = g.source().stored(t)) {
      f(t, std::span<const Edge>(*stored));
    } else {
      scratch.clear();
      g.source().emit(t, scratch);
      f(t, std::span<const Edge>(scratch));
    }
  }
}

// Dense in-memory copy of g (generator-backed instances lose their spec);
// refuses instances whose edge storage would exceed max_edges.
TemporalGraph materialized(const TemporalGraph& g, std::uint64_t max_edges = 1u << 28);

}  // namespace tempex
