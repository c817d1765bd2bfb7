#include "tempex/graph.hpp"

#include <algorithm>
#include <numeric>

namespace tempex {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::self_loop: return "SelfLoop";
    case Errc::bad_snapshot_index: return "BadSnapshotIndex";
    case Errc::empty_interval: return "EmptyInterval";
    case Errc::endpoint_mismatch: return "EndpointMismatch";
    case Errc::time_overlap: return "TimeOverlap";
    case Errc::unreachable: return "Unreachable";
    case Errc::not_always_connected: return "NotAlwaysConnected";
    case Errc::interval_too_short: return "IntervalTooShort";
    case Errc::x_too_small: return "XTooSmall";
    case Errc::bound_violated: return "BoundViolated";
    case Errc::horizon_exhausted: return "HorizonExhausted";
    case Errc::start_out_of_range: return "StartOutOfRange";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::bad_spec: return "BadSpec";
    case Errc::parse_error: return "ParseError";
    case Errc::version_mismatch: return "VersionMismatch";
  }
  return "UnknownError";
}

namespace {

class DenseSource final : public SnapshotSource {
 public:
  explicit DenseSource(std::vector<std::vector<Edge>> snapshots)
      : snapshots_(std::move(snapshots)) {}

  void emit(TimeStep t, std::vector<Edge>& out) const override {
    const std::vector<Edge>& s = snapshots_[static_cast<std::size_t>(t - 1)];
    out.insert(out.end(), s.begin(), s.end());
  }
  const std::vector<Edge>* stored(TimeStep t) const override {
    return &snapshots_[static_cast<std::size_t>(t - 1)];
  }

 private:
  std::vector<std::vector<Edge>> snapshots_;
};

}  // namespace

TemporalGraph build(std::uint32_t n, TimeStep horizon, std::vector<std::vector<Edge>> snapshots) {
  if (n < 1) raise(Errc::invalid_vertex, "vertex count must be at least 1");
  if (horizon < 0) raise(Errc::bad_snapshot_index, "horizon must be nonnegative");
  if (static_cast<TimeStep>(snapshots.size()) != horizon)
    raise(Errc::bad_snapshot_index,
          "expected " + std::to_string(horizon) + " snapshots, got " +
              std::to_string(snapshots.size()));
  for (TimeStep t = 1; t <= horizon; ++t) {
    std::vector<Edge>& s = snapshots[static_cast<std::size_t>(t - 1)];
    for (Edge& e : s) {
      if (e.a == e.b)
        raise(Errc::self_loop,
              "snapshot " + std::to_string(t) + " has a self-loop at " + std::to_string(e.a));
      if (e.a > e.b) std::swap(e.a, e.b);
      if (e.b >= n)
        raise(Errc::invalid_vertex, "snapshot " + std::to_string(t) + " references vertex " +
                                        std::to_string(e.b) + " but n = " + std::to_string(n));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return TemporalGraph::from_source(n, horizon,
                                    std::make_shared<DenseSource>(std::move(snapshots)));
}

void require_interval(const TemporalGraph& g, TimeInterval I, bool allow_empty) {
  if (I.empty()) {
    if (allow_empty && I.hi == I.lo - 1) return;
    raise(Errc::empty_interval,
          "interval [" + std::to_string(I.lo) + "," + std::to_string(I.hi) + "] is empty");
  }
  if (I.lo < 1 || I.hi > g.horizon())
    raise(Errc::bad_snapshot_index,
          "interval [" + std::to_string(I.lo) + "," + std::to_string(I.hi) +
              "] outside horizon [1," + std::to_string(g.horizon()) + "]");
}

SnapshotCursor::SnapshotCursor(const TemporalGraph& g)
    : g_(&g), offsets_(g.vertex_count() + 1, 0) {}

void SnapshotCursor::load(TimeStep t) {
  if (t == t_) return;
  if (t < 1 || t > g_->horizon())
    raise(Errc::bad_snapshot_index, "snapshot " + std::to_string(t) + " outside horizon [1," +
                                        std::to_string(g_->horizon()) + "]");
  stored_ = g_->source().stored(t);
  if (!stored_) {
    scratch_.clear();
    g_->source().emit(t, scratch_);
  }
  const std::vector<Edge>& es = stored_ ? *stored_ : scratch_;

  const std::uint32_t n = g_->vertex_count();
  std::fill(offsets_.begin(), offsets_.end(), 0u);
  for (const Edge& e : es) {
    ++offsets_[e.a + 1];
    ++offsets_[e.b + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adj_.resize(es.size() * 2);
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : es) {
    adj_[cursor[e.a]++] = e.b;
    adj_[cursor[e.b]++] = e.a;
  }
  t_ = t;
}

std::span<const Edge> SnapshotCursor::edges() const {
  const std::vector<Edge>& es = stored_ ? *stored_ : scratch_;
  return es;
}

bool SnapshotCursor::has_edge(VertexId x, VertexId y) const {
  std::span<const VertexId> nb = neighbors(x);
  return std::binary_search(nb.begin(), nb.end(), y);
}

std::uint32_t degree(const TemporalGraph& g, VertexId v, TimeStep t) {
  if (v >= g.vertex_count()) raise(Errc::invalid_vertex, "vertex " + std::to_string(v));
  std::uint32_t d = 0;
  for_each_snapshot(g, {t, t}, [&](TimeStep, std::span<const Edge> es) {
    for (const Edge& e : es) d += (e.a == v) + (e.b == v);
  });
  return d;
}

DegreeProfile degree_profile(const TemporalGraph& g, TimeInterval I) {
  require_interval(g, I);
  const std::uint32_t n = g.vertex_count();
  DegreeProfile p;
  p.d_max.assign(n, 0);
  std::vector<std::uint32_t> d(n, 0);
  for_each_snapshot(g, I, [&](TimeStep, std::span<const Edge> es) {
    for (const Edge& e : es) {
      ++d[e.a];
      ++d[e.b];
    }
    for (const Edge& e : es) {
      if (d[e.a] > p.d_max[e.a]) p.d_max[e.a] = d[e.a];
      if (d[e.b] > p.d_max[e.b]) p.d_max[e.b] = d[e.b];
      d[e.a] = 0;
      d[e.b] = 0;
    }
  });
  p.sum = std::accumulate(p.d_max.begin(), p.d_max.end(), std::uint64_t{0});
  return p;
}

bool check_always_connected(const TemporalGraph& g, TimeInterval I) {
  require_interval(g, I, /*allow_empty=*/true);
  const std::uint32_t n = g.vertex_count();
  if (n == 1) return true;
  std::vector<VertexId> parent(n);
  // union-find per snapshot, path halving
  auto find = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  bool ok = true;
  for_each_snapshot(g, I, [&](TimeStep, std::span<const Edge> es) {
    if (!ok) return;
    if (es.size() + 1 < n) {
      ok = false;
      return;
    }
    std::iota(parent.begin(), parent.end(), 0u);
    std::uint32_t components = n;
    for (const Edge& e : es) {
      VertexId ra = find(e.a), rb = find(e.b);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
    if (components != 1) ok = false;
  });
  return ok;
}

TemporalWalk concat(const TemporalWalk& w1, const TemporalWalk& w2) {
  if (w1.last_vertex() != w2.first_vertex())
    raise(Errc::endpoint_mismatch, "first walk ends at " + std::to_string(w1.last_vertex()) +
                                       ", second starts at " + std::to_string(w2.first_vertex()));
  if (w2.start < w1.end_time())
    raise(Errc::time_overlap, "second walk starts at time " + std::to_string(w2.start) +
                                  " before the first ends at " + std::to_string(w1.end_time()));
  TemporalWalk out = w1;
  out.vertices.reserve(w1.vertices.size() + static_cast<std::size_t>(w2.start - w1.end_time()) +
                       w2.vertices.size() - 1);
  for (TimeStep t = w1.end_time(); t < w2.start; ++t) out.vertices.push_back(w1.last_vertex());
  out.vertices.insert(out.vertices.end(), w2.vertices.begin() + 1, w2.vertices.end());
  return out;
}

TemporalGraph materialized(const TemporalGraph& g, std::uint64_t max_edges) {
  std::vector<std::vector<Edge>> snapshots;
  snapshots.reserve(static_cast<std::size_t>(g.horizon()));
  std::uint64_t total = 0;
  for_each_snapshot(g, {1, g.horizon()}, [&](TimeStep, std::span<const Edge> es) {
    total += es.size();
    if (total > max_edges)
      raise(Errc::instance_too_large,
            "materializing would exceed " + std::to_string(max_edges) + " edges");
    snapshots.emplace_back(es.begin(), es.end());
  });
  return build(g.vertex_count(), g.horizon(), std::move(snapshots));
}

}  // namespace tempex
