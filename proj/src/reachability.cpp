#include "tempex/reachability.hpp"

#include <algorithm>
#include <bit>

namespace tempex::reach {

ForwardScanner::ForwardScanner(const TemporalGraph& g, VertexId origin, TimeStep start_time)
    : g_(&g),
      cursor_(g),
      origin_(origin),
      start_(start_time),
      t_(start_time),
      layer_(g.vertex_count()),
      prev_(g.vertex_count()),
      first_time_(g.vertex_count(), 0),
      parent_(g.vertex_count(), 0) {
  if (origin >= g.vertex_count())
    raise(Errc::invalid_vertex, "vertex " + std::to_string(origin));
  layer_.set(origin);
}

bool ForwardScanner::step() {
  cursor_.load(t_);
  prev_ = layer_;
  bool grew = false;
  // expand strictly from the previous layer; iterating predecessors in
  // ascending order makes the recorded parent the smallest qualifying id
  prev_.for_each([&](VertexId p) {
    for (VertexId w : cursor_.neighbors(p)) {
      if (!layer_.test(w)) {
        layer_.set(w);
        first_time_[w] = t_;
        parent_[w] = p;
        ++reached_;
        grew = true;
      }
    }
  });
  ++t_;
  return grew;
}

TemporalWalk ForwardScanner::walk_to(VertexId target) const {
  if (target == origin_) return TemporalWalk::stationary(start_, origin_);
  if (!layer_.test(target))
    raise(Errc::unreachable, "vertex " + std::to_string(target) + " not reached");
  std::vector<std::pair<VertexId, TimeStep>> chain;  // (vertex, time of arrival move)
  for (VertexId v = target; v != origin_;) {
    chain.emplace_back(v, first_time_[v]);
    v = parent_[v];
  }
  std::reverse(chain.begin(), chain.end());

  TemporalWalk walk{start_, {origin_}};
  for (auto [v, t] : chain) {
    while (walk.end_time() < t) walk.vertices.push_back(walk.last_vertex());
    walk.vertices.push_back(v);  // moved during step t, at v from time t+1
  }
  return walk;
}

ReachTrace forward_trace(const TemporalGraph& g, VertexId u, TimeInterval I) {
  require_interval(g, I, /*allow_empty=*/true);
  ReachTrace trace;
  trace.origin = u;
  trace.interval = I;
  trace.direction = Direction::forward;

  ForwardScanner scan(g, u, I.lo);
  trace.layers.reserve(static_cast<std::size_t>(std::max<TimeStep>(I.length(), 0)) + 1);
  trace.layers.push_back(scan.layer());
  for (TimeStep t = I.lo; t <= I.hi; ++t) {
    scan.step();
    trace.layers.push_back(scan.layer());
  }
  trace.first_time.assign(scan.first_times().begin(), scan.first_times().end());
  trace.parent.assign(scan.parents().begin(), scan.parents().end());
  return trace;
}

ReachTrace backward_trace(const TemporalGraph& g, VertexId u, TimeInterval I) {
  require_interval(g, I, /*allow_empty=*/true);
  if (u >= g.vertex_count()) raise(Errc::invalid_vertex, "vertex " + std::to_string(u));
  ReachTrace trace;
  trace.origin = u;
  trace.interval = I;
  trace.direction = Direction::backward;

  const std::uint32_t n = g.vertex_count();
  VertexSet layer(n), prev(n);
  layer.set(u);
  trace.layers.push_back(layer);
  SnapshotCursor cursor(g);
  for (TimeStep t = I.hi; t >= I.lo; --t) {
    cursor.load(t);
    prev = layer;
    prev.for_each([&](VertexId p) {
      for (VertexId w : cursor.neighbors(p))
        if (!layer.test(w)) layer.set(w);
    });
    trace.layers.push_back(layer);
  }
  return trace;
}

TemporalWalk extract_walk(const ReachTrace& trace, VertexId target) {
  if (trace.direction != Direction::forward)
    throw std::logic_error("extract_walk requires a forward trace");
  if (target == trace.origin) return TemporalWalk::stationary(trace.interval.lo, trace.origin);
  if (!trace.final_layer().test(target))
    raise(Errc::unreachable, "vertex " + std::to_string(target) + " not in the final layer");
  std::vector<std::pair<VertexId, TimeStep>> chain;
  for (VertexId v = target; v != trace.origin;) {
    chain.emplace_back(v, trace.first_time[v]);
    v = trace.parent[v];
  }
  std::reverse(chain.begin(), chain.end());
  TemporalWalk walk{trace.interval.lo, {trace.origin}};
  for (auto [v, t] : chain) {
    while (walk.end_time() < t) walk.vertices.push_back(walk.last_vertex());
    walk.vertices.push_back(v);
  }
  return walk;
}

TemporalWalk universal_walk(const TemporalGraph& g, VertexId u, VertexId v, TimeInterval I) {
  const std::uint32_t n = g.vertex_count();
  if (u >= n) raise(Errc::invalid_vertex, "vertex " + std::to_string(u));
  if (v >= n) raise(Errc::invalid_vertex, "vertex " + std::to_string(v));
  require_interval(g, I, /*allow_empty=*/true);
  if (u == v) return TemporalWalk::stationary(I.lo, u);
  if (I.length() < static_cast<TimeStep>(n) - 1)
    raise(Errc::interval_too_short, "need at least n-1 = " + std::to_string(n - 1) +
                                        " steps, interval has " + std::to_string(I.length()));

  ForwardScanner scan(g, u, I.lo);
  for (TimeStep t = I.lo; t <= I.hi; ++t) {
    scan.step();
    if (scan.layer().test(v)) return scan.walk_to(v);
    if (scan.reached_count() == n) break;  // cannot gain v later; defensive, unreachable
  }
  raise(Errc::not_always_connected,
        "no walk from " + std::to_string(u) + " to " + std::to_string(v) + " within [" +
            std::to_string(I.lo) + "," + std::to_string(I.hi) +
            "]; some snapshot must be disconnected");
}

std::vector<VertexSet> multi_forward_final(const TemporalGraph& g,
                                           std::span<const VertexId> sources, TimeInterval I) {
  require_interval(g, I, /*allow_empty=*/true);
  if (sources.empty()) return {};
  const std::uint32_t n = g.vertex_count();
  const std::size_t sw = (sources.size() + 63) / 64;  // words per vertex, one bit per source
  const kernels::Ops& ops = kernels::active_ops();

  std::vector<std::uint64_t> cur(n * sw, 0), next;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const VertexId s = sources[i];
    if (s >= n) raise(Errc::invalid_vertex, "vertex " + std::to_string(s));
    cur[s * sw + i / 64] |= std::uint64_t{1} << (i % 64);
  }
  next = cur;

  for_each_snapshot(g, I, [&](TimeStep, std::span<const Edge> es) {
    for (const Edge& e : es) {
      ops.or_into(&next[e.a * sw], &cur[e.b * sw], sw);
      ops.or_into(&next[e.b * sw], &cur[e.a * sw], sw);
    }
    cur = next;
  });

  std::vector<VertexSet> final_layers(sources.size(), VertexSet(n));
  for (VertexId v = 0; v < n; ++v)
    for (std::size_t w = 0; w < sw; ++w) {
      std::uint64_t word = cur[v * sw + w];
      while (word) {
        const std::size_t i = w * 64 + std::countr_zero(word);
        final_layers[i].set(v);
        word &= word - 1;
      }
    }
  return final_layers;
}

}  // namespace tempex::reach
