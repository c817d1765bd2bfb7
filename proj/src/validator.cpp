#include "tempex/validator.hpp"

#include <algorithm>

#include "tempex/reachability.hpp"

namespace tempex::validate {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::bad_vertex: return "BadVertex";
    case ViolationKind::empty_walk: return "EmptyWalk";
    case ViolationKind::out_of_horizon: return "OutOfHorizon";
    case ViolationKind::bad_edge: return "BadEdge";
    case ViolationKind::late_start: return "LateStart";
    case ViolationKind::wrong_start: return "WrongStart";
    case ViolationKind::uncovered: return "Uncovered";
    case ViolationKind::span_exceeds_bound: return "SpanExceedsBound";
    case ViolationKind::x_pair_reachable: return "XPairReachable";
  }
  return "Unknown";
}

ValidationOutcome check_walk(const TemporalGraph& g, const TemporalWalk& walk) {
  ValidationOutcome out;
  if (walk.vertices.empty()) {
    out.add(ViolationKind::empty_walk, walk.start, "walk has no positions");
    return out;
  }
  const std::uint32_t n = g.vertex_count();
  for (std::size_t j = 0; j < walk.vertices.size(); ++j) {
    if (walk.vertices[j] >= n) {
      out.add(ViolationKind::bad_vertex, walk.start + static_cast<TimeStep>(j),
              "vertex " + std::to_string(walk.vertices[j]) + " >= n = " + std::to_string(n));
      return out;
    }
  }
  if (walk.span() > 0 && (walk.start < 1 || walk.end_time() - 1 > g.horizon())) {
    out.add(ViolationKind::out_of_horizon, walk.start,
            "steps [" + std::to_string(walk.start) + "," + std::to_string(walk.end_time() - 1) +
                "] outside [1," + std::to_string(g.horizon()) + "]");
    return out;
  }

  // direct membership in the raw per-step edge lists
  std::vector<Edge> scratch;
  for (TimeStep j = 0; j < walk.span(); ++j) {
    const VertexId a = walk.vertices[static_cast<std::size_t>(j)];
    const VertexId b = walk.vertices[static_cast<std::size_t>(j + 1)];
    if (a == b) continue;
    const TimeStep t = walk.start + j;
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    bool present = false;
    if (const std::vector<Edge>* stored = g.source().stored(t)) {
      present = std::binary_search(stored->begin(), stored->end(), e);
    } else {
      scratch.clear();
      g.source().emit(t, scratch);
      present = std::find(scratch.begin(), scratch.end(), e) != scratch.end();
    }
    if (!present)
      out.add(ViolationKind::bad_edge, t,
              "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "} not in snapshot " +
                  std::to_string(t));
  }
  return out;
}

ValidationOutcome check_exploration(const TemporalGraph& g, const TemporalWalk& walk,
                                    VertexId start) {
  ValidationOutcome out = check_walk(g, walk);
  if (walk.vertices.empty()) return out;
  if (walk.start != 1)
    out.add(ViolationKind::late_start, walk.start,
            "exploration starts at time " + std::to_string(walk.start));
  if (walk.first_vertex() != start)
    out.add(ViolationKind::wrong_start, walk.start,
            "exploration starts at vertex " + std::to_string(walk.first_vertex()) +
                ", expected " + std::to_string(start));
  VertexSet seen(g.vertex_count());
  for (VertexId v : walk.vertices)
    if (v < g.vertex_count()) seen.set(v);
  if (seen.count() != g.vertex_count()) {
    VertexSet missing = VertexSet::full(g.vertex_count());
    missing.subtract(seen);
    out.add(ViolationKind::uncovered, walk.end_time(),
            std::to_string(missing.count()) + " vertices uncovered, first is " +
                std::to_string(*missing.first()));
  }
  return out;
}

ValidationOutcome check_theorem_bound(const TemporalGraph& g,
                                      const explorer::ExplorationReport& report) {
  ValidationOutcome out;
  const std::uint32_t n = g.vertex_count();
  std::int64_t bound = 0;
  if (n > 1) {
    const DegreeProfile profile = degree_profile(g, {1, g.horizon()});
    bound = explorer::theorem_bound(n, profile.average());
  }
  if (report.walk.span() > bound)
    out.add(ViolationKind::span_exceeds_bound, report.walk.end_time(),
            "span " + std::to_string(report.walk.span()) + " exceeds L(n, D) = " +
                std::to_string(bound));
  return out;
}

ValidationOutcome check_no_x_pair_reachable(const TemporalGraph& g, const VertexSet& X,
                                            TimeInterval I) {
  ValidationOutcome out;
  const std::vector<VertexId> xs = X.to_vector();
  if (xs.size() < 2) return out;
  const std::vector<VertexSet> layers = reach::multi_forward_final(g, xs, I);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    VertexSet hit = layers[i];
    hit &= X;
    hit.reset(xs[i]);
    if (const std::optional<VertexId> v = hit.first())
      out.add(ViolationKind::x_pair_reachable, I.hi,
              std::to_string(xs[i]) + " reaches " + std::to_string(*v));
  }
  return out;
}

}  // namespace tempex::validate
