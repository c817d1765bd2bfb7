#pragma once
// Brute-force references used to certify the main implementations at desk
// scale. Nothing here may depend on the reachability, lemmas or explorer
// modules: a bug there must not be able to propagate into its own certifier.

#include <optional>

#include "tempex/graph.hpp"

namespace tempex::oracle {

// Minimum-span exploration from (time 1, start), found by breadth-first
// search over (time, vertex, visited-set) states with per-layer
// deduplication and visited-superset pruning. Returns std::nullopt when no
// exploration finishes within t_max steps. Refuses instances with more than
// max_n vertices.
std::optional<TemporalWalk> optimal_exploration(const TemporalGraph& g, VertexId start,
                                                TimeStep t_max, std::uint32_t max_n = 12);

// Definition-level reachability: enumerates every vertex sequence of length
// |I|+1 starting at u and collects the endpoints of those that satisfy the
// walk predicate. An empty interval (hi = lo-1) yields {u}.
VertexSet naive_forward_set(const TemporalGraph& g, VertexId u, TimeInterval I,
                            std::uint32_t max_n = 6, TimeStep max_steps = 6);

}  // namespace tempex::oracle
