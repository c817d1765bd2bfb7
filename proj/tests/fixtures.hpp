#pragma once
// Shared instances for the unit tests.

#include <vector>

#include "tempex/graph.hpp"
#include "tempex/rng.hpp"

namespace fixtures {

using namespace tempex;

// 4 vertices, 3 snapshots: {01,12,23}, {01,03,23}, {02,12,23}
inline TemporalGraph ex1() {
  return build(4, 3,
               {{{0, 1}, {1, 2}, {2, 3}},
                {{0, 1}, {0, 3}, {2, 3}},
                {{0, 2}, {1, 2}, {2, 3}}});
}

// ex1's snapshot cycle repeated out to the given horizon
inline TemporalGraph ex1_periodic(TimeStep horizon) {
  const std::vector<std::vector<Edge>> base = {{{0, 1}, {1, 2}, {2, 3}},
                                               {{0, 1}, {0, 3}, {2, 3}},
                                               {{0, 2}, {1, 2}, {2, 3}}};
  std::vector<std::vector<Edge>> snaps;
  for (TimeStep t = 1; t <= horizon; ++t)
    snaps.push_back(base[static_cast<std::size_t>((t - 1) % 3)]);
  return build(4, horizon, std::move(snaps));
}

// every snapshot the complete graph K_n
inline TemporalGraph static_complete(std::uint32_t n, TimeStep horizon) {
  std::vector<Edge> all;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) all.push_back({a, b});
  return build(n, horizon, std::vector<std::vector<Edge>>(static_cast<std::size_t>(horizon), all));
}

// every snapshot the path 0-1-...-(n-1)
inline TemporalGraph static_path(std::uint32_t n, TimeStep horizon) {
  std::vector<Edge> path;
  for (VertexId v = 0; v + 1 < n; ++v) path.push_back({v, v + 1});
  return build(n, horizon,
               std::vector<std::vector<Edge>>(static_cast<std::size_t>(horizon), path));
}

// seeded arbitrary instance: each possible edge appears per snapshot with
// probability 1/2 (not necessarily connected)
inline TemporalGraph random_instance(std::uint32_t n, TimeStep horizon, std::uint64_t seed) {
  std::vector<std::vector<Edge>> snaps(static_cast<std::size_t>(horizon));
  for (TimeStep t = 1; t <= horizon; ++t) {
    SplitMix64 rng = snapshot_stream(seed, t);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (rng.next() & 1) snaps[static_cast<std::size_t>(t - 1)].push_back({a, b});
  }
  return build(n, horizon, std::move(snaps));
}

}  // namespace fixtures
