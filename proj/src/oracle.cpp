#include "tempex/oracle.hpp"

#include <algorithm>

namespace tempex::oracle {

namespace {

using Mask = std::uint32_t;

struct State {
  VertexId v;
  Mask visited;
  std::uint32_t parent;  // index into the previous layer, ~0u for the root
};

}  // namespace

std::optional<TemporalWalk> optimal_exploration(const TemporalGraph& g, VertexId start,
                                                TimeStep t_max, std::uint32_t max_n) {
  const std::uint32_t n = g.vertex_count();
  if (n > max_n || n > 32)
    raise(Errc::instance_too_large,
          "exact solver capped at n = " + std::to_string(std::min(max_n, 32u)) +
              ", instance has " + std::to_string(n));
  if (start >= n) raise(Errc::start_out_of_range, "start vertex " + std::to_string(start));
  if (t_max > g.horizon()) t_max = g.horizon();

  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  const Mask init = Mask{1} << start;

  // layers[s] holds the states reachable after s steps
  std::vector<std::vector<State>> layers;
  layers.push_back({State{start, init, ~0u}});

  auto reconstruct = [&](std::size_t last_layer, std::uint32_t idx) {
    std::vector<VertexId> rev;
    for (std::size_t s = last_layer; idx != ~0u; --s) {
      rev.push_back(layers[s][idx].v);
      idx = layers[s][idx].parent;
    }
    std::reverse(rev.begin(), rev.end());
    return TemporalWalk{1, std::move(rev)};
  };

  if (init == full) return reconstruct(0, 0);

  // per-vertex antichain of visited-masks; a state is dominated by another
  // at the same (time, vertex) whose visited set is a superset
  std::vector<std::vector<Mask>> seen(n);
  SnapshotCursor cursor(g);

  for (TimeStep step = 1; step <= t_max; ++step) {
    cursor.load(step);
    for (auto& s : seen) s.clear();
    std::vector<State> next;

    auto try_push = [&](VertexId w, Mask m, std::uint32_t parent) -> bool {
      std::vector<Mask>& masks = seen[w];
      for (Mask have : masks)
        if ((m & ~have) == 0) return false;  // dominated
      std::erase_if(masks, [&](Mask have) { return (have & ~m) == 0; });
      masks.push_back(m);
      next.push_back(State{w, m, parent});
      return m == full;
    };

    const std::vector<State>& cur = layers.back();
    for (std::uint32_t i = 0; i < cur.size(); ++i) {
      const State s = cur[i];
      if (try_push(s.v, s.visited, i)) {  // wait
        layers.push_back(std::move(next));
        return reconstruct(layers.size() - 1, static_cast<std::uint32_t>(layers.back().size() - 1));
      }
      for (VertexId w : cursor.neighbors(s.v)) {
        if (try_push(w, s.visited | (Mask{1} << w), i)) {
          layers.push_back(std::move(next));
          return reconstruct(layers.size() - 1,
                             static_cast<std::uint32_t>(layers.back().size() - 1));
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return std::nullopt;
}

VertexSet naive_forward_set(const TemporalGraph& g, VertexId u, TimeInterval I,
                            std::uint32_t max_n, TimeStep max_steps) {
  const std::uint32_t n = g.vertex_count();
  if (u >= n) raise(Errc::invalid_vertex, "vertex " + std::to_string(u));
  require_interval(g, I, /*allow_empty=*/true);
  const TimeStep steps = I.length();
  if (n > max_n || steps > max_steps)
    raise(Errc::instance_too_large, "naive enumeration capped at n = " + std::to_string(max_n) +
                                        ", " + std::to_string(max_steps) + " steps");

  VertexSet out(n);
  if (steps <= 0) {
    out.set(u);
    return out;
  }

  // materialize the window's edge sets once; membership is then a flat scan
  std::vector<std::vector<Edge>> window(static_cast<std::size_t>(steps));
  for_each_snapshot(g, I, [&](TimeStep t, std::span<const Edge> es) {
    window[static_cast<std::size_t>(t - I.lo)].assign(es.begin(), es.end());
  });
  auto step_ok = [&](TimeStep j, VertexId a, VertexId b) {
    if (a == b) return true;
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    const std::vector<Edge>& es = window[static_cast<std::size_t>(j)];
    return std::find(es.begin(), es.end(), e) != es.end();
  };

  // odometer over all n^steps sequences; seq[j] is the position after step j
  std::vector<VertexId> seq(static_cast<std::size_t>(steps), 0);
  while (true) {
    bool valid = step_ok(0, u, seq[0]);
    for (TimeStep j = 1; valid && j < steps; ++j)
      valid = step_ok(j, seq[static_cast<std::size_t>(j - 1)], seq[static_cast<std::size_t>(j)]);
    if (valid) out.set(seq.back());

    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == n) {
      seq[pos] = 0;
      ++pos;
    }
    if (pos == seq.size()) break;
  }
  return out;
}

}  // namespace tempex::oracle
