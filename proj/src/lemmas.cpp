#include "tempex/lemmas.hpp"

#include <cmath>

#include "tempex/reachability.hpp"

namespace tempex::lemmas {

std::optional<ConnectedPair> find_connected_pair(const TemporalGraph& g, TimeInterval I,
                                                 const VertexSet& X) {
  return find_connected_pair(g, I, X, degree_profile(g, {1, g.horizon()}).sum);
}

std::optional<ConnectedPair> find_connected_pair(const TemporalGraph& g, TimeInterval I,
                                                 const VertexSet& X, std::uint64_t dmax_sum) {
  require_interval(g, I);
  if (X.count() < 2) raise(Errc::x_too_small, "need at least two vertices in X");

  const std::vector<VertexId> xs = X.to_vector();
  const std::vector<VertexSet> layers = reach::multi_forward_final(g, xs, I);

  for (std::size_t i = 0; i < xs.size(); ++i) {
    VertexSet hit = layers[i];
    hit &= X;
    hit.reset(xs[i]);
    if (const std::optional<VertexId> v = hit.first()) {
      // reconstruct the witness with a parent-tracking scan from xs[i]
      reach::ForwardScanner scan(g, xs[i], I.lo);
      for (TimeStep t = I.lo; t <= I.hi; ++t) {
        scan.step();
        if (scan.layer().test(*v)) break;
      }
      return ConnectedPair{xs[i], *v, scan.walk_to(*v)};
    }
  }
  if (interval_hypothesis(I.length(), dmax_sum, X.count()))
    raise(Errc::not_always_connected,
          "no pair connected although the interval hypothesis holds; "
          "some snapshot must be disconnected");
  return std::nullopt;
}

DominatorResult dominator_set(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                              std::int64_t k) {
  return dominator_set(g, I, X, k, degree_profile(g, {1, g.horizon()}).sum);
}

DominatorResult dominator_set(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                              std::int64_t k, std::uint64_t dmax_sum) {
  require_interval(g, I);
  const std::uint64_t x_size = X.count();
  if (x_size < 2) raise(Errc::x_too_small, "need at least two vertices in X");
  if (k < 2) raise(Errc::bound_violated, "k must be at least 2");
  if (dmax_sum == 0)
    raise(Errc::not_always_connected, "edgeless horizon cannot be always-connected");

  DominatorResult result;
  result.S = VertexSet(g.vertex_count());
  result.k = k;
  result.size_bound = static_cast<std::uint64_t>(
      std::ceil(2.0 * static_cast<double>(k) * std::log2(static_cast<double>(x_size))));
  const bool hypothesis = interval_hypothesis(I.length(), dmax_sum, static_cast<std::uint64_t>(k));

  VertexSet remaining = X;
  VertexSet dominated(g.vertex_count());
  while (remaining.count() > 2 * static_cast<std::uint64_t>(k)) {
    if (result.rounds.size() >= result.size_bound)
      raise(Errc::bound_violated,
            "greedy rounds exceeded ceil(2k log2 |X|) = " + std::to_string(result.size_bound) +
                "; the interval hypothesis cannot hold");

    const std::vector<VertexId> xs = remaining.to_vector();
    const std::vector<VertexSet> layers = reach::multi_forward_final(g, xs, I);

    std::size_t best = 0;
    std::uint64_t best_cover = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::uint64_t cover = layers[i].count_and(remaining);
      if (cover > best_cover) {  // ascending scan: ties keep the smallest id
        best_cover = cover;
        best = i;
      }
    }

    VertexSet removed = layers[best];
    removed &= remaining;
    removed.set(xs[best]);
    const std::uint64_t gained = removed.count();
    if (hypothesis) {
      // each round must remove at least |X'|/(2k) vertices
      const std::uint64_t need =
          (xs.size() + 2 * static_cast<std::uint64_t>(k) - 1) / (2 * static_cast<std::uint64_t>(k));
      if (gained < need)
        throw std::logic_error("dominator round removed " + std::to_string(gained) +
                               " vertices, expected at least " + std::to_string(need));
    }
    result.S.set(xs[best]);
    result.rounds.push_back(GreedyRound{xs[best], gained});
    dominated |= removed;
    remaining.subtract(removed);
  }
  // base case: the leftover set dominates itself
  result.S |= remaining;
  dominated |= remaining;

  if (!X.is_subset_of(dominated))
    throw std::logic_error("dominator post-condition failed: X not fully dominated");
  if (hypothesis && result.S.count() > result.size_bound)
    throw std::logic_error("dominator set size " + std::to_string(result.S.count()) +
                           " exceeds bound " + std::to_string(result.size_bound));
  return result;
}

}  // namespace tempex::lemmas
