#pragma once
// Constructive pair finding and dominator selection over a vertex subset X.
//
// find_connected_pair succeeds whenever g is always-connected on I and
// |I| >= 2*D*n/|X| + 1, with D the average temporal maximum degree of the
// full instance. dominator_set returns S ⊆ X reaching all of X within I,
// with |S| <= 2k*log2|X| under the analogous hypothesis |I| >= 2*D*n/k + 1.
// Hypothesis checks compare integers exactly: (|I|-1)*|X| >= 2*sum(d_max).

#include <optional>

#include "tempex/graph.hpp"

namespace tempex::lemmas {

struct ConnectedPair {
  VertexId u = 0;
  VertexId v = 0;
  TemporalWalk walk;  // witness u -> v within the queried interval
};

// Searches X in ascending id order; returns the pair with the smallest u,
// then the smallest v, together with a deterministic witness walk.
// std::nullopt only when the interval hypothesis fails.
std::optional<ConnectedPair> find_connected_pair(const TemporalGraph& g, TimeInterval I,
                                                 const VertexSet& X);

struct GreedyRound {
  VertexId pick = 0;
  std::uint64_t gained = 0;  // vertices of X' removed by this pick
};

struct DominatorResult {
  VertexSet S;
  std::int64_t k = 0;
  std::uint64_t size_bound = 0;  // ceil(2k * log2 |X|)
  std::vector<GreedyRound> rounds;
};

// Greedy argmax-coverage realization: while |X'| > 2k, pick the vertex of X'
// whose forward layer over I covers the most of X' (smallest id on ties) and
// remove everything it reaches; once |X'| <= 2k the remainder joins S
// wholesale. Throws BoundViolated if the rounds exceed ceil(2k*log2|X|),
// which can only happen when the interval hypothesis does not hold.
DominatorResult dominator_set(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                              std::int64_t k);

// Overloads taking the precomputed full-horizon degree sum, for callers that
// already paid for the profile scan.
std::optional<ConnectedPair> find_connected_pair(const TemporalGraph& g, TimeInterval I,
                                                 const VertexSet& X, std::uint64_t dmax_sum);
DominatorResult dominator_set(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                              std::int64_t k, std::uint64_t dmax_sum);

// Exact-arithmetic interval hypothesis: |I| >= 2*D*n/q + 1 where D*n is the
// full-horizon degree sum and q is |X| or k.
inline bool interval_hypothesis(TimeStep interval_length, std::uint64_t dmax_sum,
                                std::uint64_t q) {
  return interval_length >= 1 &&
         static_cast<std::uint64_t>(interval_length - 1) * q >= 2 * dmax_sum;
}

}  // namespace tempex::lemmas
