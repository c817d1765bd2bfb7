#include "tempex/explorer.hpp"

#include <bit>
#include <chrono>
#include <cmath>

#include "tempex/lemmas.hpp"
#include "tempex/reachability.hpp"

namespace tempex::explorer {

std::int64_t theorem_bound(std::uint32_t n, Rational D) {
  if (n <= 1) return 0;
  const double d = D.value();
  const int kmax = std::bit_width(n - 1);  // ceil(log2 n)
  std::int64_t i0 = 0;
  for (int k = 0; k <= kmax; ++k) {
    const double x = std::ldexp(static_cast<double>(n), -k);
    const double lg = std::max(1.0, std::log2(x));
    i0 += static_cast<std::int64_t>(std::ceil(4.0 * std::sqrt(2.0 * d * x * lg)));
  }
  return 2 * static_cast<std::int64_t>(n) * (i0 + 1);
}

CoverParams cover_params(std::uint64_t x_size, Rational D) {
  const double x = static_cast<double>(x_size);
  const double d = D.value();
  const double lg = std::log2(x);  // x >= 2, so lg >= 1
  CoverParams p;
  p.m = static_cast<std::int64_t>(std::floor(std::sqrt(x / (d * lg)) / 8.0));
  p.k = static_cast<std::int64_t>(std::ceil(std::sqrt(d * x / lg)));
  return p;
}

std::vector<TimeInterval> partition_windows(TimeInterval I, std::int64_t m) {
  const TimeStep base = I.length() / m;
  std::vector<TimeInterval> windows;
  windows.reserve(static_cast<std::size_t>(m));
  TimeStep lo = I.lo;
  for (std::int64_t i = 0; i < m; ++i) {
    const TimeStep hi = (i + 1 == m) ? I.hi : lo + base - 1;
    windows.push_back({lo, hi});
    lo = hi + 1;
  }
  return windows;
}

namespace detail {

TemporalWalk cover_chain(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                         std::int64_t m, std::int64_t k, std::uint64_t dmax_sum) {
  const std::vector<TimeInterval> windows = partition_windows(I, m);

  std::vector<VertexSet> dominators;
  dominators.reserve(windows.size());
  VertexSet undominated = X;
  for (const TimeInterval& w : windows) {
    if (undominated.count() < 2)
      throw std::logic_error("cover_chain: dominator sets exhausted X early");
    lemmas::DominatorResult dom = lemmas::dominator_set(g, w, undominated, k, dmax_sum);
    // S_i inside the still-undominated part keeps the windows' sets disjoint
    if (!dom.S.is_subset_of(undominated))
      throw std::logic_error("cover_chain: dominator set escapes its ground set");
    dominators.push_back(dom.S);
    undominated.subtract(dom.S);
  }
  // the dominator sets take up at most half of X
  const std::optional<VertexId> last = undominated.first();
  if (!last) throw std::logic_error("cover_chain: no vertex of X left outside the dominators");

  // back-to-front: pick the smallest vertex of each dominator set that can
  // still reach the next anchor inside its own window
  std::vector<TemporalWalk> legs(windows.size());
  VertexId anchor = *last;
  for (std::size_t i = windows.size(); i-- > 0;) {
    const std::vector<VertexId> cands = dominators[i].to_vector();
    const std::vector<VertexSet> layers = reach::multi_forward_final(g, cands, windows[i]);
    std::optional<std::size_t> chosen;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (layers[c].test(anchor)) {
        chosen = c;
        break;
      }
    }
    if (!chosen)
      throw std::logic_error("cover_chain: no dominator vertex reaches the next anchor");
    reach::ForwardScanner scan(g, cands[*chosen], windows[i].lo);
    for (TimeStep t = windows[i].lo; !scan.layer().test(anchor); ++t) {
      if (t > windows[i].hi)
        throw std::logic_error("cover_chain: anchor not reached inside its window");
      scan.step();
    }
    legs[i] = scan.walk_to(anchor);
    anchor = cands[*chosen];
  }

  TemporalWalk walk = legs.front();
  for (std::size_t i = 1; i < legs.size(); ++i) walk = concat(walk, legs[i]);

  if (static_cast<std::int64_t>(walk.covered(g.vertex_count()).count_and(X)) < m + 1)
    throw std::logic_error("cover_chain: walk covers fewer than m+1 vertices of X");
  return walk;
}

}  // namespace detail

TemporalWalk cover_many(const TemporalGraph& g, TimeInterval I, const VertexSet& X) {
  return cover_many(g, I, X, degree_profile(g, {1, g.horizon()}).sum);
}

TemporalWalk cover_many(const TemporalGraph& g, TimeInterval I, const VertexSet& X,
                        std::uint64_t dmax_sum) {
  require_interval(g, I);
  const std::uint32_t n = g.vertex_count();
  if (I.length() < static_cast<TimeStep>(n))
    raise(Errc::interval_too_short, "need at least n = " + std::to_string(n) +
                                        " steps, interval has " + std::to_string(I.length()));
  if (X.count() < 2) raise(Errc::x_too_small, "need at least two vertices in X");
  if (dmax_sum == 0)
    raise(Errc::not_always_connected, "edgeless horizon cannot be always-connected");

  const CoverParams params = cover_params(X.count(), Rational{dmax_sum, n});
  if (params.m == 0) return TemporalWalk::stationary(I.lo, *X.first());
  return detail::cover_chain(g, I, X, params.m, params.k, dmax_sum);
}

namespace {

// trims trailing steps once every vertex has been seen
void trim_to_completion(TemporalWalk& walk, std::uint32_t n) {
  VertexSet seen(n);
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < walk.vertices.size(); ++j) {
    const VertexId v = walk.vertices[j];
    if (!seen.test(v)) {
      seen.set(v);
      if (++count == n) {
        walk.vertices.resize(j + 1);
        return;
      }
    }
  }
}

}  // namespace

ExplorationReport explore(const TemporalGraph& g, VertexId start) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t n = g.vertex_count();
  const TimeStep horizon = g.horizon();
  if (start >= n) raise(Errc::start_out_of_range, "start vertex " + std::to_string(start));

  ExplorationReport report;
  report.n = n;
  report.horizon = horizon;
  report.walk = TemporalWalk::stationary(1, start);

  if (n == 1) {
    report.D = Rational{0, 1};
    report.bound = 0;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

  if (horizon < 1)
    raise(Errc::horizon_exhausted,
          "horizon 0; need at least " + std::to_string(theorem_bound(n, Rational{1, 1})),
          theorem_bound(n, Rational{1, 1}));
  const DegreeProfile profile = degree_profile(g, {1, horizon});
  if (profile.sum == 0)
    raise(Errc::not_always_connected, "edgeless horizon cannot be always-connected");
  report.D = profile.average();
  report.bound = theorem_bound(n, report.D);
  // a horizon below the bound is tolerated as long as exploration happens to
  // finish in time; phases that no longer fit raise HorizonExhausted below

  VertexSet remaining = VertexSet::full(n);
  remaining.reset(start);

  const TimeStep N = static_cast<TimeStep>(n);
  for (std::int64_t i = 0; !remaining.empty(); ++i) {
    const TimeStep phase_lo = 2 * i * N + 1;
    if (phase_lo + 2 * N - 2 > horizon)
      raise(Errc::horizon_exhausted,
            "phase " + std::to_string(i) + " does not fit horizon " + std::to_string(horizon) +
                "; a horizon of " + std::to_string(report.bound) + " is always sufficient",
            report.bound);

    PhasePlan plan;
    plan.index = i;
    plan.travel = {phase_lo, phase_lo + N - 2};
    plan.cover = {phase_lo + N - 1, phase_lo + 2 * N - 2};
    plan.remaining = remaining;

    if (remaining.count() <= 2) {
      plan.action = PhaseAction::final_two;
      // two point-to-point hops of n-1 steps each inside this phase
      const TimeInterval hop_windows[2] = {{phase_lo, phase_lo + N - 2},
                                           {phase_lo + N - 1, phase_lo + 2 * N - 3}};
      int hop = 0;
      while (!remaining.empty()) {
        const VertexId target = *remaining.first();
        const TemporalWalk leg =
            reach::universal_walk(g, report.walk.last_vertex(), target, hop_windows[hop++]);
        report.walk = concat(report.walk, leg);
        remaining.subtract(leg.covered(n));
      }
    } else {
      plan.action = PhaseAction::cover_many;
      const TemporalWalk cover = cover_many(g, plan.cover, remaining, profile.sum);
      const TemporalWalk travel =
          reach::universal_walk(g, report.walk.last_vertex(), cover.first_vertex(), plan.travel);
      report.walk = concat(concat(report.walk, travel), cover);
      remaining.subtract(travel.covered(n));
      remaining.subtract(cover.covered(n));
    }
    report.phases.push_back(std::move(plan));
  }

  PhasePlan done;
  done.index = static_cast<std::int64_t>(report.phases.size());
  done.remaining = remaining;
  done.action = PhaseAction::done;
  report.phases.push_back(std::move(done));

  trim_to_completion(report.walk, n);
  if (report.walk.span() > report.bound)
    throw std::logic_error("exploration spans " + std::to_string(report.walk.span()) +
                           " steps, above the guaranteed " + std::to_string(report.bound));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

ExplorationReport greedy_explore(const TemporalGraph& g, VertexId start) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t n = g.vertex_count();
  if (start >= n) raise(Errc::start_out_of_range, "start vertex " + std::to_string(start));

  ExplorationReport report;
  report.n = n;
  report.horizon = g.horizon();
  report.walk = TemporalWalk::stationary(1, start);

  VertexSet visited(n);
  visited.set(start);
  std::uint64_t visited_count = 1;

  while (visited_count < n) {
    reach::ForwardScanner scan(g, report.walk.last_vertex(), report.walk.end_time());
    std::optional<VertexId> target;
    while (!target) {
      if (scan.next_time() > g.horizon())
        raise(Errc::horizon_exhausted, std::to_string(n - visited_count) +
                                           " vertices left unvisited at the horizon");
      scan.step();
      VertexSet fresh = scan.layer();
      fresh.subtract(visited);
      if (const std::optional<VertexId> v = fresh.first()) target = v;
    }
    const TemporalWalk leg = scan.walk_to(*target);
    report.walk = concat(report.walk, leg);
    visited |= leg.covered(n);
    visited_count = visited.count();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace tempex::explorer
