#include <doctest.h>

#include "fixtures.hpp"
#include "tempex/oracle.hpp"
#include "tempex/reachability.hpp"
#include "tempex/validator.hpp"

using namespace tempex;
using reach::backward_trace;
using reach::extract_walk;
using reach::forward_trace;
using reach::multi_forward_final;
using reach::universal_walk;

TEST_CASE("forward layers on the shared fixture") {
  const TemporalGraph g = fixtures::ex1();
  const reach::ReachTrace trace = forward_trace(g, 0, {1, 3});
  CHECK(trace.layer_after(0) == VertexSet::of(4, {0}));
  CHECK(trace.layer_after(1) == VertexSet::of(4, {0, 1}));
  CHECK(trace.layer_after(2) == VertexSet::of(4, {0, 1, 3}));
  CHECK(trace.layer_after(3) == VertexSet::of(4, {0, 1, 2, 3}));
  CHECK(trace.final_layer() == VertexSet::of(4, {0, 1, 2, 3}));
}

TEST_CASE("backward layers on the shared fixture") {
  const TemporalGraph g = fixtures::ex1();
  const reach::ReachTrace trace = backward_trace(g, 3, {1, 3});
  CHECK(trace.layer_from(4) == VertexSet::of(4, {3}));
  CHECK(trace.layer_from(3) == VertexSet::of(4, {2, 3}));
  CHECK(trace.layer_from(2) == VertexSet::of(4, {0, 2, 3}));
  CHECK(trace.layer_from(1) == VertexSet::of(4, {0, 1, 2, 3}));
}

TEST_CASE("base cases") {
  const TemporalGraph g = fixtures::ex1();
  // empty expansion: layer at lo-1 is {u}
  const reach::ReachTrace empty = forward_trace(g, 2, {1, 0});
  CHECK(empty.layers.size() == 1);
  CHECK(empty.final_layer() == VertexSet::of(4, {2}));

  const TemporalGraph still = build(3, 3, {{}, {}, {}});
  const reach::ReachTrace t = forward_trace(still, 1, {1, 3});
  for (const VertexSet& layer : t.layers) CHECK(layer == VertexSet::of(3, {1}));
}

TEST_CASE("layers are monotone") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TemporalGraph g = fixtures::random_instance(5, 5, seed);
    for (VertexId u = 0; u < 5; ++u) {
      const reach::ReachTrace f = forward_trace(g, u, {1, 5});
      for (std::size_t i = 0; i + 1 < f.layers.size(); ++i)
        CHECK(f.layers[i].is_subset_of(f.layers[i + 1]));
      const reach::ReachTrace b = backward_trace(g, u, {1, 5});
      for (std::size_t i = 0; i + 1 < b.layers.size(); ++i)
        CHECK(b.layers[i].is_subset_of(b.layers[i + 1]));
    }
  }
}

TEST_CASE("forward_trace agrees with the enumeration oracle") {
  // sweep of small instances plus the shared fixture
  std::vector<TemporalGraph> sweep;
  sweep.push_back(fixtures::ex1());
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    sweep.push_back(fixtures::random_instance(2 + seed % 3, 1 + seed % 3, seed));
  // a few cases at the enumeration oracle's size cap
  for (std::uint64_t seed = 50; seed < 54; ++seed)
    sweep.push_back(fixtures::random_instance(6, 6, seed));
  for (const TemporalGraph& g : sweep) {
    const TimeInterval I{1, g.horizon()};
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      CHECK(forward_trace(g, u, I).final_layer() == oracle::naive_forward_set(g, u, I));
  }
}

TEST_CASE("forward/backward duality") {
  const TemporalGraph g = fixtures::ex1();
  for (VertexId u = 0; u < 4; ++u) {
    const reach::ReachTrace f = forward_trace(g, u, {1, 3});
    for (VertexId v = 0; v < 4; ++v) {
      const reach::ReachTrace b = backward_trace(g, v, {1, 3});
      CHECK(f.final_layer().test(v) == b.final_layer().test(u));
    }
  }
}

TEST_CASE("extract_walk produces deterministic valid witnesses") {
  const TemporalGraph g = fixtures::ex1();
  const reach::ReachTrace trace = forward_trace(g, 0, {1, 3});

  const TemporalWalk w = extract_walk(trace, 2);
  CHECK(validate::check_walk(g, w).ok);
  CHECK(w.start == 1);
  CHECK(w.last_vertex() == 2);
  CHECK(w.span() <= 3);

  CHECK(extract_walk(trace, 0) == TemporalWalk::stationary(1, 0));

  const reach::ReachTrace short_trace = forward_trace(g, 0, {1, 1});
  CHECK_THROWS_WITH_AS(extract_walk(short_trace, 2), doctest::Contains("Unreachable"), Error);

  CHECK_THROWS_AS(extract_walk(backward_trace(g, 0, {1, 3}), 2), std::logic_error);
}

TEST_CASE("every witness passes the walk checker") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TemporalGraph g = fixtures::random_instance(5, 5, seed);
    for (VertexId u = 0; u < 5; ++u) {
      const reach::ReachTrace trace = forward_trace(g, u, {1, 5});
      trace.final_layer().for_each([&](VertexId v) {
        const TemporalWalk w = extract_walk(trace, v);
        CHECK(validate::check_walk(g, w).ok);
        CHECK(w.last_vertex() == v);
      });
    }
  }
}

TEST_CASE("universal_walk on the shared fixture") {
  const TemporalGraph g = fixtures::ex1();
  const TemporalWalk w = universal_walk(g, 0, 2, {1, 3});
  CHECK(validate::check_walk(g, w).ok);
  CHECK(w.first_vertex() == 0);
  CHECK(w.last_vertex() == 2);
  CHECK(w.span() <= 3);
}

TEST_CASE("universal_walk edge cases") {
  const TemporalGraph g = fixtures::ex1();
  CHECK(universal_walk(g, 1, 1, {2, 3}) == TemporalWalk::stationary(2, 1));

  // n = 2 always-connected forces the edge
  const TemporalGraph two = build(2, 5, {{{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}});
  const TemporalWalk hop = universal_walk(two, 0, 1, {5, 5});
  CHECK(hop == TemporalWalk{5, {0, 1}});

  CHECK_THROWS_WITH_AS(universal_walk(g, 0, 2, {1, 2}), doctest::Contains("IntervalTooShort"),
                       Error);
  const TemporalGraph still = build(2, 3, {{}, {}, {}});
  CHECK_THROWS_WITH_AS(universal_walk(still, 0, 1, {1, 3}),
                       doctest::Contains("NotAlwaysConnected"), Error);
}

TEST_CASE("reach growth on always-connected instances") {
  // |F(u, lo+s-1)| >= min(n, s+1) whenever every snapshot is connected
  const TemporalGraph g = fixtures::ex1_periodic(12);
  const std::uint32_t n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    const reach::ReachTrace trace = forward_trace(g, u, {1, 12});
    for (std::size_t s = 0; s < trace.layers.size(); ++s)
      CHECK(trace.layers[s].count() >= std::min<std::uint64_t>(n, s + 1));
  }
}

TEST_CASE("multi_forward_final matches per-source traces") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TemporalGraph g = fixtures::random_instance(6, 5, seed);
    std::vector<VertexId> sources;
    for (VertexId v = 0; v < 6; ++v)
      if ((seed + v) % 2 == 0) sources.push_back(v);
    if (sources.empty()) sources.push_back(0);

    const std::vector<VertexSet> finals = multi_forward_final(g, sources, {1, 5});
    REQUIRE(finals.size() == sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i)
      CHECK(finals[i] == forward_trace(g, sources[i], {1, 5}).final_layer());
  }
}

TEST_CASE("multi_forward_final with no sources") {
  const TemporalGraph g = fixtures::ex1();
  CHECK(multi_forward_final(g, {}, {1, 3}).empty());
}

TEST_CASE("multi_forward_final handles more sources than one word") {
  const TemporalGraph g = fixtures::static_path(70, 3);
  std::vector<VertexId> sources(70);
  for (VertexId v = 0; v < 70; ++v) sources[v] = v;
  const std::vector<VertexSet> finals = multi_forward_final(g, sources, {1, 3});
  for (VertexId v = 0; v < 70; ++v)
    CHECK(finals[v] == forward_trace(g, v, {1, 3}).final_layer());
}
