#include <doctest.h>

#include <set>

#include "tempex/rng.hpp"
#include "tempex/vertex_set.hpp"

using namespace tempex;

TEST_CASE("basic membership and counting") {
  VertexSet s(10);
  CHECK(s.count() == 0);
  CHECK(s.empty());
  s.set(3);
  s.set(7);
  s.set(3);
  CHECK(s.count() == 2);
  CHECK(s.test(3));
  CHECK(!s.test(4));
  s.reset(3);
  CHECK(!s.test(3));
  CHECK(s.first() == 7u);
  s.clear();
  CHECK(!s.first());
}

TEST_CASE("full universe masks tail bits") {
  for (std::uint32_t n : {1u, 63u, 64u, 65u, 70u, 128u, 129u}) {
    const VertexSet s = VertexSet::full(n);
    CHECK(s.count() == n);
    CHECK(s == VertexSet::full(n));
  }
}

TEST_CASE("iteration is ascending") {
  const VertexSet s = VertexSet::of(200, {199, 0, 64, 63, 65, 128});
  const std::vector<std::uint32_t> got = s.to_vector();
  CHECK(got == std::vector<std::uint32_t>{0, 63, 64, 65, 128, 199});
}

TEST_CASE("set algebra agrees with std::set") {
  SplitMix64 rng(7);
  for (std::uint32_t n : {5u, 64u, 100u, 193u}) {
    for (int rep = 0; rep < 20; ++rep) {
      VertexSet a(n), b(n);
      std::set<std::uint32_t> ra, rb;
      for (std::uint32_t i = 0; i < n / 2 + 1; ++i) {
        const std::uint32_t va = static_cast<std::uint32_t>(rng.below(n));
        const std::uint32_t vb = static_cast<std::uint32_t>(rng.below(n));
        a.set(va);
        ra.insert(va);
        b.set(vb);
        rb.insert(vb);
      }

      std::set<std::uint32_t> r_union = ra, r_inter, r_diff;
      r_union.insert(rb.begin(), rb.end());
      for (std::uint32_t v : ra) {
        if (rb.count(v)) r_inter.insert(v);
        if (!rb.count(v)) r_diff.insert(v);
      }

      VertexSet u = a;
      u |= b;
      VertexSet i = a;
      i &= b;
      VertexSet d = a;
      d.subtract(b);

      CHECK(u.count() == r_union.size());
      CHECK(i.count() == r_inter.size());
      CHECK(d.count() == r_diff.size());
      CHECK(a.count_and(b) == r_inter.size());
      CHECK(a.intersects(b) == !r_inter.empty());
      CHECK(i.is_subset_of(a));
      CHECK(i.is_subset_of(b));
      CHECK(a.is_subset_of(u));
      const std::vector<std::uint32_t> uv = u.to_vector();
      CHECK(std::set<std::uint32_t>(uv.begin(), uv.end()) == r_union);
    }
  }
}
