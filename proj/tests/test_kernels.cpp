#include <doctest.h>

#include <string>
#include <vector>

#include "tempex/kernels.hpp"
#include "tempex/rng.hpp"

using namespace tempex;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, SplitMix64& rng) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng.next();
  return w;
}

}  // namespace

TEST_CASE("scalar kernels are always first in the table") {
  const auto& table = kernels::available_ops();
  REQUIRE(!table.empty());
  CHECK(std::string(table.front()->name) == "scalar");
}

TEST_CASE("every available variant matches the scalar reference") {
  const kernels::Ops& ref = kernels::scalar_ops();
  SplitMix64 rng(0xfeedbeef);

  for (const kernels::Ops* ops : kernels::available_ops()) {
    CAPTURE(ops->name);
    for (std::size_t nwords : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 40u}) {
      for (int rep = 0; rep < 8; ++rep) {
        const std::vector<std::uint64_t> a = random_words(nwords, rng);
        std::vector<std::uint64_t> b = random_words(nwords, rng);
        if (rep == 0) b = a;                                // equal arrays
        if (rep == 1) b.assign(nwords, 0);                  // empty set
        if (rep == 2) b.assign(nwords, ~std::uint64_t{0});  // full set

        std::vector<std::uint64_t> r1 = a, r2 = a;
        ref.or_into(r1.data(), b.data(), nwords);
        ops->or_into(r2.data(), b.data(), nwords);
        CHECK(r1 == r2);

        r1 = a, r2 = a;
        ref.and_into(r1.data(), b.data(), nwords);
        ops->and_into(r2.data(), b.data(), nwords);
        CHECK(r1 == r2);

        r1 = a, r2 = a;
        ref.andnot_into(r1.data(), b.data(), nwords);
        ops->andnot_into(r2.data(), b.data(), nwords);
        CHECK(r1 == r2);

        CHECK(ref.popcount(a.data(), nwords) == ops->popcount(a.data(), nwords));
        CHECK(ref.popcount_and(a.data(), b.data(), nwords) ==
              ops->popcount_and(a.data(), b.data(), nwords));
        CHECK(ref.intersects(a.data(), b.data(), nwords) ==
              ops->intersects(a.data(), b.data(), nwords));
        CHECK(ref.equals(a.data(), b.data(), nwords) == ops->equals(a.data(), b.data(), nwords));
        CHECK(ref.is_subset(a.data(), b.data(), nwords) ==
              ops->is_subset(a.data(), b.data(), nwords));
        // a&b is a subset of a; a is a subset of a|b
        std::vector<std::uint64_t> meet = a;
        ref.and_into(meet.data(), b.data(), nwords);
        CHECK(ops->is_subset(meet.data(), a.data(), nwords));
        std::vector<std::uint64_t> join = a;
        ref.or_into(join.data(), b.data(), nwords);
        CHECK(ops->is_subset(a.data(), join.data(), nwords));
      }
    }
  }
}

TEST_CASE("kernel arithmetic identities") {
  const kernels::Ops& ops = kernels::active_ops();
  SplitMix64 rng(42);
  const std::size_t nwords = 9;
  const std::vector<std::uint64_t> a = random_words(nwords, rng);
  const std::vector<std::uint64_t> b = random_words(nwords, rng);

  // |a| = |a&b| + |a&~b|
  std::vector<std::uint64_t> diff = a;
  ops.andnot_into(diff.data(), b.data(), nwords);
  CHECK(ops.popcount(a.data(), nwords) ==
        ops.popcount_and(a.data(), b.data(), nwords) + ops.popcount(diff.data(), nwords));

  CHECK(ops.intersects(a.data(), b.data(), nwords) ==
        (ops.popcount_and(a.data(), b.data(), nwords) > 0));
}
