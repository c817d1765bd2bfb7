#include <doctest.h>

#include "fixtures.hpp"
#include "tempex/generators.hpp"
#include "tempex/io.hpp"

using namespace tempex;

namespace {

std::vector<std::vector<Edge>> all_snapshots(const TemporalGraph& g) {
  std::vector<std::vector<Edge>> out;
  for_each_snapshot(g, {1, g.horizon()}, [&](TimeStep, std::span<const Edge> es) {
    out.emplace_back(es.begin(), es.end());
  });
  return out;
}

}  // namespace

TEST_CASE("golden instance file for the shared fixture") {
  const std::string expected =
      "tgf 1\n"
      "n 4\n"
      "T 3\n"
      "snapshot 1\n"
      "0 1\n"
      "1 2\n"
      "2 3\n"
      "end\n"
      "snapshot 2\n"
      "0 1\n"
      "0 3\n"
      "2 3\n"
      "end\n"
      "snapshot 3\n"
      "0 2\n"
      "1 2\n"
      "2 3\n"
      "end\n";
  CHECK(io::write_instance(fixtures::ex1()) == expected);
}

TEST_CASE("write then parse is the identity on canonical form") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const TemporalGraph g = fixtures::random_instance(2 + seed % 5, seed % 6, seed);
    const std::string text = io::write_instance(g);
    const TemporalGraph back = io::parse_instance(text);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.horizon() == g.horizon());
    CHECK(all_snapshots(back) == all_snapshots(g));
    CHECK(io::write_instance(back) == text);
  }
}

TEST_CASE("minimal dense file") {
  const TemporalGraph g = io::parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n0 1\nend\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.horizon() == 1);
  CHECK(all_snapshots(g) == std::vector<std::vector<Edge>>{{{0, 1}}});
}

TEST_CASE("snapshots may be omitted and arrive in any order") {
  const TemporalGraph g =
      io::parse_instance("tgf 1\nn 3\nT 3\nsnapshot 3\n1 2\nend\nsnapshot 1\n0 1\nend\n");
  CHECK(all_snapshots(g) == std::vector<std::vector<Edge>>{{{0, 1}}, {}, {{1, 2}}});
}

TEST_CASE("spec-only files regenerate the instance bit-exactly") {
  const auto [direct, leaves] = gen::gen_grid_leaves({5, 3, 8});
  const std::string text = io::write_instance(direct);
  CHECK(text ==
        "tgf 1\n"
        "n 27\n"
        "T 5\n"
        "gen grid-leaves rows=5 cols=3 deg=8\n");
  const TemporalGraph back = io::parse_instance(text);
  CHECK(all_snapshots(back) == all_snapshots(direct));
  CHECK(io::write_instance(back) == text);

  // seeded family keeps its seed on the gen line
  const TemporalGraph trees = gen::gen_random_trees(6, 4, gen::TreeKind::random_path, 99);
  const std::string trees_text = io::write_instance(trees);
  CHECK(trees_text ==
        "tgf 1\n"
        "n 6\n"
        "T 4\n"
        "gen random-trees kind=random-path n=6 T=4 seed 99\n");
  CHECK(all_snapshots(io::parse_instance(trees_text)) == all_snapshots(trees));
}

TEST_CASE("body wins over a gen line") {
  const TemporalGraph g = io::parse_instance(
      "tgf 1\nn 2\nT 1\ngen rotating-star n=2 T=1\nsnapshot 1\nend\n");
  CHECK(!g.is_procedural());
  CHECK(all_snapshots(g) == std::vector<std::vector<Edge>>{{}});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(io::parse_instance(""), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 0\nT 1\n"), doctest::Contains("at least 1"),
                       Error);
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 2\nT -4\n"),
                       doctest::Contains("nonnegative"), Error);
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 2\nn 1\nT 0\n"),
                       doctest::Contains("VersionMismatch"), Error);
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 2\n"), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n0 x\nend\n"),
                       doctest::Contains("line 5"), Error);
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n0 1\n"),
                       doctest::Contains("without 'end'"), Error);
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 2\nT 2\nsnapshot 3\nend\n"),
                       doctest::Contains("outside"), Error);
  // header disagreeing with the generator spec
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 9\nT 64\ngen rotating-star n=8 T=64\n"),
                       doctest::Contains("implies"), Error);
  // self-loops and bad endpoints are rejected through build
  CHECK_THROWS_WITH_AS(io::parse_instance("tgf 1\nn 2\nT 1\nsnapshot 1\n1 1\nend\n"),
                       doctest::Contains("SelfLoop"), Error);
}

TEST_CASE("walk files round-trip") {
  const TemporalWalk w{3, {0, 1, 1, 2}};
  const std::string text = io::write_walk(w);
  CHECK(text == "walk 1\nstart 3\n0\n1\n1\n2\n");
  CHECK(io::parse_walk(text) == w);

  CHECK_THROWS_WITH_AS(io::parse_walk("walk 2\nstart 1\n0\n"),
                       doctest::Contains("VersionMismatch"), Error);
  CHECK_THROWS_WITH_AS(io::parse_walk("walk 1\nstart 1\n"), doctest::Contains("no vertices"),
                       Error);
  CHECK_THROWS_WITH_AS(io::parse_walk("tgf 1\n"), doctest::Contains("not a walk file"), Error);
}

TEST_CASE("file save and load") {
  const std::string dir = "/tmp/tempex_io_test";
  [[maybe_unused]] const int mk = std::system(("mkdir -p " + dir).c_str());
  const TemporalGraph g = fixtures::ex1();
  io::save_instance(g, dir + "/a.tgf");
  const TemporalGraph back = io::load_instance(dir + "/a.tgf");
  CHECK(all_snapshots(back) == all_snapshots(g));

  const TemporalWalk w{1, {0, 1}};
  io::save_walk(w, dir + "/a.walk");
  CHECK(io::load_walk(dir + "/a.walk") == w);

  CHECK_THROWS_WITH_AS(io::load_instance(dir + "/missing.tgf"), doctest::Contains("cannot open"),
                       Error);
}
