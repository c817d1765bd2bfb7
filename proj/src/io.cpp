#include "tempex/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tempex/generators.hpp"

namespace tempex::io {

namespace {

struct LineReader {
  explicit LineReader(std::string_view t) : text(t) {}

  std::string_view text;
  std::size_t pos = 0;
  std::int64_t line_no = 0;
  std::string_view line;

  bool next() {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    return true;
  }
};

[[noreturn]] void fail(const LineReader& in, const std::string& msg) {
  raise(Errc::parse_error, "line " + std::to_string(in.line_no) + ": " + msg, in.line_no);
}

template <class Int>
Int parse_int(const LineReader& in, std::string_view s) {
  Int value{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail(in, "expected an integer, got '" + std::string(s) + "'");
  return value;
}

std::string_view expect_prefix(const LineReader& in, std::string_view prefix) {
  if (in.line.substr(0, prefix.size()) != prefix)
    fail(in, "expected '" + std::string(prefix) + "...', got '" + std::string(in.line) + "'");
  return in.line.substr(prefix.size());
}

}  // namespace

TemporalGraph parse_instance(std::string_view text) {
  LineReader in(text);

  if (!in.next()) fail(in, "empty file");
  if (in.line.substr(0, 4) != "tgf ") fail(in, "not a tgf file");
  if (in.line != "tgf 1")
    raise(Errc::version_mismatch, "unsupported format version '" + std::string(in.line) + "'",
          in.line_no);

  if (!in.next()) fail(in, "missing 'n' line");
  const std::uint32_t n = parse_int<std::uint32_t>(in, expect_prefix(in, "n "));
  if (n < 1) fail(in, "n must be at least 1");
  if (!in.next()) fail(in, "missing 'T' line");
  const TimeStep horizon = parse_int<TimeStep>(in, expect_prefix(in, "T "));
  if (horizon < 0) fail(in, "T must be nonnegative");

  std::string gen_spec;
  std::optional<std::uint64_t> gen_seed;
  bool have_more = in.next();
  if (have_more && in.line.substr(0, 4) == "gen ") {
    std::string rest(in.line.substr(4));
    const std::size_t seed_at = rest.rfind(" seed ");
    if (seed_at != std::string::npos) {
      gen_seed = parse_int<std::uint64_t>(in, std::string_view(rest).substr(seed_at + 6));
      rest.resize(seed_at);
    }
    gen_spec = rest;
    have_more = in.next();
  }

  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(horizon));
  bool have_body = false;
  while (have_more) {
    if (in.line.empty()) {
      have_more = in.next();
      continue;
    }
    const TimeStep t = parse_int<TimeStep>(in, expect_prefix(in, "snapshot "));
    if (t < 1 || t > horizon)
      fail(in, "snapshot index " + std::to_string(t) + " outside [1," + std::to_string(horizon) +
                   "]");
    have_body = true;
    std::vector<Edge>& edges = snapshots[static_cast<std::size_t>(t - 1)];
    bool closed = false;
    while (in.next()) {
      if (in.line == "end") {
        closed = true;
        break;
      }
      std::istringstream pair{std::string(in.line)};
      std::int64_t a = -1, b = -1;
      pair >> a >> b;
      std::string leftover;
      if (pair.fail() || (pair >> leftover, !leftover.empty()))
        fail(in, "expected 'u v', got '" + std::string(in.line) + "'");
      if (a < 0 || b < 0) fail(in, "negative vertex id");
      edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    }
    if (!closed) fail(in, "snapshot block without 'end'");
    have_more = in.next();
  }

  if (!gen_spec.empty() && have_body) {
    std::cerr << "warning: instance has both a gen line and snapshot blocks; using the body\n";
    gen_spec.clear();
  }

  if (!gen_spec.empty()) {
    TemporalGraph g = gen::from_spec(gen_spec, gen_seed);
    if (g.vertex_count() != n || g.horizon() != horizon)
      raise(Errc::parse_error,
            "header says n=" + std::to_string(n) + " T=" + std::to_string(horizon) +
                " but the generator spec implies n=" + std::to_string(g.vertex_count()) +
                " T=" + std::to_string(g.horizon()));
    return g;
  }
  return build(n, horizon, std::move(snapshots));
}

std::string write_instance(const TemporalGraph& g) {
  std::ostringstream os;
  os << "tgf 1\n";
  os << "n " << g.vertex_count() << "\n";
  os << "T " << g.horizon() << "\n";
  if (g.is_procedural()) {
    os << "gen " << g.gen_spec();
    if (g.gen_seed()) os << " seed " << *g.gen_seed();
    os << "\n";
    return os.str();
  }
  for_each_snapshot(g, {1, g.horizon()}, [&](TimeStep t, std::span<const Edge> es) {
    os << "snapshot " << t << "\n";
    for (const Edge& e : es) os << e.a << " " << e.b << "\n";
    os << "end\n";
  });
  return os.str();
}

TemporalWalk parse_walk(std::string_view text) {
  LineReader in(text);
  if (!in.next()) fail(in, "empty file");
  if (in.line.substr(0, 5) != "walk ") fail(in, "not a walk file");
  if (in.line != "walk 1")
    raise(Errc::version_mismatch, "unsupported format version '" + std::string(in.line) + "'",
          in.line_no);
  if (!in.next()) fail(in, "missing 'start' line");
  TemporalWalk walk;
  walk.start = parse_int<TimeStep>(in, expect_prefix(in, "start "));
  while (in.next()) {
    if (in.line.empty()) continue;
    walk.vertices.push_back(parse_int<VertexId>(in, in.line));
  }
  if (walk.vertices.empty()) fail(in, "walk has no vertices");
  return walk;
}

std::string write_walk(const TemporalWalk& walk) {
  std::ostringstream os;
  os << "walk 1\n";
  os << "start " << walk.start << "\n";
  for (VertexId v : walk.vertices) os << v << "\n";
  return os.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::parse_error, "cannot open " + path + " for writing");
  out << content;
}

}  // namespace

TemporalGraph load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void save_instance(const TemporalGraph& g, const std::string& path) {
  write_file(path, write_instance(g));
}

TemporalWalk load_walk(const std::string& path) { return parse_walk(read_file(path)); }

void save_walk(const TemporalWalk& walk, const std::string& path) {
  write_file(path, write_walk(walk));
}

}  // namespace tempex::io
