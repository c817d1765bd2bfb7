#include "tempex/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "tempex/explorer.hpp"
#include "tempex/rng.hpp"

namespace tempex::gen {

namespace {

// canonical (a, b) order without a comparison sort: bucket by the smaller
// endpoint, then insertion-sort the short buckets by the larger one.
// Generators emit once per snapshot over horizons in the millions, so the
// scratch buffers are thread-local rather than reallocated per call.
void canonical_order(std::vector<Edge>& edges, std::uint32_t n) {
  thread_local std::vector<std::uint32_t> start_tls, at_tls;
  thread_local std::vector<Edge> tmp_tls;
  start_tls.assign(n + 1, 0);
  tmp_tls.resize(edges.size());
  std::uint32_t* start = start_tls.data();
  Edge* tmp = tmp_tls.data();
  for (const Edge& e : edges) ++start[e.a + 1];
  for (std::uint32_t v = 0; v < n; ++v) start[v + 1] += start[v];
  at_tls.assign(start, start + n);
  std::uint32_t* at = at_tls.data();
  for (const Edge& e : edges) tmp[at[e.a]++] = e;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t i = start[v] + 1; i < start[v + 1]; ++i) {
      const Edge e = tmp[i];
      std::uint32_t j = i;
      while (j > start[v] && tmp[j - 1].b > e.b) {
        tmp[j] = tmp[j - 1];
        --j;
      }
      tmp[j] = e;
    }
  edges.swap(tmp_tls);
}

class GridLeavesSource final : public SnapshotSource {
 public:
  explicit GridLeavesSource(GridLeavesSpec spec) : spec_(spec) {}

  void emit(TimeStep t, std::vector<Edge>& out) const override {
    const std::int64_t rows = spec_.rows, cols = spec_.cols, hang = spec_.deg - 4;
    auto grid = [&](std::int64_t r, std::int64_t c) {
      return static_cast<VertexId>((r - 1) * cols + (c - 1));
    };
    for (std::int64_t r = 1; r <= rows; ++r)
      for (std::int64_t c = 1; c <= cols; ++c) {
        if (c < cols) out.push_back({grid(r, c), grid(r, c + 1)});
        if (r < rows) out.push_back({grid(r, c), grid(r + 1, c)});
      }
    const VertexId leaf_base = static_cast<VertexId>(rows * cols);
    for (std::int64_t c = 1; c <= cols; ++c)
      for (std::int64_t i = 0; i < hang; ++i)
        out.push_back(make_edge(grid(t, c), leaf_base + static_cast<VertexId>((c - 1) * hang + i)));
    std::sort(out.begin(), out.end());
  }

 private:
  GridLeavesSpec spec_;
};

class RandomTreesSource final : public SnapshotSource {
 public:
  RandomTreesSource(std::uint32_t n, TreeKind kind, std::uint64_t seed)
      : n_(n), kind_(kind), seed_(seed) {}

  void emit(TimeStep t, std::vector<Edge>& out) const override {
    if (n_ < 2) return;
    SplitMix64 rng = snapshot_stream(seed_, t);
    switch (kind_) {
      case TreeKind::uniform_spanning_tree: {
        // Wilson's algorithm on the complete graph: loop-erased random
        // walks from each vertex not yet in the tree
        thread_local std::vector<std::uint8_t> in_tree_tls;
        thread_local std::vector<VertexId> successor_tls;
        in_tree_tls.assign(n_, 0);
        successor_tls.resize(n_);
        std::uint8_t* in_tree = in_tree_tls.data();
        VertexId* successor = successor_tls.data();
        in_tree[0] = 1;
        for (VertexId i = 1; i < n_; ++i) {
          if (in_tree[i]) continue;
          VertexId u = i;
          while (!in_tree[u]) {
            const std::uint64_t r = rng.below(n_ - 1);
            const VertexId v = static_cast<VertexId>(r) + (r >= u ? 1 : 0);
            successor[u] = v;  // revisits overwrite: loop erasure
            u = v;
          }
          u = i;
          while (!in_tree[u]) {
            in_tree[u] = 1;
            out.push_back(make_edge(u, successor[u]));
            u = successor[u];
          }
        }
        break;
      }
      case TreeKind::random_star: {
        // ascending emission is already canonical for a star
        const VertexId center = static_cast<VertexId>(rng.below(n_));
        const std::size_t base = out.size();
        out.resize(base + n_ - 1);
        for (VertexId v = 0; v < center; ++v) out[base + v] = {v, center};
        for (VertexId v = center + 1; v < n_; ++v) out[base + v - 1] = {center, v};
        return;
      }
      case TreeKind::random_path: {
        thread_local std::vector<VertexId> perm_tls;
        perm_tls.resize(n_);
        VertexId* perm = perm_tls.data();
        for (VertexId v = 0; v < n_; ++v) perm[v] = v;
        for (VertexId i = n_ - 1; i > 0; --i) {
          const std::uint64_t j = rng.below(i + 1);
          std::swap(perm[i], perm[static_cast<VertexId>(j)]);
        }
        for (VertexId i = 0; i + 1 < n_; ++i) out.push_back(make_edge(perm[i], perm[i + 1]));
        break;
      }
    }
    canonical_order(out, n_);
  }

 private:
  std::uint32_t n_;
  TreeKind kind_;
  std::uint64_t seed_;
};

class RotatingStarSource final : public SnapshotSource {
 public:
  explicit RotatingStarSource(std::uint32_t n) : n_(n) {}

  void emit(TimeStep t, std::vector<Edge>& out) const override {
    const VertexId center = static_cast<VertexId>(t % n_);
    const std::size_t base = out.size();
    out.resize(base + n_ - 1);
    for (VertexId v = 0; v < center; ++v) out[base + v] = {v, center};
    for (VertexId v = center + 1; v < n_; ++v) out[base + v - 1] = {center, v};
  }

 private:
  std::uint32_t n_;
};

class BoundedDegreeSource final : public SnapshotSource {
 public:
  BoundedDegreeSource(std::uint32_t n, std::uint32_t d, std::uint64_t seed)
      : n_(n), d_(d), seed_(seed) {}

  void emit(TimeStep t, std::vector<Edge>& out) const override {
    SplitMix64 rng = snapshot_stream(seed_, t);
    thread_local std::vector<VertexId> perm_tls, adj_tls;
    thread_local std::vector<std::uint32_t> deg_tls;
    perm_tls.resize(n_);
    deg_tls.assign(n_, 0);
    adj_tls.resize(static_cast<std::size_t>(n_) * d_);  // deg[v] entries valid per vertex
    VertexId* perm = perm_tls.data();
    VertexId* adj = adj_tls.data();
    std::uint32_t* deg = deg_tls.data();
    for (VertexId v = 0; v < n_; ++v) perm[v] = v;
    for (VertexId i = n_ - 1; i > 0; --i) {
      const std::uint64_t j = rng.below(i + 1);
      std::swap(perm[i], perm[static_cast<VertexId>(j)]);
    }
    auto connect = [&](VertexId a, VertexId b) {
      adj[a * d_ + deg[a]++] = b;
      adj[b * d_ + deg[b]++] = a;
      out.push_back(a < b ? Edge{a, b} : Edge{b, a});
    };
    for (VertexId i = 0; i + 1 < n_; ++i) connect(perm[i], perm[i + 1]);

    for (std::uint32_t attempt = 0; attempt < n_ / 2; ++attempt) {
      const VertexId a = static_cast<VertexId>(rng.below(n_));
      const VertexId b = static_cast<VertexId>(rng.below(n_));
      // keep degrees strictly below the cap; fold the cheap rejects into one test
      if (static_cast<std::uint32_t>(a == b) | (deg[a] + 1 >= d_) | (deg[b] + 1 >= d_)) continue;
      bool present = false;
      const VertexId* row = adj + a * d_;
      for (std::uint32_t i = 0; i < deg[a]; ++i) present = present | (row[i] == b);
      if (present) continue;
      connect(a, b);
    }
    canonical_order(out, n_);
  }

 private:
  std::uint32_t n_;
  std::uint32_t d_;
  std::uint64_t seed_;
};

std::string spec_grid_leaves(const GridLeavesSpec& s) {
  std::ostringstream os;
  os << "grid-leaves rows=" << s.rows << " cols=" << s.cols << " deg=" << s.deg;
  return os.str();
}

}  // namespace

const char* tree_kind_name(TreeKind kind) {
  switch (kind) {
    case TreeKind::uniform_spanning_tree: return "uniform-spanning-tree";
    case TreeKind::random_star: return "random-star";
    case TreeKind::random_path: return "random-path";
  }
  return "?";
}

std::optional<TreeKind> tree_kind_from_name(std::string_view name) {
  if (name == "uniform-spanning-tree") return TreeKind::uniform_spanning_tree;
  if (name == "random-star") return TreeKind::random_star;
  if (name == "random-path") return TreeKind::random_path;
  return std::nullopt;
}

std::pair<TemporalGraph, VertexSet> gen_grid_leaves(const GridLeavesSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.deg < 5)
    raise(Errc::bad_spec, "grid-leaves needs rows >= 1, cols >= 1, deg >= 5");
  TemporalGraph g = TemporalGraph::from_source(spec.vertex_count(), spec.horizon(),
                                               std::make_shared<GridLeavesSource>(spec),
                                               spec_grid_leaves(spec));
  VertexSet leaves(spec.vertex_count());
  for (std::uint32_t v = static_cast<std::uint32_t>(spec.rows * spec.cols);
       v < spec.vertex_count(); ++v)
    leaves.set(v);
  return {std::move(g), std::move(leaves)};
}

TemporalGraph gen_random_trees(std::uint32_t n, TimeStep horizon, TreeKind kind,
                               std::uint64_t seed) {
  if (n < 1 || horizon < 0) raise(Errc::bad_spec, "random-trees needs n >= 1, T >= 0");
  std::ostringstream os;
  os << "random-trees kind=" << tree_kind_name(kind) << " n=" << n << " T=" << horizon;
  return TemporalGraph::from_source(n, horizon, std::make_shared<RandomTreesSource>(n, kind, seed),
                                    os.str(), seed);
}

TemporalGraph gen_rotating_star(std::uint32_t n, TimeStep horizon) {
  if (n < 2 || horizon < 0) raise(Errc::bad_spec, "rotating-star needs n >= 2, T >= 0");
  std::ostringstream os;
  os << "rotating-star n=" << n << " T=" << horizon;
  return TemporalGraph::from_source(n, horizon, std::make_shared<RotatingStarSource>(n), os.str());
}

TemporalGraph gen_bounded_degree(std::uint32_t n, TimeStep horizon, std::uint32_t d,
                                 std::uint64_t seed) {
  if (n < 2 || d < 2 || horizon < 0) raise(Errc::bad_spec, "bounded-degree needs n >= 2, d >= 2");
  std::ostringstream os;
  os << "bounded-degree n=" << n << " T=" << horizon << " d=" << d;
  return TemporalGraph::from_source(n, horizon,
                                    std::make_shared<BoundedDegreeSource>(n, d, seed), os.str(),
                                    seed);
}

TimeStep required_horizon(std::uint32_t n, Rational D_upper) {
  return explorer::theorem_bound(n, D_upper);
}

namespace {

std::map<std::string, std::string> parse_kv(std::istringstream& in) {
  std::map<std::string, std::string> kv;
  std::string token;
  while (in >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
      raise(Errc::bad_spec, "malformed generator parameter '" + token + "'");
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return kv;
}

std::int64_t kv_int(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) raise(Errc::bad_spec, "missing generator parameter '" + key + "'");
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    raise(Errc::bad_spec, "parameter '" + key + "' is not an integer: " + it->second);
  }
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const std::string& family) {
  if (!seed) raise(Errc::bad_spec, family + " requires a seed");
  return *seed;
}

}  // namespace

TemporalGraph from_spec(const std::string& spec, std::optional<std::uint64_t> seed) {
  std::istringstream in(spec);
  std::string family;
  in >> family;
  auto kv = parse_kv(in);

  if (family == "grid-leaves") {
    GridLeavesSpec s{kv_int(kv, "rows"), kv_int(kv, "cols"), kv_int(kv, "deg")};
    return gen_grid_leaves(s).first;
  }
  if (family == "random-trees") {
    const auto it = kv.find("kind");
    if (it == kv.end()) raise(Errc::bad_spec, "missing generator parameter 'kind'");
    const std::optional<TreeKind> kind = tree_kind_from_name(it->second);
    if (!kind) raise(Errc::bad_spec, "unknown tree kind '" + it->second + "'");
    return gen_random_trees(static_cast<std::uint32_t>(kv_int(kv, "n")), kv_int(kv, "T"), *kind,
                            require_seed(seed, family));
  }
  if (family == "rotating-star")
    return gen_rotating_star(static_cast<std::uint32_t>(kv_int(kv, "n")), kv_int(kv, "T"));
  if (family == "bounded-degree")
    return gen_bounded_degree(static_cast<std::uint32_t>(kv_int(kv, "n")), kv_int(kv, "T"),
                              static_cast<std::uint32_t>(kv_int(kv, "d")),
                              require_seed(seed, family));
  raise(Errc::bad_spec, "unknown generator family '" + family + "'");
}

}  // namespace tempex::gen
