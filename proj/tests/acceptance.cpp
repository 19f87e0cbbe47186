// One line per acceptance criterion; exit status 1 if any is red.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "boxcover/cli.hpp"
#include "boxcover/embedding.hpp"
#include "boxcover/tower.hpp"
#include "oracles.hpp"

using namespace boxcover;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const Tower& tower() {
  static const Tower t = build_tower(3);
  return t;
}

std::size_t unordered_pairs(std::size_t n) { return n * (n - 1) / 2; }

// Metric ball of radius r as a subgraph; a tree iff connected with |E| = |V| - 1.
bool oracle_ball_is_tree(const MultiGraph& g, VertexId centre, std::size_t r) {
  const auto d = oracle::bfs(g, centre);
  std::size_t vertices = 0;
  for (auto x : d) vertices += x <= r;
  std::vector<char> removed(g.edge_count(), 1);
  std::size_t edges = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (d[ed.u] <= r && d[ed.v] <= r && d[ed.u] + d[ed.v] + 1 <= 2 * r) {
      removed[e] = 0;
      ++edges;
    }
  }
  if (edges + 1 != vertices) return false;
  const auto label = oracle::components(g, removed);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (d[v] <= r && label[v] != label[centre]) return false;
  return true;
}

Outcome ac1() {
  Outcome o;
  const auto start = Clock::now();
  const Tower t = build_tower(3);
  const double built = seconds_since(start);
  const std::size_t v[] = {1, 4, 128};
  const std::size_t e[] = {2, 8, 256};
  for (std::size_t n = 0; n < 3; ++n) {
    o.require(t.level(n).graph().vertex_count() == v[n], "vertex count X" + std::to_string(n));
    o.require(t.level(n).graph().edge_count() == e[n], "edge count X" + std::to_string(n));
    if (n > 0) {
      const MultiGraph& prev = t.level(n - 1).graph();
      const std::size_t s = prev.edge_count() - prev.vertex_count() + 1;
      o.require(v[n] == prev.vertex_count() << s, "size recurrence");
    }
  }
  o.require(!t.level(3).is_explicit() && t.level(3).fiber_width() == 129, "X3 fiber width");
  o.require(built < 1.0, "build took " + std::to_string(built) + " s");
  if (o.pass) o.detail = "|V| 1/4/128, |E| 2/8/256, X3 width 129";
  return o;
}

Outcome ac2() {
  Outcome o;
  const ExampleH h = example_h();
  const CoveringGraph cover = z2_cover(h.graph, h.spanning);
  const VertexId a = cover.vertex_id(ExampleH::x, 0);
  const std::size_t g_bit = h.spanning.complement_index.at(ExampleH::g);
  const VertexId b = cover.vertex_id(ExampleH::x, std::uint64_t{1} << g_bit);
  const std::size_t graph = oracle::bfs(cover.total(), a)[b];
  const auto half = oracle::half_spaces(cover);
  const std::size_t wall = oracle::wall_distance(half, a, b);
  const bool e1_separates = half[ExampleH::e1][a] != half[ExampleH::e1][b];

  const Z2Pair pair(h.graph, h.spanning);
  const CoverPoint x{ExampleH::x, cover.fiber_bits(a)};
  const CoverPoint y{ExampleH::x, cover.fiber_bits(b)};
  o.require(graph == 6, "graph distance " + std::to_string(graph));
  o.require(wall == 4, "wall distance " + std::to_string(wall));
  o.require(!e1_separates, "w_e1 separates");
  o.require(pair.wall_distance(x, y) == 4, "library wall distance");
  o.require(pair.graph_distance(x, y, 12) == std::optional<std::size_t>(6),
            "library graph distance");
  o.require(!pair.separates(ExampleH::e1, x, y), "library w_e1");
  if (o.pass) o.detail = "d_G = 6, d_W = 4, w_e1 does not separate";
  return o;
}

Outcome ac3() {
  Outcome o;
  std::size_t walls_checked = 0;
  for (std::size_t n : {1, 2}) {
    const TowerLevel& level = tower().level(n);
    const CoveringGraph& cover = level.cover();
    const WallStructure& walls = level.walls();
    std::vector<int> owner(cover.total().edge_count(), -1);
    for (EdgeId w = 0; w < walls.wall_count(); ++w) {
      std::vector<char> removed(cover.total().edge_count(), 0);
      for (EdgeId c : walls.wall(w)) {
        o.require(owner[c] < 0, "edge in two walls");
        owner[c] = static_cast<int>(w);
        removed[c] = 1;
        o.require(cover.edge_base(c) == w, "wall edge projects elsewhere");
      }
      o.require(oracle::component_count(cover.total(), removed) == 2,
                "wall does not split in two");
      ++walls_checked;
    }
    for (int x : owner) o.require(x >= 0, "edge in no wall");
  }
  if (o.pass) o.detail = std::to_string(walls_checked) + " walls, each splits in 2, partition";
  return o;
}

Outcome ac4() {
  Outcome o;
  const TowerLevel& x2 = tower().level(2);
  const std::size_t g1 = oracle::girth(tower().level(1).graph());
  const auto d = oracle::all_pairs(x2.graph());
  const auto half = oracle::half_spaces(x2.cover());
  std::size_t pairs = 0;
  for (VertexId a = 0; a < 128; ++a)
    for (VertexId b = a + 1; b < 128; ++b) {
      ++pairs;
      const std::size_t dw = x2.distance(a, b, Metric::Wall);
      const std::size_t dg = x2.distance(a, b, Metric::Graph);
      o.require(dw == oracle::wall_distance(half, a, b), "wall distance vs oracle");
      o.require(dg == d[a][b], "graph distance vs oracle");
      o.require(dw <= dg, "d_W > d_G");
      o.require((dw < g1) == (dg < g1), "threshold equivalence");
      if (dw < g1 || dg < g1) o.require(dw == dg, "unequal below girth");
    }
  o.require(pairs == unordered_pairs(128) && pairs == 8128, "pair count");
  if (o.pass) o.detail = "8128 pairs, girth(X1) = " + std::to_string(g1);
  return o;
}

Outcome ac5() {
  Outcome o;
  const TowerLevel& x2 = tower().level(2);
  const Z2Pair& base = x2.below();
  const auto d = oracle::all_pairs(x2.graph());
  const std::size_t cap = x2.diameter(Metric::Graph);
  for (VertexId a = 0; a < 128; ++a)
    for (VertexId b = a; b < 128; ++b) {
      const auto p = base.shortest_admissible_path(x2.point(a), x2.point(b), cap);
      o.require(p.has_value() && p->length() == d[a][b], "state-space length");
      if (p) o.require(base.is_admissible(*p, x2.point(a), x2.point(b)), "not admissible");
    }
  if (o.pass) o.detail = "8256 pairs over base X1, cap " + std::to_string(cap);
  return o;
}

Outcome ac6() {
  Outcome o;
  const TowerLevel& x2 = tower().level(2);
  const Z2Pair& base = x2.below();
  const auto half = oracle::half_spaces(x2.cover());
  const std::size_t cap = x2.diameter(Metric::Graph);
  for (VertexId a = 0; a < 128; ++a)
    for (VertexId b = a; b < 128; ++b) {
      const CoverPoint x = x2.point(a);
      const CoverPoint y = x2.point(b);
      const Bits canon = path_parity(base.base(), base.canonical_admissible_path(x, y));
      const auto p = base.shortest_admissible_path(x, y, cap);
      o.require(p.has_value(), "no shortest path");
      if (!p) continue;
      const Bits shortest = path_parity(base.base(), *p);
      o.require(canon == shortest, "parity vectors differ");
      o.require(canon.count() == oracle::wall_distance(half, a, b), "half-space count");
    }
  if (o.pass) o.detail = "canonical = shortest = half-space count on all pairs";
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto start = Clock::now();
  for (std::size_t n : {1, 2}) {
    const TowerLevel& level = tower().level(n);
    const WallEmbedding e = wall_embedding(level.cover(), level.walls());
    o.require(embedding_check(e), "library check X" + std::to_string(n));
    const auto half = oracle::half_spaces(level.cover());
    const std::size_t size = level.graph().vertex_count();
    for (VertexId a = 0; a < size; ++a)
      for (VertexId b = 0; b < size; ++b) {
        std::size_t sq = 0;
        for (std::size_t w = 0; w < e.dimension(); ++w) {
          const int diff = int{e.coordinates[a][w]} - int{e.coordinates[b][w]};
          sq += static_cast<std::size_t>(diff * diff);
        }
        o.require(sq == oracle::wall_distance(half, a, b), "squared norm vs oracle");
      }
  }
  const double t = seconds_since(start);
  o.require(t < 5.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "X1 and X2, all ordered pairs";
  return o;
}

Outcome ac8() {
  Outcome o;
  const KernelReport r = negative_type_suite(tower(), 42, 1000, Metric::Wall, 2);
  o.require(r.max_value <= kKernelTolerance, "form value " + std::to_string(r.max_value));
  o.require(r.symmetric, "asymmetric");
  o.require(r.normalized, "d(x,x) != 0");
  o.require(r.pass, "suite failed");
  // same probes against oracle distances
  const auto d1 = oracle::half_spaces(tower().level(1).cover());
  const auto d2 = oracle::half_spaces(tower().level(2).cover());
  const std::size_t diam[] = {0, 2, tower().level(2).diameter(Metric::Wall)};
  auto dist = [&](const BoxPoint& p, const BoxPoint& q) -> double {
    if (p.level != q.level) return double(diam[p.level] + diam[q.level] + p.level + q.level);
    if (p.level == 0) return 0.0;
    return double(oracle::wall_distance(p.level == 1 ? d1 : d2, p.vertex, q.vertex));
  };
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = trial_rng(42, i);
    const KernelProbe probe = sample_probe(tower(), 2, rng);
    double sum = 0.0;
    for (std::size_t a = 0; a < probe.points.size(); ++a)
      for (std::size_t b = 0; b < probe.points.size(); ++b)
        sum += probe.lambdas[a] * probe.lambdas[b] * dist(probe.points[a], probe.points[b]);
    o.require(sum <= kKernelTolerance, "oracle form value positive");
  }
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max form value %.3e over 1000 probes", r.max_value);
    o.detail = buf;
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  std::size_t g[3];
  for (std::size_t n = 0; n < 3; ++n) {
    g[n] = oracle::girth(tower().level(n).graph());
    o.require(tower().level(n).girth() == std::optional<std::size_t>(g[n]), "library girth");
  }
  o.require(g[0] == 1 && g[1] == 2 && g[2] > g[1], "girth sequence");
  const std::size_t r = (g[2] - 1) / 2;
  const MultiGraph& x2 = tower().level(2).graph();
  for (VertexId v = 0; v < 128; ++v) {
    o.require(oracle_ball_is_tree(x2, v, r), "oracle ball not a tree");
    o.require(ball_is_tree(x2, v, r), "library ball not a tree");
  }
  o.require(girth_growth_report(tower()).ok(), "girth report");
  if (o.pass)
    o.detail = "girths 1 < 2 < " + std::to_string(g[2]) + ", radius-" + std::to_string(r) +
               " balls are trees";
  return o;
}

Outcome ac10() {
  Outcome o;
  const Tower shadow = build_tower(3, 100);
  o.require(!shadow.level(2).is_explicit(), "X2 not implicit under cap 100");
  const TowerLevel& x2 = tower().level(2);
  const auto d = oracle::all_pairs(x2.graph());
  const auto half = oracle::half_spaces(x2.cover());
  const std::size_t cap = x2.diameter(Metric::Graph);
  for (VertexId a = 0; a < 128; ++a)
    for (VertexId b = a; b < 128; ++b) {
      const CoverPoint x = x2.point(a);
      const CoverPoint y = x2.point(b);
      o.require(shadow.implicit_wall_distance(2, x, y) == oracle::wall_distance(half, a, b),
                "implicit wall distance");
      o.require(shadow.implicit_graph_distance(2, x, y, cap) == std::optional<std::size_t>(d[a][b]),
                "implicit graph distance");
    }
  std::mt19937_64 rng(2024);
  double slowest = 0.0;
  for (int i = 0; i < 100; ++i) {
    CoverPoint x{static_cast<VertexId>(rng() % 128), Bits(129)};
    CoverPoint y{static_cast<VertexId>(rng() % 128), Bits(129)};
    for (std::size_t k = 0; k < 129; ++k) {
      if (rng() & 1) x.fiber.flip(k);
      if (rng() & 1) y.fiber.flip(k);
    }
    const auto start = Clock::now();
    const std::size_t dw = tower().implicit_wall_distance(3, x, y);
    const double t = seconds_since(start);
    slowest = std::max(slowest, t);
    o.require(t < 1.0, "query took " + std::to_string(t) + " s");
    o.require(dw <= 256, "wall distance exceeds |E(X2)|");
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "X2 reproduced; 100 level-3 queries, slowest %.2e s", slowest);
    o.detail = buf;
  }
  return o;
}

Outcome ac11() {
  Outcome o;
  const auto start = Clock::now();
  for (std::size_t n : {1, 2}) {
    const CoveringGraph& cover = tower().level(n).cover();
    o.require(verify_covering(cover), "covering X" + std::to_string(n));
    const std::size_t k = cover.fiber_size();
    o.require(k == (std::size_t{1} << cover.fiber_width()), "fiber size");
    std::vector<GraphMap> decks;
    for (std::uint64_t g = 0; g < k; ++g) {
      decks.push_back(deck_transformation(cover, g));
      const GraphMap& m = decks.back();
      o.require(is_automorphism(cover.total(), m), "deck not an automorphism");
      for (VertexId c = 0; c < cover.total().vertex_count(); ++c) {
        o.require(cover.vertex_base(m.vertex[c]) == cover.vertex_base(c), "deck moves fibers");
        if (g != 0) o.require(m.vertex[c] != c, "deck has a fixed point");
      }
    }
    for (VertexId v = 0; v < cover.base().vertex_count(); ++v) {
      std::set<VertexId> orbit;
      for (const auto& m : decks) orbit.insert(m.vertex[cover.vertex_id(v, 0)]);
      o.require(orbit.size() == k, "not transitive on a fiber");
    }
  }
  o.require(check_transitivity(figure_eight()), "check_transitivity");
  const double t = seconds_since(start);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "X1, X2 covers; 4 + 32 decks free and transitive; X2 -> X0 regular";
  return o;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome ac12() {
  Outcome o;
  const std::vector<std::string> verify = {"verify", "--suite", "all", "--seed", "42"};
  const std::vector<std::string> manifest = {"tower", "--levels", "3"};
  const std::string v1 = cli_output(verify);
  const std::string m1 = cli_output(manifest);
  setenv("BOXCOVER_THREADS", "3", 1);
  const std::string v2 = cli_output(verify);
  const std::string m2 = cli_output(manifest);
  unsetenv("BOXCOVER_THREADS");
  o.require(v1.starts_with("0\n"), "verify did not pass");
  o.require(v1 == v2, "verify reports differ");
  o.require(m1 == m2, "manifests differ");
  if (o.pass) o.detail = "verify report and manifest byte-identical across runs";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 tower sizes", ac1},
      {"AC2 distances in the cover of H", ac2},
      {"AC3 wall lemma", ac3},
      {"AC4 metric comparison", ac4},
      {"AC5 bijection and lifting", ac5},
      {"AC6 parity invariance", ac6},
      {"AC7 embedding identity", ac7},
      {"AC8 negative-type kernel", ac8},
      {"AC9 girth growth", ac9},
      {"AC10 implicit engines", ac10},
      {"AC11 covering, decks, transitivity", ac11},
      {"AC12 determinism", ac12},
  };
  const double limits[] = {1, 0, 5, 10, 30, 30, 5, 10, 10, 0, 60, 0};
  tower();
  bool all = true;
  std::size_t i = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(start);
    if (limits[i] > 0 && t >= limits[i]) {
      o.pass = false;
      o.detail = "time limit exceeded";
    }
    ++i;
    all = all && o.pass;
    std::printf("%s %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), t);
  }
  std::printf("%s\n", all ? "ALL PASS" : "SOME FAILED");
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
