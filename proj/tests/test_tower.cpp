#include <doctest.h>

#include <chrono>

#include "boxcover/errors.hpp"
#include "boxcover/tower.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace boxcover;

namespace {

const Tower& small_cap_tower() {
  static const Tower t = build_tower(3, 100);  // X2 implicit
  return t;
}

Bits random_fiber(std::mt19937_64& rng, std::size_t width) {
  Bits b(width);
  for (std::size_t i = 0; i < width; ++i) {
    if (rng() & 1) b.set(i);
  }
  return b;
}

// Tree distance between two vertices using only tree edges.
std::size_t tree_distance(const MultiGraph& g, const SpanningData& t, VertexId a, VertexId b) {
  std::vector<std::pair<VertexId, VertexId>> tree;
  for (EdgeId e : t.tree_edges) tree.emplace_back(g.edge(e).u, g.edge(e).v);
  return oracle::bfs(MultiGraph(g.vertex_count(), tree), a)[b];
}

}  // namespace

TEST_SUITE("tower") {

TEST_CASE("sizes") {
  const Tower& t = fixture::tower();
  REQUIRE(t.size() == 4);
  const std::size_t vertices[] = {1, 4, 128};
  const std::size_t edges[] = {2, 8, 256};
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(t.level(n).is_explicit());
    CHECK(t.level(n).graph().vertex_count() == vertices[n]);
    CHECK(t.level(n).graph().edge_count() == edges[n]);
  }
  CHECK_FALSE(t.level(3).is_explicit());
  CHECK(t.level(3).fiber_width() == 129);
  CHECK(t.level(3).vertex_count_text() == "128*2^129");
  CHECK(t.level(3).edge_count_text() == "256*2^129");
  CHECK(t.explicit_count() == 3);

  // size recurrence on every explicit level
  for (std::size_t n = 1; n < 3; ++n) {
    const MultiGraph& prev = t.level(n - 1).graph();
    const std::size_t s = prev.edge_count() - prev.vertex_count() + 1;
    CHECK(t.level(n).fiber_width() == s);
    CHECK(t.level(n).graph().vertex_count() == prev.vertex_count() << s);
    CHECK(t.level(n).graph().edge_count() == prev.edge_count() << s);
    CHECK(verify_covering(t.level(n).cover()));
  }
}

TEST_CASE("tower shapes") {
  const Tower one = build_tower(1);
  CHECK(one.size() == 1);
  CHECK(one.level(0).graph().vertex_count() == 1);
  CHECK_THROWS_AS(build_tower(0), InvalidInput);

  const Tower two = build_tower(2);
  CHECK(two.size() == 2);

  const Tower& capped = small_cap_tower();
  REQUIRE(capped.size() == 3);
  CHECK_FALSE(capped.level(2).is_explicit());
  CHECK(capped.level(2).fiber_width() == 5);
  CHECK(capped.level(2).vertex_count_text() == "4*2^5");
  CHECK_THROWS_AS(build_tower(4, 100), InvalidInput);
  CHECK_THROWS_AS(fixture::tower().level(4), InvalidInput);
}

TEST_CASE("implicit levels refuse explicit queries") {
  const TowerLevel& x3 = fixture::tower().level(3);
  CHECK_THROWS_AS(x3.graph(), UnsupportedOnImplicit);
  CHECK_THROWS_AS(x3.cover(), UnsupportedOnImplicit);
  CHECK_THROWS_AS(x3.walls(), UnsupportedOnImplicit);
  CHECK_THROWS_AS(x3.diameter(Metric::Graph), UnsupportedOnImplicit);
  CHECK_THROWS_AS(x3.girth(), UnsupportedOnImplicit);
  CHECK_THROWS_AS(level_stats(x3), UnsupportedOnImplicit);
  const BoxSpace space{&fixture::tower(), Metric::Graph};
  CHECK_THROWS_AS(box_distance(space, {3, 0}, {3, 0}), UnsupportedOnImplicit);
  CHECK_THROWS_AS(box_distance(space, {1, 0}, {3, 0}), UnsupportedOnImplicit);
}

TEST_CASE("level statistics") {
  const Tower& t = fixture::tower();
  const LevelStats s0 = level_stats(t.level(0));
  CHECK(s0.girth == std::optional<std::size_t>(1));
  CHECK(s0.diameter == 0);
  CHECK(s0.min_degree == 4);
  CHECK(s0.max_degree == 4);

  const LevelStats s1 = level_stats(t.level(1));
  CHECK(s1.girth == std::optional<std::size_t>(2));
  CHECK(s1.diameter == 2);
  CHECK(s1.wall_diameter == 2);

  const LevelStats s2 = level_stats(t.level(2));
  CHECK(*s2.girth > *s1.girth);
  CHECK(*s2.girth == oracle::girth(t.level(2).graph()));
  CHECK(s2.min_degree == 4);
  CHECK(s2.max_degree == 4);

  // diameters and ball profile against Floyd-Warshall
  const auto d = oracle::all_pairs(t.level(2).graph());
  std::size_t diam = 0;
  for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  CHECK(s2.diameter == diam);
  REQUIRE(s2.max_ball_sizes.size() == diam + 1);
  for (std::size_t r = 0; r <= diam; ++r) {
    std::size_t best = 0;
    for (const auto& row : d) {
      best = std::max<std::size_t>(best, std::count_if(row.begin(), row.end(),
                                                       [&](std::size_t x) { return x <= r; }));
    }
    CHECK(s2.max_ball_sizes[r] == best);
  }
  CHECK(s2.max_ball_sizes[1] == 5);  // 4-regular, girth > 2

  std::size_t wall_diam = 0;
  for (VertexId a = 0; a < 128; ++a)
    for (VertexId b = 0; b < 128; ++b)
      wall_diam = std::max(wall_diam, t.level(2).walls().separating_count(a, b));
  CHECK(s2.wall_diameter == wall_diam);
}

TEST_CASE("points and within-level distances") {
  const TowerLevel& x2 = fixture::tower().level(2);
  for (VertexId c = 0; c < 128; ++c) CHECK(x2.vertex_id(x2.point(c)) == c);
  CHECK_THROWS_AS(x2.vertex_id(CoverPoint{0, Bits(6)}), InvalidInput);
  CHECK_THROWS_AS(x2.distance(0, 128, Metric::Graph), InvalidInput);
  CHECK(fixture::tower().level(0).distance(0, 0, Metric::Wall) == 0);
}

TEST_CASE("box distances") {
  const Tower& t = fixture::tower();
  const BoxSpace graph{&t, Metric::Graph};
  const BoxSpace wall{&t, Metric::Wall};
  CHECK(box_distance(graph, {2, 17}, {2, 17}) == 0);
  CHECK(box_distance(graph, {0, 0}, {1, 0}) == 3);
  CHECK(box_distance(graph, {1, 3}, {0, 0}) == 3);

  const auto d = oracle::all_pairs(t.level(2).graph());
  const WallStructure& walls = t.level(2).walls();
  for (VertexId a = 0; a < 128; a += 5)
    for (VertexId b = 0; b < 128; b += 3) {
      CHECK(box_distance(graph, {2, a}, {2, b}) == d[a][b]);
      CHECK(box_distance(wall, {2, a}, {2, b}) == walls.separating_count(a, b));
    }
  const std::size_t dw1 = t.level(1).diameter(Metric::Wall);
  const std::size_t dw2 = t.level(2).diameter(Metric::Wall);
  CHECK(box_distance(wall, {1, 0}, {2, 5}) == dw1 + dw2 + 3);
  CHECK(box_distance(wall, {0, 0}, {2, 5}) == dw2 + 2);
  CHECK_THROWS_AS(box_distance(graph, {1, 4}, {2, 0}), InvalidInput);
}

TEST_CASE("coarse comparison on X2") {
  const TowerLevel& x2 = fixture::tower().level(2);
  const std::size_t g1 = *fixture::tower().level(1).girth();
  const std::size_t g2 = *x2.girth();
  std::size_t equal_below_base_girth = 0;
  std::size_t differ_below_own_girth = 0;
  for (VertexId a = 0; a < 128; ++a)
    for (VertexId b = 0; b < 128; ++b) {
      const std::size_t dw = x2.distance(a, b, Metric::Wall);
      const std::size_t dx = x2.distance(a, b, Metric::Graph);
      CHECK(dw <= dx);
      if (dw < g1) {
        CHECK(dw == dx);
        ++equal_below_base_girth;
      }
      if (dw < g2 && dw != dx) ++differ_below_own_girth;
    }
  CHECK(equal_below_base_girth == 128 + 128 * 4);
  // the metrics agree below the girth of X1, not below the girth of X2
  CHECK(differ_below_own_girth > 0);
}

TEST_CASE("implicit wall distance") {
  const Tower& t = fixture::tower();
  const Z2Pair& x2 = t.level(3).below();
  const MultiGraph& base = x2.base();
  const SpanningData& sp = x2.spanning();
  auto rng = fixture::rng(31);

  const CoverPoint x{5, random_fiber(rng, 129)};
  CHECK(t.implicit_wall_distance(3, x, x) == 0);

  // one fiber bit over S-edge s: the fundamental cycle of s
  for (std::size_t i = 0; i < 129; ++i) {
    const VertexId v = static_cast<VertexId>(rng() % 128);
    CoverPoint a{v, random_fiber(rng, 129)};
    CoverPoint b = a;
    b.fiber.flip(i);
    const std::size_t cycle = 1 + tree_distance(base, sp, sp.tail[i], sp.head[i]);
    CHECK(t.implicit_wall_distance(3, a, b) == cycle);
  }

  CHECK_THROWS_AS(t.implicit_wall_distance(3, x, CoverPoint{0, Bits(128)}), InvalidInput);
  CHECK_THROWS_AS(t.implicit_wall_distance(3, x, CoverPoint{128, Bits(129)}), InvalidInput);

  // metric axioms on random triples
  for (int i = 0; i < 100; ++i) {
    const CoverPoint a{static_cast<VertexId>(rng() % 128), random_fiber(rng, 129)};
    const CoverPoint b{static_cast<VertexId>(rng() % 128), random_fiber(rng, 129)};
    const CoverPoint c{static_cast<VertexId>(rng() % 128), random_fiber(rng, 129)};
    const std::size_t ab = t.implicit_wall_distance(3, a, b);
    CHECK(ab == t.implicit_wall_distance(3, b, a));
    CHECK(ab <= t.implicit_wall_distance(3, a, c) + t.implicit_wall_distance(3, c, b));
    CHECK(ab > 0);
  }
}

TEST_CASE("implicit engines reproduce X2 from X1 data") {
  const Tower& capped = small_cap_tower();
  const TowerLevel& explicit_x2 = fixture::tower().level(2);
  const auto d = oracle::all_pairs(explicit_x2.graph());
  const std::size_t cap = explicit_x2.diameter(Metric::Graph);
  for (VertexId a = 0; a < 128; ++a)
    for (VertexId b = a; b < 128; ++b) {
      const CoverPoint x = explicit_x2.point(a);
      const CoverPoint y = explicit_x2.point(b);
      CHECK(capped.implicit_wall_distance(2, x, y) ==
            explicit_x2.walls().separating_count(a, b));
      CHECK(capped.implicit_graph_distance(2, x, y, cap) == std::optional<std::size_t>(d[a][b]));
    }
}

TEST_CASE("implicit graph distance") {
  const Tower& t = fixture::tower();
  const Z2Pair& x2 = t.level(3).below();
  const MultiGraph& base = x2.base();
  const SpanningData& sp = x2.spanning();
  auto rng = fixture::rng(32);
  const CoverPoint x{0, random_fiber(rng, 129)};
  CHECK(t.implicit_graph_distance(3, x, x) == std::optional<std::size_t>(0));

  for (std::size_t i = 0; i < 129; i += 16) {
    CoverPoint a{sp.tail[i], random_fiber(rng, 129)};
    CoverPoint b{sp.head[i], a.fiber};
    b.fiber.flip(i);
    CHECK(t.implicit_graph_distance(3, a, b, 4) == std::optional<std::size_t>(1));
  }
  const Edge& tree_edge = base.edge(sp.tree_edges.front());
  const CoverPoint u{tree_edge.u, x.fiber};
  const CoverPoint w{tree_edge.v, x.fiber};
  CHECK(t.implicit_graph_distance(3, u, w, 2) == std::optional<std::size_t>(1));

  // far apart fibers exceed a small cap
  CoverPoint far = x;
  for (std::size_t i = 0; i < 129; i += 2) far.fiber.flip(i);
  CHECK_FALSE(t.implicit_graph_distance(3, x, far, 4).has_value());
}

TEST_CASE("level-3 wall queries are fast") {
  const Tower& t = fixture::tower();
  auto rng = fixture::rng(33);
  for (int i = 0; i < 100; ++i) {
    const CoverPoint a{static_cast<VertexId>(rng() % 128), random_fiber(rng, 129)};
    const CoverPoint b{static_cast<VertexId>(rng() % 128), random_fiber(rng, 129)};
    const auto start = std::chrono::steady_clock::now();
    const std::size_t d = t.implicit_wall_distance(3, a, b);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(seconds < 1.0);
    CHECK(d <= 256);
  }
}

TEST_CASE("girth growth") {
  const GirthReport r = girth_growth_report(fixture::tower());
  REQUIRE(r.girths.size() == 3);
  CHECK(r.girths[0].second == std::optional<std::size_t>(1));
  CHECK(r.girths[1].second == std::optional<std::size_t>(2));
  CHECK(*r.girths[2].second > 2);
  CHECK(r.strictly_increasing);
  CHECK(r.ok());
  const auto& [level, radius, trees] = r.tree_balls.back();
  CHECK(level == 2);
  CHECK(radius == (*r.girths[2].second - 1) / 2);
  CHECK(trees);

  const GirthReport single = girth_growth_report(build_tower(1));
  CHECK(single.girths.size() == 1);
  CHECK(single.strictly_increasing);
}

TEST_CASE("tree balls") {
  const MultiGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const MultiGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(ball_is_tree(c5, 0, 2));
  CHECK(ball_is_tree(c4, 0, 1));
  CHECK_FALSE(ball_is_tree(c4, 0, 2));
  CHECK(ball_is_tree(figure_eight(), 0, 0));

  // X2: radius below half the girth gives trees; at half the girth it does not
  const MultiGraph& x2 = fixture::x2();
  const std::size_t g = oracle::girth(x2);
  bool all_trees = true;
  bool some_cycle = false;
  for (VertexId v = 0; v < 128; ++v) {
    all_trees = all_trees && ball_is_tree(x2, v, (g - 1) / 2);
    some_cycle = some_cycle || !ball_is_tree(x2, v, (g + 1) / 2);
  }
  CHECK(all_trees);
  CHECK(some_cycle);
}

}  // TEST_SUITE
