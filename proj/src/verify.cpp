#include "boxcover/verify.hpp"

#include <algorithm>
#include <sstream>

#include "boxcover/embedding.hpp"
#include "boxcover/errors.hpp"
#include "boxcover/parallel.hpp"
#include "boxcover/presets.hpp"

namespace boxcover {

namespace {

std::string level_name(std::size_t n) { return "X" + std::to_string(n); }

// Runs fn(a, b) over all unordered pairs a <= b of an explicit level, sharded
// by a. fn returns false on a violation; returns the number of violations.
template <typename Fn>
std::size_t count_pair_failures(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> failures(n, 0);
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = a; b < n; ++b) {
      if (!fn(static_cast<VertexId>(a), static_cast<VertexId>(b))) ++failures[a];
    }
  });
  std::size_t total = 0;
  for (auto f : failures) total += f;
  return total;
}

std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

SuiteResult suite_covering(const Tower& tower) {
  SuiteResult r{"covering", true, {}};
  for (std::size_t n = 1; n <= 2; ++n) {
    const CoveringGraph& cover = tower.level(n).cover();
    const std::string name = level_name(n);
    r.check(verify_covering(cover), name + " covers " + level_name(n - 1) + ": fiber size " +
                                        std::to_string(cover.fiber_size()));

    const std::size_t order = cover.fiber_size();
    const std::size_t vertices = cover.total().vertex_count();
    std::vector<GraphMap> decks;
    decks.reserve(order);
    for (std::uint64_t k = 0; k < order; ++k) decks.push_back(deck_transformation(cover, k));

    bool automorphisms = true;
    bool commute = true;
    bool free_action = true;
    std::vector<char> reached(order, 0);
    for (std::uint64_t k = 0; k < order; ++k) {
      const GraphMap& d = decks[k];
      automorphisms = automorphisms && is_automorphism(cover.total(), d);
      for (VertexId c = 0; c < vertices; ++c) {
        commute = commute && cover.vertex_base(d.vertex[c]) == cover.vertex_base(c);
        if (k != 0 && d.vertex[c] == c) free_action = false;
      }
      for (EdgeId c = 0; c < cover.total().edge_count(); ++c) {
        commute = commute && cover.edge_base(d.edge[c]) == cover.edge_base(c);
      }
      const VertexId image = d.vertex[cover.vertex_id(0, 0)];
      if (cover.vertex_base(image) == 0) reached[cover.vertex_fiber(image)] = 1;
    }
    const bool transitive =
        std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });

    bool group_law = true;
    for (std::uint64_t a = 0; a < order && group_law; ++a) {
      for (std::uint64_t b = 0; b < order && group_law; ++b) {
        group_law = compose(decks[a], decks[b]) == decks[a ^ b];
      }
    }
    r.check(automorphisms, name + ": all " + std::to_string(order) +
                               " deck transformations are automorphisms");
    r.check(commute, name + ": deck transformations commute with the projection");
    r.check(free_action, name + ": deck action is free");
    r.check(transitive, name + ": deck action is transitive on the fiber over vertex 0");
    r.check(group_law, name + ": deck(a) o deck(b) = deck(a xor b)");
  }
  return r;
}

SuiteResult suite_walls(const Tower& tower) {
  SuiteResult r{"walls", true, {}};
  for (std::size_t n = 1; n <= 2; ++n) {
    const TowerLevel& level = tower.level(n);
    const CoveringGraph& cover = level.cover();
    const WallStructure& walls = level.walls();
    const std::string name = level_name(n);
    const std::size_t edges = cover.total().edge_count();

    std::vector<std::size_t> hits(edges, 0);
    bool two_sides = true;
    bool balanced = true;
    for (EdgeId w = 0; w < walls.wall_count(); ++w) {
      for (EdgeId c : walls.wall(w)) {
        ++hits[c];
        if (cover.edge_base(c) != w) hits[c] += edges;  // wrong wall
      }
      two_sides = two_sides && components_without(cover.total(), walls.wall(w)) == 2;
      balanced = balanced && 2 * walls.positive_size(w) == walls.vertex_count();
    }
    const bool partition =
        std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
    r.check(walls.wall_count() == cover.base().edge_count(),
            name + ": " + std::to_string(walls.wall_count()) + " walls, one per base edge");
    r.check(partition, name + ": walls partition the " + std::to_string(edges) + " edges");
    r.check(two_sides, name + ": every wall leaves exactly 2 components");
    r.check(balanced, name + ": every half-space holds half the vertices");
  }
  return r;
}

SuiteResult suite_same_balls(const Tower& tower) {
  SuiteResult r{"same-balls", true, {}};
  const TowerLevel& level = tower.level(2);
  const std::size_t g = *tower.level(1).girth();
  const std::size_t n = level.graph().vertex_count();

  const std::size_t dominated = count_pair_failures(n, [&](VertexId a, VertexId b) {
    return level.distance(a, b, Metric::Wall) <= level.distance(a, b, Metric::Graph);
  });
  const std::size_t balls = count_pair_failures(n, [&](VertexId a, VertexId b) {
    const std::size_t dw = level.distance(a, b, Metric::Wall);
    const std::size_t dg = level.distance(a, b, Metric::Graph);
    if ((dw < g) != (dg < g)) return false;
    return dw >= g || dw == dg;
  });
  const std::string pairs = std::to_string(pair_count(n)) + " pairs";
  r.check(dominated == 0, "X2: d_W <= d_graph on all " + pairs);
  r.check(balls == 0, "X2: d_W < " + std::to_string(g) + " iff d_graph < " +
                          std::to_string(g) + ", with equality, on all " + pairs);
  return r;
}

SuiteResult suite_bijection(const Tower& tower) {
  SuiteResult r{"bijection", true, {}};
  const TowerLevel& level = tower.level(2);
  const CoveringGraph& cover = level.cover();
  const Z2Pair& base = level.below();
  const std::size_t n = level.graph().vertex_count();
  const std::size_t cap = level.diameter(Metric::Graph);

  std::vector<std::size_t> length_bad(n, 0), lift_bad(n, 0), backtracks(n, 0);
  parallel_for(n, [&](std::size_t a) {
    const CoverPoint x = level.point(static_cast<VertexId>(a));
    for (std::size_t b = a; b < n; ++b) {
      const CoverPoint y = level.point(static_cast<VertexId>(b));
      const auto path = base.shortest_admissible_path(x, y, cap);
      const std::size_t explicit_d = level.distance(static_cast<VertexId>(a),
                                                    static_cast<VertexId>(b), Metric::Graph);
      if (!path || path->length() != explicit_d) {
        ++length_bad[a];
        continue;
      }
      if (has_backtrack(*path)) ++backtracks[a];
      const Path lifted = lift_path(cover, *path, static_cast<VertexId>(a));
      if (!base.is_admissible(*path, x, y) || !is_valid_path(cover.total(), lifted) ||
          lifted.back() != b || lifted.length() != path->length()) {
        ++lift_bad[a];
      }
    }
  });
  const auto sum = [](const std::vector<std::size_t>& v) {
    std::size_t s = 0;
    for (auto x : v) s += x;
    return s;
  };
  const std::string pairs = std::to_string(pair_count(n)) + " pairs";
  r.check(sum(length_bad) == 0,
          "X2: shortest admissible path over X1 has the BFS length on all " + pairs);
  r.check(sum(lift_bad) == 0, "X2: those paths are admissible and lift to x -> y paths");
  r.check(sum(backtracks) == 0, "X2: no shortest admissible path has a backtrack");
  return r;
}

SuiteResult suite_parity(const Tower& tower) {
  SuiteResult r{"parity", true, {}};
  const TowerLevel& level = tower.level(2);
  const WallStructure& walls = level.walls();
  const Z2Pair& base = level.below();
  const std::size_t n = level.graph().vertex_count();
  const std::size_t cap = level.diameter(Metric::Graph);

  const std::size_t failures = count_pair_failures(n, [&](VertexId a, VertexId b) {
    const CoverPoint x = level.point(a);
    const CoverPoint y = level.point(b);
    const Bits parity = base.parity_vector(x, y);
    const Bits canonical = path_parity(base.base(), base.canonical_admissible_path(x, y));
    const auto shortest = base.shortest_admissible_path(x, y, cap);
    if (!shortest) return false;
    const Bits geodesic = path_parity(base.base(), *shortest);
    if (!(parity == canonical) || !(parity == geodesic)) return false;
    for (EdgeId w = 0; w < walls.wall_count(); ++w) {
      if (parity.test(w) != walls.separates(w, a, b)) return false;
    }
    return parity.count() == walls.separating_count(a, b);
  });
  r.check(failures == 0, "X2: canonical, shortest and half-space parities agree on all " +
                             std::to_string(pair_count(n)) + " pairs");
  return r;
}

SuiteResult suite_embedding(const Tower& tower) {
  SuiteResult r{"embedding", true, {}};
  for (std::size_t n = 1; n <= 2; ++n) {
    const TowerLevel& level = tower.level(n);
    const WallEmbedding emb = wall_embedding(level.cover(), level.walls());
    const std::size_t v = level.graph().vertex_count();
    r.check(embedding_check(emb), level_name(n) + ": |f(x)-f(y)|^2 = d_W(x,y) on all " +
                                      std::to_string(pair_count(v)) + " pairs, dimension " +
                                      std::to_string(emb.dimension()));
  }
  return r;
}

SuiteResult suite_girth(const Tower& tower) {
  SuiteResult r{"girth", true, {}};
  const GirthReport report = girth_growth_report(tower);
  std::string seq;
  for (const auto& [level, g] : report.girths) {
    if (!seq.empty()) seq += ", ";
    seq += level_name(level) + "=" + (g ? std::to_string(*g) : std::string("inf"));
  }
  r.check(report.strictly_increasing, "girths strictly increase: " + seq);
  for (const auto& [level, radius, trees] : report.tree_balls) {
    r.check(trees, level_name(level) + ": every ball of radius " + std::to_string(radius) +
                       " is a tree");
  }
  for (std::size_t n = 0; n < tower.size(); ++n) {
    if (!tower.level(n).is_explicit()) continue;
    const LevelStats s = level_stats(tower.level(n));
    r.check(s.min_degree == 4 && s.max_degree == 4, level_name(n) + ": 4-regular");
  }
  return r;
}

SuiteResult suite_kernel(const Tower& tower, const VerifyOptions& options) {
  SuiteResult r{"kernel", true, {}};
  const KernelReport report = negative_type_suite(tower, options.seed, options.trials);
  std::istringstream lines(report.to_text());
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("result:", 0) == 0) continue;
    r.details.push_back(line);
  }
  r.check(report.pass, "all form values <= 1e-9, symmetric and normalized");
  return r;
}

SuiteResult suite_transitivity() {
  SuiteResult r{"transitivity", true, {}};
  r.check(check_transitivity(figure_eight()),
          "X2 -> X0 is a regular cover with fiber 128 acted on freely and transitively");
  return r;
}

}  // namespace

void SuiteResult::check(bool ok, std::string line) {
  pass = pass && ok;
  details.push_back((ok ? "ok   " : "FAIL ") + std::move(line));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "covering", "walls", "same-balls", "bijection", "parity",
      "embedding", "girth", "kernel",    "transitivity"};
  return names;
}

bool is_suite_name(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(std::string_view name, const Tower& tower,
                      const VerifyOptions& options) {
  if (name == "covering") return suite_covering(tower);
  if (name == "walls") return suite_walls(tower);
  if (name == "same-balls") return suite_same_balls(tower);
  if (name == "bijection") return suite_bijection(tower);
  if (name == "parity") return suite_parity(tower);
  if (name == "embedding") return suite_embedding(tower);
  if (name == "girth") return suite_girth(tower);
  if (name == "kernel") return suite_kernel(tower, options);
  if (name == "transitivity") return suite_transitivity();
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

std::string format_suite(const SuiteResult& result) {
  std::string out;
  for (const auto& line : result.details) {
    out += "[" + result.name + "] " + line + "\n";
  }
  out += "[" + result.name + "] " + (result.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace boxcover
