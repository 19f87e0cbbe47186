#include "boxcover/tower.hpp"

#include <algorithm>

#include "boxcover/errors.hpp"

namespace boxcover {

namespace {

constexpr std::size_t kMaxDistanceTable = 4096;

}  // namespace

const char* metric_name(Metric m) { return m == Metric::Graph ? "graph" : "wall"; }

// ---------------------------------------------------------------------------
// TowerLevel

TowerLevel TowerLevel::root(MultiGraph graph) {
  TowerLevel level;
  level.index_ = 0;
  level.explicit_ = true;
  SpanningData t = spanning_tree(graph);
  level.self_ = std::make_shared<const Z2Pair>(std::move(graph), std::move(t));
  level.compute_metrics();
  return level;
}

TowerLevel TowerLevel::explicit_cover(std::size_t index,
                                      std::shared_ptr<const Z2Pair> below) {
  TowerLevel level;
  level.index_ = index;
  level.explicit_ = true;
  level.below_ = std::move(below);
  level.cover_ = z2_cover(level.below_->base(), level.below_->spanning());
  level.walls_ = wall_structure(*level.cover_);
  const MultiGraph& total = level.cover_->total();
  level.self_ = std::make_shared<const Z2Pair>(total, spanning_tree(total));
  level.compute_metrics();
  return level;
}

TowerLevel TowerLevel::implicit_cover(std::size_t index,
                                      std::shared_ptr<const Z2Pair> below) {
  TowerLevel level;
  level.index_ = index;
  level.explicit_ = false;
  level.below_ = std::move(below);
  return level;
}

void TowerLevel::compute_metrics() {
  const MultiGraph& g = graph();
  const std::size_t n = g.vertex_count();
  girth_ = boxcover::girth(g);
  if (n <= kMaxDistanceTable) {
    graph_dist_.assign(n * n, 0);
    for (VertexId a = 0; a < n; ++a) {
      const auto row = bfs_distances(g, a);
      for (VertexId b = 0; b < n; ++b) {
        graph_dist_[a * n + b] = static_cast<std::uint32_t>(row[b]);
        diameter_ = std::max(diameter_, row[b]);
      }
    }
  } else {
    diameter_ = boxcover::diameter(g);
  }
  wall_diameter_ = 0;
  if (cover_) {
    for (VertexId a = 0; a < n; ++a) {
      const CoverPoint pa = point(a);
      for (VertexId b = a + 1; b < n; ++b) {
        wall_diameter_ = std::max(wall_diameter_, below_->wall_distance(pa, point(b)));
      }
    }
  }
}

void TowerLevel::require_explicit(const char* what) const {
  if (!explicit_) {
    throw UnsupportedOnImplicit(std::string(what) + " is not available on implicit level " +
                                std::to_string(index_));
  }
}

std::size_t TowerLevel::fiber_width() const {
  return below_ ? below_->fiber_width() : 0;
}

const Z2Pair& TowerLevel::below() const {
  if (!below_) throw InvalidInput("level 0 is not a cover");
  return *below_;
}

const MultiGraph& TowerLevel::graph() const {
  require_explicit("graph");
  return self_->base();
}

const SpanningData& TowerLevel::spanning() const {
  require_explicit("spanning tree");
  return self_->spanning();
}

std::shared_ptr<const Z2Pair> TowerLevel::as_base() const {
  require_explicit("base data");
  return self_;
}

const CoveringGraph& TowerLevel::cover() const {
  require_explicit("cover");
  if (!cover_) throw InvalidInput("level 0 is not a cover");
  return *cover_;
}

const WallStructure& TowerLevel::walls() const {
  require_explicit("walls");
  if (!walls_) throw InvalidInput("level 0 carries no walls");
  return *walls_;
}

std::size_t TowerLevel::diameter(Metric m) const {
  require_explicit("diameter");
  return m == Metric::Graph ? diameter_ : wall_diameter_;
}

std::optional<std::size_t> TowerLevel::girth() const {
  require_explicit("girth");
  return girth_;
}

CoverPoint TowerLevel::point(VertexId c) const {
  return cover_point(cover(), c);
}

VertexId TowerLevel::vertex_id(const CoverPoint& p) const {
  const CoveringGraph& c = cover();
  if (p.fiber.width() != c.fiber_width()) {
    throw InvalidInput("fiber width " + std::to_string(p.fiber.width()) +
                       " does not match level " + std::to_string(index_));
  }
  return c.vertex_id(p.vertex, p.fiber.to_uint());
}

std::size_t TowerLevel::distance(VertexId a, VertexId b, Metric m) const {
  const MultiGraph& g = graph();
  const std::size_t n = g.vertex_count();
  if (a >= n || b >= n) throw InvalidInput("vertex out of range");
  if (m == Metric::Graph) {
    if (!graph_dist_.empty()) return graph_dist_[a * n + b];
    return *bfs_distance(g, a, b);
  }
  if (!cover_) {
    if (a == b) return 0;
    throw InvalidInput("level 0 carries no wall metric");
  }
  return below_->wall_distance(point(a), point(b));
}

std::string TowerLevel::vertex_count_text() const {
  if (explicit_) return std::to_string(graph().vertex_count());
  return std::to_string(below_->base().vertex_count()) + "*2^" +
         std::to_string(fiber_width());
}

std::string TowerLevel::edge_count_text() const {
  if (explicit_) return std::to_string(graph().edge_count());
  return std::to_string(below_->base().edge_count()) + "*2^" +
         std::to_string(fiber_width());
}

// ---------------------------------------------------------------------------
// Tower

const TowerLevel& Tower::level(std::size_t n) const {
  if (n >= levels_.size()) {
    throw InvalidInput("level " + std::to_string(n) + " not built (tower has " +
                       std::to_string(levels_.size()) + " levels)");
  }
  return levels_[n];
}

std::size_t Tower::explicit_count() const {
  return static_cast<std::size_t>(std::count_if(
      levels_.begin(), levels_.end(), [](const TowerLevel& l) { return l.is_explicit(); }));
}

std::size_t Tower::implicit_wall_distance(std::size_t n, const CoverPoint& x,
                                          const CoverPoint& y) const {
  return level(n).below().wall_distance(x, y);
}

std::optional<std::size_t> Tower::implicit_graph_distance(
    std::size_t n, const CoverPoint& x, const CoverPoint& y,
    std::size_t radius_cap) const {
  return level(n).below().graph_distance(x, y, radius_cap);
}

Tower build_tower(std::size_t levels, std::size_t explicit_cap) {
  if (levels == 0) throw InvalidInput("a tower needs at least one level");
  Tower tower;
  tower.explicit_cap_ = explicit_cap;
  tower.levels_.push_back(TowerLevel::root(figure_eight()));

  const auto fits = [&](const TowerLevel& prev) {
    const std::size_t s = prev.as_base()->fiber_width();
    if (s > kMaxExplicitFiberWidth) return false;
    return prev.graph().vertex_count() <= (explicit_cap >> s);
  };

  for (std::size_t n = 1; n < levels; ++n) {
    const TowerLevel& prev = tower.levels_.back();
    if (!prev.is_explicit()) {
      throw InvalidInput("level " + std::to_string(n) +
                         " would need the implicit level " + std::to_string(n - 1) +
                         " as its base");
    }
    auto base = prev.as_base();
    if (fits(prev)) {
      tower.levels_.push_back(TowerLevel::explicit_cover(n, std::move(base)));
    } else {
      tower.levels_.push_back(TowerLevel::implicit_cover(n, std::move(base)));
    }
  }
  const TowerLevel& top = tower.levels_.back();
  if (top.is_explicit() && !fits(top)) {
    tower.levels_.push_back(TowerLevel::implicit_cover(levels, top.as_base()));
  }
  return tower;
}

// ---------------------------------------------------------------------------
// Diagnostics

LevelStats level_stats(const TowerLevel& level) {
  const MultiGraph& g = level.graph();
  LevelStats s;
  s.index = level.index();
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.girth = level.girth();
  s.diameter = level.diameter(Metric::Graph);
  s.wall_diameter = level.diameter(Metric::Wall);
  s.min_degree = static_cast<std::size_t>(-1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.max_ball_sizes.assign(s.diameter + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::size_t> at_radius(s.diameter + 1, 0);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      ++at_radius[level.distance(v, w, Metric::Graph)];
    }
    std::size_t running = 0;
    for (std::size_t r = 0; r <= s.diameter; ++r) {
      running += at_radius[r];
      s.max_ball_sizes[r] = std::max(s.max_ball_sizes[r], running);
    }
  }
  return s;
}

std::size_t box_distance(const BoxSpace& space, const BoxPoint& p,
                         const BoxPoint& q) {
  const TowerLevel& lp = space.tower->level(p.level);
  const TowerLevel& lq = space.tower->level(q.level);
  if (!lp.is_explicit() || !lq.is_explicit()) {
    throw UnsupportedOnImplicit("box distances need explicit levels");
  }
  if (p.level == q.level) return lp.distance(p.vertex, q.vertex, space.metric);
  if (p.vertex >= lp.graph().vertex_count() || q.vertex >= lq.graph().vertex_count()) {
    throw InvalidInput("vertex out of range");
  }
  return lp.diameter(space.metric) + lq.diameter(space.metric) + p.level + q.level;
}

bool ball_is_tree(const MultiGraph& g, VertexId centre, std::size_t radius) {
  const auto dist = bfs_distances(g, centre);
  std::size_t vertices = 0;
  for (auto d : dist) vertices += d <= radius ? 1 : 0;
  std::size_t edges = 0;
  for (const Edge& e : g.edges()) {
    if (dist[e.u] == kUnreachable || dist[e.v] == kUnreachable) continue;
    if (dist[e.u] + dist[e.v] + 1 <= 2 * radius) ++edges;
  }
  return edges + 1 == vertices;
}

bool GirthReport::ok() const {
  if (!strictly_increasing) return false;
  for (const auto& [level, radius, trees] : tree_balls) {
    if (!trees) return false;
  }
  return true;
}

GirthReport girth_growth_report(const Tower& tower) {
  GirthReport report;
  for (std::size_t n = 0; n < tower.size(); ++n) {
    const TowerLevel& level = tower.level(n);
    if (!level.is_explicit()) continue;
    const auto g = level.girth();
    if (!report.girths.empty()) {
      const auto prev = report.girths.back().second;
      // nullopt means infinite girth
      const bool grew = !prev ? false : (!g || *g > *prev);
      report.strictly_increasing = report.strictly_increasing && grew;
    }
    report.girths.emplace_back(n, g);
    if (g) {
      const std::size_t radius = (*g - 1) / 2;
      bool trees = true;
      for (VertexId v = 0; v < level.graph().vertex_count() && trees; ++v) {
        trees = ball_is_tree(level.graph(), v, radius);
      }
      report.tree_balls.emplace_back(n, radius, trees);
    }
  }
  return report;
}

}  // namespace boxcover
