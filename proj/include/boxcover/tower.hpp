#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "boxcover/covering.hpp"
#include "boxcover/multigraph.hpp"
#include "boxcover/presets.hpp"
#include "boxcover/walls.hpp"

namespace boxcover {

enum class Metric { Graph, Wall };

const char* metric_name(Metric m);

inline constexpr std::size_t kDefaultExplicitCap = 10'000;
inline constexpr std::size_t kDefaultRadiusCap = 12;

/// One stage X_n of the iterated Z/2-homology tower over the figure eight.
///
/// Explicit levels hold the materialized graph, its own spanning tree (the
/// data the next level is built from), cached diameters and, for n >= 1, the
/// covering and its walls. Implicit levels only hold the predecessor's
/// Z2Pair; their vertices are CoverPoints with fibers of width |S_{n-1}|.
class TowerLevel {
 public:
  static TowerLevel root(MultiGraph graph);
  static TowerLevel explicit_cover(std::size_t index,
                                   std::shared_ptr<const Z2Pair> below);
  static TowerLevel implicit_cover(std::size_t index,
                                   std::shared_ptr<const Z2Pair> below);

  std::size_t index() const { return index_; }
  bool is_explicit() const { return explicit_; }
  /// Width of this level's fibers over X_{n-1}; 0 for X_0.
  std::size_t fiber_width() const;
  /// Z/2 data of X_{n-1}; throws InvalidInput for X_0.
  const Z2Pair& below() const;

  // Explicit levels only; throw UnsupportedOnImplicit otherwise.
  const MultiGraph& graph() const;
  const SpanningData& spanning() const;
  std::shared_ptr<const Z2Pair> as_base() const;
  const CoveringGraph& cover() const;  // n >= 1
  const WallStructure& walls() const;  // n >= 1
  std::size_t diameter(Metric m) const;
  std::optional<std::size_t> girth() const;

  /// Vertex of an explicit level as a (base vertex, fiber) point.
  CoverPoint point(VertexId c) const;
  /// Id of (base vertex, fiber) in an explicit level.
  VertexId vertex_id(const CoverPoint& p) const;

  /// Exact within-level distance between explicit vertices.
  std::size_t distance(VertexId a, VertexId b, Metric m) const;

  /// "|V(X_{n-1})|*2^s" style sizes, exact decimal for explicit levels.
  std::string vertex_count_text() const;
  std::string edge_count_text() const;

 private:
  void require_explicit(const char* what) const;
  void compute_metrics();

  std::size_t index_ = 0;
  bool explicit_ = true;
  std::shared_ptr<const Z2Pair> below_;
  std::shared_ptr<const Z2Pair> self_;  // explicit: Z2Pair over this graph
  std::optional<CoveringGraph> cover_;
  std::optional<WallStructure> walls_;
  std::vector<std::uint32_t> graph_dist_;  // all pairs, row-major
  std::size_t diameter_ = 0;
  std::size_t wall_diameter_ = 0;
  std::optional<std::size_t> girth_;
};

/// The tower X_0 -> X_1 -> ... with an explicit/implicit boundary at
/// `explicit_cap` vertices.
class Tower {
 public:
  std::size_t size() const { return levels_.size(); }
  const TowerLevel& level(std::size_t n) const;
  std::size_t explicit_cap() const { return explicit_cap_; }
  std::size_t explicit_count() const;

  /// Exact d_W between two points of level n >= 1 via parity vectors over
  /// X_{n-1}. Throws InvalidInput on a malformed fiber width.
  std::size_t implicit_wall_distance(std::size_t n, const CoverPoint& x,
                                     const CoverPoint& y) const;
  /// Exact graph distance if it is at most radius_cap, else nullopt.
  std::optional<std::size_t> implicit_graph_distance(
      std::size_t n, const CoverPoint& x, const CoverPoint& y,
      std::size_t radius_cap = kDefaultRadiusCap) const;

 private:
  friend Tower build_tower(std::size_t levels, std::size_t explicit_cap);
  std::vector<TowerLevel> levels_;
  std::size_t explicit_cap_ = kDefaultExplicitCap;
};

/// Builds X_0 .. X_{levels-1}, each explicit while its vertex count is at
/// most `explicit_cap` and implicit beyond. When the top requested level is
/// explicit and its own cover would exceed the cap, that cover is appended
/// as an implicit level. Throws InvalidInput for levels == 0 or when a
/// requested level would sit above an implicit one.
Tower build_tower(std::size_t levels,
                  std::size_t explicit_cap = kDefaultExplicitCap);

struct LevelStats {
  std::size_t index = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> girth;
  std::size_t diameter = 0;
  std::size_t wall_diameter = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  /// Largest ball of radius r over all centres, r = 0 .. diameter.
  std::vector<std::size_t> max_ball_sizes;
};

/// Throws UnsupportedOnImplicit for implicit levels.
LevelStats level_stats(const TowerLevel& level);

/// Coarse union of the tower's levels under one metric. Cross-level
/// distance is diam(X_m) + diam(X_n) + m + n, diameters taken in the
/// selected metric.
struct BoxSpace {
  const Tower* tower = nullptr;
  Metric metric = Metric::Graph;
};

struct BoxPoint {
  std::size_t level = 0;
  VertexId vertex = 0;

  friend bool operator==(const BoxPoint&, const BoxPoint&) = default;
};

/// Throws UnsupportedOnImplicit if either level is implicit.
std::size_t box_distance(const BoxSpace& space, const BoxPoint& p,
                         const BoxPoint& q);

/// Closed metric ball of radius r around v in the geometric realization: the
/// vertices within r plus the edges (a,b) with d(a) + d(b) + 1 <= 2r.
/// Returns true iff that subgraph is a tree.
bool ball_is_tree(const MultiGraph& g, VertexId centre, std::size_t radius);

struct GirthReport {
  std::vector<std::pair<std::size_t, std::optional<std::size_t>>> girths;
  /// girth(X_n) > girth(X_{n-1}) for every consecutive explicit pair.
  bool strictly_increasing = true;
  /// (level, radius, all balls are trees) with radius floor((girth-1)/2).
  std::vector<std::tuple<std::size_t, std::size_t, bool>> tree_balls;

  bool ok() const;
};

GirthReport girth_growth_report(const Tower& tower);

}  // namespace boxcover
