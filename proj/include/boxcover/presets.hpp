#pragma once

#include "boxcover/multigraph.hpp"

namespace boxcover {

/// One vertex with two self-loops: a (edge 0) and b (edge 1).
MultiGraph figure_eight();

/// The six-vertex graph H with spanning tree {e1..e5} and S = {f, g}.
///
///   x --e1-- y --e2-- z
///   |       / \       |
///   e4    f    e3     g
///   |   /       \     |
///   u            v -e5- w
///
/// so that S-edge f closes the triangle x-y-u and g closes the square
/// y-v-w-z.
struct ExampleH {
  // vertices
  static constexpr VertexId x = 0;
  static constexpr VertexId y = 1;
  static constexpr VertexId z = 2;
  static constexpr VertexId v = 3;
  static constexpr VertexId w = 4;
  static constexpr VertexId u = 5;
  // edges
  static constexpr EdgeId e1 = 0;
  static constexpr EdgeId e2 = 1;
  static constexpr EdgeId e3 = 2;
  static constexpr EdgeId e4 = 3;
  static constexpr EdgeId e5 = 4;
  static constexpr EdgeId f = 5;
  static constexpr EdgeId g = 6;

  MultiGraph graph;
  SpanningData spanning;  // T = {e1, ..., e5}, S = (f, g)
};

ExampleH example_h();

}  // namespace boxcover
