#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "boxcover/bits.hpp"
#include "boxcover/covering.hpp"
#include "boxcover/multigraph.hpp"

namespace boxcover {

/// A vertex (v, tau) of a Z/2-homology cover, addressed without
/// materializing the cover: base vertex plus fiber bitvector over S.
struct CoverPoint {
  VertexId vertex = 0;
  Bits fiber;

  friend bool operator==(const CoverPoint&, const CoverPoint&) = default;
};

/// Base graph + spanning data of a Z/2-homology cover, with everything
/// needed to answer metric questions about the cover directly from the base.
///
/// Wall distances use parity vectors: the edges crossed an odd number of
/// times by any (x,y)-admissible path. They are computed as
///   root(x0) ^ root(y0) ^ XOR_{s in tau_x ^ tau_y} cycle(s)
/// where root(v) is the tree path from the root to v and cycle(s) the
/// fundamental cycle of S-edge s, so a query costs O(|E| * |tau_x ^ tau_y|)
/// bit operations and never touches the cover.
///
/// Graph distances come from breadth-first search over states
/// (base vertex, fiber); every search takes a mandatory radius cap.
class Z2Pair {
 public:
  /// Throws InvalidInput if `base` is disconnected or `spanning` does not
  /// belong to it.
  Z2Pair(MultiGraph base, SpanningData spanning);

  const MultiGraph& base() const { return base_; }
  const SpanningData& spanning() const { return spanning_; }
  std::size_t fiber_width() const { return spanning_.s_count(); }
  bool is_z2_pair() const { return two_connected_; }

  /// Validates ids and fiber width.
  CoverPoint point(VertexId v, Bits fiber) const;
  void check_point(const CoverPoint& p) const;

  /// Tree path x0 -> y0, then for each s in tau_x ^ tau_y (ascending) a
  /// detour y0 -> tail(s), s, head(s) -> y0.
  Path canonical_admissible_path(const CoverPoint& x, const CoverPoint& y) const;

  /// Conditions (i) endpoints and (ii) S-edge parities, checked by counting
  /// edge occurrences in `p`.
  bool is_admissible(const Path& p, const CoverPoint& x,
                     const CoverPoint& y) const;

  Bits parity_vector(const CoverPoint& x, const CoverPoint& y) const;
  std::size_t wall_distance(const CoverPoint& x, const CoverPoint& y) const;
  bool separates(EdgeId e, const CoverPoint& x, const CoverPoint& y) const;

  /// Minimum-length admissible path, or nullopt if longer than radius_cap.
  std::optional<Path> shortest_admissible_path(const CoverPoint& x,
                                               const CoverPoint& y,
                                               std::size_t radius_cap) const;
  std::optional<std::size_t> graph_distance(const CoverPoint& x,
                                            const CoverPoint& y,
                                            std::size_t radius_cap) const;

  /// Every shortest admissible path from x to y (self-loops counted once per
  /// traversal). Throws InvalidInput if d(x,y) > radius_cap or more than
  /// `max_paths` paths exist.
  std::vector<Path> all_shortest_admissible_paths(const CoverPoint& x,
                                                  const CoverPoint& y,
                                                  std::size_t radius_cap,
                                                  std::size_t max_paths) const;

  /// Fiber reached by following `p` from fiber `start` (the lift's endpoint).
  Bits transport(const Path& p, const Bits& start) const;

 private:
  MultiGraph base_;
  SpanningData spanning_;
  bool two_connected_ = false;
  std::vector<Bits> root_paths_;  // per vertex, over E
  std::vector<Bits> cycles_;      // per S index, over E
};

/// Edges used an odd number of times by `p`, as a bitvector over E(g).
Bits path_parity(const MultiGraph& g, const Path& p);

/// True iff `p` contains a subpath (v, e, w, e, v).
bool has_backtrack(const Path& p);

/// True iff every simple loop contained in `p` (a closed subpath without
/// repeated vertices or edges) only uses edges that `p` traverses exactly
/// once.
bool loops_traversed_once(const MultiGraph& g, const Path& p);

// Free-function forms over (base, spanning).
Path canonical_admissible_path(const MultiGraph& base,
                               const SpanningData& spanning,
                               const CoverPoint& x, const CoverPoint& y);
bool is_admissible(const MultiGraph& base, const SpanningData& spanning,
                   const Path& p, const CoverPoint& x, const CoverPoint& y);
Bits parity_vector(const MultiGraph& base, const SpanningData& spanning,
                   const CoverPoint& x, const CoverPoint& y);
std::size_t wall_distance(const MultiGraph& base, const SpanningData& spanning,
                          const CoverPoint& x, const CoverPoint& y);
bool separates(const MultiGraph& base, const SpanningData& spanning, EdgeId e,
               const CoverPoint& x, const CoverPoint& y);
std::optional<Path> shortest_admissible_path(const MultiGraph& base,
                                             const SpanningData& spanning,
                                             const CoverPoint& x,
                                             const CoverPoint& y,
                                             std::size_t radius_cap);

/// The walls w_e = pi^-1(e) of an explicit Z/2-homology cover, with their
/// half-spaces found by deleting each wall and labelling components.
class WallStructure {
 public:
  std::size_t wall_count() const { return walls_.size(); }
  /// Cover edges of wall w_e, ascending.
  const std::vector<EdgeId>& wall(EdgeId base_edge) const {
    return walls_.at(base_edge);
  }
  std::size_t vertex_count() const { return vertex_count_; }
  /// Half-space containing the basepoint (root, empty fiber).
  bool in_positive(EdgeId wall, VertexId c) const {
    return positive_.at(wall)[c] != 0;
  }
  std::size_t positive_size(EdgeId wall) const;
  bool separates(EdgeId wall, VertexId a, VertexId b) const {
    return positive_.at(wall)[a] != positive_.at(wall)[b];
  }
  /// Walls separating a and b, counted from the stored half-spaces.
  std::size_t separating_count(VertexId a, VertexId b) const;

 private:
  friend WallStructure wall_structure(const CoveringGraph& cover);

  std::size_t vertex_count_ = 0;
  std::vector<std::vector<EdgeId>> walls_;
  std::vector<std::vector<char>> positive_;
};

/// Throws NotZ2Pair unless the cover is a Z/2 cover of a 2-connected base;
/// InternalError if some wall does not split the cover in two.
WallStructure wall_structure(const CoveringGraph& cover);

/// Number of connected components of `g` after deleting the given edges.
std::size_t components_without(const MultiGraph& g,
                               const std::vector<EdgeId>& removed,
                               std::vector<std::size_t>* labels = nullptr);

/// CoverPoint of an explicit Z/2 cover vertex.
CoverPoint cover_point(const CoveringGraph& cover, VertexId c);

}  // namespace boxcover
