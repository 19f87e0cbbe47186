#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxcover/bits.hpp"
#include "boxcover/multigraph.hpp"

namespace boxcover {

using GroupElement = std::uint32_t;

/// Finite group given by its multiplication table. The group axioms are
/// checked when the table is supplied.
class FiniteGroup {
 public:
  /// table[a][b] = a*b. Throws InvalidInput if the table is not a group.
  FiniteGroup(std::vector<std::vector<GroupElement>> table,
              std::vector<std::string> names);

  static FiniteGroup trivial();
  /// (Z/2)^k with element i having coordinate j equal to bit j of i. Names
  /// are tuples such as "(1,0)".
  static FiniteGroup elementary_abelian_2(std::size_t rank);
  static FiniteGroup cyclic(std::size_t order);

  std::size_t order() const { return table_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement multiply(GroupElement a, GroupElement b) const {
    return table_[a][b];
  }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  const std::string& name(GroupElement a) const { return names_.at(a); }
  /// Throws InvalidInput for unknown names.
  GroupElement element(std::string_view name) const;

 private:
  std::vector<std::vector<GroupElement>> table_;
  std::vector<std::string> names_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
};

enum class DeckKind { General, Z2 };

/// Explicit covering graph on V(G) x K with edge set E(G) x K.
///
/// Cover vertex (v, k) has id v*|K| + k and cover edge (e, k) has id
/// e*|K| + k. In the Z/2 case k is the fiber bitvector read as an integer
/// (bit i is the i-th S-edge). Cover edge (e, k) is the lift of e whose tail
/// end sits in fiber k, and its stored endpoints follow the base edge's
/// stored order, so end 0 of a cover edge always lies over end 0 of its base
/// edge.
class CoveringGraph {
 public:
  const MultiGraph& base() const { return base_; }
  const SpanningData& spanning() const { return spanning_; }
  const MultiGraph& total() const { return total_; }
  DeckKind kind() const { return kind_; }
  /// General case only.
  const FiniteGroup& group() const;
  /// Image of each S-edge, indexed like spanning().complement. In the Z/2
  /// case image i is the singleton {i}, i.e. 1 << i.
  std::span<const GroupElement> images() const { return images_; }

  std::size_t fiber_size() const { return fiber_size_; }
  /// |S| in the Z/2 case, 0 otherwise.
  std::size_t fiber_width() const {
    return kind_ == DeckKind::Z2 ? spanning_.s_count() : 0;
  }
  bool is_connected() const { return connected_; }

  VertexId vertex_id(VertexId base_vertex, std::uint64_t fiber) const;
  EdgeId edge_id(EdgeId base_edge, std::uint64_t fiber) const;
  VertexId vertex_base(VertexId c) const;
  std::uint64_t vertex_fiber(VertexId c) const;
  EdgeId edge_base(EdgeId c) const;
  std::uint64_t edge_fiber(EdgeId c) const;

  /// Fiber of a Z/2 cover vertex as a bitvector over S.
  Bits fiber_bits(VertexId c) const;
  /// Hex bitvector (Z/2) or group element name (General).
  std::string fiber_label(VertexId c) const;

  /// Group action of traversing base edge `e` starting from fiber `k` at
  /// base vertex `from`. Tree edges act trivially; S-edges apply rho(e) when
  /// leaving the tail and rho(e)^-1 when leaving the head. Self-loops are
  /// taken tail to head.
  std::uint64_t step(EdgeId e, VertexId from, std::uint64_t k) const;

 private:
  friend CoveringGraph build_cover(const MultiGraph&, const SpanningData&,
                                   const FiniteGroup&,
                                   std::span<const GroupElement>);
  friend CoveringGraph z2_cover(const MultiGraph&, const SpanningData&);
  friend Path lift_walk(const CoveringGraph&, VertexId, std::span<const Incidence>);

  std::uint64_t act(std::size_t s_index, std::uint64_t k, bool inverse) const;
  void materialize();

  MultiGraph base_;
  SpanningData spanning_;
  DeckKind kind_ = DeckKind::Z2;
  std::optional<FiniteGroup> group_;
  std::vector<GroupElement> images_;
  std::size_t fiber_size_ = 1;
  MultiGraph total_;
  bool connected_ = false;
};

/// Largest |S| for which a Z/2 cover is materialized.
inline constexpr std::size_t kMaxExplicitFiberWidth = 24;

/// Cover for rho: F(S) -> K given by images of the S-edges (indexed like
/// spanning.complement). Throws InvalidInput on a disconnected base, a
/// missing image or an out-of-range element.
CoveringGraph build_cover(const MultiGraph& base, const SpanningData& spanning,
                          const FiniteGroup& group,
                          std::span<const GroupElement> images);

/// Z/2-homology cover: fibers are subsets of S, an S-edge acts by symmetric
/// difference with its singleton.
CoveringGraph z2_cover(const MultiGraph& base, const SpanningData& spanning);

VertexId project_vertex(const CoveringGraph& cover, VertexId c);
EdgeId project_edge(const CoveringGraph& cover, EdgeId c);

/// Unique lift of base path `p` starting at cover vertex `start`. Throws
/// InvalidInput if `start` does not lie over p's first vertex or `p` is not a
/// path of the base.
Path lift_path(const CoveringGraph& cover, const Path& p, VertexId start);

/// Lift of an oriented walk given as incidences taken in turn from the start's
/// base vertex; end 1 on a self-loop traverses it head to tail. Throws
/// InvalidInput if a step does not leave the current vertex.
Path lift_walk(const CoveringGraph& cover, VertexId start,
               std::span<const Incidence> steps);

/// Checks that `total` -> `base` given by the projections is a covering map
/// with every fiber of size `fiber_size`: counts match, every edge's ends lie
/// over its base edge's ends, and each vertex star maps bijectively onto the
/// base star (edge ends counted with their end index).
bool verify_covering_map(const MultiGraph& total, const MultiGraph& base,
                         std::span<const VertexId> vertex_projection,
                         std::span<const EdgeId> edge_projection,
                         std::size_t fiber_size);

bool verify_covering(const CoveringGraph& cover);

/// Vertex and edge permutation of a graph.
struct GraphMap {
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;

  friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

/// Deck transformation of fiber label k: (v, m) -> (v, m*k), which for the
/// Z/2 case is (v, tau) -> (v, tau xor k).
GraphMap deck_transformation(const CoveringGraph& cover, std::uint64_t k);

/// True iff `m` is a bijection on vertices and edges that preserves every
/// edge's stored endpoints.
bool is_automorphism(const MultiGraph& g, const GraphMap& m);

GraphMap compose(const GraphMap& outer, const GraphMap& inner);

/// Collapses clouds: one directed arc k -> rho(s)k per S-edge s and fiber
/// k, returned as (from, to) pairs sorted. Tree-edge lifts collapse to
/// nothing.
std::vector<std::pair<std::uint64_t, std::uint64_t>> collapse_clouds(
    const CoveringGraph& cover);

/// Cayley graph arcs k -> g*k over the generator multiset, sorted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> cayley_arcs(
    std::size_t order,
    const std::vector<std::vector<std::uint64_t>>& generator_actions);

/// Vertex colouring plus per-edge colours used by the isomorphism search.
/// Edge colours are compared together with the end index, so an isomorphism
/// found here also preserves edge orientation.
struct Colouring {
  std::vector<std::uint32_t> vertex;
  std::vector<std::uint32_t> edge;
};

/// Backtracking search for an isomorphism a -> b preserving colours. With
/// `forced`, the search is restricted to maps sending forced->first to
/// forced->second. Returns the vertex map.
std::optional<std::vector<VertexId>> find_isomorphism(
    const MultiGraph& a, const Colouring& colour_a, const MultiGraph& b,
    const Colouring& colour_b,
    std::optional<std::pair<VertexId, VertexId>> forced = std::nullopt);

/// Colouring that records the projection onto the base (vertex and edge).
Colouring projection_colouring(std::span<const VertexId> vertex_projection,
                               std::span<const EdgeId> edge_projection);
Colouring projection_colouring(const CoveringGraph& cover);

/// Result of the composite-cover transitivity check.
struct TransitivityReport {
  bool covering = false;        // composite map is a covering, fibers of size |K|
  std::size_t fiber_size = 0;
  std::size_t automorphisms = 0;  // projection-commuting automorphisms found
  bool free_action = false;
  bool transitive_action = false;

  bool ok() const { return covering && free_action && transitive_action; }
};

/// Checks that `top` -> `base` (through the given composite projections) is a
/// regular covering: star-bijective, fiber size `fiber_size`, and the group
/// of automorphisms commuting with the projection acts freely and
/// transitively on the fiber over base vertex 0.
TransitivityReport check_composite_cover(
    const MultiGraph& top, const MultiGraph& base,
    std::span<const VertexId> vertex_projection,
    std::span<const EdgeId> edge_projection, std::size_t fiber_size);

/// Two-step Z/2 tower X2 -> X1 -> X0 over the figure eight, checked as a
/// single covering of X0. Throws InvalidInput unless `base` is the figure
/// eight (one vertex, two self-loops).
bool check_transitivity(const MultiGraph& base);

}  // namespace boxcover
