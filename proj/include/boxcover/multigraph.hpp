#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace boxcover {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Endpoints as stored; u == v for a self-loop.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_self_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One end of an edge seen from the vertex it sits on. `end` is 0 when the
/// vertex is the stored `u` endpoint and 1 when it is `v`; a self-loop
/// contributes both ends to its vertex.
struct Incidence {
  EdgeId edge = 0;
  VertexId other = 0;
  std::uint8_t end = 0;
};

/// Finite unoriented multigraph. Self-loops and parallel edges are allowed;
/// edge ids are dense and follow input order. Immutable once built.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws InvalidInput if an endpoint is >= vertex_count.
  MultiGraph(std::size_t vertex_count,
             std::span<const std::pair<VertexId, VertexId>> endpoints);
  MultiGraph(std::size_t vertex_count,
             std::initializer_list<std::pair<VertexId, VertexId>> endpoints);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  /// Endpoint of `e` opposite to `from`; `from` for self-loops.
  VertexId other_end(EdgeId e, VertexId from) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  void build(std::size_t vertex_count,
             std::span<const std::pair<VertexId, VertexId>> endpoints);

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Alternating vertex/edge sequence (v0, e1, v1, ..., en, vn).
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  static Path at(VertexId v) { return Path{{v}, {}}; }

  std::size_t length() const { return edges.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool is_loop() const { return !edges.empty() && front() == back(); }

  void append(EdgeId e, VertexId next) {
    edges.push_back(e);
    vertices.push_back(next);
  }
  /// Appends `tail`, whose first vertex must equal back().
  void extend(const Path& tail);
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// True iff every edge of `p` joins its neighbouring vertices in `g`.
bool is_valid_path(const MultiGraph& g, const Path& p);

/// Per-edge traversal counts of `p`, indexed by edge id.
std::vector<std::size_t> edge_multiplicities(const MultiGraph& g,
                                             const Path& p);

/// Spanning tree T and its oriented complement S = E \ T.
///
/// Orientation of an S-edge: the tail is the endpoint with the smaller vertex
/// id; for a self-loop both ends coincide and the stored order is kept.
struct SpanningData {
  VertexId root = 0;
  std::vector<EdgeId> tree_edges;  // ascending
  std::vector<EdgeId> complement;  // S, ascending edge id
  std::vector<VertexId> tail;      // per S index
  std::vector<VertexId> head;      // per S index
  /// Position of each edge in `complement`, or -1 for tree edges.
  std::vector<int> complement_index;
  /// Tree parent edge per vertex (unused for the root).
  std::vector<EdgeId> parent_edge;
  std::vector<VertexId> parent;
  std::vector<std::size_t> depth;

  std::size_t s_count() const { return complement.size(); }
  bool in_tree(EdgeId e) const { return complement_index.at(e) < 0; }

  friend bool operator==(const SpanningData&, const SpanningData&) = default;
};

bool is_connected(const MultiGraph& g);

/// Throws InvalidInput on a disconnected graph.
bool is_two_connected(const MultiGraph& g);

/// Girth in the multigraph sense: 1 if a self-loop exists, 2 if a parallel
/// pair exists, otherwise the shortest simple cycle; nullopt for a forest.
std::optional<std::size_t> girth(const MultiGraph& g);

/// BFS tree from vertex 0, edges scanned in ascending id. Throws InvalidInput
/// if `g` is disconnected.
SpanningData spanning_tree(const MultiGraph& g);

/// BFS tree of g - e with `e` forced into S. Throws NotTwoConnected if g - e
/// is disconnected.
SpanningData spanning_tree_avoiding(const MultiGraph& g, EdgeId e);

/// Wraps a caller-chosen tree. Throws InvalidInput unless `tree_edges` is a
/// spanning tree of `g`.
SpanningData spanning_from_tree(const MultiGraph& g,
                                std::span<const EdgeId> tree_edges);

/// Unique path in T from `from` to `to`.
Path tree_path(const MultiGraph& g, const SpanningData& t, VertexId from,
               VertexId to);

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Distances from `source`; kUnreachable for vertices in other components.
std::vector<std::size_t> bfs_distances(const MultiGraph& g, VertexId source);

std::optional<std::size_t> bfs_distance(const MultiGraph& g, VertexId u,
                                        VertexId v);

/// Throws InvalidInput on a disconnected graph.
std::size_t diameter(const MultiGraph& g);

/// Plain-text edge list: "V E" on the first line, then E lines "u v".
MultiGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const MultiGraph& g);

}  // namespace boxcover
