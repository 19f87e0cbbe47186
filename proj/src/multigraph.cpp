#include "boxcover/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "boxcover/errors.hpp"

namespace boxcover {

namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Vertices reachable from `source` while ignoring edge `skip`.
std::size_t reachable_count(const MultiGraph& g, VertexId source,
                            EdgeId skip) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{source};
  seen[source] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(u)) {
      if (inc.edge == skip || seen[inc.other]) continue;
      seen[inc.other] = 1;
      ++count;
      stack.push_back(inc.other);
    }
  }
  return count;
}

SpanningData finish_spanning(const MultiGraph& g, std::vector<char> in_tree) {
  SpanningData t;
  const std::size_t n = g.vertex_count();
  t.root = 0;
  t.complement_index.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) {
      t.tree_edges.push_back(e);
      continue;
    }
    const Edge& ed = g.edge(e);
    t.complement_index[e] = static_cast<int>(t.complement.size());
    t.complement.push_back(e);
    if (ed.v < ed.u) {
      t.tail.push_back(ed.v);
      t.head.push_back(ed.u);
    } else {
      t.tail.push_back(ed.u);
      t.head.push_back(ed.v);
    }
  }

  t.parent_edge.assign(n, kNoEdge);
  t.parent.assign(n, 0);
  t.depth.assign(n, 0);
  if (n == 0) return t;
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{t.root};
  seen[t.root] = 1;
  t.parent[t.root] = t.root;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(u)) {
      if (!in_tree[inc.edge] || seen[inc.other]) continue;
      seen[inc.other] = 1;
      t.parent_edge[inc.other] = inc.edge;
      t.parent[inc.other] = u;
      t.depth[inc.other] = t.depth[u] + 1;
      queue.push_back(inc.other);
    }
  }
  return t;
}

/// BFS tree from vertex 0 skipping `skip`; returns nullopt if it does not span.
std::optional<std::vector<char>> bfs_tree_flags(const MultiGraph& g,
                                                EdgeId skip) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in_tree(g.edge_count(), 0);
  if (n == 0) return in_tree;
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(u)) {
      if (inc.edge == skip || seen[inc.other]) continue;
      seen[inc.other] = 1;
      in_tree[inc.edge] = 1;
      ++reached;
      queue.push_back(inc.other);
    }
  }
  if (reached != n) return std::nullopt;
  return in_tree;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count,
                       std::span<const std::pair<VertexId, VertexId>> endpoints) {
  build(vertex_count, endpoints);
}

MultiGraph::MultiGraph(
    std::size_t vertex_count,
    std::initializer_list<std::pair<VertexId, VertexId>> endpoints) {
  build(vertex_count, std::span(endpoints.begin(), endpoints.size()));
}

void MultiGraph::build(std::size_t vertex_count,
                       std::span<const std::pair<VertexId, VertexId>> endpoints) {
  adjacency_.assign(vertex_count, {});
  edges_.reserve(endpoints.size());
  for (const auto& [u, v] : endpoints) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidInput("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") references a vertex >= " +
                         std::to_string(vertex_count));
    }
    const auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    adjacency_[u].push_back({e, v, 0});
    adjacency_[v].push_back({e, u, 1});
  }
}

VertexId MultiGraph::other_end(EdgeId e, VertexId from) const {
  const Edge& ed = edge(e);
  if (ed.u == from) return ed.v;
  if (ed.v == from) return ed.u;
  throw InvalidInput("vertex " + std::to_string(from) +
                     " is not an endpoint of edge " + std::to_string(e));
}

void Path::extend(const Path& tail) {
  if (tail.vertices.empty()) return;
  if (vertices.empty()) {
    *this = tail;
    return;
  }
  if (tail.front() != back()) throw InvalidInput("paths do not concatenate");
  edges.insert(edges.end(), tail.edges.begin(), tail.edges.end());
  vertices.insert(vertices.end(), tail.vertices.begin() + 1,
                  tail.vertices.end());
}

Path Path::reversed() const {
  Path r;
  r.vertices.assign(vertices.rbegin(), vertices.rend());
  r.edges.assign(edges.rbegin(), edges.rend());
  return r;
}

bool is_valid_path(const MultiGraph& g, const Path& p) {
  if (p.vertices.size() != p.edges.size() + 1) return false;
  for (VertexId v : p.vertices) {
    if (v >= g.vertex_count()) return false;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= g.edge_count()) return false;
    const Edge& ed = g.edge(p.edges[i]);
    const VertexId a = p.vertices[i];
    const VertexId b = p.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

std::vector<std::size_t> edge_multiplicities(const MultiGraph& g,
                                             const Path& p) {
  std::vector<std::size_t> mult(g.edge_count(), 0);
  for (EdgeId e : p.edges) ++mult.at(e);
  return mult;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() <= 1) return true;
  return reachable_count(g, 0, kNoEdge) == g.vertex_count();
}

bool is_two_connected(const MultiGraph& g) {
  if (!is_connected(g)) {
    throw InvalidInput("2-connectivity is only defined here for connected graphs");
  }
  if (g.vertex_count() <= 1) return true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (reachable_count(g, 0, e) != g.vertex_count()) return false;
  }
  return true;
}

std::optional<std::size_t> girth(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(g.edge_count());
  for (const Edge& ed : g.edges()) {
    if (ed.is_self_loop()) return 1;
    keys.emplace_back(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return 2;

  // Simple graph from here on: the minimum over all BFS roots of
  // dist(u) + dist(w) + 1 across non-tree edges (u, w) is the girth.
  std::optional<std::size_t> best;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n);
  std::vector<EdgeId> via(n);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::fill(via.begin(), via.end(), kNoEdge);
    std::deque<VertexId> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] >= *best) break;
      for (const auto& inc : g.incident(u)) {
        if (inc.edge == via[u]) continue;
        if (dist[inc.other] == kUnreachable) {
          dist[inc.other] = dist[u] + 1;
          via[inc.other] = inc.edge;
          queue.push_back(inc.other);
        } else {
          const std::size_t len = dist[u] + dist[inc.other] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

SpanningData spanning_tree(const MultiGraph& g) {
  auto flags = bfs_tree_flags(g, kNoEdge);
  if (!flags) throw InvalidInput("spanning tree requested for a disconnected graph");
  return finish_spanning(g, std::move(*flags));
}

SpanningData spanning_tree_avoiding(const MultiGraph& g, EdgeId e) {
  if (e >= g.edge_count()) {
    throw InvalidInput("edge " + std::to_string(e) + " out of range");
  }
  auto flags = bfs_tree_flags(g, e);
  if (!flags) {
    throw NotTwoConnected("removing edge " + std::to_string(e) +
                          " disconnects the graph");
  }
  return finish_spanning(g, std::move(*flags));
}

SpanningData spanning_from_tree(const MultiGraph& g,
                                std::span<const EdgeId> tree_edges) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || tree_edges.size() != n - 1) {
    throw InvalidInput("a spanning tree needs exactly |V|-1 edges");
  }
  std::vector<VertexId> root(n);
  std::iota(root.begin(), root.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<char> in_tree(g.edge_count(), 0);
  for (EdgeId e : tree_edges) {
    if (e >= g.edge_count()) throw InvalidInput("tree edge out of range");
    if (in_tree[e]) throw InvalidInput("duplicate tree edge");
    const Edge& ed = g.edge(e);
    const VertexId a = find(ed.u);
    const VertexId b = find(ed.v);
    if (a == b) throw InvalidInput("tree edges contain a cycle");
    root[a] = b;
    in_tree[e] = 1;
  }
  return finish_spanning(g, std::move(in_tree));
}

Path tree_path(const MultiGraph& g, const SpanningData& t, VertexId from,
               VertexId to) {
  if (from >= g.vertex_count() || to >= g.vertex_count()) {
    throw InvalidInput("tree path endpoint out of range");
  }
  // climb both ends to their meeting point
  Path up = Path::at(from);
  Path down = Path::at(to);
  VertexId a = from;
  VertexId b = to;
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      up.append(t.parent_edge[a], t.parent[a]);
      a = t.parent[a];
    } else {
      down.append(t.parent_edge[b], t.parent[b]);
      b = t.parent[b];
    }
  }
  up.extend(down.reversed());
  return up;
}

std::vector<std::size_t> bfs_distances(const MultiGraph& g, VertexId source) {
  if (source >= g.vertex_count()) throw InvalidInput("source out of range");
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(u)) {
      if (dist[inc.other] != kUnreachable) continue;
      dist[inc.other] = dist[u] + 1;
      queue.push_back(inc.other);
    }
  }
  return dist;
}

std::optional<std::size_t> bfs_distance(const MultiGraph& g, VertexId u,
                                        VertexId v) {
  if (v >= g.vertex_count()) throw InvalidInput("target out of range");
  const std::size_t d = bfs_distances(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::size_t diameter(const MultiGraph& g) {
  if (!is_connected(g)) throw InvalidInput("diameter of a disconnected graph");
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

MultiGraph read_edge_list(std::istream& in) {
  long long vertices = -1;
  long long edges = -1;
  if (!(in >> vertices >> edges) || vertices < 0 || edges < 0) {
    throw InvalidInput("edge list must start with 'V E'");
  }
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  endpoints.reserve(static_cast<std::size_t>(edges));
  for (long long i = 0; i < edges; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0) {
      throw InvalidInput("edge list line " + std::to_string(i + 2) +
                         " is not 'u v'");
    }
    endpoints.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return MultiGraph(static_cast<std::size_t>(vertices), endpoints);
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& ed : g.edges()) out << ed.u << ' ' << ed.v << '\n';
}

}  // namespace boxcover
