#include "boxcover/walls.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "boxcover/errors.hpp"

namespace boxcover {

namespace {

struct State {
  VertexId vertex;
  Bits fiber;
  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    return s.fiber.hash() ^ (static_cast<std::size_t>(s.vertex) * 0x9e3779b97f4a7c15ULL);
  }
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// One direction of a breadth-first search over (vertex, fiber) states.
class SearchSide {
 public:
  struct Node {
    State state;
    std::size_t parent;
    EdgeId edge;
    std::size_t depth;
  };

  explicit SearchSide(State seed) {
    nodes_.push_back({std::move(seed), kNoParent, 0, 0});
    index_.emplace(nodes_.front().state, 0);
    frontier_.push_back(0);
  }

  std::size_t depth() const { return depth_; }
  std::size_t frontier_size() const { return frontier_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }

  std::optional<std::size_t> find(const State& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Expands one full layer; `on_new` sees each newly discovered node.
  template <typename Fn>
  void expand(const MultiGraph& g, const SpanningData& t, Fn&& on_new) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier_) {
      for (const auto& inc : g.incident(nodes_[idx].state.vertex)) {
        // a self-loop appears twice in the star; both ends give the same move
        if (inc.other == nodes_[idx].state.vertex && inc.end == 1) continue;
        State s{inc.other, nodes_[idx].state.fiber};
        const int si = t.complement_index[inc.edge];
        if (si >= 0) s.fiber.flip(static_cast<std::size_t>(si));
        if (index_.contains(s)) continue;
        const std::size_t id = nodes_.size();
        nodes_.push_back({s, idx, inc.edge, depth_ + 1});
        index_.emplace(std::move(s), id);
        next.push_back(id);
        on_new(id);
      }
    }
    frontier_ = std::move(next);
    ++depth_;
  }

  /// Path from the seed to node `i`.
  Path path_to(std::size_t i) const {
    Path rev = Path::at(nodes_[i].state.vertex);
    while (nodes_[i].parent != kNoParent) {
      rev.append(nodes_[i].edge, nodes_[nodes_[i].parent].state.vertex);
      i = nodes_[i].parent;
    }
    return rev.reversed();
  }

 private:
  std::vector<Node> nodes_;
  std::unordered_map<State, std::size_t, StateHash> index_;
  std::vector<std::size_t> frontier_;
  std::size_t depth_ = 0;
};

}  // namespace

Z2Pair::Z2Pair(MultiGraph base, SpanningData spanning)
    : base_(std::move(base)), spanning_(std::move(spanning)) {
  if (!is_connected(base_)) throw InvalidInput("Z/2 covers need a connected base");
  if (spanning_.complement_index.size() != base_.edge_count() ||
      spanning_.parent.size() != base_.vertex_count() ||
      spanning_.tree_edges.size() + 1 != base_.vertex_count()) {
    throw InvalidInput("spanning data does not belong to this graph");
  }
  two_connected_ = is_two_connected(base_);

  const std::size_t n = base_.vertex_count();
  const std::size_t m = base_.edge_count();
  root_paths_.assign(n, Bits(m));
  // vertices sorted by depth so parents are filled first
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return spanning_.depth[a] < spanning_.depth[b];
  });
  for (VertexId v : order) {
    if (v == spanning_.root) continue;
    root_paths_[v] = root_paths_[spanning_.parent[v]];
    root_paths_[v].flip(spanning_.parent_edge[v]);
  }
  cycles_.reserve(spanning_.s_count());
  for (std::size_t s = 0; s < spanning_.s_count(); ++s) {
    Bits c = root_paths_[spanning_.tail[s]] ^ root_paths_[spanning_.head[s]];
    c.flip(spanning_.complement[s]);
    cycles_.push_back(std::move(c));
  }
}

CoverPoint Z2Pair::point(VertexId v, Bits fiber) const {
  CoverPoint p{v, std::move(fiber)};
  check_point(p);
  return p;
}

void Z2Pair::check_point(const CoverPoint& p) const {
  if (p.vertex >= base_.vertex_count()) {
    throw InvalidInput("base vertex " + std::to_string(p.vertex) + " out of range");
  }
  if (p.fiber.width() != fiber_width()) {
    throw InvalidInput("fiber width " + std::to_string(p.fiber.width()) +
                       " does not match |S| = " + std::to_string(fiber_width()));
  }
}

Path Z2Pair::canonical_admissible_path(const CoverPoint& x,
                                       const CoverPoint& y) const {
  check_point(x);
  check_point(y);
  Path p = tree_path(base_, spanning_, x.vertex, y.vertex);
  for (std::size_t s : (x.fiber ^ y.fiber).ones()) {
    p.extend(tree_path(base_, spanning_, y.vertex, spanning_.tail[s]));
    p.append(spanning_.complement[s], spanning_.head[s]);
    p.extend(tree_path(base_, spanning_, spanning_.head[s], y.vertex));
  }
  return p;
}

bool Z2Pair::is_admissible(const Path& p, const CoverPoint& x,
                           const CoverPoint& y) const {
  check_point(x);
  check_point(y);
  if (!is_valid_path(base_, p)) return false;
  if (p.front() != x.vertex || p.back() != y.vertex) return false;
  const auto mult = edge_multiplicities(base_, p);
  const Bits delta = x.fiber ^ y.fiber;
  for (std::size_t s = 0; s < spanning_.s_count(); ++s) {
    if ((mult[spanning_.complement[s]] % 2 == 1) != delta.test(s)) return false;
  }
  return true;
}

Bits Z2Pair::parity_vector(const CoverPoint& x, const CoverPoint& y) const {
  check_point(x);
  check_point(y);
  Bits parity = root_paths_[x.vertex] ^ root_paths_[y.vertex];
  for (std::size_t s : (x.fiber ^ y.fiber).ones()) parity ^= cycles_[s];
  return parity;
}

std::size_t Z2Pair::wall_distance(const CoverPoint& x,
                                  const CoverPoint& y) const {
  return parity_vector(x, y).count();
}

bool Z2Pair::separates(EdgeId e, const CoverPoint& x,
                       const CoverPoint& y) const {
  if (e >= base_.edge_count()) throw InvalidInput("edge out of range");
  return parity_vector(x, y).test(e);
}

std::optional<Path> Z2Pair::shortest_admissible_path(
    const CoverPoint& x, const CoverPoint& y, std::size_t radius_cap) const {
  check_point(x);
  check_point(y);
  if (x == y) return Path::at(x.vertex);

  SearchSide fwd(State{x.vertex, x.fiber});
  SearchSide bwd(State{y.vertex, y.fiber});
  struct Meeting {
    std::size_t length;
    std::size_t fwd_node;
    std::size_t bwd_node;
  };
  std::optional<Meeting> best;

  while (fwd.depth() + bwd.depth() < radius_cap) {
    const bool grow_fwd = fwd.frontier_size() <= bwd.frontier_size();
    SearchSide& side = grow_fwd ? fwd : bwd;
    const SearchSide& other = grow_fwd ? bwd : fwd;
    if (side.frontier_size() == 0) return std::nullopt;
    side.expand(base_, spanning_, [&](std::size_t id) {
      const auto hit = other.find(side.node(id).state);
      if (!hit) return;
      const std::size_t len = side.node(id).depth + other.node(*hit).depth;
      if (!best || len < best->length) {
        best = grow_fwd ? Meeting{len, id, *hit} : Meeting{len, *hit, id};
      }
    });
    if (best) {
      if (best->length > radius_cap) return std::nullopt;
      Path p = fwd.path_to(best->fwd_node);
      p.extend(bwd.path_to(best->bwd_node).reversed());
      return p;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> Z2Pair::graph_distance(const CoverPoint& x,
                                                  const CoverPoint& y,
                                                  std::size_t radius_cap) const {
  auto p = shortest_admissible_path(x, y, radius_cap);
  if (!p) return std::nullopt;
  return p->length();
}

std::vector<Path> Z2Pair::all_shortest_admissible_paths(
    const CoverPoint& x, const CoverPoint& y, std::size_t radius_cap,
    std::size_t max_paths) const {
  const auto d = graph_distance(x, y, radius_cap);
  if (!d) throw InvalidInput("target beyond the radius cap");

  // distances to y for every state within d of y
  std::unordered_map<State, std::size_t, StateHash> to_target;
  {
    SearchSide from_y(State{y.vertex, y.fiber});
    to_target.emplace(State{y.vertex, y.fiber}, 0);
    while (from_y.depth() < *d) {
      from_y.expand(base_, spanning_, [&](std::size_t id) {
        to_target.emplace(from_y.node(id).state, from_y.node(id).depth);
      });
    }
  }

  std::vector<Path> out;
  Path current = Path::at(x.vertex);
  std::function<void(const State&, std::size_t)> descend =
      [&](const State& at, std::size_t remaining) {
        if (remaining == 0) {
          out.push_back(current);
          if (out.size() > max_paths) {
            throw InvalidInput("more than " + std::to_string(max_paths) +
                               " shortest admissible paths");
          }
          return;
        }
        for (const auto& inc : base_.incident(at.vertex)) {
          if (inc.other == at.vertex && inc.end == 1) continue;
          State next{inc.other, at.fiber};
          const int si = spanning_.complement_index[inc.edge];
          if (si >= 0) next.fiber.flip(static_cast<std::size_t>(si));
          auto it = to_target.find(next);
          if (it == to_target.end() || it->second != remaining - 1) continue;
          current.append(inc.edge, inc.other);
          descend(next, remaining - 1);
          current.edges.pop_back();
          current.vertices.pop_back();
        }
      };
  descend(State{x.vertex, x.fiber}, *d);
  return out;
}

Bits Z2Pair::transport(const Path& p, const Bits& start) const {
  if (!is_valid_path(base_, p)) throw InvalidInput("not a path of the base graph");
  if (start.width() != fiber_width()) throw InvalidInput("fiber width mismatch");
  Bits fiber = start;
  for (EdgeId e : p.edges) {
    const int si = spanning_.complement_index[e];
    if (si >= 0) fiber.flip(static_cast<std::size_t>(si));
  }
  return fiber;
}

Bits path_parity(const MultiGraph& g, const Path& p) {
  Bits parity(g.edge_count());
  for (EdgeId e : p.edges) parity.flip(e);
  return parity;
}

bool has_backtrack(const Path& p) {
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (p.edges[i] == p.edges[i + 1] && p.vertices[i] == p.vertices[i + 2]) {
      return true;
    }
  }
  return false;
}

bool loops_traversed_once(const MultiGraph& g, const Path& p) {
  const auto mult = edge_multiplicities(g, p);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    std::unordered_set<VertexId> seen{p.vertices[i]};
    std::unordered_set<EdgeId> used;
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
      if (!used.insert(p.edges[j - 1]).second) break;
      if (p.vertices[j] == p.vertices[i]) {
        // simple loop p[i..j]
        for (std::size_t k = i; k < j; ++k) {
          if (mult[p.edges[k]] != 1) return false;
        }
        break;
      }
      if (!seen.insert(p.vertices[j]).second) break;
    }
  }
  return true;
}

Path canonical_admissible_path(const MultiGraph& base,
                               const SpanningData& spanning,
                               const CoverPoint& x, const CoverPoint& y) {
  return Z2Pair(base, spanning).canonical_admissible_path(x, y);
}

bool is_admissible(const MultiGraph& base, const SpanningData& spanning,
                   const Path& p, const CoverPoint& x, const CoverPoint& y) {
  return Z2Pair(base, spanning).is_admissible(p, x, y);
}

Bits parity_vector(const MultiGraph& base, const SpanningData& spanning,
                   const CoverPoint& x, const CoverPoint& y) {
  return Z2Pair(base, spanning).parity_vector(x, y);
}

std::size_t wall_distance(const MultiGraph& base, const SpanningData& spanning,
                          const CoverPoint& x, const CoverPoint& y) {
  return Z2Pair(base, spanning).wall_distance(x, y);
}

bool separates(const MultiGraph& base, const SpanningData& spanning, EdgeId e,
               const CoverPoint& x, const CoverPoint& y) {
  return Z2Pair(base, spanning).separates(e, x, y);
}

std::optional<Path> shortest_admissible_path(const MultiGraph& base,
                                             const SpanningData& spanning,
                                             const CoverPoint& x,
                                             const CoverPoint& y,
                                             std::size_t radius_cap) {
  return Z2Pair(base, spanning).shortest_admissible_path(x, y, radius_cap);
}

// ---------------------------------------------------------------------------
// Explicit walls

std::size_t components_without(const MultiGraph& g,
                               const std::vector<EdgeId>& removed,
                               std::vector<std::size_t>* labels) {
  std::vector<char> gone(g.edge_count(), 0);
  for (EdgeId e : removed) gone.at(e) = 1;
  constexpr std::size_t kUnlabelled = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.vertex_count(), kUnlabelled);
  std::size_t components = 0;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (label[start] != kUnlabelled) continue;
    std::vector<VertexId> stack{start};
    label[start] = components;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(u)) {
        if (gone[inc.edge] || label[inc.other] != kUnlabelled) continue;
        label[inc.other] = components;
        stack.push_back(inc.other);
      }
    }
    ++components;
  }
  if (labels) *labels = std::move(label);
  return components;
}

std::size_t WallStructure::positive_size(EdgeId wall) const {
  const auto& side = positive_.at(wall);
  return static_cast<std::size_t>(std::count(side.begin(), side.end(), 1));
}

std::size_t WallStructure::separating_count(VertexId a, VertexId b) const {
  std::size_t n = 0;
  for (const auto& side : positive_) n += side.at(a) != side.at(b) ? 1 : 0;
  return n;
}

WallStructure wall_structure(const CoveringGraph& cover) {
  if (cover.kind() != DeckKind::Z2) {
    throw NotZ2Pair("wall structures are built on Z/2-homology covers only");
  }
  if (!is_two_connected(cover.base())) {
    throw NotZ2Pair("base graph is not 2-connected");
  }
  const MultiGraph& total = cover.total();
  WallStructure w;
  w.vertex_count_ = total.vertex_count();
  w.walls_.assign(cover.base().edge_count(), {});
  for (EdgeId c = 0; c < total.edge_count(); ++c) {
    w.walls_[cover.edge_base(c)].push_back(c);
  }
  const VertexId basepoint = cover.vertex_id(cover.spanning().root, 0);
  for (EdgeId e = 0; e < w.walls_.size(); ++e) {
    std::vector<std::size_t> labels;
    const std::size_t parts = components_without(total, w.walls_[e], &labels);
    if (parts != 2) {
      throw InternalError("wall over base edge " + std::to_string(e) + " leaves " +
                          std::to_string(parts) + " components");
    }
    std::vector<char> positive(total.vertex_count(), 0);
    for (VertexId c = 0; c < total.vertex_count(); ++c) {
      positive[c] = labels[c] == labels[basepoint] ? 1 : 0;
    }
    w.positive_.push_back(std::move(positive));
  }
  return w;
}

CoverPoint cover_point(const CoveringGraph& cover, VertexId c) {
  return CoverPoint{cover.vertex_base(c), cover.fiber_bits(c)};
}

}  // namespace boxcover
