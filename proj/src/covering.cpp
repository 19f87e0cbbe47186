#include "boxcover/covering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "boxcover/errors.hpp"

namespace boxcover {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<GroupElement>> table,
                         std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidInput("a group needs at least one element");
  if (names_.size() != n) throw InvalidInput("one name per group element required");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw InvalidInput("group element names must be distinct");
  }
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidInput("multiplication table is not square");
    for (auto x : row) {
      if (x >= n) throw InvalidInput("multiplication table entry out of range");
    }
  }
  bool found_identity = false;
  for (GroupElement e = 0; e < n && !found_identity; ++e) {
    bool ok = true;
    for (GroupElement a = 0; a < n && ok; ++a) {
      ok = table_[e][a] == a && table_[a][e] == a;
    }
    if (ok) {
      identity_ = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw InvalidInput("multiplication table has no identity");
  inverse_.assign(n, 0);
  for (GroupElement a = 0; a < n; ++a) {
    bool found = false;
    for (GroupElement b = 0; b < n && !found; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw InvalidInput("element " + names_[a] + " has no inverse");
  }
  for (GroupElement a = 0; a < n; ++a) {
    for (GroupElement b = 0; b < n; ++b) {
      for (GroupElement c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InvalidInput("multiplication table is not associative");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup FiniteGroup::elementary_abelian_2(std::size_t rank) {
  if (rank > 10) throw InvalidInput("elementary abelian rank too large for a table");
  const std::size_t n = std::size_t{1} << rank;
  std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = static_cast<GroupElement>(a ^ b);
    }
    std::string name = "(";
    for (std::size_t j = 0; j < rank; ++j) {
      if (j > 0) name += ',';
      name += ((a >> j) & 1U) ? '1' : '0';
    }
    names[a] = name + ")";
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::cyclic(std::size_t order) {
  if (order == 0) throw InvalidInput("cyclic group of order 0");
  std::vector<std::vector<GroupElement>> table(order,
                                               std::vector<GroupElement>(order));
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      table[a][b] = static_cast<GroupElement>((a + b) % order);
    }
    names[a] = std::to_string(a);
  }
  return FiniteGroup(std::move(table), std::move(names));
}

GroupElement FiniteGroup::element(std::string_view name) const {
  for (GroupElement a = 0; a < names_.size(); ++a) {
    if (names_[a] == name) return a;
  }
  throw InvalidInput("unknown group element '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// CoveringGraph

const FiniteGroup& CoveringGraph::group() const {
  if (!group_) throw InvalidInput("Z/2 covers carry no explicit group table");
  return *group_;
}

VertexId CoveringGraph::vertex_id(VertexId base_vertex,
                                  std::uint64_t fiber) const {
  if (base_vertex >= base_.vertex_count() || fiber >= fiber_size_) {
    throw InvalidInput("cover vertex (" + std::to_string(base_vertex) + "," +
                       std::to_string(fiber) + ") out of range");
  }
  return static_cast<VertexId>(base_vertex * fiber_size_ + fiber);
}

EdgeId CoveringGraph::edge_id(EdgeId base_edge, std::uint64_t fiber) const {
  if (base_edge >= base_.edge_count() || fiber >= fiber_size_) {
    throw InvalidInput("cover edge (" + std::to_string(base_edge) + "," +
                       std::to_string(fiber) + ") out of range");
  }
  return static_cast<EdgeId>(base_edge * fiber_size_ + fiber);
}

VertexId CoveringGraph::vertex_base(VertexId c) const {
  if (c >= total_.vertex_count()) {
    throw InvalidInput("cover vertex " + std::to_string(c) + " out of range");
  }
  return static_cast<VertexId>(c / fiber_size_);
}

std::uint64_t CoveringGraph::vertex_fiber(VertexId c) const {
  if (c >= total_.vertex_count()) {
    throw InvalidInput("cover vertex " + std::to_string(c) + " out of range");
  }
  return c % fiber_size_;
}

EdgeId CoveringGraph::edge_base(EdgeId c) const {
  if (c >= total_.edge_count()) {
    throw InvalidInput("cover edge " + std::to_string(c) + " out of range");
  }
  return static_cast<EdgeId>(c / fiber_size_);
}

std::uint64_t CoveringGraph::edge_fiber(EdgeId c) const {
  if (c >= total_.edge_count()) {
    throw InvalidInput("cover edge " + std::to_string(c) + " out of range");
  }
  return c % fiber_size_;
}

Bits CoveringGraph::fiber_bits(VertexId c) const {
  if (kind_ != DeckKind::Z2) throw InvalidInput("fiber bits need a Z/2 cover");
  return Bits::from_uint(fiber_width(), vertex_fiber(c));
}

std::string CoveringGraph::fiber_label(VertexId c) const {
  if (kind_ == DeckKind::Z2) return fiber_bits(c).to_hex();
  return group_->name(static_cast<GroupElement>(vertex_fiber(c)));
}

std::uint64_t CoveringGraph::act(std::size_t s_index, std::uint64_t k,
                                 bool inverse) const {
  if (kind_ == DeckKind::Z2) return k ^ (std::uint64_t{1} << s_index);
  GroupElement g = images_[s_index];
  if (inverse) g = group_->inverse(g);
  return group_->multiply(g, static_cast<GroupElement>(k));
}

std::uint64_t CoveringGraph::step(EdgeId e, VertexId from,
                                  std::uint64_t k) const {
  const int s = spanning_.complement_index.at(e);
  const Edge& ed = base_.edge(e);
  if (from != ed.u && from != ed.v) {
    throw InvalidInput("vertex " + std::to_string(from) +
                       " is not an endpoint of edge " + std::to_string(e));
  }
  if (s < 0) return k;
  const auto si = static_cast<std::size_t>(s);
  if (ed.is_self_loop() || from == spanning_.tail[si]) return act(si, k, false);
  return act(si, k, true);
}

void CoveringGraph::materialize() {
  const std::size_t n = base_.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  endpoints.reserve(base_.edge_count() * fiber_size_);
  for (EdgeId e = 0; e < base_.edge_count(); ++e) {
    const Edge& ed = base_.edge(e);
    const int s = spanning_.complement_index[e];
    for (std::uint64_t k = 0; k < fiber_size_; ++k) {
      const auto at = [&](VertexId v, std::uint64_t f) {
        return static_cast<VertexId>(v * fiber_size_ + f);
      };
      if (s < 0) {
        endpoints.emplace_back(at(ed.u, k), at(ed.v, k));
        continue;
      }
      const std::uint64_t moved = act(static_cast<std::size_t>(s), k, false);
      if (ed.is_self_loop() || spanning_.tail[s] == ed.u) {
        endpoints.emplace_back(at(ed.u, k), at(ed.v, moved));
      } else {
        endpoints.emplace_back(at(ed.u, moved), at(ed.v, k));
      }
    }
  }
  total_ = MultiGraph(n * fiber_size_, endpoints);
  connected_ = boxcover::is_connected(total_);
}

CoveringGraph build_cover(const MultiGraph& base, const SpanningData& spanning,
                          const FiniteGroup& group,
                          std::span<const GroupElement> images) {
  if (!is_connected(base)) throw InvalidInput("covers need a connected base");
  if (images.size() != spanning.s_count()) {
    throw InvalidInput("expected " + std::to_string(spanning.s_count()) +
                       " S-edge images, got " + std::to_string(images.size()));
  }
  for (auto g : images) {
    if (g >= group.order()) throw InvalidInput("S-edge image out of range");
  }
  CoveringGraph c;
  c.base_ = base;
  c.spanning_ = spanning;
  c.kind_ = DeckKind::General;
  c.group_ = group;
  c.images_.assign(images.begin(), images.end());
  c.fiber_size_ = group.order();
  c.materialize();
  return c;
}

CoveringGraph z2_cover(const MultiGraph& base, const SpanningData& spanning) {
  if (!is_connected(base)) throw InvalidInput("covers need a connected base");
  const std::size_t width = spanning.s_count();
  if (width > kMaxExplicitFiberWidth) {
    throw InvalidInput("fiber width " + std::to_string(width) +
                       " is too large to materialize");
  }
  CoveringGraph c;
  c.base_ = base;
  c.spanning_ = spanning;
  c.kind_ = DeckKind::Z2;
  c.fiber_size_ = std::size_t{1} << width;
  for (std::size_t i = 0; i < width; ++i) {
    c.images_.push_back(static_cast<GroupElement>(1U << i));
  }
  c.materialize();
  if (!c.connected_) throw InternalError("Z/2-homology cover is disconnected");
  return c;
}

VertexId project_vertex(const CoveringGraph& cover, VertexId c) {
  return cover.vertex_base(c);
}

EdgeId project_edge(const CoveringGraph& cover, EdgeId c) {
  return cover.edge_base(c);
}

Path lift_walk(const CoveringGraph& cover, VertexId start,
               std::span<const Incidence> steps) {
  const MultiGraph& base = cover.base();
  const SpanningData& t = cover.spanning();
  VertexId at = cover.vertex_base(start);
  std::uint64_t k = cover.vertex_fiber(start);
  Path lifted = Path::at(start);
  for (const Incidence& step : steps) {
    if (step.edge >= base.edge_count() || step.end > 1) {
      throw InvalidInput("malformed walk step");
    }
    const Edge& ed = base.edge(step.edge);
    const VertexId from = step.end == 0 ? ed.u : ed.v;
    const VertexId to = step.end == 0 ? ed.v : ed.u;
    if (from != at || to != step.other) {
      throw InvalidInput("walk step does not leave the current vertex");
    }
    const int s = t.complement_index[step.edge];
    std::uint64_t next = k;
    std::uint64_t tail_fiber = k;  // cover edge (e, k) is named by its tail fiber
    if (s >= 0) {
      const auto si = static_cast<std::size_t>(s);
      const bool forward = ed.is_self_loop() ? step.end == 0 : from == t.tail[si];
      next = cover.act(si, k, !forward);
      if (!forward) tail_fiber = next;
    }
    lifted.append(cover.edge_id(step.edge, tail_fiber), cover.vertex_id(to, next));
    at = to;
    k = next;
  }
  return lifted;
}

Path lift_path(const CoveringGraph& cover, const Path& p, VertexId start) {
  const MultiGraph& base = cover.base();
  if (!is_valid_path(base, p)) throw InvalidInput("not a path of the base graph");
  if (cover.vertex_base(start) != p.front()) {
    throw InvalidInput("lift start does not lie over the path's origin");
  }
  std::vector<Incidence> steps;
  steps.reserve(p.length());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& ed = base.edge(p.edges[i]);
    const std::uint8_t end = (ed.is_self_loop() || p.vertices[i] == ed.u) ? 0 : 1;
    steps.push_back({p.edges[i], p.vertices[i + 1], end});
  }
  return lift_walk(cover, start, steps);
}

bool verify_covering_map(const MultiGraph& total, const MultiGraph& base,
                         std::span<const VertexId> vertex_projection,
                         std::span<const EdgeId> edge_projection,
                         std::size_t fiber_size) {
  if (vertex_projection.size() != total.vertex_count() ||
      edge_projection.size() != total.edge_count()) {
    return false;
  }
  if (total.vertex_count() != base.vertex_count() * fiber_size ||
      total.edge_count() != base.edge_count() * fiber_size) {
    return false;
  }
  std::vector<std::size_t> vertex_fibers(base.vertex_count(), 0);
  for (VertexId v : vertex_projection) {
    if (v >= base.vertex_count()) return false;
    ++vertex_fibers[v];
  }
  std::vector<std::size_t> edge_fibers(base.edge_count(), 0);
  for (EdgeId c = 0; c < total.edge_count(); ++c) {
    const EdgeId b = edge_projection[c];
    if (b >= base.edge_count()) return false;
    ++edge_fibers[b];
    const Edge& ce = total.edge(c);
    const Edge& be = base.edge(b);
    if (vertex_projection[ce.u] != be.u || vertex_projection[ce.v] != be.v) {
      return false;
    }
  }
  for (auto n : vertex_fibers) {
    if (n != fiber_size) return false;
  }
  for (auto n : edge_fibers) {
    if (n != fiber_size) return false;
  }
  std::vector<std::pair<EdgeId, std::uint8_t>> cover_star;
  std::vector<std::pair<EdgeId, std::uint8_t>> base_star;
  for (VertexId x = 0; x < total.vertex_count(); ++x) {
    cover_star.clear();
    base_star.clear();
    for (const auto& inc : total.incident(x)) {
      cover_star.emplace_back(edge_projection[inc.edge], inc.end);
    }
    for (const auto& inc : base.incident(vertex_projection[x])) {
      base_star.emplace_back(inc.edge, inc.end);
    }
    std::sort(cover_star.begin(), cover_star.end());
    std::sort(base_star.begin(), base_star.end());
    if (cover_star != base_star) return false;
  }
  return true;
}

bool verify_covering(const CoveringGraph& cover) {
  const MultiGraph& total = cover.total();
  std::vector<VertexId> vp(total.vertex_count());
  std::vector<EdgeId> ep(total.edge_count());
  for (VertexId c = 0; c < vp.size(); ++c) vp[c] = cover.vertex_base(c);
  for (EdgeId c = 0; c < ep.size(); ++c) ep[c] = cover.edge_base(c);
  return verify_covering_map(total, cover.base(), vp, ep, cover.fiber_size());
}

GraphMap deck_transformation(const CoveringGraph& cover, std::uint64_t k) {
  if (k >= cover.fiber_size()) throw InvalidInput("deck element out of range");
  const auto shift = [&](std::uint64_t m) -> std::uint64_t {
    if (cover.kind() == DeckKind::Z2) return m ^ k;
    return cover.group().multiply(static_cast<GroupElement>(m),
                                  static_cast<GroupElement>(k));
  };
  GraphMap m;
  const MultiGraph& total = cover.total();
  m.vertex.resize(total.vertex_count());
  m.edge.resize(total.edge_count());
  for (VertexId c = 0; c < total.vertex_count(); ++c) {
    m.vertex[c] = cover.vertex_id(cover.vertex_base(c), shift(cover.vertex_fiber(c)));
  }
  for (EdgeId c = 0; c < total.edge_count(); ++c) {
    m.edge[c] = cover.edge_id(cover.edge_base(c), shift(cover.edge_fiber(c)));
  }
  return m;
}

bool is_automorphism(const MultiGraph& g, const GraphMap& m) {
  if (m.vertex.size() != g.vertex_count() || m.edge.size() != g.edge_count()) {
    return false;
  }
  std::vector<char> hit_v(g.vertex_count(), 0);
  for (VertexId v : m.vertex) {
    if (v >= g.vertex_count() || hit_v[v]) return false;
    hit_v[v] = 1;
  }
  std::vector<char> hit_e(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeId img = m.edge[e];
    if (img >= g.edge_count() || hit_e[img]) return false;
    hit_e[img] = 1;
    const Edge& src = g.edge(e);
    const Edge& dst = g.edge(img);
    if (dst.u != m.vertex[src.u] || dst.v != m.vertex[src.v]) return false;
  }
  return true;
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  GraphMap r;
  r.vertex.resize(inner.vertex.size());
  r.edge.resize(inner.edge.size());
  for (std::size_t i = 0; i < inner.vertex.size(); ++i) {
    r.vertex[i] = outer.vertex.at(inner.vertex[i]);
  }
  for (std::size_t i = 0; i < inner.edge.size(); ++i) {
    r.edge[i] = outer.edge.at(inner.edge[i]);
  }
  return r;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> collapse_clouds(
    const CoveringGraph& cover) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs;
  const MultiGraph& total = cover.total();
  const SpanningData& t = cover.spanning();
  for (EdgeId c = 0; c < total.edge_count(); ++c) {
    const EdgeId b = cover.edge_base(c);
    const int s = t.complement_index[b];
    if (s < 0) continue;
    const Edge& be = cover.base().edge(b);
    const Edge& ce = total.edge(c);
    const bool tail_is_u = be.is_self_loop() || t.tail[s] == be.u;
    const VertexId tail = tail_is_u ? ce.u : ce.v;
    const VertexId head = tail_is_u ? ce.v : ce.u;
    arcs.emplace_back(cover.vertex_fiber(tail), cover.vertex_fiber(head));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> cayley_arcs(
    std::size_t order,
    const std::vector<std::vector<std::uint64_t>>& generator_actions) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs;
  for (const auto& action : generator_actions) {
    for (std::uint64_t k = 0; k < order; ++k) arcs.emplace_back(k, action.at(k));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

class IsoSearch {
 public:
  IsoSearch(const MultiGraph& a, const Colouring& ca, const MultiGraph& b,
            const Colouring& cb)
      : a_(a), b_(b), ca_(ca), cb_(cb) {}

  std::optional<std::vector<VertexId>> run(
      std::optional<std::pair<VertexId, VertexId>> forced) {
    const std::size_t n = a_.vertex_count();
    if (n != b_.vertex_count() || a_.edge_count() != b_.edge_count()) {
      return std::nullopt;
    }
    if (ca_.vertex.size() != n || cb_.vertex.size() != n ||
        ca_.edge.size() != a_.edge_count() ||
        cb_.edge.size() != b_.edge_count()) {
      throw InvalidInput("colouring size does not match graph");
    }
    if (forced && (forced->first >= n || forced->second >= n)) {
      throw InvalidInput("forced pair out of range");
    }
    sig_a_.resize(n);
    sig_b_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      sig_a_[v] = signature(a_, ca_, v);
      sig_b_[v] = signature(b_, cb_, v);
    }
    {
      auto sa = sig_a_;
      auto sb = sig_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    build_order(forced ? forced->first : VertexId{0});
    forced_ = forced;
    map_ab_.assign(n, kUnset);
    map_ba_.assign(n, kUnset);
    if (!assign(0)) return std::nullopt;
    return map_ab_;
  }

 private:
  static constexpr VertexId kUnset = static_cast<VertexId>(-1);

  static std::vector<std::uint32_t> signature(const MultiGraph& g,
                                              const Colouring& c, VertexId v) {
    std::vector<std::uint32_t> sig{c.vertex[v]};
    for (const auto& inc : g.incident(v)) {
      sig.push_back(c.edge[inc.edge] * 2 + inc.end);
    }
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  }

  void build_order(VertexId first) {
    const std::size_t n = a_.vertex_count();
    std::vector<char> seen(n, 0);
    order_.clear();
    anchor_.assign(n, kUnset);
    auto bfs = [&](VertexId root) {
      std::deque<VertexId> q{root};
      seen[root] = 1;
      while (!q.empty()) {
        const VertexId u = q.front();
        q.pop_front();
        order_.push_back(u);
        for (const auto& inc : a_.incident(u)) {
          if (seen[inc.other]) continue;
          seen[inc.other] = 1;
          anchor_[inc.other] = u;
          q.push_back(inc.other);
        }
      }
    };
    bfs(first);
    for (VertexId v = 0; v < n; ++v) {
      if (!seen[v]) bfs(v);
    }
  }

  bool consistent(VertexId u, VertexId t) const {
    std::vector<std::pair<VertexId, std::uint32_t>> ka;
    std::vector<std::pair<VertexId, std::uint32_t>> kb;
    for (const auto& inc : a_.incident(u)) {
      if (inc.other == u) {
        ka.emplace_back(t, ca_.edge[inc.edge] * 2 + inc.end);
      } else if (map_ab_[inc.other] != kUnset) {
        ka.emplace_back(map_ab_[inc.other], ca_.edge[inc.edge] * 2 + inc.end);
      }
    }
    for (const auto& inc : b_.incident(t)) {
      if (inc.other == t || map_ba_[inc.other] != kUnset) {
        kb.emplace_back(inc.other, cb_.edge[inc.edge] * 2 + inc.end);
      }
    }
    if (ka.size() != kb.size()) return false;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
  }

  bool try_candidate(std::size_t idx, VertexId u, VertexId t) {
    if (map_ba_[t] != kUnset || sig_a_[u] != sig_b_[t]) return false;
    if (!consistent(u, t)) return false;
    map_ab_[u] = t;
    map_ba_[t] = u;
    if (assign(idx + 1)) return true;
    map_ab_[u] = kUnset;
    map_ba_[t] = kUnset;
    return false;
  }

  bool assign(std::size_t idx) {
    if (idx == order_.size()) return true;
    const VertexId u = order_[idx];
    if (forced_ && forced_->first == u) {
      return try_candidate(idx, u, forced_->second);
    }
    if (anchor_[u] != kUnset) {
      std::vector<VertexId> cands;
      for (const auto& inc : b_.incident(map_ab_[anchor_[u]])) {
        cands.push_back(inc.other);
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (VertexId t : cands) {
        if (try_candidate(idx, u, t)) return true;
      }
      return false;
    }
    for (VertexId t = 0; t < b_.vertex_count(); ++t) {
      if (try_candidate(idx, u, t)) return true;
    }
    return false;
  }

  const MultiGraph& a_;
  const MultiGraph& b_;
  const Colouring& ca_;
  const Colouring& cb_;
  std::vector<std::vector<std::uint32_t>> sig_a_;
  std::vector<std::vector<std::uint32_t>> sig_b_;
  std::vector<VertexId> order_;
  std::vector<VertexId> anchor_;
  std::vector<VertexId> map_ab_;
  std::vector<VertexId> map_ba_;
  std::optional<std::pair<VertexId, VertexId>> forced_;
};

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(
    const MultiGraph& a, const Colouring& colour_a, const MultiGraph& b,
    const Colouring& colour_b,
    std::optional<std::pair<VertexId, VertexId>> forced) {
  IsoSearch search(a, colour_a, b, colour_b);
  return search.run(forced);
}

Colouring projection_colouring(std::span<const VertexId> vertex_projection,
                               std::span<const EdgeId> edge_projection) {
  Colouring c;
  c.vertex.assign(vertex_projection.begin(), vertex_projection.end());
  c.edge.assign(edge_projection.begin(), edge_projection.end());
  return c;
}

Colouring projection_colouring(const CoveringGraph& cover) {
  Colouring c;
  const MultiGraph& total = cover.total();
  c.vertex.resize(total.vertex_count());
  c.edge.resize(total.edge_count());
  for (VertexId v = 0; v < c.vertex.size(); ++v) c.vertex[v] = cover.vertex_base(v);
  for (EdgeId e = 0; e < c.edge.size(); ++e) c.edge[e] = cover.edge_base(e);
  return c;
}

TransitivityReport check_composite_cover(
    const MultiGraph& top, const MultiGraph& base,
    std::span<const VertexId> vertex_projection,
    std::span<const EdgeId> edge_projection, std::size_t fiber_size) {
  TransitivityReport report;
  report.fiber_size = fiber_size;
  report.covering = verify_covering_map(top, base, vertex_projection,
                                        edge_projection, fiber_size);
  if (!report.covering || base.vertex_count() == 0) return report;

  std::vector<VertexId> fiber;
  for (VertexId c = 0; c < top.vertex_count(); ++c) {
    if (vertex_projection[c] == 0) fiber.push_back(c);
  }
  const Colouring colour = projection_colouring(vertex_projection, edge_projection);
  const VertexId root = fiber.front();
  std::set<VertexId> reached;
  bool free = true;
  for (VertexId target : fiber) {
    auto map = find_isomorphism(top, colour, top, colour,
                                std::make_pair(root, target));
    if (!map) continue;
    ++report.automorphisms;
    reached.insert(target);
    if (target != root) {
      for (VertexId x : fiber) {
        if ((*map)[x] == x) free = false;
      }
    }
  }
  report.free_action = free;
  report.transitive_action = reached.size() == fiber.size();
  return report;
}

bool check_transitivity(const MultiGraph& base) {
  if (base.vertex_count() != 1 || base.edge_count() != 2 ||
      !base.edge(0).is_self_loop() || !base.edge(1).is_self_loop()) {
    throw InvalidInput("transitivity check is implemented for the figure eight only");
  }
  const CoveringGraph x1 = z2_cover(base, spanning_tree(base));
  const CoveringGraph x2 = z2_cover(x1.total(), spanning_tree(x1.total()));
  const MultiGraph& top = x2.total();
  std::vector<VertexId> vp(top.vertex_count());
  std::vector<EdgeId> ep(top.edge_count());
  for (VertexId c = 0; c < vp.size(); ++c) vp[c] = x1.vertex_base(x2.vertex_base(c));
  for (EdgeId c = 0; c < ep.size(); ++c) ep[c] = x1.edge_base(x2.edge_base(c));
  const std::size_t fiber = x1.fiber_size() * x2.fiber_size();
  return check_composite_cover(top, base, vp, ep, fiber).ok();
}

}  // namespace boxcover
