#include "boxcover/export.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "boxcover/embedding.hpp"
#include "boxcover/errors.hpp"

namespace boxcover {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Cloud label and base edge of a vertex/edge; X_0 has neither.
std::string cloud_of(const TowerLevel& level, VertexId c) {
  return level.index() == 0 ? "0" : level.cover().fiber_label(c);
}

EdgeId base_edge_of(const TowerLevel& level, EdgeId c) {
  return level.index() == 0 ? c : level.cover().edge_base(c);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string edge_list_hash(const MultiGraph& g) {
  std::ostringstream text;
  write_edge_list(text, g);
  return "fnv1a64:" + hex64(fnv1a64(text.str()));
}

std::string tower_manifest(const Tower& tower) {
  using Json = nlohmann::ordered_json;
  Json levels = Json::array();
  for (std::size_t n = 0; n < tower.size(); ++n) {
    const TowerLevel& level = tower.level(n);
    Json entry;
    entry["index"] = n;
    entry["kind"] = level.is_explicit() ? "explicit" : "implicit";
    entry["fiber_width"] = level.fiber_width();
    if (!level.is_explicit()) {
      entry["vertices"] = level.vertex_count_text();
      entry["edges"] = level.edge_count_text();
      entry["base_level"] = n - 1;
      levels.push_back(std::move(entry));
      continue;
    }
    const MultiGraph& g = level.graph();
    const SpanningData& t = level.spanning();
    entry["vertices"] = g.vertex_count();
    entry["edges"] = g.edge_count();
    if (const auto girth = level.girth()) {
      entry["girth"] = *girth;
    } else {
      entry["girth"] = nullptr;
    }
    entry["diameter"] = level.diameter(Metric::Graph);
    entry["wall_diameter"] = level.diameter(Metric::Wall);
    entry["spanning_root"] = t.root;
    entry["spanning_tree_edges"] = t.tree_edges;
    entry["s_edge_order"] = t.complement;
    entry["edge_list_hash"] = edge_list_hash(g);
    levels.push_back(std::move(entry));
  }
  Json doc;
  doc["format"] = "boxcover-tower-manifest";
  doc["version"] = 1;
  doc["base"] = "figure-eight";
  doc["explicit_cap"] = tower.explicit_cap();
  doc["levels"] = std::move(levels);
  return doc.dump(2) + "\n";
}

std::string node_name(const TowerLevel& level, VertexId c) {
  if (level.index() == 0) return "v" + std::to_string(c);
  const CoveringGraph& cover = level.cover();
  return "v" + std::to_string(cover.vertex_base(c)) + "_" + cover.fiber_label(c);
}

void write_dot(std::ostream& out, const TowerLevel& level) {
  const MultiGraph& g = level.graph();
  out << "graph X" << level.index() << " {\n";
  for (VertexId c = 0; c < g.vertex_count(); ++c) {
    out << "  " << node_name(level, c) << " [cloud=\"" << cloud_of(level, c) << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << node_name(level, ed.u) << " -- " << node_name(level, ed.v)
        << " [label=\"e" << base_edge_of(level, e) << "\"];\n";
  }
  out << "}\n";
}

void write_graphml(std::ostream& out, const TowerLevel& level) {
  const MultiGraph& g = level.graph();
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"cloud\" for=\"node\" attr.name=\"cloud\" attr.type=\"string\"/>\n"
      << "  <key id=\"base_edge\" for=\"edge\" attr.name=\"base_edge\" attr.type=\"int\"/>\n"
      << "  <graph id=\"X" << level.index() << "\" edgedefault=\"undirected\">\n";
  for (VertexId c = 0; c < g.vertex_count(); ++c) {
    out << "    <node id=\"" << xml_escape(node_name(level, c)) << "\"><data key=\"cloud\">"
        << xml_escape(cloud_of(level, c)) << "</data></node>\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "    <edge id=\"e" << e << "\" source=\"" << xml_escape(node_name(level, ed.u))
        << "\" target=\"" << xml_escape(node_name(level, ed.v))
        << "\"><data key=\"base_edge\">" << base_edge_of(level, e) << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_distance_csv(std::ostream& out, const TowerLevel& level) {
  const std::size_t n = level.graph().vertex_count();
  out << "vertex";
  for (VertexId c = 0; c < n; ++c) out << ',' << node_name(level, c);
  out << '\n';
  for (VertexId a = 0; a < n; ++a) {
    out << node_name(level, a);
    for (VertexId b = 0; b < n; ++b) out << ',' << level.distance(a, b, Metric::Graph);
    out << '\n';
  }
}

void write_level_edge_list(std::ostream& out, const TowerLevel& level) {
  write_edge_list(out, level.graph());
}

void write_walls_csv(std::ostream& out, const TowerLevel& level) {
  const WallStructure& walls = level.walls();
  out << "wall,base_edge,size,positive,negative\n";
  for (EdgeId w = 0; w < walls.wall_count(); ++w) {
    const std::size_t pos = walls.positive_size(w);
    out << 'w' << w << ',' << w << ',' << walls.wall(w).size() << ',' << pos << ','
        << walls.vertex_count() - pos << '\n';
  }
}

void write_embedding_csv(std::ostream& out, const TowerLevel& level) {
  const WallEmbedding emb = wall_embedding(level.cover(), level.walls());
  out << "vertex,fiber";
  for (std::size_t w = 0; w < emb.dimension(); ++w) out << ",w" << w;
  out << '\n';
  for (VertexId c = 0; c < emb.coordinates.size(); ++c) {
    out << c << ',' << emb.points[c].fiber.to_hex();
    for (auto x : emb.coordinates[c]) out << ',' << static_cast<int>(x);
    out << '\n';
  }
}

}  // namespace boxcover
