#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "boxcover/tower.hpp"

namespace boxcover {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a64:<16 hex digits>" of the level's edge list in edge-list format.
std::string edge_list_hash(const MultiGraph& g);

/// JSON manifest of every level: kind, sizes, girth, diameters, spanning
/// tree, S-edge order (the fiber bit order of the next level) and the edge
/// list hash. Ends with a newline.
std::string tower_manifest(const Tower& tower);

/// "v{base}_{fiberhex}" for covers, "v{id}" for X_0.
std::string node_name(const TowerLevel& level, VertexId c);

// Exporters for explicit levels; throw UnsupportedOnImplicit otherwise.
void write_dot(std::ostream& out, const TowerLevel& level);
void write_graphml(std::ostream& out, const TowerLevel& level);
/// All-pairs graph distance matrix with a header row of node names.
void write_distance_csv(std::ostream& out, const TowerLevel& level);
void write_level_edge_list(std::ostream& out, const TowerLevel& level);
/// wall id, base edge, wall size, positive and negative half-space sizes.
void write_walls_csv(std::ostream& out, const TowerLevel& level);
/// Header of wall ids; per vertex: id, fiber hex, 0/1 coordinates.
void write_embedding_csv(std::ostream& out, const TowerLevel& level);

}  // namespace boxcover
