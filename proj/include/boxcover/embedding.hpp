#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "boxcover/covering.hpp"
#include "boxcover/tower.hpp"
#include "boxcover/walls.hpp"

namespace boxcover {

/// 0/1 coordinates of an explicit cover: coordinate w of vertex x is 1 iff x
/// lies in the positive half-space of wall w (walls in base-edge order).
/// Squared Euclidean distance between images equals the wall distance.
struct WallEmbedding {
  std::vector<std::vector<std::uint8_t>> coordinates;  // per cover vertex
  std::vector<CoverPoint> points;                      // per cover vertex
  std::shared_ptr<const Z2Pair> base;                  // for d_W

  std::size_t dimension() const {
    return coordinates.empty() ? 0 : coordinates.front().size();
  }
  std::size_t squared_distance(VertexId a, VertexId b) const;
};

WallEmbedding wall_embedding(const CoveringGraph& cover,
                             const WallStructure& walls);

/// True iff squared_distance(a, b) equals the parity-vector wall distance
/// for every pair of vertices (exact integers).
bool embedding_check(const WallEmbedding& embedding);

/// Points of the box space with coefficients summing to zero.
struct KernelProbe {
  std::vector<BoxPoint> points;
  std::vector<double> lambdas;
};

inline constexpr double kLambdaSumTolerance = 1e-12;
inline constexpr double kKernelTolerance = 1e-9;
inline constexpr std::size_t kMaxProbePoints = 16;

/// sum_ij lambda_i lambda_j d(x_i, x_j) in the box space. Throws
/// InvalidInput if the coefficients do not sum to zero within 1e-12,
/// UnsupportedOnImplicit for points on implicit levels.
double kernel_value(const BoxSpace& space, const KernelProbe& probe);

/// Random probe: 1..16 points on explicit levels <= max_level, coefficients
/// drawn as r-1 uniforms in [-1,1] with the last set to minus their sum and
/// redrawn while it leaves [-1,1].
KernelProbe sample_probe(const Tower& tower, std::size_t max_level,
                         std::mt19937_64& rng);

struct KernelReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Metric metric = Metric::Wall;
  double max_value = 0.0;
  bool symmetric = true;   // d(x,y) == d(y,x) on all sampled pairs
  bool normalized = true;  // d(x,x) == 0 on all sampled points
  bool pass = false;

  std::string to_text() const;
};

/// Deterministic given (seed, trials): trial i draws from a generator seeded
/// with (seed, i), so shards may run in any order.
KernelReport negative_type_suite(const Tower& tower, std::uint64_t seed,
                                 std::size_t trials,
                                 Metric metric = Metric::Wall,
                                 std::size_t max_level = 2);

/// Generator for trial `trial` of a suite seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

}  // namespace boxcover
