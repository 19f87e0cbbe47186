#include "boxcover/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "boxcover/errors.hpp"
#include "boxcover/parallel.hpp"

namespace boxcover {

namespace {

// Portable draws: the standard distributions are implementation-defined.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_signed(std::mt19937_64& rng) { return 2.0 * uniform_unit(rng) - 1.0; }

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace

std::size_t WallEmbedding::squared_distance(VertexId a, VertexId b) const {
  const auto& ca = coordinates.at(a);
  const auto& cb = coordinates.at(b);
  std::size_t sum = 0;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const int d = static_cast<int>(ca[i]) - static_cast<int>(cb[i]);
    sum += static_cast<std::size_t>(d * d);
  }
  return sum;
}

WallEmbedding wall_embedding(const CoveringGraph& cover,
                             const WallStructure& walls) {
  const std::size_t n = cover.total().vertex_count();
  if (walls.vertex_count() != n) throw InvalidInput("walls belong to another cover");
  WallEmbedding emb;
  emb.base = std::make_shared<const Z2Pair>(cover.base(), cover.spanning());
  emb.coordinates.assign(n, std::vector<std::uint8_t>(walls.wall_count(), 0));
  emb.points.reserve(n);
  for (VertexId c = 0; c < n; ++c) {
    for (EdgeId w = 0; w < walls.wall_count(); ++w) {
      emb.coordinates[c][w] = walls.in_positive(w, c) ? 1 : 0;
    }
    emb.points.push_back(cover_point(cover, c));
  }
  return emb;
}

bool embedding_check(const WallEmbedding& embedding) {
  const std::size_t n = embedding.coordinates.size();
  std::vector<char> row_ok(n, 1);
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = a; b < n && row_ok[a]; ++b) {
      const std::size_t sq = embedding.squared_distance(static_cast<VertexId>(a),
                                                        static_cast<VertexId>(b));
      const std::size_t dw =
          embedding.base->wall_distance(embedding.points[a], embedding.points[b]);
      if (sq != dw) row_ok[a] = 0;
    }
  });
  return std::all_of(row_ok.begin(), row_ok.end(), [](char c) { return c != 0; });
}

double kernel_value(const BoxSpace& space, const KernelProbe& probe) {
  if (probe.points.size() != probe.lambdas.size()) {
    throw InvalidInput("one coefficient per probe point required");
  }
  double sum = 0.0;
  for (double l : probe.lambdas) sum += l;
  if (std::abs(sum) > kLambdaSumTolerance) {
    throw InvalidInput("probe coefficients must sum to zero");
  }
  double value = 0.0;
  const std::size_t r = probe.points.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const auto d = static_cast<double>(box_distance(space, probe.points[i], probe.points[j]));
      value += probe.lambdas[i] * probe.lambdas[j] * d;
    }
  }
  return value;
}

KernelProbe sample_probe(const Tower& tower, std::size_t max_level,
                         std::mt19937_64& rng) {
  std::vector<std::size_t> levels;
  for (std::size_t n = 0; n < tower.size() && n <= max_level; ++n) {
    if (tower.level(n).is_explicit()) levels.push_back(n);
  }
  if (levels.empty()) throw InvalidInput("no explicit levels to sample from");

  KernelProbe probe;
  const std::size_t r = 1 + uniform_index(rng, kMaxProbePoints);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t level = levels[uniform_index(rng, levels.size())];
    const std::size_t n = tower.level(level).graph().vertex_count();
    probe.points.push_back({level, static_cast<VertexId>(uniform_index(rng, n))});
  }
  for (;;) {
    probe.lambdas.assign(r, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      probe.lambdas[i] = uniform_signed(rng);
      sum += probe.lambdas[i];
    }
    if (std::abs(sum) <= 1.0) {
      probe.lambdas[r - 1] = -sum;
      break;
    }
  }
  return probe;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

KernelReport negative_type_suite(const Tower& tower, std::uint64_t seed,
                                 std::size_t trials, Metric metric,
                                 std::size_t max_level) {
  if (trials == 0) throw InvalidInput("at least one trial required");
  const BoxSpace space{&tower, metric};
  struct Outcome {
    double value = 0.0;
    bool symmetric = true;
    bool normalized = true;
  };
  std::vector<Outcome> outcomes(trials);
  parallel_for(trials, [&](std::size_t t) {
    auto rng = trial_rng(seed, t);
    const KernelProbe probe = sample_probe(tower, max_level, rng);
    Outcome& out = outcomes[t];
    out.value = kernel_value(space, probe);
    for (const auto& p : probe.points) {
      if (box_distance(space, p, p) != 0) out.normalized = false;
      for (const auto& q : probe.points) {
        if (box_distance(space, p, q) != box_distance(space, q, p)) out.symmetric = false;
      }
    }
  });

  KernelReport report;
  report.seed = seed;
  report.trials = trials;
  report.metric = metric;
  report.max_value = outcomes.front().value;
  for (const auto& o : outcomes) {
    report.max_value = std::max(report.max_value, o.value);
    report.symmetric = report.symmetric && o.symmetric;
    report.normalized = report.normalized && o.normalized;
  }
  report.pass = report.max_value <= kKernelTolerance && report.symmetric &&
                report.normalized;
  return report;
}

std::string KernelReport::to_text() const {
  char value[64];
  std::snprintf(value, sizeof value, "%.9e", max_value);
  std::ostringstream out;
  out << "seed: " << seed << '\n'
      << "trials: " << trials << '\n'
      << "metric: " << metric_name(metric) << '\n'
      << "max_form_value: " << value << '\n'
      << "tolerance: 1e-9\n"
      << "symmetric: " << (symmetric ? "yes" : "no") << '\n'
      << "normalized: " << (normalized ? "yes" : "no") << '\n'
      << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace boxcover
