#include "boxcover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>

#include <CLI11.hpp>

#include "boxcover/errors.hpp"
#include "boxcover/export.hpp"
#include "boxcover/verify.hpp"

namespace boxcover {

namespace {

struct RunConfig {
  std::size_t levels = 0;
  std::size_t level = 0;
  std::size_t explicit_cap = kDefaultExplicitCap;
  std::size_t radius_cap = kDefaultRadiusCap;
  std::string metric = "graph";
  std::string x, y;
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::string format;
  std::string out_path;
};

// Tower holding `level`; levels above the implicit one cannot be addressed.
Tower tower_for_level(std::size_t level, std::size_t explicit_cap) {
  Tower t = build_tower(std::max<std::size_t>(level, 1), explicit_cap);
  if (level < t.size()) return t;
  try {
    return build_tower(level + 1, explicit_cap);
  } catch (const InvalidInput& e) {
    throw UnsupportedOnImplicit(e.what());
  }
}

struct ParsedPoint {
  std::optional<VertexId> flat;
  VertexId base = 0;
  std::string hex;
};

ParsedPoint parse_point(const std::string& text) {
  static const std::regex flat_re(R"(v(\d+))");
  static const std::regex pair_re(R"(v(\d+)_([0-9a-fA-F]+))");
  std::smatch m;
  ParsedPoint p;
  try {
    if (std::regex_match(text, m, flat_re)) {
      p.flat = static_cast<VertexId>(std::stoul(m[1].str()));
      return p;
    }
    if (std::regex_match(text, m, pair_re)) {
      p.base = static_cast<VertexId>(std::stoul(m[1].str()));
      p.hex = m[2].str();
      return p;
    }
  } catch (const std::out_of_range&) {
  }
  throw InvalidInput("malformed vertex '" + text + "' (expected v<id> or v<base>_<hex>)");
}

VertexId explicit_vertex(const TowerLevel& level, const std::string& text) {
  const ParsedPoint p = parse_point(text);
  const std::size_t n = level.graph().vertex_count();
  VertexId id = 0;
  if (p.flat) {
    id = *p.flat;
  } else if (level.index() == 0) {
    throw InvalidInput("X0 vertices are written v<id>");
  } else {
    const Z2Pair& below = level.below();
    id = level.vertex_id(below.point(p.base, Bits::from_hex(below.fiber_width(), p.hex)));
  }
  if (id >= n) throw InvalidInput("vertex '" + text + "' out of range");
  return id;
}

CoverPoint implicit_point(const TowerLevel& level, const std::string& text) {
  const ParsedPoint p = parse_point(text);
  if (p.flat) {
    throw UnsupportedOnImplicit("implicit level " + std::to_string(level.index()) +
                                " vertices must be written v<base>_<hex>");
  }
  const Z2Pair& below = level.below();
  return below.point(p.base, Bits::from_hex(below.fiber_width(), p.hex));
}

Metric parse_metric(const std::string& s) { return s == "wall" ? Metric::Wall : Metric::Graph; }

// Writes through `body` to --out or to `out`.
int emit(const RunConfig& cfg, std::ostream& out, std::ostream& err,
         const std::function<void(std::ostream&)>& body) {
  if (cfg.out_path.empty()) {
    body(out);
    return kExitOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << cfg.out_path << "' for writing\n";
    return kExitUsage;
  }
  body(file);
  return kExitOk;
}

int cmd_tower(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Tower tower = build_tower(cfg.levels, cfg.explicit_cap);
  const std::string manifest = tower_manifest(tower);
  return emit(cfg, out, err, [&](std::ostream& o) { o << manifest; });
}

int cmd_dist(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Tower tower = tower_for_level(cfg.level, cfg.explicit_cap);
  const TowerLevel& level = tower.level(cfg.level);
  const Metric metric = parse_metric(cfg.metric);
  if (level.is_explicit()) {
    const VertexId a = explicit_vertex(level, cfg.x);
    const VertexId b = explicit_vertex(level, cfg.y);
    out << level.distance(a, b, metric) << '\n';
    return kExitOk;
  }
  const CoverPoint x = implicit_point(level, cfg.x);
  const CoverPoint y = implicit_point(level, cfg.y);
  if (metric == Metric::Wall) {
    out << tower.implicit_wall_distance(cfg.level, x, y) << '\n';
    return kExitOk;
  }
  const auto d = tower.implicit_graph_distance(cfg.level, x, y, cfg.radius_cap);
  if (d) {
    out << *d << '\n';
  } else {
    out << "EXCEEDS_CAP\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.suite != "all" && !is_suite_name(cfg.suite)) {
    err << "error: unknown suite '" << cfg.suite << "'\n";
    return kExitUsage;
  }
  const Tower tower = build_tower(3);
  const VerifyOptions options{cfg.seed, cfg.trials};
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(cfg.suite);
  }

  std::string report = "boxcover verify suite=" + cfg.suite + " seed=" +
                       std::to_string(cfg.seed) + " trials=" + std::to_string(cfg.trials) +
                       "\n";
  bool pass = true;
  for (const auto& name : suites) {
    const SuiteResult r = run_suite(name, tower, options);
    pass = pass && r.pass;
    report += format_suite(r);
  }
  report += std::string("overall: ") + (pass ? "PASS" : "FAIL") + "\n";
  const int code = emit(cfg, out, err, [&](std::ostream& o) { o << report; });
  if (code != kExitOk) return code;
  return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Tower tower = tower_for_level(cfg.level, cfg.explicit_cap);
  const TowerLevel& level = tower.level(cfg.level);
  if (!level.is_explicit()) {
    throw UnsupportedOnImplicit("level " + std::to_string(cfg.level) +
                                " is implicit and cannot be exported");
  }
  if ((cfg.format == "walls" || cfg.format == "embedding") && level.index() == 0) {
    throw InvalidInput("X0 carries no walls");
  }
  std::ostringstream text;
  if (cfg.format == "dot") {
    write_dot(text, level);
  } else if (cfg.format == "graphml") {
    write_graphml(text, level);
  } else if (cfg.format == "csv") {
    write_distance_csv(text, level);
  } else if (cfg.format == "edgelist") {
    write_level_edge_list(text, level);
  } else if (cfg.format == "walls") {
    write_walls_csv(text, level);
  } else {
    write_embedding_csv(text, level);
  }
  return emit(cfg, out, err, [&](std::ostream& o) { o << text.str(); });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Iterated Z/2-homology covers of the figure eight, walls and box spaces",
               "boxcover"};
  app.require_subcommand(1);

  auto* tower = app.add_subcommand("tower", "Build the tower and write its manifest");
  tower->add_option("--levels", cfg.levels, "Number of levels X0..X(levels-1)")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  tower->add_option("--explicit-cap", cfg.explicit_cap, "Largest materialized level")
      ->capture_default_str();
  tower->add_option("--out", cfg.out_path, "Manifest path (default stdout)");

  auto* dist = app.add_subcommand("dist", "Distance between two vertices of one level");
  dist->add_option("--level", cfg.level, "Tower level")->required();
  dist->add_option("--metric", cfg.metric, "graph or wall")
      ->check(CLI::IsMember({"graph", "wall"}))
      ->capture_default_str();
  dist->add_option("--cap", cfg.radius_cap, "Search radius on implicit levels")
      ->check(CLI::Range(std::size_t{0}, std::size_t{64}))
      ->capture_default_str();
  dist->add_option("--explicit-cap", cfg.explicit_cap, "Largest materialized level")
      ->capture_default_str();
  dist->add_option("x", cfg.x, "v<id> or v<base>_<hex>")->required();
  dist->add_option("y", cfg.y, "v<id> or v<base>_<hex>")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite, "all, " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Kernel suite seed")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "Kernel suite trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--out", cfg.out_path, "Report path (default stdout)");

  auto* exp = app.add_subcommand("export", "Export an explicit level");
  exp->add_option("--level", cfg.level, "Tower level")->required();
  exp->add_option("--format", cfg.format, "dot, graphml, csv, edgelist, walls, embedding")
      ->required()
      ->check(CLI::IsMember({"dot", "graphml", "csv", "edgelist", "walls", "embedding"}));
  exp->add_option("--explicit-cap", cfg.explicit_cap, "Largest materialized level")
      ->capture_default_str();
  exp->add_option("--out", cfg.out_path, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (tower->parsed()) return cmd_tower(cfg, out, err);
    if (dist->parsed()) return cmd_dist(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    return cmd_export(cfg, out, err);
  } catch (const UnsupportedOnImplicit& e) {
    err << "error: " << e.what() << '\n';
    return kExitImplicit;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace boxcover
