#include "darksector/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "darksector/circle_map.hpp"
#include "darksector/dark_sector.hpp"
#include "darksector/report.hpp"
#include "darksector/svg.hpp"
#include "darksector/tracer.hpp"
#include "darksector/unfolding.hpp"

namespace darksector::cli {

std::optional<Command> parse_command(std::string_view name) {
  if (name == "validate") return Command::Validate;
  if (name == "trace") return Command::Trace;
  if (name == "map") return Command::Map;
  if (name == "sectors") return Command::Sectors;
  if (name == "unfold") return Command::Unfold;
  if (name == "render") return Command::Render;
  return std::nullopt;
}

void check_config(const RunConfig& config) {
  if (config.seeds < 8) throw std::invalid_argument("--seeds must be at least 8");
  if (config.cap < 1) throw std::invalid_argument("--cap must be at least 1");
  if (!(config.eps_b > 0.0 && config.eps_b <= 1e-3)) throw std::invalid_argument("--eps-b must lie in (0, 1e-3]");
  if (!(config.margin > 1.0)) throw std::invalid_argument("--margin must exceed 1");
  if (config.radius && !(*config.radius > 0.0)) throw std::invalid_argument("--radius must be positive");
  if (config.command == Command::Trace && !config.theta && !config.theta_pi)
    throw std::invalid_argument("trace needs --theta or --theta-pi");
}

RationalTurn parse_pi_multiple(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string_view::npos)
      throw std::invalid_argument("not an integer: " + std::string(s));
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalTurn(parse_int(text), BigInt(1));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  return RationalTurn(parse_int(text.substr(0, slash)), den);
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

class InvalidScene : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::optional<std::filesystem::path>& path, const std::string& content, std::ostream& out) {
  if (path) {
    write_atomically(*path, content);
  } else {
    out << content;
  }
}

EnclosingCircle circle_for(const Scene& scene, const RunConfig& config) {
  EnclosingCircle k = enclosing_circle(scene, config.margin);
  if (config.radius) {
    k.radius = *config.radius;
    auto inside = [&](Vec2 p) { return k.strictly_contains(p); };
    bool ok = inside(scene.source);
    for (const auto& m : scene.mirrors) {
      auto [a, b] = endpoints(m);
      ok = ok && inside(a) && inside(b);
    }
    if (!ok) throw InvalidScene("--radius does not enclose every mirror and the source");
  }
  return k;
}

DecompositionParams params_of(const RunConfig& config) {
  DecompositionParams p;
  p.seeds = config.seeds;
  p.eps_b = config.eps_b;
  p.cap = config.cap;
  p.threads = config.threads;
  return p;
}

// The traced polyline, continued past K to the viewport edge.
TracePolyline polyline_of(const TraceResult& tr, const EnclosingCircle& k, std::size_t color) {
  TracePolyline line{tr.path, color};
  if (tr.status == TraceStatus::Escaped) {
    auto [q, dir] = exit_ray(tr, k);
    line.points.push_back(q);
    line.points.push_back(q + unit(dir) * (6.0 * k.radius));
  } else {
    line.points.push_back(tr.exit_point);
  }
  return line;
}

int run_sectors(const RunConfig& config, const Scene& scene, const EnclosingCircle& k, std::ostream& out,
                std::ostream& err) {
  Tracer tracer(scene);
  SectorAnalysis analysis = analyze_sectors(tracer, k, params_of(config), config.samples, config.seed);
  emit(config.out_path, sector_report(analysis, config.samples, config.seed).dump(2) + "\n", out);

  if (config.svg_path) {
    SvgOverlays overlays;
    overlays.sectors = analysis.sectors;
    const auto& comps = analysis.decomposition.components;
    std::vector<std::size_t> order(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return comps[a].arc.measure() > comps[b].arc.measure();
    });
    if (order.size() > 32) order.resize(32);
    std::sort(order.begin(), order.end());
    TraceOptions options;
    options.cap = config.cap;
    for (std::size_t i : order)
      overlays.traces.push_back(polyline_of(tracer.trace(comps[i].arc.midpoint(), options), k, i));
    write_atomically(*config.svg_path, render_svg(scene, k, overlays));
  }

  if (!analysis.chosen) {
    err << "no dark sector certified: the escape map showed no unlit arc\n";
    return kNoDarkSector;
  }
  if (!analysis.verification->passed()) {
    err << "darkness verification failed; see the verification section of the report\n";
    return kInternalFailure;
  }
  return kOk;
}

int run_render(const RunConfig& config, const Scene& scene, std::ostream& out) {
  EnclosingCircle k = circle_for(scene, config);
  SvgOverlays overlays;
  if (config.report_path) {
    std::ifstream in(*config.report_path, std::ios::binary);
    if (!in) throw SceneParseError("", "cannot open " + config.report_path->string());
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw SceneParseError("report", e.what());
    }
    auto read_vec = [](const Json& j) { return Vec2{j.at(0).get<double>(), j.at(1).get<double>()}; };
    try {
      const Json* circle = doc.contains("circle")                                        ? &doc["circle"]
                           : doc.contains("decomposition") ? &doc["decomposition"]["circle"]
                                                           : nullptr;
      if (circle) k = {read_vec(circle->at("center")), circle->at("radius").get<double>()};
      if (doc.contains("sectors")) {
        for (const auto& js : doc["sectors"]) {
          DarkSector s;
          s.apex = read_vec(js.at("apex"));
          s.dir_lo = js.at("dir_lo").get<double>();
          s.dir_hi = js.at("dir_hi").get<double>();
          s.circle = k;
          overlays.sectors.push_back(s);
        }
      }
      if (doc.contains("path")) {
        TracePolyline line;
        for (const auto& p : doc["path"]) line.points.push_back(read_vec(p));
        if (doc.contains("exit_on_circle")) {
          Vec2 q = read_vec(doc["exit_on_circle"]);
          line.points.push_back(q);
          line.points.push_back(q + unit(doc.at("exit_dir").get<double>()) * (6.0 * k.radius));
        }
        overlays.traces.push_back(std::move(line));
      }
    } catch (const Json::exception& e) {
      throw SceneParseError("report", e.what());
    }
  }
  std::string svg = render_svg(scene, k, overlays);
  emit(config.svg_path ? config.svg_path : config.out_path, svg, out);
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    Scene scene = load_scene_file(config.scene_path);
    if (config.command == Command::Render) return run_render(config, scene, out);

    ValidationReport validation = validate_scene(scene);
    if (config.command == Command::Validate) {
      emit(config.out_path, validation_report(validation).dump(2) + "\n", out);
      return validation.ok() ? kOk : kInvalidScene;
    }
    if (!validation.ok()) {
      for (const auto& v : validation.violations) err << code_name(v.code) << ": " << v.message << "\n";
      return kInvalidScene;
    }
    const EnclosingCircle k = circle_for(scene, config);

    switch (config.command) {
      case Command::Trace: {
        Tracer tracer(scene);
        double theta = config.theta_pi ? config.theta_pi->radians() : *config.theta;
        TraceOptions options;
        options.cap = config.cap;
        TraceResult tr = tracer.trace(theta, options);
        emit(config.out_path, trace_report(tr, theta, config.theta_pi, k, config.cap).dump(2) + "\n", out);
        if (config.svg_path) {
          SvgOverlays overlays;
          overlays.traces.push_back(polyline_of(tr, k, 0));
          write_atomically(*config.svg_path, render_svg(scene, k, overlays));
        }
        return kOk;
      }
      case Command::Map: {
        Decomposition d = decompose(Tracer(scene), k, params_of(config));
        emit(config.out_path, decomposition_report(d).dump(2) + "\n", out);
        return kOk;
      }
      case Command::Sectors:
        return run_sectors(config, scene, k, out, err);
      case Command::Unfold: {
        UnfoldedSurface surface = build_surface(scene);
        auto cycles = cone_cycles(surface);
        SurfaceCensus c = census(surface, cycles);
        long chi = euler_check(surface, cycles);
        emit(config.out_path, census_report(surface, cycles, c, chi).dump(2) + "\n", out);
        return kOk;
      }
      case Command::Validate:
      case Command::Render:
        break;
    }
    return kInternalFailure;
  } catch (const SceneParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidScene& e) {
    err << "invalid scene: " << e.what() << "\n";
    return kInvalidScene;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternalFailure;
  }
}

}  // namespace darksector::cli
