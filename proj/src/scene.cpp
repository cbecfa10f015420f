#include "darksector/scene.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "darksector/json_support.hpp"

namespace darksector {

Vec2 unit_pi(const RationalTurn& t) {
  if (t.den() == 1) return t.is_zero() ? Vec2{1.0, 0.0} : Vec2{-1.0, 0.0};
  if (t.den() == 2) return t.num() == 1 ? Vec2{0.0, 1.0} : Vec2{0.0, -1.0};
  return unit(t.radians());
}

std::pair<Vec2, Vec2> endpoints(const Mirror& m) {
  return {m.anchor, m.anchor + m.direction() * m.length};
}

std::vector<RationalTurn> mirror_angles(const Scene& scene) {
  std::vector<RationalTurn> angles;
  angles.reserve(scene.mirrors.size());
  for (const auto& m : scene.mirrors) angles.push_back(m.angle);
  return angles;
}

std::string_view code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::NoMirrors: return "no-mirrors";
    case ViolationCode::NonPositiveLength: return "non-positive-length";
    case ViolationCode::MirrorsIntersect: return "mirrors-intersect";
    case ViolationCode::SourceOnMirror: return "source-on-mirror";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

ValidationReport validate_scene(const Scene& scene, double min_clearance) {
  ValidationReport report;
  if (scene.mirrors.empty())
    report.violations.push_back({ViolationCode::NoMirrors, {}, "scene has no mirrors"});

  for (std::size_t i = 0; i < scene.mirrors.size(); ++i) {
    if (!(scene.mirrors[i].length > 0.0))
      report.violations.push_back({ViolationCode::NonPositiveLength,
                                   {i + 1},
                                   "mirror " + std::to_string(i + 1) + " has non-positive length"});
  }

  for (std::size_t i = 0; i < scene.mirrors.size(); ++i) {
    auto [a, b] = endpoints(scene.mirrors[i]);
    for (std::size_t j = i + 1; j < scene.mirrors.size(); ++j) {
      auto [c, d] = endpoints(scene.mirrors[j]);
      if (segment_segment_distance(a, b, c, d) < min_clearance)
        report.violations.push_back({ViolationCode::MirrorsIntersect,
                                     {i + 1, j + 1},
                                     "mirrors " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " are not disjoint"});
    }
    if (point_segment_distance(scene.source, a, b) < min_clearance)
      report.violations.push_back({ViolationCode::SourceOnMirror,
                                   {i + 1},
                                   "source lies on mirror " + std::to_string(i + 1)});
  }
  return report;
}

EnclosingCircle enclosing_circle(const Scene& scene, double margin) {
  std::vector<Vec2> pts{scene.source};
  for (const auto& m : scene.mirrors) {
    auto [a, b] = endpoints(m);
    pts.push_back(a);
    pts.push_back(b);
  }
  auto [xmin, xmax] = std::minmax_element(pts.begin(), pts.end(),
                                          [](Vec2 p, Vec2 q) { return p.x < q.x; });
  auto [ymin, ymax] = std::minmax_element(pts.begin(), pts.end(),
                                          [](Vec2 p, Vec2 q) { return p.y < q.y; });
  Vec2 center{0.5 * (xmin->x + xmax->x), 0.5 * (ymin->y + ymax->y)};
  double reach = 0.0;
  for (Vec2 p : pts) reach = std::max(reach, distance(p, center));
  return {center, reach > 0.0 ? margin * reach : 1.0};
}

// ---------------------------------------------------------------------------
// Scene documents

SceneParseError::SceneParseError(std::string field, std::string detail, std::size_t line)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) +
                         (field.empty() ? std::string() : field + ": ") + detail),
      field_(std::move(field)),
      line_(line) {}

namespace {

void reject_unknown_fields(const Json& obj, std::initializer_list<std::string_view> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw SceneParseError(where.empty() ? it.key() : where + "." + it.key(), "unknown field");
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SceneParseError(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

double read_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw SceneParseError(where, "expected a number");
  return j.get<double>();
}

Vec2 read_point(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SceneParseError(where, "expected [x, y]");
  return {read_number(j[0], where + "[0]"), read_number(j[1], where + "[1]")};
}

RationalTurn read_angle(const Json& j, const std::string& where) {
  if (!j.is_object()) throw SceneParseError(where, "expected {\"num\": p, \"den\": q}");
  reject_unknown_fields(j, {"num", "den"}, where);
  BigInt num, den;
  try {
    num = bigint_from_json(require(j, "num", where));
  } catch (const std::invalid_argument& e) {
    throw SceneParseError(where + ".num", e.what());
  }
  try {
    den = bigint_from_json(require(j, "den", where));
  } catch (const std::invalid_argument& e) {
    throw SceneParseError(where + ".den", e.what());
  }
  if (den == 0) throw SceneParseError(where + ".den", "zero denominator");
  return RationalTurn(num, den);
}

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

Scene load_scene(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SceneParseError("", e.what(), e.byte ? line_of_byte(text, e.byte - 1) : 1);
  }
  if (!doc.is_object()) throw SceneParseError("", "document must be an object");
  reject_unknown_fields(doc, {"mirrors", "source"}, "");

  Scene scene;
  const Json& mirrors = require(doc, "mirrors", "");
  if (!mirrors.is_array()) throw SceneParseError("mirrors", "expected an array");
  for (std::size_t i = 0; i < mirrors.size(); ++i) {
    std::string where = "mirrors[" + std::to_string(i) + "]";
    const Json& m = mirrors[i];
    if (!m.is_object()) throw SceneParseError(where, "expected an object");
    reject_unknown_fields(m, {"anchor", "length", "angle"}, where);
    Mirror mirror;
    mirror.anchor = read_point(require(m, "anchor", where), where + ".anchor");
    mirror.length = read_number(require(m, "length", where), where + ".length");
    mirror.angle = read_angle(require(m, "angle", where), where + ".angle");
    scene.mirrors.push_back(mirror);
  }
  scene.source = read_point(require(doc, "source", ""), "source");
  return scene;
}

Scene load_scene_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SceneParseError("", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scene(buf.str());
}

std::string save_scene(const Scene& scene) {
  Json doc;
  doc["mirrors"] = Json::array();
  for (const auto& m : scene.mirrors) {
    Json jm;
    jm["anchor"] = {m.anchor.x, m.anchor.y};
    jm["length"] = m.length;
    jm["angle"] = to_json(m.angle);
    doc["mirrors"].push_back(std::move(jm));
  }
  doc["source"] = {scene.source.x, scene.source.y};
  return doc.dump(2) + "\n";
}

}  // namespace darksector
