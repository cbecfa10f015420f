#include "darksector/report.hpp"

namespace darksector {

Json to_json(Vec2 p) { return Json::array({p.x, p.y}); }

Json to_json(const Arc& arc) {
  Json j;
  j["start"] = arc.start;
  j["end"] = arc.end;
  j["measure"] = arc.measure();
  return j;
}

Json to_json(const EnclosingCircle& circle) {
  Json j;
  j["center"] = to_json(circle.center);
  j["radius"] = circle.radius;
  return j;
}

Json to_json(const Itinerary& itinerary) {
  Json j = Json::array();
  for (const auto& step : itinerary) {
    Json s;
    s["mirror"] = step.mirror;
    s["side"] = std::string(1, lip_symbol(step.side));
    j.push_back(std::move(s));
  }
  return j;
}

Json to_json(const DecompositionParams& params) {
  Json j;
  j["seeds"] = params.seeds;
  j["eps_b"] = params.eps_b;
  j["cap"] = params.cap;
  return j;
}

namespace {

Json isometry_json(const GroupElement& g) {
  Json j = to_json(g);
  j["c_pi"] = g.c.to_string();
  return j;
}

Json arcs_json(const std::vector<Arc>& arcs) {
  Json j = Json::array();
  for (const auto& a : arcs) j.push_back(to_json(a));
  return j;
}

Json sector_json(const DarkSector& s, const DarkArc& dark) {
  Json j;
  j["arc"] = to_json(dark.arc);
  j["shrunk"] = dark.shrunk;
  j["apex"] = to_json(s.apex);
  j["dir_lo"] = s.dir_lo;
  j["dir_hi"] = s.dir_hi;
  j["angle"] = s.angle();
  j["tangent_points"] = Json::array({to_json(s.tangent1), to_json(s.tangent2)});
  return j;
}

Json check_json(const DarknessCheck& c) {
  Json j;
  j["passed"] = c.passed;
  j["checked"] = c.checked;
  j["skipped"] = c.skipped;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace

Json validation_report(const ValidationReport& report) {
  Json j;
  j["valid"] = report.ok();
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    Json jv;
    jv["code"] = std::string(code_name(v.code));
    jv["mirrors"] = v.mirrors;
    jv["message"] = v.message;
    j["violations"].push_back(std::move(jv));
  }
  return j;
}

Json trace_report(const TraceResult& tr, double theta0, const std::optional<RationalTurn>& theta0_exact,
                  const EnclosingCircle& circle, std::size_t cap) {
  Json j;
  j["theta0"] = theta0;
  if (theta0_exact) j["theta0_pi"] = theta0_exact->to_string();
  j["cap"] = cap;
  j["status"] = status_name(tr.status);
  j["bounce_count"] = tr.bounce_count;
  j["itinerary"] = to_json(tr.itinerary);
  j["path"] = Json::array();
  for (Vec2 p : tr.path) j["path"].push_back(to_json(p));
  j["exit_point"] = to_json(tr.exit_point);
  j["exit_dir"] = tr.exit_dir_numeric;
  if (theta0_exact) j["exit_dir_pi"] = apply(tr.exit_dir_exact, *theta0_exact).to_string();
  j["exit_dir_exact"] = isometry_json(tr.exit_dir_exact);
  j["circle"] = to_json(circle);
  if (tr.status == TraceStatus::Escaped) {
    auto [q, dir] = exit_ray(tr, circle);
    j["exit_on_circle"] = to_json(q);
  }
  return j;
}

Json decomposition_report(const Decomposition& d) {
  Json j;
  j["params"] = to_json(d.params);
  j["circle"] = to_json(d.circle);
  j["group_order"] = d.group_order;
  j["trace_count"] = d.trace_count;
  j["measure_U"] = d.measure_U;
  j["resolution"] = "components narrower than the seed spacing may be missed; unaccounted measure is 2pi - "
                    "measure_U - trapped - singular";
  j["seed_spacing"] = kTwoPi / static_cast<double>(d.params.seeds);
  j["components"] = Json::array();
  for (const auto& c : d.components) {
    Json jc;
    jc["arc"] = to_json(c.arc);
    jc["itinerary"] = to_json(c.itinerary);
    jc["isometry"] = isometry_json(c.isometry);
    jc["image"] = to_json(c.image);
    j["components"].push_back(std::move(jc));
  }
  j["trapped_arcs"] = arcs_json(d.trapped_arcs);
  j["singular_arcs"] = arcs_json(d.singular_arcs);
  j["singular_directions"] = d.singular_directions;
  return j;
}

Json sector_report(const SectorAnalysis& a, std::size_t samples, std::uint64_t seed) {
  Json j;
  j["decomposition"] = decomposition_report(a.decomposition);
  Json inj;
  inj["injective"] = a.injectivity.injective;
  if (a.injectivity.witness) {
    const auto& comps = a.decomposition.components;
    auto [t1, t2] = *a.injectivity.witness;
    inj["witness"] = Json::array({t1, t2});
    inj["witness_images"] = Json::array({apply(comps[a.injectivity.first_component].isometry, t1),
                                         apply(comps[a.injectivity.second_component].isometry, t2)});
  }
  j["injectivity"] = std::move(inj);
  j["unlit_arcs"] = arcs_json(a.unlit);
  j["sectors"] = Json::array();
  for (std::size_t i = 0; i < a.sectors.size(); ++i) j["sectors"].push_back(sector_json(a.sectors[i], a.dark_arcs[i]));
  if (a.chosen) {
    j["chosen_sector"] = *a.chosen;
    Json v;
    v["samples"] = samples;
    v["seed"] = seed;
    v["oracle_inclusion"] = check_json(a.verification->oracle_inclusion);
    v["image_disjoint"] = check_json(a.verification->image_disjoint);
    v["exit_rays"] = check_json(a.verification->exit_rays);
    v["passed"] = a.verification->passed();
    j["verification"] = std::move(v);
    j["certified"] = a.certified();
  } else {
    j["chosen_sector"] = nullptr;
    j["certified"] = false;
    j["note"] = "no sector certified";
  }
  return j;
}

Json census_report(const UnfoldedSurface& surface, const std::vector<ConeCycle>& cycles,
                   const SurfaceCensus& census, long euler_characteristic) {
  Json j;
  j["m"] = census.sheets;
  j["slits"] = census.slits;
  j["sheets"] = Json::array();
  for (const auto& g : surface.sheets) j["sheets"].push_back(isometry_json(g));
  j["gluings"] = Json::array();
  for (const auto& glue : surface.gluings) j["gluings"].push_back(glue);
  j["cycles"] = Json::array();
  for (const auto& c : cycles) {
    Json jc;
    jc["slit"] = c.slit;
    jc["endpoint"] = c.endpoint == SlitEnd::First ? "first" : "second";
    jc["sheet_cycle"] = c.sheet_cycle;
    jc["length"] = c.length();
    jc["cone_angle"] = c.cone_angle();
    jc["cone_angle_pi"] = std::to_string(2 * c.length());
    j["cycles"].push_back(std::move(jc));
  }
  j["zeros"] = Json::array();
  for (const auto& z : census.zeros) {
    Json jz;
    jz["slit"] = z.cycle.slit;
    jz["endpoint"] = z.cycle.endpoint == SlitEnd::First ? "first" : "second";
    jz["order"] = z.order;
    j["zeros"].push_back(std::move(jz));
  }
  j["poles"] = Json::array();
  for (const auto& p : census.poles) {
    Json jp;
    jp["sheet"] = p.sheet;
    jp["order"] = p.order;
    jp["residue"] = p.residue;
    j["poles"].push_back(std::move(jp));
  }
  j["degree"] = census.degree;
  j["genus"] = census.genus;
  j["euler_characteristic"] = euler_characteristic;
  return j;
}

}  // namespace darksector
