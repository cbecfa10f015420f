#pragma once

// JSON documents emitted by the command-line tool. Angles are written in
// radians with round-trip precision, plus a multiple of pi whenever the value
// is exact.

#include <cstdint>
#include <optional>

#include "darksector/circle_map.hpp"
#include "darksector/dark_sector.hpp"
#include "darksector/json_support.hpp"
#include "darksector/scene.hpp"
#include "darksector/tracer.hpp"
#include "darksector/unfolding.hpp"

namespace darksector {

Json to_json(Vec2 p);
Json to_json(const Arc& arc);
Json to_json(const EnclosingCircle& circle);
Json to_json(const Itinerary& itinerary);
Json to_json(const DecompositionParams& params);

Json validation_report(const ValidationReport& report);

Json trace_report(const TraceResult& tr, double theta0, const std::optional<RationalTurn>& theta0_exact,
                  const EnclosingCircle& circle, std::size_t cap);

Json decomposition_report(const Decomposition& d);

Json sector_report(const SectorAnalysis& analysis, std::size_t samples, std::uint64_t seed);

Json census_report(const UnfoldedSurface& surface, const std::vector<ConeCycle>& cycles,
                   const SurfaceCensus& census, long euler_characteristic);

}  // namespace darksector
