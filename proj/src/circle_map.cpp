#include "darksector/circle_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "parallel.hpp"

namespace darksector {

void check_params(const DecompositionParams& params) {
  if (params.seeds < 8) throw std::invalid_argument("seed count must be at least 8");
  if (params.cap < 1) throw std::invalid_argument("bounce cap must be at least 1");
  if (!(params.eps_b > 0.0 && params.eps_b <= 1e-3))
    throw std::invalid_argument("eps_b must lie in (0, 1e-3]");
}

namespace {

// Samples keep a fingerprint of the itinerary rather than the itinerary
// itself: near a periodic direction every bisection sample may carry
// thousands of steps.
struct Sample {
  double theta = 0.0;
  TraceStatus status = TraceStatus::Escaped;
  std::size_t length = 0;       // itinerary length, escaped traces only
  std::uint64_t digest = 0;     // itinerary hash, escaped traces only
  std::size_t element = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the running state
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

std::uint64_t digest_of(const Itinerary& itinerary) {
  std::uint64_t h = 0;
  for (const auto& step : itinerary) h = mix(h, (std::uint64_t{step.mirror} << 1) | (step.side == Lip::Minus));
  return h;
}

// Itinerary plus terminal status; capped and singular traces compare by
// status alone.
bool same_key(const Sample& a, const Sample& b) {
  if (a.status != b.status) return false;
  if (a.status != TraceStatus::Escaped) return true;
  return a.length == b.length && a.element == b.element && a.digest == b.digest;
}

class Sampler {
 public:
  Sampler(const Tracer& tracer, const DecompositionParams& params) : tracer_(tracer), params_(params) {
    options_.cap = params.cap;
    options_.record_path = false;
    options_.keep_trapped_itinerary = false;
  }

  Sample at(double theta) const {
    TraceResult tr = tracer_.trace(theta, options_);
    Sample s{theta, tr.status, 0, 0, tr.exit_dir_index};
    if (tr.status == TraceStatus::Escaped) {
      s.length = tr.itinerary.size();
      s.digest = digest_of(tr.itinerary);
    }
    return s;
  }

  Itinerary itinerary_at(double theta) const { return tracer_.trace(theta, options_).itinerary; }

  // Appends, in order, the samples strictly between a and b needed to put
  // every key change within eps_b. Returns the number of traces made.
  std::size_t refine(const Sample& a, const Sample& b, std::vector<Sample>& out) const {
    if (b.theta - a.theta <= params_.eps_b) return 0;
    double mid = a.theta + 0.5 * (b.theta - a.theta);
    if (!(mid > a.theta && mid < b.theta)) return 0;
    Sample m = at(mid);
    std::size_t traces = 1;
    if (!same_key(a, m)) traces += refine(a, m, out);
    bool right = !same_key(m, b);
    out.push_back(m);
    if (right) traces += refine(m, b, out);
    return traces;
  }

 private:
  const Tracer& tracer_;
  DecompositionParams params_;
  TraceOptions options_;
};

}  // namespace

Arc image_of(const Arc& arc, const GroupElement& g) {
  if (arc.is_full()) return Arc::full();
  if (g.s == 1) return {apply(g, arc.start), apply(g, arc.end)};
  return {apply(g, arc.end), apply(g, arc.start)};
}

Decomposition decompose(const Tracer& tracer, const EnclosingCircle& circle,
                        const DecompositionParams& params) {
  check_params(params);
  const std::size_t n = params.seeds;
  Sampler sampler(tracer, params);

  std::vector<Sample> seeds(n);
  detail::parallel_for(n, params.threads, [&](std::size_t i) {
    seeds[i] = sampler.at(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
  });

  std::vector<std::vector<Sample>> interior(n);
  std::vector<std::size_t> traces(n, 0);
  detail::parallel_for(n, params.threads, [&](std::size_t i) {
    const Sample& a = seeds[i];
    Sample b = i + 1 < n ? seeds[i + 1] : seeds[0];
    if (i + 1 == n) b.theta = kTwoPi;
    if (!same_key(a, b)) traces[i] = sampler.refine(a, b, interior[i]);
  });

  std::vector<Sample> samples;
  std::size_t trace_count = n;
  for (std::size_t i = 0; i < n; ++i) {
    samples.push_back(std::move(seeds[i]));
    trace_count += traces[i];
    for (auto& s : interior[i]) samples.push_back(std::move(s));
  }

  Decomposition d;
  d.params = params;
  d.circle = circle;
  d.group_order = tracer.group().order();
  d.trace_count = trace_count;

  const std::size_t count = samples.size();
  auto next = [count](std::size_t i) { return i + 1 == count ? 0 : i + 1; };

  // Sample indices i with a key change between i and next(i).
  std::vector<std::size_t> cuts;
  std::vector<double> boundary;
  for (std::size_t i = 0; i < count; ++i) {
    const Sample& a = samples[i];
    const Sample& b = samples[next(i)];
    if (same_key(a, b)) continue;
    double hi = next(i) == 0 ? b.theta + kTwoPi : b.theta;
    cuts.push_back(i);
    boundary.push_back(wrap_two_pi(0.5 * (a.theta + hi)));
  }

  const auto& elements = tracer.group().elements();
  auto add_run = [&](const Arc& arc, std::size_t first, std::size_t last) {
    const Sample& rep = samples[first];
    if (rep.status == TraceStatus::BounceCapExceeded) {
      d.trapped_arcs.push_back(arc);
      return;
    }
    if (rep.status == TraceStatus::Singular) {
      d.singular_arcs.push_back(arc);
      return;
    }
    for (std::size_t i = first; i != last; i = next(i)) {
      if (samples[next(i)].element != rep.element)
        throw DecompositionError("isometry changes inside the run starting at " +
                                 std::to_string(rep.theta) + " rad; refine eps_b or raise the cap");
    }
    MapComponent c;
    c.arc = arc;
    c.itinerary = sampler.itinerary_at(rep.theta);
    c.isometry_index = rep.element;
    c.isometry = elements[rep.element];
    c.image = image_of(arc, c.isometry);
    d.components.push_back(std::move(c));
  };

  if (cuts.empty()) {
    add_run(Arc::full(), 0, count - 1);
  } else {
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      std::size_t k2 = (k + 1) % cuts.size();
      add_run(Arc{boundary[k], boundary[k2]}, next(cuts[k]), cuts[k2]);
    }
  }

  std::sort(d.components.begin(), d.components.end(),
            [](const MapComponent& a, const MapComponent& b) { return a.arc.start < b.arc.start; });
  auto by_start = [](const Arc& a, const Arc& b) { return a.start < b.start; };
  std::sort(d.trapped_arcs.begin(), d.trapped_arcs.end(), by_start);
  std::sort(d.singular_arcs.begin(), d.singular_arcs.end(), by_start);
  std::sort(boundary.begin(), boundary.end());
  d.singular_directions = std::move(boundary);
  d.measure_U = 0.0;
  for (const auto& c : d.components) d.measure_U += c.arc.measure();
  return d;
}

Decomposition decompose(const Scene& scene, const EnclosingCircle& circle,
                        const DecompositionParams& params) {
  return decompose(Tracer(scene), circle, params);
}

std::vector<Arc> image_arcs(const Decomposition& d) {
  std::vector<Arc> out;
  out.reserve(d.components.size());
  for (const auto& c : d.components) out.push_back(c.image);
  return out;
}

Injectivity is_injective(const Decomposition& d, std::optional<double> overlap_tol) {
  const double tol = overlap_tol.value_or(4.0 * d.params.eps_b);
  struct Piece {
    Interval iv;
    std::size_t component;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (const auto& iv : unwrap(d.components[i].image)) pieces.push_back({iv, i});
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.iv.lo < b.iv.lo; });

  Injectivity result;
  const Piece* reach = nullptr;  // piece with the largest hi so far
  for (const auto& p : pieces) {
    if (reach && reach->component != p.component) {
      double overlap = std::min(reach->iv.hi, p.iv.hi) - p.iv.lo;
      if (overlap > tol) {
        double mid = p.iv.lo + 0.5 * overlap;
        std::size_t i = std::min(reach->component, p.component);
        std::size_t j = std::max(reach->component, p.component);
        result.injective = false;
        result.first_component = i;
        result.second_component = j;
        result.witness = std::make_pair(apply(inverse(d.components[i].isometry), mid),
                                        apply(inverse(d.components[j].isometry), mid));
        return result;
      }
    }
    if (!reach || p.iv.hi > reach->iv.hi) reach = &p;
  }
  return result;
}

std::vector<Arc> unlit_arcs(const Decomposition& d) {
  const double pad = d.params.eps_b;
  std::vector<Arc> domain;
  std::vector<Arc> padded;
  for (const auto& c : d.components) {
    domain.push_back(c.arc);
    padded.push_back(c.image.is_full() ? c.image : Arc::from_length(c.image.start - pad, c.image.measure() + 2 * pad));
  }
  auto rest = subtract_closed(normalize(unwrap(domain)), normalize(unwrap(padded)));
  return rewrap(rest);
}

double measure_U(const Decomposition& d) {
  double total = 0.0;
  for (const auto& c : d.components) total += c.arc.measure();
  return total;
}

}  // namespace darksector
