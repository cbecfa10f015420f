#include "darksector/unfolding.hpp"

#include <numeric>
#include <string>

namespace darksector {

UnfoldedSurface build_surface(const Scene& scene, std::size_t group_order_cap) {
  const auto angles = mirror_angles(scene);
  const ReflectionGroup group = ReflectionGroup::generate(angles, group_order_cap);
  UnfoldedSurface surface;
  surface.sheets = group.elements();
  for (const auto& angle : angles) {
    const GroupElement sigma = mirror_reflection_element(angle);
    std::vector<std::size_t> glue(surface.sheets.size());
    for (std::size_t i = 0; i < surface.sheets.size(); ++i)
      glue[i] = group.index_of(compose(sigma, surface.sheets[i]));
    surface.gluings.push_back(std::move(glue));
  }
  return surface;
}

std::vector<ConeCycle> cone_cycles(const UnfoldedSurface& surface) {
  enum class Side { Plus, Minus };
  struct State {
    std::size_t sheet;
    Side lip;
    bool operator==(const State&) const = default;
  };

  std::vector<ConeCycle> cycles;
  const std::size_t m = surface.sheet_count();
  for (std::size_t k = 0; k < surface.slit_count(); ++k) {
    const auto& glue = surface.gluings[k];
    for (SlitEnd end : {SlitEnd::First, SlitEnd::Second}) {
      std::vector<bool> seen(m, false);
      for (std::size_t start = 0; start < m; ++start) {
        if (seen[start]) continue;
        ConeCycle cycle{k + 1, end, {}};
        State s{start, Side::Plus};
        do {
          if (s.lip == Side::Plus) {
            // A full turn around the tip inside this sheet, from + lip to - lip.
            seen[s.sheet] = true;
            cycle.sheet_cycle.push_back(s.sheet);
            s.lip = Side::Minus;
          } else {
            // The - lip is glued to the + lip of the partner sheet.
            s = {glue[s.sheet], Side::Plus};
          }
        } while (!(s == State{start, Side::Plus}));
        cycles.push_back(std::move(cycle));
      }
    }
  }
  return cycles;
}

SurfaceCensus census(const UnfoldedSurface& surface, const std::vector<ConeCycle>& cycles) {
  SurfaceCensus c;
  c.sheets = surface.sheet_count();
  c.slits = surface.slit_count();
  long zero_orders = 0;
  bool all_simple = true;
  for (const auto& cycle : cycles) {
    long order = static_cast<long>(cycle.length()) - 1;
    if (cycle.length() != 2) all_simple = false;
    if (order >= 1) {
      c.zeros.push_back({cycle, order});
      zero_orders += order;
    }
  }
  for (std::size_t i = 0; i < c.sheets; ++i) c.poles.push_back({i, 2, 0});

  const long m = static_cast<long>(c.sheets);
  c.degree = zero_orders - 2 * m;
  if ((c.degree + 2) % 2 != 0 || c.degree + 2 < 0)
    throw CensusError("divisor degree " + std::to_string(c.degree) + " gives no non-negative integer genus");
  c.genus = (c.degree + 2) / 2;

  if (all_simple && !cycles.empty()) {
    const long n = static_cast<long>(c.slits);
    const long twice = m * (n - 2) + 2;
    if (twice != 2 * c.genus)
      throw CensusError("genus " + std::to_string(c.genus) + " disagrees with (m(n-2)+2)/2 = " +
                        std::to_string(twice) + "/2");
  }
  return c;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CellCounts surface_cells(const UnfoldedSurface& surface) {
  const std::size_t m = surface.sheet_count();
  const std::size_t n = surface.slit_count();

  // Slit endpoints: (sheet, slit, end). Gluing is a translation, so it maps
  // each endpoint of slit k on sheet i to the same endpoint on the partner.
  DisjointSets tips(m * n * 2);
  auto tip = [&](std::size_t i, std::size_t k, std::size_t e) { return (i * n + k) * 2 + e; };
  // Lip edges: (sheet, slit, lip); + of i is glued to - of its partner.
  DisjointSets lips(m * n * 2);
  auto lip = [&](std::size_t i, std::size_t k, std::size_t side) { return (i * n + k) * 2 + side; };

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = surface.gluings[k][i];
      tips.unite(tip(i, k, 0), tip(j, k, 0));
      tips.unite(tip(i, k, 1), tip(j, k, 1));
      lips.unite(lip(i, k, 0), lip(j, k, 1));
      lips.unite(lip(i, k, 1), lip(j, k, 0));
    }
  }

  CellCounts cells;
  cells.vertices = static_cast<long>(tips.classes() + m);
  cells.edges = static_cast<long>(lips.classes() + m * n);
  cells.faces = static_cast<long>(m);
  return cells;
}

long euler_check(const UnfoldedSurface& surface, const std::vector<ConeCycle>& cycles) {
  const long chi = surface_cells(surface).euler();
  const SurfaceCensus c = census(surface, cycles);
  if (chi != 2 - 2 * c.genus)
    throw CensusError("Euler characteristic " + std::to_string(chi) + " disagrees with census genus " +
                      std::to_string(c.genus));
  return chi;
}

double total_dark_angle(const SurfaceCensus& census, double measure_U) {
  if (census.sheets < 2) return 0.0;
  return static_cast<double>(census.sheets - 1) * measure_U;
}

}  // namespace darksector
