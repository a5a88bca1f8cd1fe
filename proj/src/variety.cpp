#include "toric/variety.hpp"

#include <algorithm>

#include "toric/error.hpp"
#include "toric/polytope.hpp"

namespace toric {

bool is_fano(std::span<const LatticeVector> points) {
  const auto hull = analyze_hull(points);
  return hull.full_dimensional && hull.origin_interior && hull.all_points_are_vertices();
}

bool is_fano(const Fan& fan) {
  if (fan.dim() < 2) return false;
  if (!is_fano(std::span<const LatticeVector>(fan.generators()))) return false;
  const auto hull = analyze_hull(fan.generators());
  std::vector<Cone> facet_cones;
  for (const auto& f : hull.facets) facet_cones.emplace_back(f.vertices);
  std::vector<Cone> cones = fan.maximal_cones();
  std::sort(facet_cones.begin(), facet_cones.end());
  std::sort(cones.begin(), cones.end());
  return facet_cones == cones;
}

bool is_terminal(std::span<const LatticeVector> points) {
  const auto hull = analyze_hull(points);
  if (!(hull.full_dimensional && hull.origin_interior && hull.all_points_are_vertices())) {
    throw PreconditionError("is_terminal expects a Fano polytope");
  }
  // Every point and the origin are in the hull, so a count suffices.
  return lattice_points(points, hull).size() == points.size() + 1;
}

bool is_gorenstein(std::span<const LatticeVector> points) {
  const auto hull = analyze_hull(points);
  if (!(hull.full_dimensional && hull.origin_interior && hull.all_points_are_vertices())) {
    throw PreconditionError("is_gorenstein expects a Fano polytope");
  }
  // Facet normals are primitive, so the functional normal/height is
  // integral exactly when the height is 1.
  return std::all_of(hull.facets.begin(), hull.facets.end(), [](const Facet& f) { return f.height == 1; });
}

std::size_t picard_number(const Fan& fan) {
  if (!is_simplicial(fan) || !is_complete(fan)) {
    throw PreconditionError("picard_number expects a simplicial complete fan");
  }
  return fan.size() - fan.dim();
}

std::size_t surface_picard(const Fan& fan, const Cone& tau) {
  return link_of(fan, tau).length() - 2;
}

std::size_t surface_picard(const Fan& fan, std::size_t ray) {
  return star_of_ray(fan, ray).length() - 2;
}

VarietyProfile profile(const Fan& fan) {
  VarietyProfile p;
  p.dim = fan.dim();
  p.q_factorial = is_simplicial(fan);
  p.complete = is_complete(fan);
  p.fano = is_fano(fan);
  if (p.fano) {
    p.terminal = is_terminal(fan.generators());
    p.gorenstein = is_gorenstein(fan.generators());
  }
  if (p.q_factorial && p.complete) p.picard = fan.size() - fan.dim();
  return p;
}

}  // namespace toric
