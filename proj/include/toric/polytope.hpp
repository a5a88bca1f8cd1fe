#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// A facet of conv(points): the polytope lies in { x : <normal, x> <= height }.
// The normal is primitive.
struct Facet {
  LatticeVector normal;
  std::int64_t height = 0;
  std::vector<std::size_t> points;    // every input point on the facet, ascending
  std::vector<std::size_t> vertices;  // the facet's own vertices, ascending
};

// Exact description of the convex hull of a small point set in dimension 2
// or 3. Facets come from an exhaustive search over d-subsets of the points,
// which is O(n^{d+1}) and fine for the n <= ~20 inputs this library sees.
struct HullAnalysis {
  std::size_t dim = 0;
  bool full_dimensional = false;
  bool origin_interior = false;
  std::vector<Facet> facets;
  std::vector<bool> is_vertex;

  bool all_points_are_vertices() const;
  // Closed / open membership; only meaningful when full_dimensional.
  bool contains(const LatticeVector& x) const;
  bool contains_in_interior(const LatticeVector& x) const;
};

// Throws DimensionError unless all points share a dimension in {2, 3}.
HullAnalysis analyze_hull(std::span<const LatticeVector> points);

// All lattice points of conv(points), by bounding-box scan.
std::vector<LatticeVector> lattice_points(std::span<const LatticeVector> points,
                                          const HullAnalysis& hull);

// Vertices of a planar point set in counter-clockwise order, collinear
// boundary points dropped. Returns indices into `points`.
std::vector<std::size_t> planar_hull(std::span<const LatticeVector> points);

}  // namespace toric
