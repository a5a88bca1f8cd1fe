#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/linalg.hpp"

namespace toric {

// A cone of a fan, as the sorted set of indices of its generating rays.
class Cone {
 public:
  Cone() = default;
  explicit Cone(std::vector<std::size_t> rays);
  Cone(std::initializer_list<std::size_t> rays) : Cone(std::vector<std::size_t>(rays)) {}

  std::size_t size() const noexcept { return rays_.size(); }
  bool empty() const noexcept { return rays_.empty(); }
  const std::vector<std::size_t>& rays() const noexcept { return rays_; }
  auto begin() const noexcept { return rays_.begin(); }
  auto end() const noexcept { return rays_.end(); }

  bool contains(std::size_t ray) const;
  bool contains(const Cone& face) const;
  Cone with(std::size_t ray) const;
  Cone without(std::size_t ray) const;

  auto operator<=>(const Cone&) const = default;
  bool operator==(const Cone&) const = default;

 private:
  std::vector<std::size_t> rays_;
};

std::ostream& operator<<(std::ostream& os, const Cone& c);
std::string to_string(const Cone& c);

// A complete-or-not fan in N = Z^d, d in {1, 2, 3}, given by its primitive
// ray generators and its maximal cones. Construction checks local
// well-formedness (primitive distinct generators, valid indices, every
// maximal cone full-dimensional, every generator used); completeness and
// simpliciality are queried separately.
class Fan {
 public:
  Fan(std::vector<LatticeVector> generators, std::vector<Cone> maximal_cones);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  const LatticeVector& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Cone>& maximal_cones() const noexcept { return maximal_; }

  std::vector<LatticeVector> generators_of(const Cone& c) const;
  // Indices of maximal cones having `c` as a face (simplicial fans: as a
  // subset of rays).
  std::vector<std::size_t> maximal_cones_containing(const Cone& c) const;
  bool has_cone(const Cone& c) const { return !maximal_cones_containing(c).empty(); }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> generators_;
  std::vector<Cone> maximal_;
};

// Face fan of conv(points): one maximal cone per facet. Throws
// NotFanoInputError if the origin is not strictly interior (or the points
// are not full-dimensional), NonVertexGeneratorError if some point is not
// a vertex, NonSimplicialError for a facet with more than d vertices, and
// PreconditionError for non-primitive or repeated points.
Fan face_fan(std::span<const LatticeVector> points);

// Complete 2D fan whose maximal cones join angularly consecutive rays.
// Throws StructureError if two consecutive rays are at least pi apart.
Fan planar_fan(std::vector<LatticeVector> rays);

// Fan of the product variety; generators of `a` come first.
Fan product_fan(const Fan& a, const Fan& b);

// Star subdivision of the 2D maximal cone `cone_index` at the primitive
// interior point y, which becomes the last generator. Throws
// PreconditionError if y is not primitive or not in the cone's interior.
Fan subdivide_planar(const Fan& fan, std::size_t cone_index, const LatticeVector& y);

// [N_sigma : Z v_1 + ... + Z v_r] for a simplicial cone.
Integer mult(const Fan& fan, const Cone& cone);

bool is_simplicial(const Fan& fan);
bool is_complete(const Fan& fan);

// The rays around a (d-2)-cone tau: cycle[k], cycle[k+1] (cyclically) and
// tau span the maximal cone cones[k]. For d = 3 and tau a ray this is the
// star of the ray; for d = 2 and tau empty it is the cyclic order of all
// rays. The cycle starts at its smallest ray and continues towards the
// smaller of that ray's two neighbours.
struct Link {
  Cone tau;
  std::vector<std::size_t> cycle;
  std::vector<std::size_t> cones;

  std::size_t length() const noexcept { return cycle.size(); }
  bool adjacent(std::size_t a, std::size_t b) const;
};

// Throws StructureError when tau lies in no maximal cone or its link is not
// a single cycle; UnsupportedError for non-simplicial fans.
Link link_of(const Fan& fan, const Cone& tau);
Link star_of_ray(const Fan& fan, std::size_t ray);

// A (d-1)-cone together with the two maximal cones it separates and the
// generators completing it to each of them.
struct Wall {
  Cone cone;
  std::array<std::size_t, 2> maximal{};
  std::array<std::size_t, 2> outer{};
};

// Every wall of a complete simplicial fan. Throws StructureError if some
// (d-1)-face of a maximal cone is not shared by exactly two maximal cones.
std::vector<Wall> walls(const Fan& fan);
Wall wall_of(const Fan& fan, const Cone& wall);

}  // namespace toric
