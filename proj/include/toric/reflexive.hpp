#pragma once

#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Normal form of a lattice polygon under GL(2, Z): over every cyclic
// ordering of the vertices (both orientations), put the 2 x k vertex
// matrix in Hermite normal form and keep the lexicographically smallest.
// Accepts the vertices in any order; non-vertices are ignored.
std::vector<LatticeVector> canonical_polygon(std::span<const LatticeVector> points);

// All reflexive polygons up to GL(2, Z), as canonical vertex lists in
// ascending order. Found by depth-first search over vertex sets in
// [-3, 3]^2: a set is extended only while it stays in convex position and
// its hull has no interior lattice point other than the origin; every set
// whose hull has the origin as its unique interior lattice point is
// reflexive.
std::vector<std::vector<LatticeVector>> enumerate_reflexive_polygons();

}  // namespace toric
