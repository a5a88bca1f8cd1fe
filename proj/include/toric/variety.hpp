#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

struct VarietyProfile {
  std::size_t dim = 0;
  bool q_factorial = false;
  bool complete = false;
  bool fano = false;
  // Only evaluated for Fano inputs; false otherwise.
  bool terminal = false;
  bool gorenstein = false;
  // n - d; present when the fan is simplicial and complete.
  std::optional<std::size_t> picard;

  bool operator==(const VarietyProfile&) const = default;
};

// Origin strictly interior to conv(points) and every point a vertex.
bool is_fano(std::span<const LatticeVector> points);
// A fan is Fano when its generators form a Fano polytope and it is that
// polytope's face fan.
bool is_fano(const Fan& fan);

// conv(points) ∩ Z^d = {0} ∪ points. PreconditionError unless is_fano.
bool is_terminal(std::span<const LatticeVector> points);
// Every facet of conv(points) lies at height 1 (reflexive polytope).
// PreconditionError unless is_fano.
bool is_gorenstein(std::span<const LatticeVector> points);

// rho(X) = n - d for a simplicial complete fan.
std::size_t picard_number(const Fan& fan);
// rho(V(tau)) = (length of the link of tau) - 2, tau of codimension 2.
std::size_t surface_picard(const Fan& fan, const Cone& tau);
std::size_t surface_picard(const Fan& fan, std::size_t ray);

VarietyProfile profile(const Fan& fan);

}  // namespace toric
