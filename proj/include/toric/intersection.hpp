#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/fan.hpp"
#include "toric/linalg.hpp"

namespace toric {

// The linear relation among the d+1 generators around a wall: the wall's
// own generators plus the two rays completing it to maximal cones. Stored
// as a primitive integer vector with both outer coefficients positive,
// which fixes it uniquely.
struct WallRelation {
  Cone wall;
  std::array<std::size_t, 2> outer{};
  std::vector<std::size_t> indices;   // wall ∪ outer, ascending
  std::vector<Integer> coefficients;  // aligned with indices

  // Zero for generators that do not take part.
  Integer coefficient(std::size_t generator) const;
  // Dense coefficient vector over all n generators of the fan.
  std::vector<Rational> dense(std::size_t n) const;
};

// Throws StructureError if the wall is not two-sided or the completing rays
// do not lie on opposite sides of it.
WallRelation wall_relation(const Fan& fan, const Cone& wall);

// Which maximal cone supplies the basis used to eliminate a repeated
// divisor. The result does not depend on it; the choice is exposed so the
// independence can be checked.
enum class Elimination { FirstCone, LastCone };

// D_{i_1} ··· D_{i_d} on a simplicial fan of dimension d. Distinct
// divisors spanning a cone give 1/mult, distinct divisors spanning no cone
// give 0; a repeated divisor D_i is replaced by -Σ <m, v_l> D_l for the
// character m dual to v_i on a maximal cone containing the support.
Rational intersection_number(const Fan& fan, std::span<const std::size_t> divisors,
                             Elimination choice = Elimination::FirstCone);

enum class FormScale { Exact, UpToPositiveScalar };

// Symmetric quadratic form Σ m_ij X_i X_j indexed by generator indices.
struct QuadForm {
  RatMatrix matrix;
  FormScale scale = FormScale::Exact;

  std::size_t size() const noexcept { return matrix.rows(); }
  Rational diagonal_sum() const;
  Rational evaluate(std::span<const Rational> x) const;
};

// lambda with a = lambda * b, if one exists; nullopt when b is zero or the
// forms are not proportional.
std::optional<Rational> proportionality(const QuadForm& a, const QuadForm& b);

// D_i · D_j · S for the torus-invariant surface S = V(tau), tau of
// codimension 2 (a ray of a 3-fold, the zero cone of a surface).
struct TripleTable {
  Cone surface;
  RatMatrix values;
};

TripleTable triple_table(const Fan& fan, const Cone& tau, Elimination choice = Elimination::FirstCone);
TripleTable triple_table(const Fan& fan, std::size_t ray);

// I_{S/X}; exact.
QuadForm i_poly(const Fan& fan, const Cone& tau);
QuadForm i_poly(const Fan& fan, std::size_t ray);

// gamma_2 · S = Σ_i D_i^2 · S.
Rational gamma_dot_surface(const Fan& fan, const Cone& tau);
Rational gamma_dot_surface(const Fan& fan, std::size_t ray);

// gamma_1 · C = Σ_i D_i · C for the curve C = V(wall), wall of dimension
// d-1.
Rational gamma1_dot_curve(const Fan& fan, const Cone& wall);

// Rank-one form (Σ a_k X_k)^2 built from the single wall relation around a
// surface of Picard number 1. Equal to alpha·I_{S/X} for some alpha > 0.
struct Rho1Form {
  QuadForm form;
  WallRelation relation;
};
Rho1Form rho1_form(const Fan& fan, const Cone& tau);
Rho1Form rho1_form(const Fan& fan, std::size_t ray);

// Two-relation form for a surface of Picard number 2. The link of tau is
// a 4-cycle y1 y3 y2 y4 (y1 opposite y2, y3 opposite y4) with y1 the
// smallest ray and y3 the larger of the remaining pair. `first` is the
// relation through the wall tau+y3 (outer rays y1, y2), `second` the one
// through tau+y1 (outer rays y3, y4):
//   first:  b1 y1 + b2 y2 + c3 y3 + Σ a_i x_i = 0
//   second: b3 y3 + b4 y4 + c1 y1 + Σ e_i x_i = 0
// and alpha·I_{S/X} = -b3 c1 L1^2 + 2 b1 b3 L1 L2 - b1 c3 L2^2.
struct Rho2Form {
  QuadForm form;
  std::array<std::size_t, 4> y{};
  WallRelation first;
  WallRelation second;
  Integer b1, b2, b3, b4, c1, c3;
  std::vector<Integer> a, e;  // aligned with the rays of tau
};
Rho2Form rho2_form(const Fan& fan, const Cone& tau);
Rho2Form rho2_form(const Fan& fan, std::size_t ray);

// alpha·(gamma_2 · S) from the relation coefficients alone.
Integer rho2_gamma_numerator(const Rho2Form& f);

// Coordinates of a star subdivision after a unimodular change of basis:
// x1 = (1,0), x2 = (p,q), y = (r,s) with q > 0, s > 0, qr - ps > 0.
struct SubdivisionCoords {
  Integer p, q, r, s;
};

// Throws PreconditionError unless x1 is primitive, y is primitive, and y is
// interior to cone(x1, x2).
SubdivisionCoords subdivision_coords(const LatticeVector& x1, const LatticeVector& x2,
                                     const LatticeVector& y);

// I_{S~/S~} from I_{S/S} after subdividing cone(x1, x2) at y; the new
// variable Y is appended as the last index. Requires an exact form.
QuadForm subdivide_update(const QuadForm& form, std::size_t x1, std::size_t x2,
                          const SubdivisionCoords& c);

// gamma_2(S) - gamma_2(S~) = ((qr-ps)^2 + s^2 + q^2) / (qs(qr-ps)).
Rational subdivision_drop(const SubdivisionCoords& c);

// Σ D_i^2 on a complete simplicial surface.
Rational surface_gamma2(const Fan& fan);

}  // namespace toric
