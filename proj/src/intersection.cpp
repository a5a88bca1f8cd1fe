#include "toric/intersection.hpp"

#include <algorithm>
#include <cassert>

#include "toric/error.hpp"

namespace toric {

Integer WallRelation::coefficient(std::size_t generator) const {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] == generator) return coefficients[k];
  }
  return 0;
}

std::vector<Rational> WallRelation::dense(std::size_t n) const {
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < indices.size(); ++k) v.at(indices[k]) = Rational(coefficients[k]);
  return v;
}

WallRelation wall_relation(const Fan& fan, const Cone& wall) {
  const Wall w = wall_of(fan, wall);
  WallRelation rel;
  rel.wall = wall;
  rel.outer = w.outer;
  rel.indices = wall.with(w.outer[0]).with(w.outer[1]).rays();
  const auto kernel = kernel_basis(RatMatrix::from_columns(fan.generators_of(Cone(rel.indices))));
  if (kernel.size() != 1) throw StructureError("wall generators do not satisfy a unique relation");
  rel.coefficients = kernel.front();
  if (rel.coefficient(w.outer[0]) < 0) {
    for (auto& c : rel.coefficients) c = -c;
  }
  if (rel.coefficient(w.outer[0]) <= 0 || rel.coefficient(w.outer[1]) <= 0) {
    throw StructureError("maximal cones around wall " + to_string(wall) + " do not lie on opposite sides");
  }
  return rel;
}

namespace {

Rational product(const Fan& fan, std::vector<std::size_t> divisors, Elimination choice) {
  std::sort(divisors.begin(), divisors.end());
  const Cone support(divisors);
  const auto candidates = fan.maximal_cones_containing(support);
  if (candidates.empty()) return 0;
  if (support.size() == divisors.size()) return 1 / Rational(mult(fan, support));

  std::size_t repeated = 0;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    if (divisors[k] == divisors[k - 1]) {
      repeated = divisors[k];
      break;
    }
  }
  const Cone& sigma = fan.maximal_cones()[choice == Elimination::FirstCone ? candidates.front() : candidates.back()];

  // Character m with <m, v_k> = [k == repeated] on the rays of sigma.
  const auto basis = fan.generators_of(sigma);
  std::vector<Rational> rhs(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) rhs[k] = sigma.rays()[k] == repeated ? 1 : 0;
  const auto m = solve(RatMatrix::from_rows(basis), rhs);
  assert(m);

  auto reduced = divisors;
  reduced.erase(std::find(reduced.begin(), reduced.end(), repeated));
  Rational total = 0;
  for (std::size_t l = 0; l < fan.size(); ++l) {
    if (sigma.contains(l)) continue;
    Rational pairing = 0;
    for (std::size_t k = 0; k < fan.dim(); ++k) pairing += (*m)[k] * Rational(Integer(static_cast<long>(fan.generator(l)[k])));
    if (pairing == 0) continue;
    auto next = reduced;
    next.push_back(l);
    total -= pairing * product(fan, std::move(next), choice);
  }
  return total;
}

void require_simplicial(const Fan& fan) {
  if (!is_simplicial(fan)) throw UnsupportedError("intersection numbers need a simplicial fan");
}

}  // namespace

Rational intersection_number(const Fan& fan, std::span<const std::size_t> divisors, Elimination choice) {
  require_simplicial(fan);
  if (divisors.size() != fan.dim()) throw DimensionError("intersection of d divisors on a d-dimensional fan");
  for (auto i : divisors) {
    if (i >= fan.size()) throw PreconditionError("divisor index out of range");
  }
  return product(fan, std::vector<std::size_t>(divisors.begin(), divisors.end()), choice);
}

Rational QuadForm::diagonal_sum() const {
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += matrix(i, i);
  return s;
}

Rational QuadForm::evaluate(std::span<const Rational> x) const {
  if (x.size() != size()) throw DimensionError("quadratic form evaluated at a vector of the wrong size");
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) s += matrix(i, j) * x[i] * x[j];
  }
  return s;
}

std::optional<Rational> proportionality(const QuadForm& a, const QuadForm& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (b.matrix(i, j) != 0 && !lambda) lambda = a.matrix(i, j) / b.matrix(i, j);
    }
  }
  if (!lambda) return std::nullopt;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.matrix(i, j) != *lambda * b.matrix(i, j)) return std::nullopt;
    }
  }
  return lambda;
}

TripleTable triple_table(const Fan& fan, const Cone& tau, Elimination choice) {
  require_simplicial(fan);
  if (fan.dim() < 2 || tau.size() + 2 != fan.dim()) {
    throw PreconditionError("a torus-invariant surface corresponds to a cone of codimension 2");
  }
  if (!tau.empty() && !fan.has_cone(tau)) throw PreconditionError("surface cone is not a cone of the fan");
  const std::size_t n = fan.size();
  const Rational scale = tau.empty() ? Rational(1) : Rational(mult(fan, tau));
  TripleTable t{tau, RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::vector<std::size_t> divisors = tau.rays();
      divisors.push_back(i);
      divisors.push_back(j);
      const Rational v = scale * product(fan, std::move(divisors), choice);
      t.values(i, j) = v;
      t.values(j, i) = v;
    }
  }
  return t;
}

TripleTable triple_table(const Fan& fan, std::size_t ray) {
  if (fan.dim() != 3) throw DimensionError("surfaces V(ray) live in 3-folds");
  if (ray >= fan.size()) throw PreconditionError("ray index out of range");
  return triple_table(fan, Cone{ray});
}

QuadForm i_poly(const Fan& fan, const Cone& tau) {
  return QuadForm{triple_table(fan, tau).values, FormScale::Exact};
}

QuadForm i_poly(const Fan& fan, std::size_t ray) {
  return QuadForm{triple_table(fan, ray).values, FormScale::Exact};
}

Rational gamma_dot_surface(const Fan& fan, const Cone& tau) { return i_poly(fan, tau).diagonal_sum(); }

Rational gamma_dot_surface(const Fan& fan, std::size_t ray) { return i_poly(fan, ray).diagonal_sum(); }

Rational gamma1_dot_curve(const Fan& fan, const Cone& wall) {
  require_simplicial(fan);
  wall_of(fan, wall);
  const Rational scale = wall.empty() ? Rational(1) : Rational(mult(fan, wall));
  Rational total = 0;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    std::vector<std::size_t> divisors = wall.rays();
    divisors.push_back(i);
    total += product(fan, std::move(divisors), Elimination::FirstCone);
  }
  return scale * total;
}

namespace {

RatMatrix outer_product(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  RatMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  }
  return m;
}

void accumulate(RatMatrix& acc, const RatMatrix& m, const Rational& factor) {
  for (std::size_t i = 0; i < acc.rows(); ++i) {
    for (std::size_t j = 0; j < acc.cols(); ++j) acc(i, j) += factor * m(i, j);
  }
}

}  // namespace

Rho1Form rho1_form(const Fan& fan, const Cone& tau) {
  const Link link = link_of(fan, tau);
  if (link.length() != 3) throw PreconditionError("rho1_form needs a surface of Picard number 1");
  Rho1Form out;
  out.relation = wall_relation(fan, tau.with(link.cycle[0]));
  const auto l = out.relation.dense(fan.size());
  out.form = QuadForm{outer_product(l, l), FormScale::UpToPositiveScalar};
  return out;
}

Rho1Form rho1_form(const Fan& fan, std::size_t ray) {
  if (fan.dim() != 3) throw DimensionError("surfaces V(ray) live in 3-folds");
  return rho1_form(fan, Cone{ray});
}

Rho2Form rho2_form(const Fan& fan, const Cone& tau) {
  const Link link = link_of(fan, tau);
  if (link.length() != 4) throw PreconditionError("rho2_form needs a surface of Picard number 2");
  Rho2Form out;
  const auto& c = link.cycle;
  out.y = {c[0], c[2], std::max(c[1], c[3]), std::min(c[1], c[3])};
  const auto [y1, y2, y3, y4] = out.y;

  out.first = wall_relation(fan, tau.with(y3));
  out.second = wall_relation(fan, tau.with(y1));
  out.b1 = out.first.coefficient(y1);
  out.b2 = out.first.coefficient(y2);
  out.c3 = out.first.coefficient(y3);
  out.b3 = out.second.coefficient(y3);
  out.b4 = out.second.coefficient(y4);
  out.c1 = out.second.coefficient(y1);
  for (auto x : tau) {
    out.a.push_back(out.first.coefficient(x));
    out.e.push_back(out.second.coefficient(x));
  }

  const auto l1 = out.first.dense(fan.size());
  const auto l2 = out.second.dense(fan.size());
  RatMatrix m(fan.size(), fan.size());
  accumulate(m, outer_product(l1, l1), Rational(-out.b3 * out.c1));
  accumulate(m, outer_product(l1, l2), Rational(out.b1 * out.b3));
  accumulate(m, outer_product(l2, l1), Rational(out.b1 * out.b3));
  accumulate(m, outer_product(l2, l2), Rational(-out.b1 * out.c3));
  out.form = QuadForm{std::move(m), FormScale::UpToPositiveScalar};
  return out;
}

Rho2Form rho2_form(const Fan& fan, std::size_t ray) {
  if (fan.dim() != 3) throw DimensionError("surfaces V(ray) live in 3-folds");
  return rho2_form(fan, Cone{ray});
}

Integer rho2_gamma_numerator(const Rho2Form& f) {
  Integer sum_aa = 0, sum_ae = 0, sum_ee = 0;
  for (std::size_t i = 0; i < f.a.size(); ++i) {
    sum_aa += f.a[i] * f.a[i];
    sum_ae += f.a[i] * f.e[i];
    sum_ee += f.e[i] * f.e[i];
  }
  return -f.b3 * f.c1 * (f.b1 * f.b1 + f.b2 * f.b2 + f.c3 * f.c3 + sum_aa) +
         2 * f.b1 * f.b3 * (f.b1 * f.c1 + f.b3 * f.c3 + sum_ae) -
         f.b1 * f.c3 * (f.b3 * f.b3 + f.b4 * f.b4 + f.c1 * f.c1 + sum_ee);
}

SubdivisionCoords subdivision_coords(const LatticeVector& x1, const LatticeVector& x2, const LatticeVector& y) {
  if (x1.dim() != 2 || x2.dim() != 2 || y.dim() != 2) throw DimensionError("subdivision coordinates are planar");
  if (!x1.is_primitive()) throw PreconditionError("x1 must be primitive");
  if (!y.is_primitive()) throw PreconditionError("subdivision point must be primitive");
  const Integer a = static_cast<long>(x1[0]), b = static_cast<long>(x1[1]);
  Integer g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  assert(g == 1);
  // U = [[u, v], [-b, a]] is unimodular and sends x1 to (1, 0).
  auto image = [&](const LatticeVector& w) {
    const Integer w0 = static_cast<long>(w[0]), w1 = static_cast<long>(w[1]);
    return std::pair<Integer, Integer>{u * w0 + v * w1, -b * w0 + a * w1};
  };
  SubdivisionCoords c;
  std::tie(c.p, c.q) = image(x2);
  std::tie(c.r, c.s) = image(y);
  if (c.q == 0) throw PreconditionError("x1 and x2 are linearly dependent");
  if (c.q < 0) {
    c.q = -c.q;
    c.s = -c.s;
  }
  if (c.s <= 0 || c.q * c.r - c.p * c.s <= 0) {
    throw PreconditionError("subdivision point " + y.to_string() + " is not interior to the cone");
  }
  return c;
}

QuadForm subdivide_update(const QuadForm& form, std::size_t x1, std::size_t x2, const SubdivisionCoords& c) {
  if (form.scale != FormScale::Exact) throw PreconditionError("subdivide_update needs an exact form");
  const std::size_t n = form.size();
  if (x1 >= n || x2 >= n || x1 == x2) throw PreconditionError("invalid cone generators");
  const Integer det = c.q * c.r - c.p * c.s;
  if (c.q <= 0 || c.s <= 0 || det <= 0) throw PreconditionError("subdivision coordinates not normalized");
  QuadForm out{RatMatrix(n + 1, n + 1), FormScale::Exact};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = form.matrix(i, j);
  }
  std::vector<Rational> l(n + 1);
  l[x1] = Rational(det);
  l[x2] = Rational(c.s);
  l[n] = Rational(-c.q);
  accumulate(out.matrix, outer_product(l, l), -1 / Rational(c.q * c.s * det));
  return out;
}

Rational subdivision_drop(const SubdivisionCoords& c) {
  const Integer det = c.q * c.r - c.p * c.s;
  return make_rational(det * det + c.s * c.s + c.q * c.q, c.q * c.s * det);
}

Rational surface_gamma2(const Fan& fan) {
  if (fan.dim() != 2) throw DimensionError("surface_gamma2 expects a 2D fan");
  return gamma_dot_surface(fan, Cone{});
}

}  // namespace toric
