#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "toric/error.hpp"
#include "toric/intersection.hpp"
#include "toric/variety.hpp"

using namespace toric;

namespace {

std::vector<fixtures::NamedFan> all_test_fans() {
  auto fans = fixtures::bundled_fans();
  for (auto& nf : fixtures::non_fano_3folds()) fans.push_back(std::move(nf));
  fans.push_back({"P1 x P1", product_fan(fixtures::p1(), fixtures::p1())});
  fans.push_back({"P1 x P2", product_fan(fixtures::p1(), face_fan(fixtures::p2()))});
  fans.push_back({"surface example", face_fan(fixtures::surface_example())});
  fans.push_back({"F3", fixtures::hirzebruch(3)});
  return fans;
}

// The codimension-2 cones carrying torus-invariant surfaces.
std::vector<Cone> surfaces_of(const Fan& fan) {
  if (fan.dim() == 2) return {Cone{}};
  std::vector<Cone> out;
  for (std::size_t i = 0; i < fan.size(); ++i) out.push_back(Cone{i});
  return out;
}

std::vector<std::size_t> with_tau(const Cone& tau, std::initializer_list<std::size_t> extra) {
  std::vector<std::size_t> m(tau.begin(), tau.end());
  m.insert(m.end(), extra);
  return m;
}

QuadForm form_from_linear(const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& products,
                          std::size_t n) {
  RatMatrix m(n, n);
  for (const auto& [a, b] : products) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) += (a[i] * b[j] + a[j] * b[i]) / 2;
    }
  }
  return QuadForm{m, FormScale::UpToPositiveScalar};
}

}  // namespace

TEST_SUITE("intersection") {
  TEST_CASE("wall relations of the 3-fold with id 34") {
    const Fan fan = face_fan(fixtures::id34());
    const auto r = wall_relation(fan, Cone{0, 4});
    CHECK(r.indices == std::vector<std::size_t>{0, 1, 2, 4});
    CHECK(r.coefficients == std::vector<Integer>{1, 2, 3, -5});
    const auto s = wall_relation(fan, Cone{0, 1});
    CHECK(s.indices == std::vector<std::size_t>{0, 1, 3, 4});
    CHECK(s.coefficients == std::vector<Integer>{0, 0, 1, 1});
    CHECK(s.coefficient(3) == 1);
    CHECK(s.coefficient(2) == 0);
  }

  TEST_CASE("every wall relation is a primitive relation with positive outer coefficients") {
    for (const auto& nf : all_test_fans()) {
      CAPTURE(nf.name);
      for (const auto& w : walls(nf.fan)) {
        const auto r = wall_relation(nf.fan, w.cone);
        std::vector<Rational> sum(nf.fan.dim());
        Integer g = 0;
        for (std::size_t k = 0; k < r.indices.size(); ++k) {
          for (std::size_t c = 0; c < nf.fan.dim(); ++c) {
            sum[c] += Rational(r.coefficients[k]) * Rational(Integer(static_cast<long>(nf.fan.generator(r.indices[k])[c])));
          }
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.coefficients[k].get_mpz_t());
        }
        for (const auto& x : sum) CHECK(x == 0);
        CHECK(g == 1);
        CHECK(r.coefficient(r.outer[0]) > 0);
        CHECK(r.coefficient(r.outer[1]) > 0);
      }
    }
  }

  TEST_CASE("intersection numbers of P2, P3 and P1 x P1") {
    const Fan p2 = face_fan(fixtures::p2());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const std::vector<std::size_t> m{i, j};
        CHECK(intersection_number(p2, m) == 1);
      }
    }
    const Fan p3 = face_fan(fixtures::p3());
    const std::vector<std::size_t> cube{2, 2, 2};
    CHECK(intersection_number(p3, cube) == 1);
    const Fan p1p1 = product_fan(fixtures::p1(), fixtures::p1());
    for (std::size_t i = 0; i < 4; ++i) {
      const std::vector<std::size_t> sq{i, i};
      CHECK(intersection_number(p1p1, sq) == 0);
    }
    const std::vector<std::size_t> mixed{0, 2};
    CHECK(intersection_number(p1p1, mixed) == 1);
    const std::vector<std::size_t> opposite{0, 1};
    CHECK(intersection_number(p1p1, opposite) == 0);
  }

  TEST_CASE("triple tables agree with a global linear solve and do not depend on the elimination cone") {
    for (const auto& nf : all_test_fans()) {
      CAPTURE(nf.name);
      const oracle::GlobalIntersectionTable oracle_table(nf.fan);
      for (const auto& tau : surfaces_of(nf.fan)) {
        const auto first = triple_table(nf.fan, tau, Elimination::FirstCone);
        const auto last = triple_table(nf.fan, tau, Elimination::LastCone);
        CHECK(first.values == last.values);
        CHECK(first.values.is_symmetric());
        const Rational m = tau.empty() ? Rational(1) : Rational(mult(nf.fan, tau));
        for (std::size_t i = 0; i < nf.fan.size(); ++i) {
          for (std::size_t j = 0; j < nf.fan.size(); ++j) {
            CHECK(first.values(i, j) == m * oracle_table(with_tau(tau, {i, j})));
          }
        }
        const std::optional<std::size_t> ray = tau.empty() ? std::nullopt : std::optional<std::size_t>(tau.rays()[0]);
        CHECK(gamma_dot_surface(nf.fan, tau) == m * oracle_table.gamma2(ray));
      }
    }
  }

  TEST_CASE("gamma2 of the small examples") {
    CHECK(gamma_dot_surface(face_fan(fixtures::p2()), Cone{}) == 3);
    const Fan p3 = face_fan(fixtures::p3());
    for (std::size_t i = 0; i < 4; ++i) CHECK(gamma_dot_surface(p3, i) == 4);
    CHECK(surface_gamma2(face_fan(fixtures::surface_example())) == make_rational(5, 6));
    const std::vector<LatticeVector> dp15{{0, 1}, {2, 1}, {-1, -1}};
    CHECK(surface_gamma2(face_fan(dp15)) == 3);
  }

  TEST_CASE("3-fold with id 34") {
    const Fan fan = face_fan(fixtures::id34());
    const std::vector<Rational> expected{0, 0, 0, make_rational(13, 2), make_rational(13, 2)};
    for (std::size_t i = 0; i < 5; ++i) CHECK(gamma_dot_surface(fan, i) == expected[i]);
    const auto t = triple_table(fan, 0);
    const RatMatrix frozen{{0, 0, 0, make_rational(1, 6), make_rational(1, 6)},
                           {0, 0, 0, make_rational(1, 3), make_rational(1, 3)},
                           {0, 0, 0, make_rational(1, 2), make_rational(1, 2)},
                           {make_rational(1, 6), make_rational(1, 3), make_rational(1, 2), make_rational(5, 6), 0},
                           {make_rational(1, 6), make_rational(1, 3), make_rational(1, 2), 0, make_rational(-5, 6)}};
    CHECK(t.values == frozen);

    const auto f = rho2_form(fan, 0);
    CHECK(f.first.coefficients == std::vector<Integer>{1, 2, 3, -5});
    CHECK(f.second.coefficients == std::vector<Integer>{0, 0, 1, 1});
    const std::vector<Rational> l1{1, 2, 3, 0, -5};
    const std::vector<Rational> l2{0, 0, 0, 1, 1};
    const std::vector<Rational> ten_l2{0, 0, 0, 10, 10};
    const std::vector<Rational> four_l1{4, 8, 12, 0, -20};
    const auto reference = form_from_linear({{four_l1, l2}, {ten_l2, l2}}, 5);
    const auto lambda = proportionality(reference, f.form);
    REQUIRE(lambda);
    CHECK(*lambda > 0);
    CHECK(proportionality(reference, i_poly(fan, 0)) == std::optional<Rational>(12));
  }

  TEST_CASE("Picard number one closed form") {
    const std::vector<LatticeVector> dp15{{0, 1}, {2, 1}, {-1, -1}};
    const Fan fan = face_fan(dp15);
    const auto f = rho1_form(fan, Cone{});
    CHECK(f.relation.coefficients == std::vector<Integer>{1, 1, 2});
    const auto lambda = proportionality(f.form, i_poly(fan, Cone{}));
    REQUIRE(lambda);
    CHECK(*lambda > 0);
    CHECK(f.form.diagonal_sum() / *lambda == 3);
  }

  TEST_CASE("closed forms are positive multiples of the exact form on every surface") {
    std::size_t rho1 = 0, rho2 = 0;
    for (const auto& nf : all_test_fans()) {
      CAPTURE(nf.name);
      for (const auto& tau : surfaces_of(nf.fan)) {
        const auto exact = i_poly(nf.fan, tau);
        const std::size_t rho = surface_picard(nf.fan, tau);
        std::optional<QuadForm> closed;
        if (rho == 1) {
          closed = rho1_form(nf.fan, tau).form;
          ++rho1;
        } else if (rho == 2) {
          const auto f = rho2_form(nf.fan, tau);
          CHECK(Rational(rho2_gamma_numerator(f)) == f.form.diagonal_sum());
          closed = f.form;
          ++rho2;
        }
        if (!closed) continue;
        const auto lambda = proportionality(*closed, exact);
        REQUIRE(lambda);
        CHECK(*lambda > 0);
        CHECK(sign(closed->diagonal_sum()) == sign(exact.diagonal_sum()));
      }
    }
    CHECK(rho1 > 10);
    CHECK(rho2 > 40);
  }

  TEST_CASE("surface example in both labelings") {
    const auto pts = fixtures::surface_example();
    const Fan a = face_fan(pts);
    const auto fa = rho2_form(a, Cone{});
    const auto lambda = proportionality(fa.form, i_poly(a, Cone{}));
    REQUIRE(lambda);
    CHECK(*lambda > 0);
    CHECK(fa.form.diagonal_sum() == *lambda * make_rational(5, 6));
    CHECK(rho2_gamma_numerator(fa) == 20);

    // Same surface, rays listed in reverse.
    const std::vector<LatticeVector> reversed(pts.rbegin(), pts.rend());
    const Fan b = face_fan(reversed);
    const auto fb = rho2_form(b, Cone{});
    CHECK(rho2_gamma_numerator(fb) == 20);
    CHECK(surface_gamma2(b) == make_rational(5, 6));
  }

  TEST_CASE("products of P1 with anything have gamma2 zero on every surface") {
    const Fan p1p1 = product_fan(fixtures::p1(), fixtures::p1());
    CHECK(surface_gamma2(p1p1) == 0);
    const auto f = rho2_form(p1p1, Cone{});
    CHECK(rho2_gamma_numerator(f) == 0);
    const Fan p1p1p1 = product_fan(p1p1, fixtures::p1());
    for (std::size_t i = 0; i < 6; ++i) CHECK(gamma_dot_surface(p1p1p1, i) == 0);
    const Fan p1p2 = product_fan(fixtures::p1(), face_fan(fixtures::p2()));
    CHECK(gamma_dot_surface(p1p2, 0) == 3);
    CHECK(gamma_dot_surface(p1p2, 1) == 3);
    for (std::size_t i = 2; i < 5; ++i) CHECK(gamma_dot_surface(p1p2, i) == 0);
  }

  TEST_CASE("gamma1 on curves matches the oracle and is positive exactly on Fano fans") {
    for (const auto& nf : all_test_fans()) {
      CAPTURE(nf.name);
      const oracle::GlobalIntersectionTable oracle_table(nf.fan);
      bool all_positive = true;
      for (const auto& w : walls(nf.fan)) {
        Rational expected = 0;
        for (std::size_t i = 0; i < nf.fan.size(); ++i) expected += oracle_table(with_tau(w.cone, {i}));
        expected *= Rational(mult(nf.fan, w.cone));
        const Rational g = gamma1_dot_curve(nf.fan, w.cone);
        CHECK(g == expected);
        if (g <= 0) all_positive = false;
      }
      CHECK(all_positive == is_fano(nf.fan));
    }
  }

  TEST_CASE("subdivision of P2 at (1, 1)") {
    const auto c = subdivision_coords({1, 0}, {0, 1}, {1, 1});
    CHECK(c.p == 0);
    CHECK(c.q == 1);
    CHECK(c.r == 1);
    CHECK(c.s == 1);
    CHECK(subdivision_drop(c) == 3);
    CHECK_THROWS_AS(subdivision_coords({1, 0}, {0, 1}, {1, -1}), PreconditionError);
    CHECK_THROWS_AS(subdivision_coords({1, 0}, {0, 1}, {2, 2}), PreconditionError);
  }

  TEST_CASE("random star subdivisions match the neighbour formula") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(1, 6);
    const std::vector<std::vector<LatticeVector>> starts{
        fixtures::p2(), fixtures::surface_example(), {{0, 1}, {3, 1}, {-3, -2}}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Fan fan = face_fan(starts[trial % starts.size()]);
      QuadForm form = i_poly(fan, Cone{});
      for (int step = 0; step < 3; ++step) {
        std::uniform_int_distribution<std::size_t> pick(0, fan.maximal_cones().size() - 1);
        const std::size_t k = pick(rng);
        const Cone sigma = fan.maximal_cones()[k];
        const auto& x1 = fan.generator(sigma.rays()[0]);
        const auto& x2 = fan.generator(sigma.rays()[1]);
        const int a = coef(rng);
        const int b = coef(rng);
        LatticeVector y{a * x1[0] + b * x2[0], a * x1[1] + b * x2[1]};
        // Rescale y = a x1 + b x2 by the content to land on a primitive point.
        const std::int64_t g = std::gcd(y[0], y[1]);
        y = LatticeVector{y[0] / g, y[1] / g};
        if (y == x1 || y == x2) continue;

        const auto coords = subdivision_coords(x1, x2, y);
        const Fan finer = subdivide_planar(fan, k, y);
        CHECK(surface_gamma2(fan) - surface_gamma2(finer) == subdivision_drop(coords));
        CHECK(oracle::planar_gamma2(fan) - oracle::planar_gamma2(finer) == subdivision_drop(coords));
        form = subdivide_update(form, sigma.rays()[0], sigma.rays()[1], coords);
        CHECK(form.matrix == i_poly(finer, Cone{}).matrix);
        fan = finer;
        ++checked;
      }
    }
    CHECK(checked >= 100);
  }
}
