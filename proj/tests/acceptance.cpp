#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "toric/classify.hpp"
#include "toric/intersection.hpp"
#include "toric/reflexive.hpp"
#include "toric/variety.hpp"

using namespace toric;

namespace {

using Clock = std::chrono::steady_clock;

// Records the first failed expectation of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  const std::string& notes() const { return notes_; }

 private:
  std::string failure_;
  std::string notes_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

QuadForm product_form(const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& terms,
                      std::size_t n) {
  RatMatrix m(n, n);
  for (const auto& [a, b] : terms) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) += (a[i] * b[j] + a[j] * b[i]) / 2;
    }
  }
  return QuadForm{m, FormScale::UpToPositiveScalar};
}

void fano3_list(Check& c) {
  const auto records = fixtures::table2();
  const auto start = Clock::now();
  std::size_t nef = 0, positive = 0;
  for (const auto& r : records) {
    const auto report = verdict(r.id, r.generators);
    const bool expect_positive = std::stoi(r.id) <= 8;
    if (report.verdict != Verdict::NotNef) ++nef;
    if (report.verdict == Verdict::Positive) ++positive;
    c.expect(report.verdict == (expect_positive ? Verdict::Positive : Verdict::NefNotPositive),
             "id " + r.id + " has verdict " + std::string(to_string(report.verdict)));
    c.expect(report.profile.q_factorial && report.profile.terminal && report.profile.fano,
             "id " + r.id + " is not a Q-factorial terminal Fano 3-fold");
  }
  const double elapsed = seconds_since(start);
  c.expect(records.size() == 23, "expected 23 records, found " + std::to_string(records.size()));
  c.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream s;
  s << nef << "/" << records.size() << " nef, " << positive << " positive, " << elapsed << " s";
  c.note(s.str());
}

void id34_example(Check& c) {
  const Fan fan = face_fan(fixtures::id34());
  c.expect(gamma_dot_surface(fan, 0) == 0, "gamma2 . S1 is not 0");
  c.expect(gamma_dot_surface(fan, 4) > 0, "gamma2 . S5 is not positive");
  const auto f = rho2_form(fan, 0);
  // 2 v2 + 3 v3 - 5 v5 + v1 = 0 and v4 + v5 = 0 over v1..v5.
  const std::vector<Integer> first{1, 2, 3, 0, -5};
  const std::vector<Integer> second{0, 0, 0, 1, 1};
  std::vector<Integer> got_first, got_second;
  for (std::size_t i = 0; i < 5; ++i) {
    got_first.push_back(f.first.coefficient(i));
    got_second.push_back(f.second.coefficient(i));
  }
  c.expect(got_first == first, "first relation differs");
  c.expect(got_second == second, "second relation differs");
  const std::vector<Rational> l1{1, 2, 3, 0, -5}, l2{0, 0, 0, 1, 1};
  std::vector<Rational> four_l1, ten_l2;
  for (const auto& x : l1) four_l1.push_back(4 * x);
  for (const auto& x : l2) ten_l2.push_back(10 * x);
  const auto reference = product_form({{four_l1, l2}, {ten_l2, l2}}, 5);
  const auto lambda = proportionality(reference, f.form);
  c.expect(lambda && *lambda > 0, "rho2 form is not a positive multiple of the reference form");
  c.note("gamma2.S1 = 0, gamma2.S5 = " + to_string(gamma_dot_surface(fan, 4)));
}

void surface_example(Check& c) {
  const auto pts = fixtures::surface_example();
  const Fan fan = face_fan(pts);
  const auto f = rho2_form(fan, Cone{});
  const Integer numerator = rho2_gamma_numerator(f);
  c.expect(numerator == 20, "alpha gamma2 = " + to_string(numerator));
  const auto report = verdict("surface", fan);
  c.expect(report.verdict == Verdict::Positive, "verdict " + std::string(to_string(report.verdict)));
  c.expect(!is_gorenstein(pts), "reported Gorenstein");
  c.note("alpha gamma2 = " + to_string(numerator) + ", gamma2 = " + to_string(surface_gamma2(fan)));
}

void del_pezzo_list(Check& c) {
  const auto records = fixtures::table1();
  std::size_t nef = 0;
  for (const auto& r : records) {
    const auto report = verdict(r.id, r.generators);
    if (report.verdict != Verdict::NotNef) ++nef;
    const int id = std::stoi(r.id);
    const bool rho1 = report.surfaces.front().rho == 1;
    c.expect(rho1 == (id >= 12 && id <= 16), "id " + r.id + " has Picard number " + std::to_string(report.surfaces.front().rho));
    c.expect(report.verdict == (rho1 ? Verdict::Positive : Verdict::NefNotPositive),
             "id " + r.id + " has verdict " + std::string(to_string(report.verdict)));
  }
  c.expect(records.size() == 10 && nef == 10, "expected 10 nef del Pezzo surfaces");

  const auto start = Clock::now();
  const auto polygons = enumerate_reflexive_polygons();
  std::size_t enumerated_nef = 0;
  std::set<std::vector<LatticeVector>> nef_classes;
  for (const auto& p : polygons) {
    if (verdict("polygon", p).verdict != Verdict::NotNef) {
      ++enumerated_nef;
      nef_classes.insert(p);
    }
  }
  const double elapsed = seconds_since(start);
  std::set<std::vector<LatticeVector>> listed;
  for (const auto& r : records) listed.insert(canonical_polygon(r.generators));
  c.expect(polygons.size() == 16, std::to_string(polygons.size()) + " reflexive classes");
  c.expect(enumerated_nef == 10, std::to_string(enumerated_nef) + " nef classes");
  c.expect(listed == nef_classes, "bundled list differs from the enumerated nef classes");
  c.expect(elapsed < 5.0, "enumeration took " + std::to_string(elapsed) + " s");
  std::ostringstream s;
  s << nef << "/10 bundled nef; " << polygons.size() << " reflexive classes, " << enumerated_nef << " nef, "
    << elapsed << " s";
  c.note(s.str());
}

void smooth_counterexample(Check& c) {
  const auto r = fixtures::smooth_not_nef().front();
  c.expect(r.generators.size() == 6, "expected 6 generators");
  const Fan fan = face_fan(r.generators);
  c.expect(is_fano(fan), "not Fano");
  for (const auto& cone : fan.maximal_cones()) c.expect(mult(fan, cone) == 1, "singular cone " + to_string(cone));
  const auto report = verdict(r.id, fan);
  c.expect(report.verdict == Verdict::NotNef, "verdict " + std::string(to_string(report.verdict)));
  c.expect(report.witness_surface().gamma2 < 0, "no surface with negative gamma2");
  c.note("min gamma2.S = " + to_string(report.witness_surface().gamma2));
}

void property_suites(Check& c) {
  auto bundled = fixtures::bundled_fans();

  std::size_t surfaces = 0;
  for (const auto& nf : bundled) {
    const std::vector<Cone> taus = nf.fan.dim() == 2 ? std::vector<Cone>{Cone{}} : [&] {
      std::vector<Cone> out;
      for (std::size_t i = 0; i < nf.fan.size(); ++i) out.push_back(Cone{i});
      return out;
    }();
    for (const auto& tau : taus) {
      const std::size_t rho = surface_picard(nf.fan, tau);
      if (rho > 2) continue;
      const QuadForm closed = rho == 1 ? rho1_form(nf.fan, tau).form : rho2_form(nf.fan, tau).form;
      const auto lambda = proportionality(closed, i_poly(nf.fan, tau));
      c.expect(lambda && *lambda > 0, nf.name + ": closed form disagrees on " + to_string(tau));
      ++surfaces;
    }
  }

  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coef(1, 7);
  std::size_t subdivisions = 0;
  const std::vector<std::vector<LatticeVector>> starts{fixtures::p2(), fixtures::surface_example(),
                                                       {{0, 1}, {3, 1}, {-3, -2}}, {{1, 0}, {1, 3}, {-1, -1}, {-1, 0}}};
  while (subdivisions < 100) {
    Fan fan = face_fan(starts[subdivisions % starts.size()]);
    for (int step = 0; step < 4 && subdivisions < 100; ++step) {
      std::uniform_int_distribution<std::size_t> pick(0, fan.maximal_cones().size() - 1);
      const std::size_t k = pick(rng);
      const Cone sigma = fan.maximal_cones()[k];
      const auto& x1 = fan.generator(sigma.rays()[0]);
      const auto& x2 = fan.generator(sigma.rays()[1]);
      const int a = coef(rng), b = coef(rng);
      LatticeVector y{a * x1[0] + b * x2[0], a * x1[1] + b * x2[1]};
      const std::int64_t g = std::gcd(y[0], y[1]);
      y = LatticeVector{y[0] / g, y[1] / g};
      const Fan finer = subdivide_planar(fan, k, y);
      const Rational drop = oracle::planar_gamma2(fan) - oracle::planar_gamma2(finer);
      c.expect(drop > 0, "gamma2 did not decrease");
      c.expect(drop == subdivision_drop(subdivision_coords(x1, x2, y)), "drop differs from the closed form");
      c.expect(surface_gamma2(fan) - surface_gamma2(finer) == drop, "library gamma2 differs from the oracle");
      fan = finer;
      ++subdivisions;
    }
  }

  const Fan p1p1 = product_fan(fixtures::p1(), fixtures::p1());
  const Fan p1p1p1 = product_fan(p1p1, fixtures::p1());
  const Fan p1p2 = product_fan(fixtures::p1(), face_fan(fixtures::p2()));
  c.expect(surface_gamma2(p1p1) == 0, "P1 x P1 has nonzero gamma2");
  for (std::size_t i = 0; i < p1p1p1.size(); ++i) {
    c.expect(gamma_dot_surface(p1p1p1, i) == 0, "P1 x P1 x P1 surface with nonzero gamma2");
  }
  // Rays 2..4 come from P2; their surfaces are P1 x P1.
  for (std::size_t i = 2; i < p1p2.size(); ++i) {
    c.expect(gamma_dot_surface(p1p2, i) == 0, "P1 x P2 product surface with nonzero gamma2");
  }

  std::size_t transforms = 0;
  for (const auto& nf : bundled) {
    const auto base = verdict(nf.name, nf.fan);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = oracle::random_unimodular(rng, nf.fan.dim());
      std::vector<LatticeVector> moved;
      for (const auto& v : nf.fan.generators()) moved.push_back(oracle::apply(g, v));
      c.expect(verdict(nf.name, moved).verdict == base.verdict, nf.name + ": verdict changed under GL(d, Z)");
      ++transforms;
    }
  }

  auto fans = bundled;
  for (auto& nf : fixtures::non_fano_3folds()) fans.push_back(std::move(nf));
  std::size_t non_fano = 0;
  for (const auto& nf : fans) {
    bool positive = true;
    for (const auto& w : walls(nf.fan)) positive = positive && gamma1_dot_curve(nf.fan, w.cone) > 0;
    const bool fano = is_fano(nf.fan);
    if (!fano) ++non_fano;
    c.expect(positive == fano, nf.name + ": gamma1 positivity disagrees with is_fano");
  }
  c.expect(non_fano == 5, "expected 5 non-Fano fans");

  std::ostringstream s;
  s << surfaces << " surfaces, " << subdivisions << " subdivisions, " << transforms << " transforms, "
    << fans.size() << " fans for gamma1";
  if (const char* grdb = std::getenv("TORIC_GRDB_FILE"); grdb && *grdb) {
    const auto parsed = parse_dataset_lenient(read_text_file(grdb));
    const auto result = sweep(parsed.records, std::max(1u, std::thread::hardware_concurrency()));
    c.expect(result.summary.nef() == 23, "GRDB sweep found " + std::to_string(result.summary.nef()) + " nef entries");
    s << "; GRDB " << result.summary.total << " entries, " << result.summary.nef() << " nef";
  } else {
    s << "; GRDB check skipped (TORIC_GRDB_FILE not set)";
  }
  c.note(s.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"terminal Fano 3-fold list", fano3_list},
      {"3-fold id 34", id34_example},
      {"Picard number 2 surface", surface_example},
      {"del Pezzo list and reflexive polygons", del_pezzo_list},
      {"smooth Fano 3-fold that is not nef", smooth_counterexample},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << ")";
    if (!c.ok()) std::cout << ": " << c.failure();
    if (!c.notes().empty()) std::cout << " [" << c.notes() << "]";
    std::cout << "\n";
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
