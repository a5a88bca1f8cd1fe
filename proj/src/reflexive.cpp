#include "toric/reflexive.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <cassert>
#include <numeric>
#include <set>

#include "toric/error.hpp"
#include "toric/polytope.hpp"

namespace toric {

namespace {

using Matrix2 = std::array<std::vector<std::int64_t>, 2>;

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  std::int64_t x1 = 0, y1 = 0;
  const auto g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Row-style Hermite normal form of a rank-2 matrix under left GL(2, Z).
Matrix2 hermite(Matrix2 m) {
  const std::size_t k = m[0].size();
  std::size_t j0 = 0;
  while (j0 < k && m[0][j0] == 0 && m[1][j0] == 0) ++j0;
  assert(j0 < k);
  {
    const auto a = m[0][j0], b = m[1][j0];
    std::int64_t u = 0, v = 0;
    const auto g = ext_gcd(a, b, u, v);
    const auto p = -b / g, q = a / g;
    for (std::size_t j = 0; j < k; ++j) {
      const auto top = u * m[0][j] + v * m[1][j];
      const auto bottom = p * m[0][j] + q * m[1][j];
      m[0][j] = top;
      m[1][j] = bottom;
    }
  }
  std::size_t j1 = j0 + 1;
  while (j1 < k && m[1][j1] == 0) ++j1;
  assert(j1 < k);
  if (m[1][j1] < 0) {
    for (auto& x : m[1]) x = -x;
  }
  const auto pivot = m[1][j1];
  auto f = m[0][j1] / pivot;
  if (m[0][j1] - f * pivot < 0) --f;
  for (std::size_t j = 0; j < k; ++j) m[0][j] -= f * m[1][j];
  return m;
}

bool strictly_inside(const std::vector<LatticeVector>& ccw, const LatticeVector& x) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const auto& a = ccw[i];
    const auto& b = ccw[(i + 1) % ccw.size()];
    if ((b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]) <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<LatticeVector> canonical_polygon(std::span<const LatticeVector> points) {
  for (const auto& p : points) {
    if (p.dim() != 2) throw DimensionError("canonical_polygon expects planar points");
  }
  std::vector<LatticeVector> ccw;
  for (auto i : planar_hull(points)) ccw.push_back(points[i]);
  if (ccw.size() < 3) throw PreconditionError("polygon is not full-dimensional");

  const std::size_t k = ccw.size();
  std::optional<Matrix2> best;
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (std::size_t start = 0; start < k; ++start) {
      Matrix2 m;
      for (std::size_t t = 0; t < k; ++t) {
        const auto& v = orientation == 0 ? ccw[(start + t) % k] : ccw[(start + k - t) % k];
        m[0].push_back(v[0]);
        m[1].push_back(v[1]);
      }
      m = hermite(std::move(m));
      if (!best || m < *best) best = std::move(m);
    }
  }
  std::vector<LatticeVector> out;
  for (std::size_t t = 0; t < k; ++t) out.push_back(LatticeVector{(*best)[0][t], (*best)[1][t]});
  return out;
}

std::vector<std::vector<LatticeVector>> enumerate_reflexive_polygons() {
  constexpr std::int64_t kBox = 3;
  // Vertices of a reflexive polygon sit at height 1 over a facet, hence are
  // primitive.
  std::vector<LatticeVector> candidates;
  std::vector<LatticeVector> box;
  for (std::int64_t x = -kBox; x <= kBox; ++x) {
    for (std::int64_t y = -kBox; y <= kBox; ++y) {
      LatticeVector v{x, y};
      if (v.is_zero()) continue;
      box.push_back(v);
      if (v.is_primitive()) candidates.push_back(v);
    }
  }

  std::set<std::vector<LatticeVector>> found;
  std::vector<LatticeVector> chosen;
  const LatticeVector origin{0, 0};

  auto hull_of = [](const std::vector<LatticeVector>& pts) {
    std::vector<LatticeVector> ccw;
    for (auto i : planar_hull(pts)) ccw.push_back(pts[i]);
    return ccw;
  };

  // Returns false if `chosen` (or any superset) cannot be a reflexive
  // vertex set.
  auto admissible = [&](const std::vector<LatticeVector>& ccw) {
    if (ccw.size() != chosen.size()) return false;  // not in convex position
    if (ccw.size() < 3) return true;
    return std::none_of(box.begin(), box.end(), [&](const LatticeVector& p) { return strictly_inside(ccw, p); });
  };

  auto dfs = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      const auto ccw = hull_of(chosen);
      if (admissible(ccw)) {
        if (ccw.size() >= 3 && strictly_inside(ccw, origin)) found.insert(canonical_polygon(ccw));
        self(self, i + 1);
      }
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return {found.begin(), found.end()};
}

}  // namespace toric
