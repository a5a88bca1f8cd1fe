#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

std::int64_t cross2(const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Normal of the affine hyperplane through the given d points (zero if they
// are affinely dependent).
LatticeVector hyperplane_normal(std::span<const LatticeVector> pts) {
  if (pts.size() == 2) {
    const auto e = pts[1] - pts[0];
    return LatticeVector{e[1], -e[0]};
  }
  const auto u = pts[1] - pts[0];
  const auto v = pts[2] - pts[0];
  return LatticeVector{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

LatticeVector make_primitive(LatticeVector v) {
  const auto g = v.content();
  if (g > 1) {
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= g;
  }
  return v;
}

// Vertices among coplanar points lying on a facet with the given normal.
std::vector<std::size_t> facet_vertices(std::span<const LatticeVector> points,
                                        const std::vector<std::size_t>& on_facet,
                                        const LatticeVector& normal) {
  if (normal.dim() == 2) {
    // Points on a line: the two extremes along the line direction.
    const LatticeVector dir{-normal[1], normal[0]};
    auto key = [&](std::size_t i) { return dot(dir, points[i]); };
    auto [lo, hi] = std::minmax_element(on_facet.begin(), on_facet.end(),
                                        [&](auto a, auto b) { return key(a) < key(b); });
    std::vector<std::size_t> out{*lo, *hi};
    std::sort(out.begin(), out.end());
    return out;
  }
  // Drop a coordinate along which the normal has a nonzero component; the
  // projection is injective on the plane.
  std::size_t drop = 0;
  while (normal[drop] == 0) ++drop;
  std::vector<LatticeVector> projected;
  projected.reserve(on_facet.size());
  for (auto i : on_facet) {
    std::vector<std::int64_t> c;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != drop) c.push_back(points[i][k]);
    }
    projected.emplace_back(std::move(c));
  }
  std::vector<std::size_t> out;
  for (auto local : planar_hull(projected)) out.push_back(on_facet[local]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> planar_hull(std::span<const LatticeVector> points) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return points[a] < points[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](auto a, auto b) { return points[a] == points[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;

  // Andrew's monotone chain, strict turns only.
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (auto i : idx) {
    while (k >= 2 && cross2(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const auto i = idx[t];
    while (k >= lower && cross2(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

bool HullAnalysis::all_points_are_vertices() const {
  return std::all_of(is_vertex.begin(), is_vertex.end(), [](bool b) { return b; });
}

bool HullAnalysis::contains(const LatticeVector& x) const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const Facet& f) { return dot(f.normal, x) <= f.height; });
}

bool HullAnalysis::contains_in_interior(const LatticeVector& x) const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const Facet& f) { return dot(f.normal, x) < f.height; });
}

HullAnalysis analyze_hull(std::span<const LatticeVector> points) {
  HullAnalysis hull;
  if (points.empty()) throw DimensionError("empty point set");
  const std::size_t d = points.front().dim();
  for (const auto& p : points) {
    if (p.dim() != d) throw DimensionError("points of differing dimension");
  }
  if (d != 2 && d != 3) throw DimensionError("only dimensions 2 and 3 are supported");
  hull.dim = d;
  hull.is_vertex.assign(points.size(), false);

  std::vector<LatticeVector> diffs;
  for (const auto& p : points) diffs.push_back(p - points.front());
  if (rank(RatMatrix::from_columns(diffs)) < d) return hull;
  hull.full_dimensional = true;

  std::map<std::pair<LatticeVector, std::int64_t>, std::size_t> seen;
  const std::size_t n = points.size();
  auto consider = [&](std::span<const std::size_t> subset) {
    std::vector<LatticeVector> pts;
    for (auto i : subset) pts.push_back(points[i]);
    LatticeVector normal = hyperplane_normal(pts);
    if (normal.is_zero()) return;
    normal = make_primitive(normal);
    std::int64_t h = dot(normal, pts[0]);
    bool any_above = false, any_below = false;
    for (const auto& p : points) {
      const auto v = dot(normal, p);
      any_above |= v > h;
      any_below |= v < h;
    }
    if (any_above && any_below) return;
    if (any_above) {
      normal = -normal;
      h = -h;
    }
    if (seen.contains({normal, h})) return;
    Facet f;
    f.normal = normal;
    f.height = h;
    for (std::size_t i = 0; i < n; ++i) {
      if (dot(normal, points[i]) == h) f.points.push_back(i);
    }
    f.vertices = facet_vertices(points, f.points, normal);
    seen.emplace(std::make_pair(normal, h), hull.facets.size());
    hull.facets.push_back(std::move(f));
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (d == 2) {
        const std::size_t s[] = {a, b};
        consider(s);
        continue;
      }
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::size_t s[] = {a, b, c};
        consider(s);
      }
    }
  }
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const Facet& x, const Facet& y) { return x.vertices < y.vertices; });

  hull.origin_interior = std::all_of(hull.facets.begin(), hull.facets.end(),
                                     [](const Facet& f) { return f.height > 0; });
  for (const auto& f : hull.facets) {
    for (auto v : f.vertices) hull.is_vertex[v] = true;
  }
  return hull;
}

std::vector<LatticeVector> lattice_points(std::span<const LatticeVector> points,
                                          const HullAnalysis& hull) {
  std::vector<LatticeVector> out;
  if (!hull.full_dimensional) return out;
  const std::size_t d = hull.dim;
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    lo[k] = hi[k] = points.front()[k];
    for (const auto& p : points) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  std::vector<std::int64_t> cur = lo;
  while (true) {
    LatticeVector x(cur);
    if (hull.contains(x)) out.push_back(x);
    std::size_t k = 0;
    while (k < d && cur[k] == hi[k]) {
      cur[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++cur[k];
  }
  return out;
}

}  // namespace toric
