#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "toric/error.hpp"
#include "toric/polytope.hpp"

namespace toric {

Cone::Cone(std::vector<std::size_t> rays) : rays_(std::move(rays)) {
  std::sort(rays_.begin(), rays_.end());
  rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
}

bool Cone::contains(std::size_t ray) const {
  return std::binary_search(rays_.begin(), rays_.end(), ray);
}

bool Cone::contains(const Cone& face) const {
  return std::includes(rays_.begin(), rays_.end(), face.rays_.begin(), face.rays_.end());
}

Cone Cone::with(std::size_t ray) const {
  auto r = rays_;
  r.push_back(ray);
  return Cone(std::move(r));
}

Cone Cone::without(std::size_t ray) const {
  auto r = rays_;
  r.erase(std::remove(r.begin(), r.end(), ray), r.end());
  return Cone(std::move(r));
}

std::string to_string(const Cone& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cone& c) {
  os << '{';
  bool first = true;
  for (auto r : c) {
    if (!first) os << ',';
    first = false;
    os << r;
  }
  return os << '}';
}

Fan::Fan(std::vector<LatticeVector> generators, std::vector<Cone> maximal_cones)
    : generators_(std::move(generators)), maximal_(std::move(maximal_cones)) {
  if (generators_.empty()) throw StructureError("fan without generators");
  dim_ = generators_.front().dim();
  if (dim_ < 1 || dim_ > 3) throw DimensionError("fans of dimension 1, 2 or 3 only");
  std::set<LatticeVector> distinct;
  for (const auto& g : generators_) {
    if (g.dim() != dim_) throw DimensionError("generators of differing dimension");
    if (!g.is_primitive()) throw PreconditionError("generator " + g.to_string() + " is not primitive");
    if (!distinct.insert(g).second) throw PreconditionError("repeated generator " + g.to_string());
  }
  if (maximal_.empty()) throw StructureError("fan without maximal cones");
  std::vector<bool> used(generators_.size(), false);
  for (const auto& c : maximal_) {
    for (auto r : c) {
      if (r >= generators_.size()) throw StructureError("cone refers to a missing generator");
      used[r] = true;
    }
    if (rank(RatMatrix::from_columns(generators_of(c))) != dim_) {
      throw StructureError("maximal cone is not full-dimensional");
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) throw StructureError("generator " + std::to_string(i) + " lies in no maximal cone");
  }
}

std::vector<LatticeVector> Fan::generators_of(const Cone& c) const {
  std::vector<LatticeVector> out;
  out.reserve(c.size());
  for (auto r : c) out.push_back(generators_.at(r));
  return out;
}

std::vector<std::size_t> Fan::maximal_cones_containing(const Cone& c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < maximal_.size(); ++i) {
    if (maximal_[i].contains(c)) out.push_back(i);
  }
  return out;
}

namespace {

struct ConeFacet {
  Cone rays;
  LatticeVector inward;
};

LatticeVector primitive_part(LatticeVector v) {
  const auto g = v.content();
  if (g > 1) {
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= g;
  }
  return v;
}

// Facets of a full-dimensional (possibly non-simplicial) cone, each with its
// primitive inward normal.
std::vector<ConeFacet> cone_facets(const Fan& fan, const Cone& cone) {
  const auto& gens = fan.generators();
  std::vector<ConeFacet> out;
  std::set<LatticeVector> seen;
  auto consider = [&](LatticeVector n) {
    if (n.is_zero()) return;
    n = primitive_part(n);
    bool pos = false, neg = false;
    for (auto r : cone) {
      const auto v = dot(n, gens[r]);
      pos |= v > 0;
      neg |= v < 0;
    }
    if (pos && neg) return;
    if (neg) n = -n;
    if (!seen.insert(n).second) return;
    std::vector<std::size_t> on;
    for (auto r : cone) {
      if (dot(n, gens[r]) == 0) on.push_back(r);
    }
    out.push_back({Cone(std::move(on)), n});
  };
  const auto& rays = cone.rays();
  switch (fan.dim()) {
    case 1:
      consider(gens[rays.front()]);
      break;
    case 2:
      for (auto r : rays) consider(LatticeVector{-gens[r][1], gens[r][0]});
      break;
    default:
      for (std::size_t a = 0; a < rays.size(); ++a) {
        for (std::size_t b = a + 1; b < rays.size(); ++b) {
          const auto& u = gens[rays[a]];
          const auto& v = gens[rays[b]];
          consider(LatticeVector{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                 u[0] * v[1] - u[1] * v[0]});
        }
      }
  }
  return out;
}

// Half-plane then cross-product comparison: counter-clockwise order
// starting from the positive x-axis.
bool angle_less(const LatticeVector& a, const LatticeVector& b) {
  auto upper = [](const LatticeVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
  const bool ua = upper(a), ub = upper(b);
  if (ua != ub) return ua;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace

Fan face_fan(std::span<const LatticeVector> points) {
  std::set<LatticeVector> distinct;
  for (const auto& p : points) {
    if (!p.is_primitive()) throw PreconditionError("generator " + p.to_string() + " is not primitive");
    if (!distinct.insert(p).second) throw PreconditionError("repeated generator " + p.to_string());
  }
  const HullAnalysis hull = analyze_hull(points);
  if (!hull.full_dimensional) throw NotFanoInputError("not complete/Fano input: points are not full-dimensional");
  if (!hull.origin_interior) throw NotFanoInputError("not complete/Fano input: origin is not interior to the hull");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!hull.is_vertex[i]) {
      throw NonVertexGeneratorError("non-vertex generator " + points[i].to_string());
    }
  }
  std::vector<Cone> cones;
  for (const auto& f : hull.facets) {
    if (f.vertices.size() != hull.dim) {
      throw NonSimplicialError("non-simplicial facet with " + std::to_string(f.vertices.size()) + " vertices");
    }
    cones.emplace_back(f.vertices);
  }
  std::sort(cones.begin(), cones.end());
  return Fan(std::vector<LatticeVector>(points.begin(), points.end()), std::move(cones));
}

Fan planar_fan(std::vector<LatticeVector> rays) {
  if (rays.size() < 3) throw StructureError("a complete planar fan needs at least 3 rays");
  for (const auto& r : rays) {
    if (r.dim() != 2) throw DimensionError("planar_fan expects 2D rays");
  }
  std::vector<std::size_t> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return angle_less(rays[a], rays[b]); });
  std::vector<Cone> cones;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& a = rays[order[k]];
    const auto& b = rays[order[(k + 1) % order.size()]];
    if (a[0] * b[1] - a[1] * b[0] <= 0) {
      throw StructureError("rays " + a.to_string() + " and " + b.to_string() + " leave a gap of at least pi");
    }
    cones.push_back(Cone{order[k], order[(k + 1) % order.size()]});
  }
  std::sort(cones.begin(), cones.end());
  return Fan(std::move(rays), std::move(cones));
}

Fan product_fan(const Fan& a, const Fan& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<LatticeVector> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::int64_t> c(g.coords().begin(), g.coords().end());
    c.resize(da + db, 0);
    gens.emplace_back(std::move(c));
  }
  for (const auto& g : b.generators()) {
    std::vector<std::int64_t> c(da, 0);
    c.insert(c.end(), g.coords().begin(), g.coords().end());
    gens.emplace_back(std::move(c));
  }
  std::vector<Cone> cones;
  for (const auto& ca : a.maximal_cones()) {
    for (const auto& cb : b.maximal_cones()) {
      std::vector<std::size_t> r = ca.rays();
      for (auto x : cb) r.push_back(x + a.size());
      cones.emplace_back(std::move(r));
    }
  }
  std::sort(cones.begin(), cones.end());
  return Fan(std::move(gens), std::move(cones));
}

Fan subdivide_planar(const Fan& fan, std::size_t cone_index, const LatticeVector& y) {
  if (fan.dim() != 2) throw DimensionError("subdivide_planar expects a 2D fan");
  if (cone_index >= fan.maximal_cones().size()) throw PreconditionError("no such maximal cone");
  const Cone& sigma = fan.maximal_cones()[cone_index];
  if (sigma.size() != 2) throw UnsupportedError("subdivision of a non-simplicial cone");
  if (y.dim() != 2 || !y.is_primitive()) throw PreconditionError("subdivision point must be primitive");
  const auto& u = fan.generator(sigma.rays()[0]);
  const auto& v = fan.generator(sigma.rays()[1]);
  // y = s u + t v with s, t > 0; compare signs of the Cramer numerators.
  const auto det_uv = u[0] * v[1] - u[1] * v[0];
  const auto det_yv = y[0] * v[1] - y[1] * v[0];
  const auto det_uy = u[0] * y[1] - u[1] * y[0];
  auto same_sign = [](std::int64_t a, std::int64_t b) { return (a > 0 && b > 0) || (a < 0 && b < 0); };
  if (!same_sign(det_yv, det_uv) || !same_sign(det_uy, det_uv)) {
    throw PreconditionError("subdivision point " + y.to_string() + " is not interior to the cone");
  }
  auto gens = fan.generators();
  const std::size_t ny = gens.size();
  gens.push_back(y);
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
    if (i != cone_index) cones.push_back(fan.maximal_cones()[i]);
  }
  cones.push_back(Cone{sigma.rays()[0], ny});
  cones.push_back(Cone{sigma.rays()[1], ny});
  std::sort(cones.begin(), cones.end());
  return Fan(std::move(gens), std::move(cones));
}

Integer mult(const Fan& fan, const Cone& cone) {
  return lattice_index(fan.generators_of(cone));
}

bool is_simplicial(const Fan& fan) {
  return std::all_of(fan.maximal_cones().begin(), fan.maximal_cones().end(),
                     [&](const Cone& c) { return c.size() == fan.dim(); });
}

bool is_complete(const Fan& fan) {
  const auto& cones = fan.maximal_cones();
  std::map<Cone, std::vector<std::pair<std::size_t, LatticeVector>>> incidence;
  std::vector<std::vector<ConeFacet>> facets(cones.size());
  for (std::size_t i = 0; i < cones.size(); ++i) {
    facets[i] = cone_facets(fan, cones[i]);
    for (const auto& f : facets[i]) incidence[f.rays].emplace_back(i, f.inward);
  }

  // Two-sided walls, with the two cones on opposite sides.
  std::vector<std::vector<std::size_t>> adjacent(cones.size());
  for (const auto& [wall, sides] : incidence) {
    if (sides.size() != 2) return false;
    if (sides[0].second != -sides[1].second) return false;
    adjacent[sides[0].first].push_back(sides[1].first);
    adjacent[sides[1].first].push_back(sides[0].first);
  }

  // Connected dual graph.
  std::vector<bool> reached(cones.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    for (auto nb : adjacent[c]) {
      if (!reached[nb]) {
        reached[nb] = true;
        ++count;
        stack.push_back(nb);
      }
    }
  }
  if (count != cones.size()) return false;

  // The cones cover the sphere once: an interior point of the first cone
  // lies in no other cone.
  LatticeVector probe(std::vector<std::int64_t>(fan.dim(), 0));
  for (auto r : cones[0]) probe = probe + fan.generator(r);
  std::size_t containing = 0;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const bool inside = std::all_of(facets[i].begin(), facets[i].end(),
                                    [&](const ConeFacet& f) { return dot(f.inward, probe) >= 0; });
    if (inside) ++containing;
  }
  return containing == 1;
}

bool Link::adjacent(std::size_t a, std::size_t b) const {
  const std::size_t m = cycle.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto x = cycle[k], y = cycle[(k + 1) % m];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

Link link_of(const Fan& fan, const Cone& tau) {
  if (!is_simplicial(fan)) throw UnsupportedError("link of a cone in a non-simplicial fan");
  if (fan.dim() < 2 || tau.size() + 2 != fan.dim()) {
    throw PreconditionError("link_of expects a cone of codimension 2");
  }
  const auto cones = fan.maximal_cones_containing(tau);
  if (cones.empty()) throw StructureError("cone " + to_string(tau) + " lies in no maximal cone");
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> nbrs;  // ray -> (ray, cone)
  for (auto ci : cones) {
    std::vector<std::size_t> rest;
    for (auto r : fan.maximal_cones()[ci]) {
      if (!tau.contains(r)) rest.push_back(r);
    }
    nbrs[rest[0]].emplace_back(rest[1], ci);
    nbrs[rest[1]].emplace_back(rest[0], ci);
  }
  for (auto& [ray, list] : nbrs) {
    if (list.size() != 2) throw StructureError("link of cone is not a cycle");
    std::sort(list.begin(), list.end());
  }

  Link link;
  link.tau = tau;
  const std::size_t start = nbrs.begin()->first;
  std::size_t prev = start;
  auto [cur, cone] = nbrs[start][0];
  link.cycle.push_back(start);
  link.cones.push_back(cone);
  while (cur != start) {
    link.cycle.push_back(cur);
    const auto& list = nbrs[cur];
    const auto& next = list[0].first == prev ? list[1] : list[0];
    prev = cur;
    cur = next.first;
    link.cones.push_back(next.second);
    if (link.cycle.size() > nbrs.size()) throw StructureError("link of cone is not a cycle");
  }
  if (link.cycle.size() != nbrs.size()) throw StructureError("link of cone is not a single cycle");
  return link;
}

Link star_of_ray(const Fan& fan, std::size_t ray) {
  if (fan.dim() != 3) throw DimensionError("star_of_ray expects a 3D fan");
  if (ray >= fan.size()) throw PreconditionError("ray index out of range");
  return link_of(fan, Cone{ray});
}

std::vector<Wall> walls(const Fan& fan) {
  if (!is_simplicial(fan)) throw UnsupportedError("walls of a non-simplicial fan");
  std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> faces;  // wall -> (cone, outer ray)
  const auto& cones = fan.maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (auto r : cones[i]) faces[cones[i].without(r)].emplace_back(i, r);
  }
  std::vector<Wall> out;
  for (const auto& [cone, sides] : faces) {
    if (sides.size() != 2) throw StructureError("wall is not shared by exactly two maximal cones");
    Wall w;
    w.cone = cone;
    w.maximal = {sides[0].first, sides[1].first};
    w.outer = {sides[0].second, sides[1].second};
    out.push_back(std::move(w));
  }
  return out;
}

Wall wall_of(const Fan& fan, const Cone& wall) {
  if (!is_simplicial(fan)) throw UnsupportedError("walls of a non-simplicial fan");
  if (wall.size() + 1 != fan.dim()) throw PreconditionError("a wall has dimension d-1");
  const auto cones = fan.maximal_cones_containing(wall);
  if (cones.size() != 2) throw StructureError("wall is not shared by exactly two maximal cones");
  Wall w;
  w.cone = wall;
  for (std::size_t k = 0; k < 2; ++k) {
    w.maximal[k] = cones[k];
    for (auto r : fan.maximal_cones()[cones[k]]) {
      if (!wall.contains(r)) w.outer[k] = r;
    }
  }
  return w;
}

}  // namespace toric
