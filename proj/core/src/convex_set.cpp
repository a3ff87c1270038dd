#include "renorm/convex_set.hpp"

#include <algorithm>
#include <cmath>

#include "renorm/errors.hpp"

namespace renorm {

CompactConvexSet CompactConvexSet::segment(Point a, Point b) {
  require_same_dim(a.dim(), b.dim(), "segment endpoints");
  require_finite(a, "segment endpoint");
  require_finite(b, "segment endpoint");
  if (a == b) throw InputError("segment: endpoints must be distinct");
  return CompactConvexSet(Segment{std::move(a), std::move(b)});
}

CompactConvexSet CompactConvexSet::polytope(std::vector<Point> vertices) {
  if (vertices.empty()) throw InputError("polytope: vertex list must be nonempty");
  const std::size_t d = vertices.front().dim();
  if (d == 0) throw InputError("polytope: vertices must have dimension >= 1");
  std::vector<Point> unique;
  for (Point& p : vertices) {
    require_same_dim(p.dim(), d, "polytope vertices");
    require_finite(p, "polytope vertex");
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  }
  return CompactConvexSet(Polytope{std::move(unique)});
}

CompactConvexSet CompactConvexSet::symmetric_segment(const Point& dir, double scale) {
  return segment(-scale * dir, scale * dir);
}

std::size_t CompactConvexSet::dim() const noexcept {
  if (is_segment()) return as_segment().a.dim();
  return as_polytope().vertices.front().dim();
}

std::vector<Point> CompactConvexSet::vertices() const {
  if (is_segment()) return {as_segment().a, as_segment().b};
  return as_polytope().vertices;
}

std::size_t CompactConvexSet::parameter_count() const noexcept {
  return is_segment() ? 1 : as_polytope().vertices.size();
}

Point CompactConvexSet::at(std::span<const double> parameter) const {
  if (parameter.size() != parameter_count()) throw InputError("convex set: wrong parameter count");
  if (is_segment()) {
    const Segment& s = as_segment();
    const double t = parameter[0];
    Point p = s.a;
    for (std::size_t i = 0; i < p.dim(); ++i) p[i] += t * (s.b[i] - s.a[i]);
    return p;
  }
  const auto& vs = as_polytope().vertices;
  Point p(vs.front().dim());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    for (std::size_t i = 0; i < p.dim(); ++i) p[i] += parameter[k] * vs[k][i];
  }
  return p;
}

double CompactConvexSet::max_abs(const Functional& u) const {
  double m = 0.0;
  for (const Point& p : vertices()) m = std::max(m, std::abs(dual_eval(u, p)));
  return m;
}

}  // namespace renorm
