#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "renorm/vector.hpp"

namespace renorm {

struct Segment {
  Point a, b;
};

struct Polytope {
  std::vector<Point> vertices;
};

/// A segment [a, b] or the convex hull of finitely many vertices.
class CompactConvexSet {
 public:
  /// Throws InputError if the endpoints coincide or differ in dimension.
  static CompactConvexSet segment(Point a, Point b);
  /// Deduplicates vertices; throws InputError for an empty list or mixed dimensions.
  static CompactConvexSet polytope(std::vector<Point> vertices);
  /// The symmetric segment [-scale * dir, scale * dir].
  static CompactConvexSet symmetric_segment(const Point& dir, double scale);

  bool is_segment() const noexcept { return std::holds_alternative<Segment>(shape_); }
  const Segment& as_segment() const { return std::get<Segment>(shape_); }
  const Polytope& as_polytope() const { return std::get<Polytope>(shape_); }

  std::size_t dim() const noexcept;
  /// Extreme points: {a, b} for a segment, the vertex list otherwise.
  std::vector<Point> vertices() const;
  /// Number of parameters: 1 for a segment (s in [0,1]), vertex count otherwise.
  std::size_t parameter_count() const noexcept;

  /// Point for a parameter vector: a + s (b - a), or sum_i w_i p_i.
  Point at(std::span<const double> parameter) const;

  /// max over K of |u(k)|, exact via the vertices.
  double max_abs(const Functional& u) const;

 private:
  explicit CompactConvexSet(std::variant<Segment, Polytope> shape) : shape_(std::move(shape)) {}
  std::variant<Segment, Polytope> shape_;
};

}  // namespace renorm
