#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "renorm/vector.hpp"

namespace renorm {

/// Seeded source of uniforms, normals and geometric samples.
///
/// The stream is a pure function of the seed: uniforms are built from the raw
/// 64-bit output of mt19937_64 (whose sequence is fixed by the standard) and
/// normals use Box-Muller, so results do not depend on the standard library's
/// distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  /// Uniform on the Euclidean unit sphere of R^d.
  Point unit_sphere(std::size_t d);
  /// Uniform in the Euclidean unit ball of R^d.
  Point unit_ball(std::size_t d);
  /// Uniform on the unit sphere of span{basis}, where basis is Euclidean-orthonormal.
  Point unit_sphere_in_span(const std::vector<Point>& basis);

  /// Derives an independent sampler (used to hand sub-streams to workers).
  Sampler split();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// `count` deterministic points of Euclidean norm 1 in R^d.
std::vector<Point> sample_unit_sphere(std::uint64_t seed, std::size_t count, std::size_t d);

}  // namespace renorm
