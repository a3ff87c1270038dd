#include "renorm/sampling.hpp"

#include <cmath>
#include <numbers>

#include "renorm/errors.hpp"

namespace renorm {

double Sampler::uniform() {
  // 53 random mantissa bits, shifted off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Sampler::normal() {
  if (spare_normal_) {
    double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  return r * std::cos(theta);
}

Point Sampler::unit_sphere(std::size_t d) {
  if (d == 0) throw InputError("unit_sphere: dimension must be >= 1");
  for (;;) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = normal();
    double n = euclid_norm(p);
    if (n > 1e-300) {
      p *= 1.0 / n;
      return p;
    }
  }
}

Point Sampler::unit_ball(std::size_t d) {
  Point p = unit_sphere(d);
  double r = std::pow(uniform(), 1.0 / static_cast<double>(d));
  return r * p;
}

Point Sampler::unit_sphere_in_span(const std::vector<Point>& basis) {
  if (basis.empty()) throw InputError("unit_sphere_in_span: empty basis");
  Point w = unit_sphere(basis.size());
  Point p(basis.front().dim());
  for (std::size_t i = 0; i < basis.size(); ++i) p += w[i] * basis[i];
  return p;
}

Sampler Sampler::split() { return Sampler(engine_() ^ 0x9e3779b97f4a7c15ULL); }

std::vector<Point> sample_unit_sphere(std::uint64_t seed, std::size_t count, std::size_t d) {
  Sampler s(seed);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.unit_sphere(d));
  return out;
}

}  // namespace renorm
