#pragma once

#include <string>

#include "renorm/tolerance.hpp"
#include "renorm/vector.hpp"

namespace renorm {

/// A norm on R^d evaluated to a stated relative tolerance.
///
/// Implementations are immutable after construction; value() and subgradient()
/// are safe to call concurrently.
class GaugeOracle {
 public:
  virtual ~GaugeOracle() = default;

  virtual double value(const Point& x) const = 0;

  /// An element of the subdifferential at x. The default uses central
  /// differences with step ~ cbrt(eps) * |x|.
  virtual Functional subgradient(const Point& x) const;

  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;

  const ToleranceConfig& tolerance() const noexcept { return tol_; }

 protected:
  explicit GaugeOracle(ToleranceConfig tol);

 private:
  ToleranceConfig tol_;
};

/// The base norm of the construction: Euclidean length on R^d.
class EuclideanGauge final : public GaugeOracle {
 public:
  explicit EuclideanGauge(std::size_t dim, ToleranceConfig tol = {});

  double value(const Point& x) const override;
  Functional subgradient(const Point& x) const override;
  std::string name() const override { return "euclid"; }
  std::size_t dim() const override { return dim_; }

 private:
  std::size_t dim_;
};

/// Q(x, y) = 2 g(x)^2 + 2 g(y)^2 - g(x + y)^2. Nonnegative for every norm;
/// identically |x - y|^2 for the Euclidean norm.
double q_functional(const GaugeOracle& g, const Point& x, const Point& y);

/// Midpoint deficit 1 - g((x/g(x) + y/g(y)) / 2). Zero exactly when the
/// normalized points span a flat piece of the unit sphere.
double strict_convexity_probe(const GaugeOracle& g, const Point& x, const Point& y);

}  // namespace renorm
