#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace renorm {

struct PointTag {};
struct FunctionalTag {};

/// Dense coordinate vector in R^d. The tag keeps points and dual functionals apart;
/// the only bridge between them is the Euclidean (Riesz) identification below.
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::size_t dim) : c_(dim, 0.0) {}
  explicit Coords(std::vector<double> c) : c_(std::move(c)) {}
  Coords(std::initializer_list<double> c) : c_(c) {}

  /// The i-th standard basis vector (0-based index).
  static Coords unit(std::size_t dim, std::size_t i) {
    Coords u(dim);
    u.c_.at(i) = 1.0;
    return u;
  }

  std::size_t dim() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  std::span<const double> coords() const noexcept { return c_; }
  const std::vector<double>& values() const noexcept { return c_; }

  Coords& operator+=(const Coords& o);
  Coords& operator-=(const Coords& o);
  Coords& operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
  }

  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(double s, Coords a) { return a *= s; }
  friend Coords operator*(Coords a, double s) { return a *= s; }
  friend Coords operator-(Coords a) { return a *= -1.0; }
  friend bool operator==(const Coords&, const Coords&) = default;

 private:
  std::vector<double> c_;
};

using Point = Coords<PointTag>;
using Functional = Coords<FunctionalTag>;

void require_same_dim(std::size_t a, std::size_t b, const char* what);

template <class Tag>
Coords<Tag>& Coords<Tag>::operator+=(const Coords& o) {
  require_same_dim(dim(), o.dim(), "vector addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

template <class Tag>
Coords<Tag>& Coords<Tag>::operator-=(const Coords& o) {
  require_same_dim(dim(), o.dim(), "vector subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

/// Throws InputError unless every coordinate is finite.
void require_finite(std::span<const double> c, const char* what);
inline void require_finite(const Point& x, const char* what) { require_finite(x.coords(), what); }
inline void require_finite(const Functional& u, const char* what) { require_finite(u.coords(), what); }

/// Euclidean length; overflow-safe (scaled accumulation).
double euclid_norm(std::span<const double> c);
double euclid_norm(const Point& x);
/// Dual norm of a functional under the Euclidean pairing; the same routine.
double euclid_norm(const Functional& u);

/// The pairing u(x) = sum_i u_i x_i.
double dual_eval(const Functional& u, const Point& x);

inline Functional as_functional(const Point& x) { return Functional(x.values()); }
inline Point as_point(const Functional& u) { return Point(u.values()); }

/// Parses "0.1,2,-3e-4" into a point. Throws InputError on malformed or non-finite entries.
Point parse_point(const std::string& text);
/// Shortest round-trip decimal rendering, comma separated.
std::string format_point(const Point& x);
/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace renorm
