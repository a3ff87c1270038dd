#include "renorm/vector.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "renorm/errors.hpp"
#include "renorm/tolerance.hpp"

namespace renorm {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

void require_finite(std::span<const double> c, const char* what) {
  for (double x : c) {
    if (!std::isfinite(x)) throw InputError(std::string(what) + ": non-finite coordinate");
  }
}

double euclid_norm(std::span<const double> c) {
  double scale = 0.0;
  for (double x : c) {
    if (!std::isfinite(x)) throw InputError("euclid_norm: non-finite coordinate");
    scale = std::max(scale, std::abs(x));
  }
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double x : c) {
    double r = x / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

double euclid_norm(const Point& x) { return euclid_norm(x.coords()); }
double euclid_norm(const Functional& u) { return euclid_norm(u.coords()); }

double dual_eval(const Functional& u, const Point& x) {
  require_same_dim(u.dim(), x.dim(), "dual_eval");
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += u[i] * x[i];
  return s;
}

Point parse_point(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(pos, end - pos);
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw InputError("parse_point: empty coordinate in '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("parse_point: malformed coordinate '" + tok + "'");
    }
    if (!std::isfinite(v)) throw InputError("parse_point: non-finite coordinate '" + tok + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return Point(std::move(out));
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string format_point(const Point& x) {
  std::string s;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) s += ',';
    s += format_double(x[i]);
  }
  return s;
}

void ToleranceConfig::validate() const {
  if (!(line_search_tol > 0.0)) throw ConstraintError("line_search_tol", "must be positive");
  if (!(line_search_tol <= gauge_rel_tol))
    throw ConstraintError("gauge_rel_tol", "must be >= line_search_tol");
  if (!(gauge_rel_tol <= cert_gap_tol))
    throw ConstraintError("cert_gap_tol", "must be >= gauge_rel_tol");
  if (!(cert_gap_tol < 1e-2)) throw ConstraintError("cert_gap_tol", "must be < 1e-2");
}

}  // namespace renorm
