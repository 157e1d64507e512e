#include "ofw/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ofw {

namespace {

void require_finite(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) throw std::invalid_argument("Point: non-finite coordinate");
  }
}

}  // namespace

Point::Point(std::size_t dim, double fill) : coords_(dim, fill) {
  if (!std::isfinite(fill)) throw std::invalid_argument("Point: non-finite coordinate");
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { require_finite(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { require_finite(coords_); }

Point& Point::operator+=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

Point& Point::add_scaled(double s, const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += s * other.coords_[i];
  return *this;
}

Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
Point operator*(double s, Point v) { return v *= s; }

void require_same_dim(const Point& u, const Point& v) {
  if (u.dim() != v.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()));
  }
}

double dot(const Point& u, const Point& v) {
  require_same_dim(u, v);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) sum += u[i] * v[i];
  return sum;
}

double squared_norm(const Point& v) { return dot(v, v); }

double norm(const Point& v) { return std::sqrt(squared_norm(v)); }

double lp_norm(const Point& v, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (p == 2.0) return norm(v);
  if (p == 1.0) {
    double sum = 0.0;
    for (double c : v.coords()) sum += std::abs(c);
    return sum;
  }
  // Scale by the largest magnitude so |v_i|^p stays representable.
  double scale = 0.0;
  for (double c : v.coords()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double c : v.coords()) sum += std::pow(std::abs(c) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

double distance(const Point& u, const Point& v) { return norm(u - v); }

double line_search_quadratic(StepCoefficients c) {
  if (!(c.b > 0.0)) throw std::invalid_argument("line_search_quadratic: b must be positive");
  return std::clamp(-c.a / (2.0 * c.b), 0.0, 1.0);
}

}  // namespace ofw
