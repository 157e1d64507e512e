#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ofw {

/// Raised when two operands disagree on dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense real vector used for decisions, gradients and surrogate directions.
/// All coordinates are finite; construction from non-finite data throws.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim, double fill = 0.0);
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);

  /// this += s * other
  Point& add_scaled(double s, const Point& other);

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

Point operator+(Point lhs, const Point& rhs);
Point operator-(Point lhs, const Point& rhs);
Point operator*(double s, Point v);

void require_same_dim(const Point& u, const Point& v);

/// Left-to-right inner product.
double dot(const Point& u, const Point& v);

/// Euclidean norm.
double norm(const Point& v);

double squared_norm(const Point& v);

/// (sum |v_i|^p)^(1/p), p >= 1.
double lp_norm(const Point& v, double p);

double distance(const Point& u, const Point& v);

/// Coefficients of the one-dimensional model sigma * a + sigma^2 * b.
struct StepCoefficients {
  double a = 0.0;
  double b = 1.0;
};

/// Exact minimizer of sigma * a + sigma^2 * b over sigma in [0, 1]; b must be positive.
double line_search_quadratic(StepCoefficients c);

}  // namespace ofw
