#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ofw/core.hpp"

namespace ofw {

/// Feasibility tolerance used wherever a caller does not pass one.
inline constexpr double kFeasibilityTol = 1e-9;

/// Gradients with Euclidean norm at or below this are treated as zero by the LMO.
inline constexpr double kZeroGradientTol = 1e-12;

enum class SetKind { L2Ball, LpBall, L1Ball, Simplex };

std::string_view to_string(SetKind kind);

/// Origin-centred norm balls and the probability simplex.
///
/// Values are immutable once built. Each set knows its Euclidean diameter and
/// its strong-convexity modulus with respect to the l2 norm (zero for the
/// polytopes).
class FeasibleSet {
 public:
  static FeasibleSet l2_ball(std::size_t dim, double radius);
  /// p in (1, 2].
  static FeasibleSet lp_ball(std::size_t dim, double p, double radius);
  static FeasibleSet l1_ball(std::size_t dim, double radius);
  static FeasibleSet simplex(std::size_t dim);

  SetKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  /// Ball radius; 0 for the simplex.
  double radius() const noexcept { return radius_; }
  /// Norm exponent: 2 for L2Ball, 1 for L1Ball and Simplex.
  double p() const noexcept { return p_; }
  double diameter() const noexcept;
  bool strongly_convex() const noexcept { return strong_convexity_modulus() > 0.0; }
  double strong_convexity_modulus() const noexcept;

  bool contains(const Point& x, double tol = kFeasibilityTol) const;

  /// A minimizer of <g, x> over the set. Returns anchor() when ||g|| <= kZeroGradientTol.
  Point lmo(const Point& g) const;

  /// Euclidean projection.
  Point project(const Point& x) const;

  /// Origin for balls, barycenter for the simplex.
  Point anchor() const;

  /// Deterministic-per-seed feasible sample.
  Point random_feasible(std::uint64_t seed) const;

  /// Norm whose unit ball defines the set (l1 for the simplex).
  double set_norm(const Point& x) const;

 private:
  FeasibleSet(SetKind kind, std::size_t dim, double radius, double p);

  void check_dim(const Point& x) const;

  SetKind kind_;
  std::size_t dim_;
  double radius_;
  double p_;
};

/// Euclidean projection onto {x >= 0, sum x = total}.
Point project_onto_simplex(const Point& x, double total = 1.0);

}  // namespace ofw
