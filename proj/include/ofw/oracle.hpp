#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "ofw/core.hpp"
#include "ofw/learners.hpp"
#include "ofw/losses.hpp"
#include "ofw/sets.hpp"

// Reference computations used to measure the learners. These use Euclidean
// projections freely; none of it runs inside OfwLineSearch or ScOfw.
namespace ofw::oracle {

inline constexpr double kOracleTol = 1e-9;
inline constexpr std::size_t kMaxOracleIterations = 1'000'000;

enum class SurrogateKind { Ofw, ScOfw };

/// Snapshot of a learner's surrogate F_t, sufficient to evaluate it exactly.
class SurrogateSpec {
 public:
  /// F(x) = eta <grad_sum, x> + ||x - anchor||^2.
  static SurrogateSpec ofw(FeasibleSet set, Point grad_sum, Point anchor, double eta, std::size_t t);
  /// F(x) = <grad_sum, x> + (lambda/2) (t ||x||^2 - 2 <x, iterate_sum> + iterate_sq_sum).
  static SurrogateSpec sc_ofw(FeasibleSet set, Point grad_sum, Point iterate_sum, double iterate_sq_sum,
                              std::size_t t, double lambda);

  /// Surrogate the learner holds right now (F_t after t updates).
  static SurrogateSpec of(const OfwLineSearch& learner);
  static SurrogateSpec of(const ScOfw& learner);

  SurrogateKind kind() const noexcept { return kind_; }
  const FeasibleSet& set() const noexcept { return set_; }
  std::size_t t() const noexcept { return t_; }

  double value(const Point& x) const;
  Point gradient(const Point& x) const;
  /// Hessian scale: 2 for Ofw, lambda * t for ScOfw. F is exactly this strongly convex and smooth.
  double curvature() const noexcept;
  /// F(x) - F(y), evaluated through the exact quadratic expansion around y.
  double difference(const Point& x, const Point& y) const;

 private:
  SurrogateSpec(SurrogateKind kind, FeasibleSet set, Point grad_sum, Point center, double sq_sum,
                std::size_t t, double scale);

  SurrogateKind kind_;
  FeasibleSet set_;
  Point grad_sum_;
  Point center_;  // anchor (Ofw) or iterate_sum (ScOfw)
  double sq_sum_;
  std::size_t t_;
  double scale_;  // eta (Ofw) or lambda (ScOfw)
};

/// max_v <grad, x - v> over the set.
double frank_wolfe_gap(const FeasibleSet& set, const Point& x, const Point& grad);

struct Minimum {
  Point x_star;
  double value = 0.0;
  double fw_gap = 0.0;
  std::size_t iterations = 0;
};

/// Projected gradient descent with step 1/curvature until the Frank-Wolfe gap
/// drops to tol. Throws std::runtime_error after kMaxOracleIterations.
Minimum surrogate_argmin(const SurrogateSpec& spec, double tol = kOracleTol);

struct Comparator {
  Point x_star;
  double total = 0.0;
};

/// Best fixed decision in hindsight: exact via the LMO for linear rounds,
/// projection of the mean centre for quadratic rounds.
Comparator offline_comparator(const FeasibleSet& set, std::span<const LossRound> rounds, double tol = kOracleTol);

/// Same minimizer as offline_comparator for quadratic rounds, by projected gradient descent.
Comparator quadratic_comparator_pgd(const FeasibleSet& set, std::span<const LossRound> rounds,
                                    double tol = kOracleTol);

/// Running min_x sum_{s<=t} f_s(x) in O(dim) per absorbed round.
class PrefixComparator {
 public:
  explicit PrefixComparator(FeasibleSet set);

  void absorb(const LossRound& round);
  double value() const;
  std::size_t rounds() const noexcept { return count_; }

 private:
  FeasibleSet set_;
  std::optional<LossKind> kind_;
  double lambda_ = 0.0;
  Point sum_;  // gradients (linear) or centres (quadratic)
  double sq_sum_ = 0.0;
  std::size_t count_ = 0;
};

/// Best point of the uniform grid {0, 1/(n-1), ..., 1} for sigma * a + sigma^2 * b.
double grid_line_search(double a, double b, std::size_t grid_size);

}  // namespace ofw::oracle
