#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "ofw/core.hpp"
#include "ofw/sets.hpp"

namespace ofw {

/// Iterate directions at or below this length make the Frank-Wolfe step a no-op.
inline constexpr double kDegenerateStepTol = 1e-12;

/// Diagnostics of the most recent Frank-Wolfe step.
struct FwStep {
  Point start;           // x_t before the step
  Point surrogate_grad;  // gradient of the surrogate at start
  Point vertex;          // LMO answer
  double sigma = 0.0;
};

/// Online Frank-Wolfe with an exact line search on the surrogate
///
///   F_t(x) = eta * <sum_{s<=t} g_s, x> + ||x - x_1||^2,
///
/// with eta = D / (2 G (T + 2)^{2/3}). The horizon is fixed at construction
/// because eta depends on it.
class OfwLineSearch {
 public:
  OfwLineSearch(FeasibleSet set, std::size_t horizon, double lipschitz);

  const Point& decision() const noexcept { return x_; }
  void update(const Point& gradient);

  const FeasibleSet& set() const noexcept { return set_; }
  const Point& anchor() const noexcept { return anchor_; }
  const Point& grad_sum() const noexcept { return grad_sum_; }
  std::size_t round() const noexcept { return t_; }
  std::size_t horizon() const noexcept { return horizon_; }
  double eta() const noexcept { return eta_; }
  const std::optional<FwStep>& last_step() const noexcept { return last_; }

  /// Gradient of the current surrogate at x in O(dim).
  Point surrogate_gradient(const Point& x) const;

 private:
  FeasibleSet set_;
  std::size_t horizon_;
  double eta_;
  Point anchor_;
  Point x_;
  Point grad_sum_;
  std::size_t t_ = 0;
  std::optional<FwStep> last_;
};

/// Frank-Wolfe variant for lambda-strongly convex losses with surrogate
///
///   F_t(x) = sum_{s<=t} ( <g_s, x> + (lambda/2) ||x - x_s||^2 ).
///
/// Only running sums are kept: the gradient is grad_sum + lambda (t x - iterate_sum).
class ScOfw {
 public:
  ScOfw(FeasibleSet set, double lambda);

  const Point& decision() const noexcept { return x_; }
  void update(const Point& gradient);

  const FeasibleSet& set() const noexcept { return set_; }
  const Point& grad_sum() const noexcept { return grad_sum_; }
  const Point& iterate_sum() const noexcept { return iterate_sum_; }
  /// Sum of ||x_s||^2; only the surrogate's constant term depends on it.
  double iterate_sq_sum() const noexcept { return iterate_sq_sum_; }
  std::size_t round() const noexcept { return t_; }
  double lambda() const noexcept { return lambda_; }
  const std::optional<FwStep>& last_step() const noexcept { return last_; }

  Point surrogate_gradient(const Point& x) const;

 private:
  FeasibleSet set_;
  double lambda_;
  Point x_;
  Point grad_sum_;
  Point iterate_sum_;
  double iterate_sq_sum_ = 0.0;
  std::size_t t_ = 0;
  std::optional<FwStep> last_;
};

/// Classic OFW baseline: same surrogate as OfwLineSearch but with
/// eta = D / (2 G T^{3/4}) and the decaying step sigma_t = min(1, t^{-1/2}).
class OfwDecay {
 public:
  OfwDecay(FeasibleSet set, std::size_t horizon, double lipschitz);

  const Point& decision() const noexcept { return x_; }
  void update(const Point& gradient);

  std::size_t round() const noexcept { return t_; }
  double eta() const noexcept { return eta_; }
  double last_sigma() const noexcept { return last_sigma_; }

 private:
  FeasibleSet set_;
  double eta_;
  Point anchor_;
  Point x_;
  Point grad_sum_;
  std::size_t t_ = 0;
  double last_sigma_ = 0.0;
};

/// Projected online gradient descent. Step D / (G sqrt(t)) for convex losses,
/// 1 / (lambda t) when lambda > 0.
class Ogd {
 public:
  Ogd(FeasibleSet set, double lipschitz, double lambda = 0.0);

  const Point& decision() const noexcept { return x_; }
  void update(const Point& gradient);

  std::size_t round() const noexcept { return t_; }
  /// Step size used for round t (1-based).
  double step_size(std::size_t t) const;

 private:
  FeasibleSet set_;
  double lipschitz_;
  double lambda_;
  Point x_;
  std::size_t t_ = 0;
};

using Learner = std::variant<OfwLineSearch, ScOfw, OfwDecay, Ogd>;

enum class Algo { OfwLs, ScOfw, OfwDecay, Ogd };

std::string_view to_string(Algo algo);

inline const Point& decision(const Learner& learner) {
  return std::visit([](const auto& l) -> const Point& { return l.decision(); }, learner);
}

inline void update(Learner& learner, const Point& gradient) {
  std::visit([&](auto& l) { l.update(gradient); }, learner);
}

}  // namespace ofw
