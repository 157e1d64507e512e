#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ofw/core.hpp"
#include "ofw/sets.hpp"

namespace ofw {

enum class LossKind { Linear, Quadratic };

std::string_view to_string(LossKind kind);

/// Seeded adversary description.
///
/// Linear rounds use gradients of norm exactly `lipschitz`; quadratic rounds are
/// (lambda/2)||x - theta_t||^2 with feasible centres theta_t, so their Lipschitz
/// constant over the set is derived from the diameter instead of `lipschitz`.
struct LossSpec {
  LossKind kind = LossKind::Linear;
  double lipschitz = 1.0;
  double lambda = 0.0;
  std::size_t dim = 1;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when kind and constants disagree.
  void validate() const;
};

/// One revealed loss f_t.
class LossRound {
 public:
  /// f(x) = <g, x>.
  static LossRound linear(std::size_t t, Point gradient);
  /// f(x) = (lambda/2)||x - center||^2.
  static LossRound quadratic(std::size_t t, Point center, double lambda);

  std::size_t t() const noexcept { return t_; }
  LossKind kind() const noexcept { return kind_; }
  double lambda() const noexcept { return lambda_; }
  std::size_t dim() const noexcept { return vec_.dim(); }
  /// Linear: the constant gradient. Quadratic: the centre theta_t.
  const Point& parameter() const noexcept { return vec_; }

  double value_at(const Point& x) const;
  Point grad_at(const Point& x) const;

 private:
  LossRound(std::size_t t, LossKind kind, Point vec, double lambda)
      : t_(t), kind_(kind), vec_(std::move(vec)), lambda_(lambda) {}

  std::size_t t_;
  LossKind kind_;
  Point vec_;
  double lambda_;
};

LossRound make_linear_round(const LossSpec& spec, std::size_t t);
LossRound make_quadratic_round(const LossSpec& spec, std::size_t t, const FeasibleSet& set);
/// Dispatches on spec.kind.
LossRound make_round(const LossSpec& spec, std::size_t t, const FeasibleSet& set);

struct LossConstants {
  double lipschitz;
  double lambda;
};

/// (G, 0) for linear losses, (lambda * D, lambda) for quadratic ones.
LossConstants certify_constants(const LossSpec& spec, const FeasibleSet& set);

}  // namespace ofw
