#include "ofw/losses.hpp"

#include <cmath>
#include <stdexcept>

#include "ofw/random.hpp"

namespace ofw {

std::string_view to_string(LossKind kind) {
  return kind == LossKind::Linear ? "linear" : "quadratic";
}

void LossSpec::validate() const {
  if (dim == 0) throw std::invalid_argument("LossSpec: dim must be positive");
  if (kind == LossKind::Linear) {
    if (!(lipschitz > 0.0 && std::isfinite(lipschitz))) {
      throw std::invalid_argument("LossSpec: linear losses need G > 0");
    }
    if (lambda != 0.0) throw std::invalid_argument("LossSpec: linear losses have lambda = 0");
  } else if (!(lambda > 0.0 && std::isfinite(lambda))) {
    throw std::invalid_argument("LossSpec: quadratic losses need lambda > 0");
  }
}

LossRound LossRound::linear(std::size_t t, Point gradient) {
  return LossRound(t, LossKind::Linear, std::move(gradient), 0.0);
}

LossRound LossRound::quadratic(std::size_t t, Point center, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("LossRound: quadratic needs lambda > 0");
  return LossRound(t, LossKind::Quadratic, std::move(center), lambda);
}

double LossRound::value_at(const Point& x) const {
  if (kind_ == LossKind::Linear) return dot(vec_, x);
  return 0.5 * lambda_ * squared_norm(x - vec_);
}

Point LossRound::grad_at(const Point& x) const {
  require_same_dim(x, vec_);
  if (kind_ == LossKind::Linear) return vec_;
  return lambda_ * (x - vec_);
}

LossRound make_linear_round(const LossSpec& spec, std::size_t t) {
  if (spec.kind != LossKind::Linear) throw std::invalid_argument("make_linear_round: spec is not linear");
  spec.validate();
  auto rng = make_rng(round_seed(spec.seed, t));
  std::normal_distribution<double> normal(0.0, 1.0);
  Point g(spec.dim);
  double n = 0.0;
  while (n == 0.0) {
    for (std::size_t i = 0; i < spec.dim; ++i) g[i] = normal(rng);
    n = norm(g);
  }
  g *= spec.lipschitz / n;
  return LossRound::linear(t, std::move(g));
}

LossRound make_quadratic_round(const LossSpec& spec, std::size_t t, const FeasibleSet& set) {
  if (spec.kind != LossKind::Quadratic) {
    throw std::invalid_argument("make_quadratic_round: spec is not quadratic");
  }
  spec.validate();
  if (set.dim() != spec.dim) throw DimensionError("make_quadratic_round: set and loss dims differ");
  return LossRound::quadratic(t, set.random_feasible(round_seed(spec.seed, t)), spec.lambda);
}

LossRound make_round(const LossSpec& spec, std::size_t t, const FeasibleSet& set) {
  if (spec.kind == LossKind::Linear) return make_linear_round(spec, t);
  return make_quadratic_round(spec, t, set);
}

LossConstants certify_constants(const LossSpec& spec, const FeasibleSet& set) {
  if (spec.dim != set.dim()) throw DimensionError("certify_constants: set and loss dims differ");
  if (spec.kind == LossKind::Linear) return {spec.lipschitz, 0.0};
  return {spec.lambda * set.diameter(), spec.lambda};
}

}  // namespace ofw
