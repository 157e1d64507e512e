#include "ofw/learners.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ofw {

namespace {

// One Frank-Wolfe step from x along the LMO vertex for surrogate gradient `grad`.
// `curvature` is the factor c in the model sigma * a + sigma^2 * c ||v - x||^2.
FwStep frank_wolfe_step(const FeasibleSet& set, const Point& x, Point grad, double curvature) {
  Point vertex = set.lmo(grad);
  const Point direction = vertex - x;
  const double len2 = squared_norm(direction);
  double sigma = 0.0;
  if (std::sqrt(len2) > kDegenerateStepTol) {
    sigma = line_search_quadratic({dot(grad, direction), curvature * len2});
  }
  return FwStep{x, std::move(grad), std::move(vertex), sigma};
}

}  // namespace

std::string_view to_string(Algo algo) {
  switch (algo) {
    case Algo::OfwLs:
      return "ofw_ls";
    case Algo::ScOfw:
      return "sc_ofw";
    case Algo::OfwDecay:
      return "ofw_decay";
    case Algo::Ogd:
      return "ogd";
  }
  return "unknown";
}

OfwLineSearch::OfwLineSearch(FeasibleSet set, std::size_t horizon, double lipschitz)
    : set_(std::move(set)),
      horizon_(horizon),
      eta_(0.0),
      anchor_(set_.anchor()),
      x_(anchor_),
      grad_sum_(set_.dim()) {
  if (horizon == 0) throw std::invalid_argument("OfwLineSearch: horizon must be >= 1");
  if (!(lipschitz > 0.0)) throw std::invalid_argument("OfwLineSearch: G must be positive");
  eta_ = set_.diameter() / (2.0 * lipschitz * std::pow(static_cast<double>(horizon) + 2.0, 2.0 / 3.0));
}

Point OfwLineSearch::surrogate_gradient(const Point& x) const {
  Point grad = eta_ * grad_sum_;
  grad.add_scaled(2.0, x - anchor_);
  return grad;
}

void OfwLineSearch::update(const Point& gradient) {
  require_same_dim(gradient, x_);
  if (t_ >= horizon_) throw std::logic_error("OfwLineSearch: horizon exhausted");
  grad_sum_ += gradient;
  FwStep step = frank_wolfe_step(set_, x_, surrogate_gradient(x_), 1.0);
  x_.add_scaled(step.sigma, step.vertex - x_);
  ++t_;
  last_ = std::move(step);
}

ScOfw::ScOfw(FeasibleSet set, double lambda)
    : set_(std::move(set)), lambda_(lambda), x_(set_.anchor()), grad_sum_(set_.dim()), iterate_sum_(set_.dim()) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ScOfw: lambda must be positive");
}

Point ScOfw::surrogate_gradient(const Point& x) const {
  Point grad = grad_sum_;
  grad.add_scaled(lambda_ * static_cast<double>(t_), x);
  grad.add_scaled(-lambda_, iterate_sum_);
  return grad;
}

void ScOfw::update(const Point& gradient) {
  require_same_dim(gradient, x_);
  iterate_sum_ += x_;
  iterate_sq_sum_ += squared_norm(x_);
  grad_sum_ += gradient;
  ++t_;
  FwStep step = frank_wolfe_step(set_, x_, surrogate_gradient(x_), 0.5 * lambda_ * static_cast<double>(t_));
  x_.add_scaled(step.sigma, step.vertex - x_);
  last_ = std::move(step);
}

OfwDecay::OfwDecay(FeasibleSet set, std::size_t horizon, double lipschitz)
    : set_(std::move(set)), eta_(0.0), anchor_(set_.anchor()), x_(anchor_), grad_sum_(set_.dim()) {
  if (horizon == 0) throw std::invalid_argument("OfwDecay: horizon must be >= 1");
  if (!(lipschitz > 0.0)) throw std::invalid_argument("OfwDecay: G must be positive");
  eta_ = set_.diameter() / (2.0 * lipschitz * std::pow(static_cast<double>(horizon), 0.75));
}

void OfwDecay::update(const Point& gradient) {
  require_same_dim(gradient, x_);
  grad_sum_ += gradient;
  ++t_;
  Point grad = eta_ * grad_sum_;
  grad.add_scaled(2.0, x_ - anchor_);
  const Point vertex = set_.lmo(grad);
  last_sigma_ = std::min(1.0, 1.0 / std::sqrt(static_cast<double>(t_)));
  x_.add_scaled(last_sigma_, vertex - x_);
}

Ogd::Ogd(FeasibleSet set, double lipschitz, double lambda)
    : set_(std::move(set)), lipschitz_(lipschitz), lambda_(lambda), x_(set_.anchor()) {
  if (lambda < 0.0) throw std::invalid_argument("Ogd: lambda must be nonnegative");
  if (lambda == 0.0 && !(lipschitz > 0.0)) throw std::invalid_argument("Ogd: G must be positive");
}

double Ogd::step_size(std::size_t t) const {
  const double td = static_cast<double>(t);
  if (lambda_ > 0.0) return 1.0 / (lambda_ * td);
  return set_.diameter() / (lipschitz_ * std::sqrt(td));
}

void Ogd::update(const Point& gradient) {
  require_same_dim(gradient, x_);
  ++t_;
  Point y = x_;
  y.add_scaled(-step_size(t_), gradient);
  x_ = set_.project(y);
}

}  // namespace ofw
