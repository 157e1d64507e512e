#include "ofw/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ofw::oracle {

SurrogateSpec::SurrogateSpec(SurrogateKind kind, FeasibleSet set, Point grad_sum, Point center, double sq_sum,
                             std::size_t t, double scale)
    : kind_(kind),
      set_(std::move(set)),
      grad_sum_(std::move(grad_sum)),
      center_(std::move(center)),
      sq_sum_(sq_sum),
      t_(t),
      scale_(scale) {
  require_same_dim(grad_sum_, center_);
  if (grad_sum_.dim() != set_.dim()) throw DimensionError("SurrogateSpec: set dimension mismatch");
}

SurrogateSpec SurrogateSpec::ofw(FeasibleSet set, Point grad_sum, Point anchor, double eta, std::size_t t) {
  if (!(eta > 0.0)) throw std::invalid_argument("SurrogateSpec: eta must be positive");
  return SurrogateSpec(SurrogateKind::Ofw, std::move(set), std::move(grad_sum), std::move(anchor), 0.0, t, eta);
}

SurrogateSpec SurrogateSpec::sc_ofw(FeasibleSet set, Point grad_sum, Point iterate_sum, double iterate_sq_sum,
                                    std::size_t t, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("SurrogateSpec: lambda must be positive");
  return SurrogateSpec(SurrogateKind::ScOfw, std::move(set), std::move(grad_sum), std::move(iterate_sum),
                       iterate_sq_sum, t, lambda);
}

SurrogateSpec SurrogateSpec::of(const OfwLineSearch& learner) {
  return ofw(learner.set(), learner.grad_sum(), learner.anchor(), learner.eta(), learner.round());
}

SurrogateSpec SurrogateSpec::of(const ScOfw& learner) {
  return sc_ofw(learner.set(), learner.grad_sum(), learner.iterate_sum(), learner.iterate_sq_sum(),
                learner.round(), learner.lambda());
}

double SurrogateSpec::value(const Point& x) const {
  if (kind_ == SurrogateKind::Ofw) return scale_ * dot(grad_sum_, x) + squared_norm(x - center_);
  const double td = static_cast<double>(t_);
  return dot(grad_sum_, x) + 0.5 * scale_ * (td * squared_norm(x) - 2.0 * dot(x, center_) + sq_sum_);
}

Point SurrogateSpec::gradient(const Point& x) const {
  if (kind_ == SurrogateKind::Ofw) {
    Point g = scale_ * grad_sum_;
    g.add_scaled(2.0, x - center_);
    return g;
  }
  Point g = grad_sum_;
  g.add_scaled(scale_ * static_cast<double>(t_), x);
  g.add_scaled(-scale_, center_);
  return g;
}

double SurrogateSpec::curvature() const noexcept {
  return kind_ == SurrogateKind::Ofw ? 2.0 : scale_ * static_cast<double>(t_);
}

double SurrogateSpec::difference(const Point& x, const Point& y) const {
  const Point d = x - y;
  return dot(gradient(y), d) + 0.5 * curvature() * squared_norm(d);
}

double frank_wolfe_gap(const FeasibleSet& set, const Point& x, const Point& grad) {
  return dot(grad, x - set.lmo(grad));
}

Minimum surrogate_argmin(const SurrogateSpec& spec, double tol) {
  const double beta = spec.curvature();
  if (!(beta > 0.0)) throw std::invalid_argument("surrogate_argmin: surrogate has no curvature (t = 0)");
  const FeasibleSet& set = spec.set();
  Point x = set.anchor();
  for (std::size_t it = 0; it < kMaxOracleIterations; ++it) {
    const Point grad = spec.gradient(x);
    const double gap = frank_wolfe_gap(set, x, grad);
    if (gap <= tol) return Minimum{x, spec.value(x), gap, it};
    Point y = x;
    y.add_scaled(-1.0 / beta, grad);
    x = set.project(y);
  }
  throw std::runtime_error("surrogate_argmin: no convergence after " + std::to_string(kMaxOracleIterations) +
                           " iterations");
}

namespace {

LossKind common_kind(std::span<const LossRound> rounds, double& lambda) {
  if (rounds.empty()) throw std::invalid_argument("offline_comparator: no rounds");
  const LossKind kind = rounds.front().kind();
  lambda = rounds.front().lambda();
  for (const LossRound& r : rounds) {
    if (r.kind() != kind) throw std::invalid_argument("offline_comparator: mixed loss kinds");
    if (r.lambda() != lambda) throw std::invalid_argument("offline_comparator: mixed strong-convexity moduli");
  }
  return kind;
}

double total_loss(std::span<const LossRound> rounds, const Point& x) {
  double total = 0.0;
  for (const LossRound& r : rounds) total += r.value_at(x);
  return total;
}

}  // namespace

Comparator offline_comparator(const FeasibleSet& set, std::span<const LossRound> rounds, double /*tol*/) {
  double lambda = 0.0;
  const LossKind kind = common_kind(rounds, lambda);
  Point sum(set.dim());
  for (const LossRound& r : rounds) sum += r.parameter();
  if (kind == LossKind::Linear) {
    Point x = set.lmo(sum);
    const double total = dot(sum, x);
    return {std::move(x), total};
  }
  // sum_t (lambda/2)||x - theta_t||^2 = (lambda T / 2)||x - mean||^2 + const.
  Point x = set.project((1.0 / static_cast<double>(rounds.size())) * sum);
  const double total = total_loss(rounds, x);
  return {std::move(x), total};
}

Comparator quadratic_comparator_pgd(const FeasibleSet& set, std::span<const LossRound> rounds, double tol) {
  double lambda = 0.0;
  if (common_kind(rounds, lambda) != LossKind::Quadratic) {
    throw std::invalid_argument("quadratic_comparator_pgd: rounds are not quadratic");
  }
  const double n = static_cast<double>(rounds.size());
  Point centers(set.dim());
  for (const LossRound& r : rounds) centers += r.parameter();
  auto gradient = [&](const Point& x) {
    Point g = (lambda * n) * x;
    g.add_scaled(-lambda, centers);
    return g;
  };
  Point x = set.anchor();
  const double step = 1.0 / (lambda * n);
  for (std::size_t it = 0; it < kMaxOracleIterations; ++it) {
    const Point g = gradient(x);
    if (frank_wolfe_gap(set, x, g) <= tol) return {x, total_loss(rounds, x)};
    Point y = x;
    y.add_scaled(-step, g);
    x = set.project(y);
  }
  throw std::runtime_error("quadratic_comparator_pgd: no convergence");
}

PrefixComparator::PrefixComparator(FeasibleSet set) : set_(std::move(set)), sum_(set_.dim()) {}

void PrefixComparator::absorb(const LossRound& round) {
  if (kind_ && (*kind_ != round.kind() || lambda_ != round.lambda())) {
    throw std::invalid_argument("PrefixComparator: rounds disagree on kind or lambda");
  }
  kind_ = round.kind();
  lambda_ = round.lambda();
  sum_ += round.parameter();
  if (round.kind() == LossKind::Quadratic) sq_sum_ += squared_norm(round.parameter());
  ++count_;
}

double PrefixComparator::value() const {
  if (count_ == 0) return 0.0;
  if (*kind_ == LossKind::Linear) return dot(sum_, set_.lmo(sum_));
  const double n = static_cast<double>(count_);
  const Point x = set_.project((1.0 / n) * sum_);
  return 0.5 * lambda_ * (n * squared_norm(x) - 2.0 * dot(x, sum_) + sq_sum_);
}

double grid_line_search(double a, double b, std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_line_search: need at least 2 grid points");
  double best_sigma = 0.0;
  double best_value = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double sigma = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    const double value = a * sigma + b * sigma * sigma;
    if (value < best_value) {
      best_value = value;
      best_sigma = sigma;
    }
  }
  return best_sigma;
}

}  // namespace ofw::oracle
