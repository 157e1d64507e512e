#include "ofw/sets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ofw/random.hpp"

namespace ofw {

namespace {

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Largest u in [0, target] with u + mu * p * u^(p-1) <= target, found by bisection.
double shrink_coordinate(double target, double mu, double p) {
  if (target == 0.0) return 0.0;
  double lo = 0.0;
  double hi = target;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (mid + mu * p * std::pow(mid, p - 1.0) > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

// Euclidean projection onto {||y||_p <= r} for 1 < p < 2 when ||x||_p > r.
// KKT: |y_i| + mu * p * |y_i|^(p-1) = |x_i|; bisection on the multiplier mu.
Point project_lp_sphere(const Point& x, double p, double r) {
  const double target = std::pow(r, p);
  auto shrink = [&](double mu) {
    Point y(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) y[i] = sign(x[i]) * shrink_coordinate(std::abs(x[i]), mu, p);
    return y;
  };
  auto mass = [&](const Point& y) {
    double s = 0.0;
    for (double c : y.coords()) s += std::pow(std::abs(c), p);
    return s;
  };

  double mu_lo = 0.0;
  double mu_hi = 1.0;
  Point y_hi = shrink(mu_hi);
  while (mass(y_hi) > target) {
    mu_lo = mu_hi;
    mu_hi *= 2.0;
    y_hi = shrink(mu_hi);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (mu_lo + mu_hi);
    if (mid == mu_lo || mid == mu_hi) break;
    Point y = shrink(mid);
    if (mass(y) > target) {
      mu_lo = mid;
    } else {
      mu_hi = mid;
      y_hi = std::move(y);
    }
  }
  return y_hi;
}

}  // namespace

std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::L2Ball:
      return "l2_ball";
    case SetKind::LpBall:
      return "lp_ball";
    case SetKind::L1Ball:
      return "l1_ball";
    case SetKind::Simplex:
      return "simplex";
  }
  return "unknown";
}

FeasibleSet::FeasibleSet(SetKind kind, std::size_t dim, double radius, double p)
    : kind_(kind), dim_(dim), radius_(radius), p_(p) {
  if (dim == 0) throw std::invalid_argument("FeasibleSet: dim must be positive");
  if (kind != SetKind::Simplex && !(radius > 0.0 && std::isfinite(radius))) {
    throw std::invalid_argument("FeasibleSet: radius must be positive");
  }
}

FeasibleSet FeasibleSet::l2_ball(std::size_t dim, double radius) {
  return FeasibleSet(SetKind::L2Ball, dim, radius, 2.0);
}

FeasibleSet FeasibleSet::lp_ball(std::size_t dim, double p, double radius) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("FeasibleSet: lp_ball needs p in (1, 2]");
  return FeasibleSet(SetKind::LpBall, dim, radius, p);
}

FeasibleSet FeasibleSet::l1_ball(std::size_t dim, double radius) {
  return FeasibleSet(SetKind::L1Ball, dim, radius, 1.0);
}

FeasibleSet FeasibleSet::simplex(std::size_t dim) { return FeasibleSet(SetKind::Simplex, dim, 0.0, 1.0); }

double FeasibleSet::diameter() const noexcept {
  return kind_ == SetKind::Simplex ? std::sqrt(2.0) : 2.0 * radius_;
}

double FeasibleSet::strong_convexity_modulus() const noexcept {
  switch (kind_) {
    case SetKind::L2Ball:
      return 1.0 / radius_;
    case SetKind::LpBall:
      return (p_ - 1.0) * std::pow(static_cast<double>(dim_), 0.5 - 1.0 / p_) / radius_;
    case SetKind::L1Ball:
    case SetKind::Simplex:
      return 0.0;
  }
  return 0.0;
}

void FeasibleSet::check_dim(const Point& x) const {
  if (x.dim() != dim_) {
    throw DimensionError("FeasibleSet: expected dim " + std::to_string(dim_) + ", got " +
                         std::to_string(x.dim()));
  }
}

double FeasibleSet::set_norm(const Point& x) const {
  check_dim(x);
  return lp_norm(x, p_);
}

bool FeasibleSet::contains(const Point& x, double tol) const {
  check_dim(x);
  if (kind_ != SetKind::Simplex) return set_norm(x) <= radius_ + tol;
  double sum = 0.0;
  for (double c : x.coords()) {
    if (c < -tol) return false;
    sum += c;
  }
  return std::abs(sum - 1.0) <= tol;
}

Point FeasibleSet::lmo(const Point& g) const {
  check_dim(g);
  const double gnorm = norm(g);
  if (gnorm <= kZeroGradientTol) return anchor();

  Point v(dim_);
  switch (kind_) {
    case SetKind::L2Ball:
      for (std::size_t i = 0; i < dim_; ++i) v[i] = -radius_ * g[i] / gnorm;
      break;
    case SetKind::LpBall: {
      if (p_ == 2.0) {
        for (std::size_t i = 0; i < dim_; ++i) v[i] = -radius_ * g[i] / gnorm;
        break;
      }
      // Dual exponent q; g is rescaled by max|g_i| so |g_i|^(q-1) cannot overflow.
      const double q = p_ / (p_ - 1.0);
      double scale = 0.0;
      for (double c : g.coords()) scale = std::max(scale, std::abs(c));
      Point h(dim_);
      for (std::size_t i = 0; i < dim_; ++i) h[i] = g[i] / scale;
      const double denom = std::pow(lp_norm(h, q), q - 1.0);
      for (std::size_t i = 0; i < dim_; ++i) {
        v[i] = -radius_ * sign(h[i]) * std::pow(std::abs(h[i]), q - 1.0) / denom;
      }
      break;
    }
    case SetKind::L1Ball: {
      std::size_t j = 0;
      for (std::size_t i = 1; i < dim_; ++i) {
        if (std::abs(g[i]) > std::abs(g[j])) j = i;
      }
      v[j] = -radius_ * sign(g[j]);
      break;
    }
    case SetKind::Simplex: {
      std::size_t j = 0;
      for (std::size_t i = 1; i < dim_; ++i) {
        if (g[i] < g[j]) j = i;
      }
      v[j] = 1.0;
      break;
    }
  }
  return v;
}

Point project_onto_simplex(const Point& x, double total) {
  std::vector<double> sorted(x.coords().begin(), x.coords().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - total) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  Point y(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) y[i] = std::max(x[i] - theta, 0.0);
  return y;
}

Point FeasibleSet::project(const Point& x) const {
  check_dim(x);
  switch (kind_) {
    case SetKind::L2Ball: {
      const double n = norm(x);
      return n <= radius_ ? x : (radius_ / n) * x;
    }
    case SetKind::LpBall: {
      if (set_norm(x) <= radius_) return x;
      if (p_ == 2.0) return (radius_ / norm(x)) * x;
      return project_lp_sphere(x, p_, radius_);
    }
    case SetKind::L1Ball: {
      if (set_norm(x) <= radius_) return x;
      Point magnitudes(dim_);
      for (std::size_t i = 0; i < dim_; ++i) magnitudes[i] = std::abs(x[i]);
      Point y = project_onto_simplex(magnitudes, radius_);
      for (std::size_t i = 0; i < dim_; ++i) y[i] *= sign(x[i]);
      return y;
    }
    case SetKind::Simplex:
      return project_onto_simplex(x, 1.0);
  }
  return x;
}

Point FeasibleSet::anchor() const {
  if (kind_ == SetKind::Simplex) return Point(dim_, 1.0 / static_cast<double>(dim_));
  return Point(dim_, 0.0);
}

Point FeasibleSet::random_feasible(std::uint64_t seed) const {
  auto rng = make_rng(seed);
  Point x(dim_);
  if (kind_ == SetKind::Simplex) {
    std::exponential_distribution<double> expo(1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      x[i] = expo(rng);
      sum += x[i];
    }
    return (1.0 / sum) * x;
  }

  std::normal_distribution<double> normal(0.0, 1.0);
  double n = 0.0;
  while (n == 0.0) {
    for (std::size_t i = 0; i < dim_; ++i) x[i] = normal(rng);
    n = set_norm(x);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double factor = std::pow(unit(rng), 1.0 / static_cast<double>(dim_)) * radius_;
  x *= factor / n;
  // Rounding can push a near-boundary sample a few ulps outside.
  const double achieved = set_norm(x);
  if (achieved > radius_) x *= (radius_ / achieved) * (1.0 - 4.0 * std::numeric_limits<double>::epsilon());
  return x;
}

}  // namespace ofw
