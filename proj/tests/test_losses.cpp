#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ofw/losses.hpp"
#include "ofw/random.hpp"

using namespace ofw;

namespace {

LossSpec linear_spec(std::size_t dim, double G, std::uint64_t seed) {
  LossSpec s;
  s.kind = LossKind::Linear;
  s.lipschitz = G;
  s.lambda = 0.0;
  s.dim = dim;
  s.seed = seed;
  return s;
}

LossSpec quadratic_spec(std::size_t dim, double lambda, std::uint64_t seed) {
  LossSpec s;
  s.kind = LossKind::Quadratic;
  s.lipschitz = 0.0;
  s.lambda = lambda;
  s.dim = dim;
  s.seed = seed;
  return s;
}

Point central_difference(const LossRound& f, const Point& x, double h) {
  Point g(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Point up = x, down = x;
    up[i] += h;
    down[i] -= h;
    g[i] = (f.value_at(up) - f.value_at(down)) / (2.0 * h);
  }
  return g;
}

}  // namespace

TEST_CASE("linear rounds have gradients of norm exactly G") {
  for (std::size_t t = 1; t <= 50; ++t) {
    const auto f = make_linear_round(linear_spec(7, 1.0, 3), t);
    CHECK(norm(f.grad_at(Point(7))) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f.value_at(Point(7)) == 0.0);
    const auto f3 = make_linear_round(linear_spec(7, 3.0, 3), t);
    CHECK(norm(f3.parameter()) == doctest::Approx(3.0).epsilon(1e-15));
  }
}

TEST_CASE("linear rounds are deterministic per seed and round") {
  const auto spec = linear_spec(5, 1.0, 9);
  CHECK(make_linear_round(spec, 4).parameter() == make_linear_round(spec, 4).parameter());
  CHECK(make_linear_round(spec, 4).parameter() != make_linear_round(spec, 5).parameter());
  CHECK(make_linear_round(spec, 4).parameter() != make_linear_round(linear_spec(5, 1.0, 10), 4).parameter());
}

TEST_CASE("linear gradient ignores the query point") {
  const auto f = make_linear_round(linear_spec(3, 2.0, 1), 1);
  CHECK(f.grad_at({0, 0, 0}) == f.grad_at({0.3, -0.1, 0.2}));
}

TEST_CASE("kind mismatches are rejected") {
  const auto ball = FeasibleSet::l2_ball(3, 1.0);
  CHECK_THROWS(make_linear_round(quadratic_spec(3, 1.0, 1), 1));
  CHECK_THROWS(make_quadratic_round(linear_spec(3, 1.0, 1), 1, ball));
  auto bad = quadratic_spec(3, 0.0, 1);
  CHECK_THROWS(make_quadratic_round(bad, 1, ball));
  CHECK_THROWS(LossRound::quadratic(1, {0, 0, 0}, -1.0));
  CHECK_THROWS(make_quadratic_round(quadratic_spec(4, 1.0, 1), 1, ball));
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(linear_spec(2, 1.0, 0).validate());
  auto lin = linear_spec(2, 1.0, 0);
  lin.lambda = 0.5;
  CHECK_THROWS(lin.validate());
  CHECK_THROWS(linear_spec(2, 0.0, 0).validate());
  CHECK_THROWS(quadratic_spec(2, 0.0, 0).validate());
  CHECK_THROWS(linear_spec(0, 1.0, 0).validate());
}

TEST_CASE("quadratic round examples") {
  const auto ball = FeasibleSet::l2_ball(3, 1.0);
  const auto f = make_quadratic_round(quadratic_spec(3, 1.0, 5), 2, ball);
  const Point theta = f.parameter();
  CHECK(ball.contains(theta));
  CHECK(f.value_at(theta) == 0.0);
  CHECK(f.grad_at(theta) == Point(3));
  Point x = theta;
  x[1] += 0.5;
  CHECK(f.value_at(x) == doctest::Approx(0.125).epsilon(1e-14));

  // the strong convexity inequality is tight for quadratics
  const Point y{0.1, -0.2, 0.3};
  const double rhs = f.value_at(x) + dot(f.grad_at(x), y - x) + 0.5 * 1.0 * squared_norm(y - x);
  CHECK(f.value_at(y) == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("quadratic centres use the mixed round seed") {
  const auto simplex = FeasibleSet::simplex(4);
  const auto spec = quadratic_spec(4, 2.0, 17);
  const auto f = make_quadratic_round(spec, 6, simplex);
  CHECK(f.parameter() == simplex.random_feasible(round_seed(17, 6)));
  CHECK(f.lambda() == 2.0);
}

TEST_CASE("certified constants") {
  const auto ball = FeasibleSet::l2_ball(3, 1.0);
  auto c = certify_constants(linear_spec(3, 1.0, 1), ball);
  CHECK(c.lipschitz == 1.0);
  CHECK(c.lambda == 0.0);
  c = certify_constants(quadratic_spec(3, 1.0, 1), ball);
  CHECK(c.lipschitz == 2.0);
  CHECK(c.lambda == 1.0);
  c = certify_constants(quadratic_spec(3, 0.5, 1), FeasibleSet::simplex(3));
  CHECK(c.lipschitz == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(c.lambda == 0.5);
}

TEST_CASE("property: sampled Lipschitz bound with the certified G") {
  auto rng = make_rng(99);
  for (const auto& set : {FeasibleSet::l2_ball(4, 1.0), FeasibleSet::simplex(4), FeasibleSet::lp_ball(4, 1.5, 2.0),
                          FeasibleSet::l1_ball(4, 1.0)}) {
    for (const auto& spec : {linear_spec(4, 1.5, 2), quadratic_spec(4, 0.7, 2)}) {
      const double G = certify_constants(spec, set).lipschitz;
      for (std::size_t t = 1; t <= 10; ++t) {
        const auto f = make_round(spec, t, set);
        for (int k = 0; k < 100; ++k) {
          const Point x = set.random_feasible(rng());
          const Point y = set.random_feasible(rng());
          CHECK(std::abs(f.value_at(x) - f.value_at(y)) <= G * distance(x, y) + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("property: gradients match central finite differences") {
  auto rng = make_rng(7);
  const auto set = FeasibleSet::l2_ball(5, 1.0);
  for (const auto& spec : {linear_spec(5, 1.0, 3), quadratic_spec(5, 1.3, 3)}) {
    for (int k = 0; k < 100; ++k) {
      const auto f = make_round(spec, 1 + k % 13, set);
      const Point x = set.random_feasible(rng());
      const Point fd = central_difference(f, x, 1e-6);
      const Point g = f.grad_at(x);
      CHECK(distance(fd, g) <= 1e-5 * std::max(1.0, norm(g)));
    }
  }
}

TEST_CASE("property: sampled strong convexity of quadratic rounds") {
  auto rng = make_rng(8);
  const auto set = FeasibleSet::simplex(6);
  const double lambda = 0.8;
  for (std::size_t t = 1; t <= 20; ++t) {
    const auto f = make_quadratic_round(quadratic_spec(6, lambda, 4), t, set);
    for (int k = 0; k < 50; ++k) {
      const Point x = set.random_feasible(rng());
      const Point y = set.random_feasible(rng());
      const double lower = f.value_at(x) + dot(f.grad_at(x), y - x) + 0.5 * lambda * squared_norm(y - x);
      CHECK(f.value_at(y) >= lower - 1e-9);
    }
  }
}
