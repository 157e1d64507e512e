#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ofw/core.hpp"
#include "ofw/oracle.hpp"
#include "ofw/random.hpp"

using namespace ofw;

TEST_CASE("dot product examples") {
  CHECK(dot({1, 0}, {0, 1}) == 0.0);
  CHECK(dot({3, 4}, {3, 4}) == 25.0);
  CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32.0);
}

TEST_CASE("dot rejects mismatched dimensions") {
  CHECK_THROWS_AS((dot({1, 2}, {1, 2, 3})), DimensionError);
  Point a{1, 2};
  CHECK_THROWS_AS((a += Point{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS((distance({1}, {1, 2})), DimensionError);
}

TEST_CASE("points reject non-finite coordinates") {
  CHECK_THROWS(Point{1.0, std::numeric_limits<double>::quiet_NaN()});
  CHECK_THROWS(Point(std::vector<double>{std::numeric_limits<double>::infinity()}));
  CHECK_THROWS(Point(3, std::numeric_limits<double>::infinity()));
}

TEST_CASE("lp norm examples") {
  CHECK(lp_norm({3, 4}, 2.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lp_norm({1, -1, 1}, 1.0) == 3.0);
  CHECK(lp_norm({1, 1}, 1.5) == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-14));
  CHECK(lp_norm({1, 1}, 1.5) == doctest::Approx(1.58740).epsilon(1e-5));
  CHECK_THROWS_AS((lp_norm({1, 1}, 0.5)), std::invalid_argument);
}

TEST_CASE("lp norm agrees with a naive power sum") {
  auto rng = make_rng(3);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> pick(1.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    Point v(4);
    for (std::size_t k = 0; k < 4; ++k) v[k] = normal(rng);
    const double p = pick(rng);
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += std::pow(std::abs(v[k]), p);
    CHECK(lp_norm(v, p) == doctest::Approx(std::pow(s, 1.0 / p)).epsilon(1e-12));
  }
}

TEST_CASE("line search examples") {
  CHECK(line_search_quadratic({-1, 2}) == 0.25);
  CHECK(line_search_quadratic({3, 5}) == 0.0);
  CHECK(line_search_quadratic({-4, 2}) == 1.0);
  // ties at the clamp boundaries return the boundary
  CHECK(line_search_quadratic({0, 1}) == 0.0);
  CHECK(line_search_quadratic({-2, 1}) == 1.0);
}

TEST_CASE("line search rejects nonpositive curvature") {
  CHECK_THROWS_AS((line_search_quadratic({-1, 0})), std::invalid_argument);
  CHECK_THROWS_AS((line_search_quadratic({-1, -2})), std::invalid_argument);
}

TEST_CASE("property: line search beats every grid point") {
  auto rng = make_rng(11);
  std::uniform_real_distribution<double> log_b(-3.0, 3.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double b = std::pow(10.0, log_b(rng));
    const double a = 4.0 * b * unit(rng);
    const double s = line_search_quadratic({a, b});
    REQUIRE(s >= 0.0);
    REQUIRE(s <= 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 10000; ++k) {
      const double g = k / 9999.0;
      best = std::min(best, a * g + b * g * g);
    }
    CHECK(a * s + b * s * s <= best + 1e-12);
    CHECK(std::abs(s - oracle::grid_line_search(a, b, 10001)) <= 1e-4);
  }
}

TEST_CASE("property: dot is symmetric and bilinear, and norm matches dot") {
  auto rng = make_rng(12);
  std::normal_distribution<double> normal;
  auto draw = [&](std::size_t d) {
    Point p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = normal(rng);
    return p;
  };
  for (int i = 0; i < 500; ++i) {
    const std::size_t d = 1 + i % 7;
    const Point u = draw(d), v = draw(d), w = draw(d);
    const double s = normal(rng);
    const double scale = 1.0 + std::abs(dot(u, w)) + std::abs(dot(v, w));
    CHECK(dot(u, v) == doctest::Approx(dot(v, u)).epsilon(1e-12));
    CHECK(std::abs(dot(u + s * v, w) - (dot(u, w) + s * dot(v, w))) <= 1e-12 * scale * (1.0 + std::abs(s)));
    const double n2 = lp_norm(u, 2.0);
    CHECK(n2 * n2 == doctest::Approx(dot(u, u)).epsilon(1e-12));
    CHECK(squared_norm(u) == doctest::Approx(dot(u, u)).epsilon(1e-12));
  }
}

TEST_CASE("dot sums left to right") {
  const Point u{1e16, 1.0, -1e16};
  const Point v{1.0, 1.0, 1.0};
  // (1e16 + 1) rounds to 1e16 before the cancellation
  CHECK(dot(u, v) == 0.0);
}

TEST_CASE("point arithmetic") {
  Point a{1, 2, 3};
  a.add_scaled(2.0, {1, 1, 1});
  CHECK(a == Point{3, 4, 5});
  CHECK(a - Point{3, 4, 5} == Point(3));
  CHECK(0.5 * Point{2, 4} == Point{1, 2});
  CHECK(distance({0, 0}, {3, 4}) == 5.0);
}

TEST_CASE("seed mixing is deterministic and spreads rounds") {
  CHECK(round_seed(5, 0) == 5);
  CHECK(round_seed(5, 1) == (5ULL ^ 0x9E3779B9ULL));
  auto a = make_rng(round_seed(1, 3));
  auto b = make_rng(round_seed(1, 3));
  CHECK(a() == b());
  CHECK(mix64(1) != mix64(2));
}
