#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ofw/verify.hpp"

using namespace ofw;
using namespace ofw::verify;

TEST_CASE("scope names") {
  CHECK(parse_scope("all") == Scope::All);
  CHECK(parse_scope("sets") == Scope::Sets);
  CHECK(parse_scope("learners") == Scope::Learners);
  CHECK(parse_scope("bounds") == Scope::Bounds);
  CHECK_FALSE(parse_scope("everything").has_value());
  CHECK(to_string(Scope::Bounds) == "bounds");
}

TEST_CASE("sets scope passes on a correct build") {
  const Report report = verify_suite(Scope::Sets);
  CHECK(report.passed());
  bool saw_lp_ball = false;
  for (const auto& c : report.checks) {
    CHECK_MESSAGE(c.passed, c.name << ": " << c.counterexample);
    CHECK(c.scope == "sets");
    CHECK(c.samples > 0);
    if (c.name.rfind("set_strong_convexity/lp_ball", 0) == 0) saw_lp_ball = true;
  }
  CHECK(saw_lp_ball);
}

TEST_CASE("a sign-flipped LMO is caught with its witness") {
  const auto set = FeasibleSet::l2_ball(3, 1.0);
  const auto broken = lmo_optimality(set, 1000, 5, [&set](const Point& g) { return set.lmo(-1.0 * g); });
  CHECK_FALSE(broken.passed);
  CHECK(broken.failures > 0);
  CHECK(broken.worst_excess > 0.0);
  CHECK(broken.name.find("lmo_optimality") != std::string::npos);
  CHECK(broken.counterexample.find("g=(") != std::string::npos);
  CHECK(broken.counterexample.find("x=(") != std::string::npos);

  Report report;
  report.checks.push_back(broken);
  CHECK_FALSE(report.passed());
  const auto json = nlohmann::json::parse(report.to_json());
  CHECK(json["passed"] == false);
  CHECK(json["checks"][0]["name"] == broken.name);
  CHECK(json["checks"][0]["counterexample"].get<std::string>().find("g=(") != std::string::npos);
}

TEST_CASE("bounds scope runs the gap checks on the canonical configs") {
  const Report report = verify_suite(Scope::Bounds);
  int gap_checks = 0;
  for (const auto& c : report.checks) {
    CHECK_MESSAGE(c.passed, c.name << ": " << c.counterexample);
    if (c.name.rfind("gap_schedule/", 0) == 0) {
      ++gap_checks;
      CHECK(c.samples >= 511);
    }
  }
  CHECK(gap_checks == 3);
  CHECK(report.passed());
}

TEST_CASE("learners scope passes") {
  const Report report = verify_suite(Scope::Learners);
  for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.counterexample);
  CHECK(report.passed());
}

TEST_CASE("a corrupted gap schedule is reported") {
  ExperimentSpec spec;
  spec.set = {SetKind::L2Ball, 4, 1.0, 2.0};
  spec.loss.kind = LossKind::Linear;
  spec.loss.lipschitz = 1.0;
  spec.loss.dim = 4;
  spec.loss.seed = 2;
  spec.algo = Algo::OfwLs;
  spec.horizon = 50;
  const auto ok = gap_schedule(spec);
  CHECK(ok.passed);
  // regret_bound reports uncovered configs instead of silently passing
  spec.algo = Algo::Ogd;
  const auto none = regret_bound(spec);
  CHECK_FALSE(none.passed);
  CHECK(none.counterexample.find("no applicable theorem") != std::string::npos);
}
