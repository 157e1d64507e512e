#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ofw/core.hpp"
#include "ofw/harness.hpp"
#include "ofw/learners.hpp"
#include "ofw/sets.hpp"

// Sampled invariant checks. Each returns a CheckResult carrying the first
// witnessing counterexample, so a broken primitive is reported with data.
namespace ofw::verify {

enum class Scope { All, Sets, Learners, Bounds };

std::optional<Scope> parse_scope(std::string_view text);
std::string_view to_string(Scope scope);

struct CheckResult {
  std::string name;
  std::string scope;
  bool passed = true;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst_excess = 0.0;  // largest violation amount seen (<= 0 when passing)
  std::string counterexample;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_json() const;
};

using LmoFn = std::function<Point(const Point&)>;

std::string describe(const Point& p);

// -- sets ------------------------------------------------------------------

/// <g, lmo(g)> <= <g, x> + 1e-9 for random g and feasible x. `lmo` defaults to set.lmo.
CheckResult lmo_optimality(const FeasibleSet& set, std::size_t samples, std::uint64_t seed, LmoFn lmo = {});
/// LMO and projection outputs lie in the set.
CheckResult oracle_feasibility(const FeasibleSet& set, std::size_t samples, std::uint64_t seed);
/// gamma x + (1-gamma) y + gamma (1-gamma) (alpha/2) ||x-y||^2 z stays feasible.
CheckResult set_strong_convexity(const FeasibleSet& set, std::size_t samples, std::uint64_t seed);
CheckResult projection_idempotence(const FeasibleSet& set, std::size_t samples, std::uint64_t seed);
CheckResult projection_nonexpansive(const FeasibleSet& set, std::size_t samples, std::uint64_t seed);
CheckResult diameter_consistency(const FeasibleSet& set, std::size_t samples, std::uint64_t seed);

// -- learners --------------------------------------------------------------

/// Closed-form line search within `tol` of the grid oracle.
CheckResult line_search_vs_grid(std::size_t samples, std::uint64_t seed, std::size_t grid_size = 10001,
                                double tol = 1e-4);
/// Closed-form objective value never worse than the best grid value + 1e-12.
CheckResult line_search_optimality(std::size_t samples, std::uint64_t seed, std::size_t grid_size = 10001);

/// Running-sum surrogate gradient equals naive summation over the history.
CheckResult surrogate_gradient_identity(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed);
/// Every decision of the learner is feasible.
CheckResult learner_feasibility(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed);
/// One line-search step contracts the surrogate gap by max(1/2, 1 - alpha ||grad F|| / (8 beta)).
CheckResult contraction(Algo algo, const FeasibleSet& set, std::size_t steps, std::uint64_t seed);
/// Consecutive surrogate minimizers move by at most eta G (OfwLs) or 2(G + lambda D)/((t-1) lambda) (ScOfw).
CheckResult comparator_drift(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed);
/// <g_t, x> + (lambda/2)||x - x_t||^2 is (G + lambda D)-Lipschitz over the set.
CheckResult surrogate_lipschitz(const FeasibleSet& set, double lambda, std::size_t rounds, std::size_t pairs,
                                std::uint64_t seed);
/// Be-the-leader: sum_t f~_t(x*_{t+1}) <= min_x sum_t f~_t(x) + T tol.
CheckResult prefix_optimality(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed);
/// Quadratic growth and gradient domination of the alpha-strongly convex surrogate around its minimizer.
CheckResult surrogate_growth(Algo algo, const FeasibleSet& set, std::size_t rounds, std::size_t samples,
                             std::uint64_t seed);

// -- bounds ----------------------------------------------------------------

/// Runs spec with gap measurement and checks every measured gap against its schedule.
CheckResult gap_schedule(const ExperimentSpec& spec);
/// Runs spec and checks R(T) against the applicable regret bound.
CheckResult regret_bound(const ExperimentSpec& spec);

Report verify_suite(Scope scope);

}  // namespace ofw::verify
