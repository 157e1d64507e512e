// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ofw/harness.hpp"
#include "ofw/verify.hpp"

using namespace ofw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<std::uint64_t> kSeeds = {1, 2, 3, 4, 5};

std::vector<std::size_t> doubling(int lo, int hi) {
  std::vector<std::size_t> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::size_t{1} << k);
  return out;
}

ExperimentSpec config(SetDescriptor set, LossKind kind, Algo algo) {
  ExperimentSpec spec;
  spec.set = set;
  spec.loss.kind = kind;
  spec.loss.dim = set.dim;
  if (kind == LossKind::Linear) {
    spec.loss.lipschitz = 1.0;
  } else {
    spec.loss.lambda = 1.0;
  }
  spec.algo = algo;
  return spec;
}

const SetDescriptor kBall{SetKind::L2Ball, 10, 1.0, 2.0};
const SetDescriptor kSimplex{SetKind::Simplex, 10, 0.0, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("[%s] %d. %s -- %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// R(T) <= bound(T) for every seed and horizon; tracks the tightest ratio.
Outcome regret_within_bound(const ExperimentSpec& base, const std::vector<std::size_t>& horizons) {
  Outcome o;
  double worst_ratio = 0.0;
  std::size_t runs = 0;
  for (std::size_t T : horizons) {
    for (std::uint64_t seed : kSeeds) {
      ExperimentSpec spec = base;
      spec.horizon = T;
      spec.loss.seed = seed;
      const RegretTrace trace = run_experiment(spec);
      ++runs;
      if (!trace.final_bound) {
        o.pass = false;
        o.detail = "no applicable bound";
        return o;
      }
      worst_ratio = std::max(worst_ratio, trace.final_regret / *trace.final_bound);
      if (!(trace.final_regret <= *trace.final_bound)) {
        o.pass = false;
        o.detail = fmt("T=%.0f seed=%.0f R(T)=%.6g exceeds the bound", static_cast<double>(T),
                       static_cast<double>(seed), trace.final_regret);
        return o;
      }
    }
  }
  o.detail = fmt("%.0f runs, max R(T)/bound = %.4g", static_cast<double>(runs), worst_ratio);
  return o;
}

// Every measured gap for t <= 512 lies under its schedule (+1e-7), is >= -1e-9,
// and h_1 = 0 for OfwLs.
Outcome gaps_within_schedule(const ExperimentSpec& base, const std::vector<std::size_t>& horizons) {
  Outcome o;
  std::size_t measured = 0;
  double worst_ratio = 0.0;
  for (std::size_t T : horizons) {
    for (std::uint64_t seed : kSeeds) {
      ExperimentSpec spec = base;
      spec.horizon = T;
      spec.loss.seed = seed;
      spec.gap_check = true;
      spec.gap_cap = 512;
      const RegretTrace trace = run_experiment(spec);
      for (const RoundRecord& r : trace.rounds) {
        if (!r.gap) continue;
        ++measured;
        if (r.gap_bound) worst_ratio = std::max(worst_ratio, *r.gap / *r.gap_bound);
      }
      const auto problems = check_trace(spec, trace);
      for (const auto& p : problems) {
        if (p.rfind("R(T)", 0) == 0) continue;  // regret is the subject of the bound criteria
        o.pass = false;
        o.detail = "T=" + std::to_string(T) + " seed=" + std::to_string(seed) + ": " + p;
        return o;
      }
    }
  }
  o.detail = fmt("%.0f gaps measured, max h_t/bound = %.4g", static_cast<double>(measured), worst_ratio);
  return o;
}

Outcome from_checks(const std::vector<verify::CheckResult>& checks) {
  Outcome o;
  std::size_t samples = 0;
  for (const auto& c : checks) {
    samples += c.samples;
    if (!c.passed && o.pass) {
      o.pass = false;
      o.detail = c.name + " failed " + std::to_string(c.failures) + "x; first: " + c.counterexample;
    }
  }
  if (o.pass) o.detail = std::to_string(checks.size()) + " checks, " + std::to_string(samples) + " samples";
  return o;
}

}  // namespace

int main() {
  const auto horizons = doubling(8, 13);

  {
    const auto start = Clock::now();
    Outcome o = regret_within_bound(config(kBall, LossKind::Linear, Algo::OfwLs), horizons);
    const double elapsed = seconds_since(start);
    if (o.pass && elapsed >= 10.0) {
      o.pass = false;
      o.detail += "; runtime limit exceeded";
    }
    o.detail += fmt("; %.3f s (limit 10 s)", elapsed);
    report(1, "OfwLs regret under the strongly convex set bound (L2 ball d=10, linear G=1)", o);
  }

  {
    const auto start = Clock::now();
    Outcome o = gaps_within_schedule(config(kBall, LossKind::Linear, Algo::OfwLs), horizons);
    const double elapsed = seconds_since(start);
    if (o.pass && elapsed >= 60.0) {
      o.pass = false;
      o.detail += "; runtime limit exceeded";
    }
    o.detail += fmt("; %.3f s (limit 60 s)", elapsed);
    report(2, "OfwLs surrogate gaps h_t <= C/(t+2)^{2/3}, h_1 = 0", o);
  }

  report(3, "ScOfw regret under the strongly convex set bound (L2 ball d=10, quadratic lambda=1)",
         regret_within_bound(config(kBall, LossKind::Quadratic, Algo::ScOfw), horizons));

  report(4, "ScOfw surrogate gaps h_t <= C on the L2 ball",
         gaps_within_schedule(config(kBall, LossKind::Quadratic, Algo::ScOfw), horizons));

  {
    const auto base = config(kSimplex, LossKind::Quadratic, Algo::ScOfw);
    Outcome bound = regret_within_bound(base, horizons);
    Outcome gaps = gaps_within_schedule(base, horizons);
    Outcome o{bound.pass && gaps.pass, "regret: " + bound.detail + "; gaps: " + gaps.detail};
    report(5, "ScOfw on the simplex: regret bound and gaps h_t <= C(t-1)^{1/3}", o);
  }

  {
    const auto sweep_horizons = doubling(8, 14);
    const auto ofw = run_sweep(config(kBall, LossKind::Linear, Algo::OfwLs), sweep_horizons, kSeeds);
    const auto sc = run_sweep(config(kBall, LossKind::Quadratic, Algo::ScOfw), sweep_horizons, kSeeds);
    Outcome o;
    if (!ofw.slope || !sc.slope) {
      o.pass = false;
      o.detail = "slope fit failed";
    } else {
      o.pass = *ofw.slope <= 0.75 && *sc.slope <= 0.60;
      char buf[160];
      std::snprintf(buf, sizeof buf, "slope(OfwLs) = %.17g (gate 0.75), slope(ScOfw) = %.17g (gate 0.60)", *ofw.slope,
                    *sc.slope);
      o.detail = buf;
    }
    report(6, "Empirical regret exponents over T = 2^8..2^14", o);
  }

  {
    const auto ball = FeasibleSet::l2_ball(10, 1.0);
    report(7, "Contraction of one line-search step (100 steps per learner, L2 ball)",
           from_checks({verify::contraction(Algo::OfwLs, ball, 100, 7),
                        verify::contraction(Algo::ScOfw, ball, 100, 7)}));
  }

  {
    std::vector<verify::CheckResult> checks;
    checks.push_back(verify::line_search_vs_grid(1000, 8, 10001, 1e-4));
    std::uint64_t seed = 80;
    for (const auto& set : {FeasibleSet::l2_ball(5, 1.0), FeasibleSet::lp_ball(5, 1.5, 1.0),
                            FeasibleSet::l1_ball(5, 1.0), FeasibleSet::simplex(5)}) {
      checks.push_back(verify::lmo_optimality(set, 10000, ++seed));
    }
    checks.push_back(verify::set_strong_convexity(FeasibleSet::l2_ball(5, 1.0), 10000, 91));
    checks.push_back(verify::set_strong_convexity(FeasibleSet::lp_ball(5, 1.5, 1.0), 10000, 92));
    report(8, "Oracle equivalence: line search vs grid, LMO optimality, set strong convexity", from_checks(checks));
  }

  {
    Outcome o;
    const std::vector<std::size_t> horizon = {std::size_t{1} << 14};
    const std::vector<std::uint64_t> seed = {1};
    const SetDescriptor big{SetKind::L2Ball, 100, 1.0, 2.0};
    const auto ofw = run_sweep(config(big, LossKind::Linear, Algo::OfwLs), horizon, seed);
    const auto sc = run_sweep(config(big, LossKind::Quadratic, Algo::ScOfw), horizon, seed);
    const double t_ofw = ofw.rows.front().seconds;
    const double t_sc = sc.rows.front().seconds;
    o.pass = t_ofw < 2.0 && t_sc < 2.0;
    o.detail = fmt("OfwLs %.3f s, ScOfw %.3f s (limit 2 s each)", t_ofw, t_sc);
    report(9, "Performance: T = 2^14 rounds at d = 100", o);
  }

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
