#include "ofw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "ofw/losses.hpp"
#include "ofw/oracle.hpp"
#include "ofw/random.hpp"

namespace ofw::verify {

namespace {

constexpr double kLmoSlack = 1e-9;
constexpr double kProjectionSlack = 1e-10;
constexpr double kInvariantSlack = 1e-7;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class Recorder {
 public:
  Recorder(std::string name, std::string scope) {
    result_.name = std::move(name);
    result_.scope = std::move(scope);
    result_.worst_excess = -std::numeric_limits<double>::infinity();
  }

  // excess > 0 is a violation; `witness` is only invoked for the first one.
  template <typename Witness>
  void sample(double excess, Witness&& witness) {
    ++result_.samples;
    result_.worst_excess = std::max(result_.worst_excess, excess);
    if (excess > 0.0 || std::isnan(excess)) {
      if (result_.failures == 0) result_.counterexample = witness();
      ++result_.failures;
      result_.passed = false;
    }
  }

  void fail(std::string message) {
    ++result_.failures;
    result_.passed = false;
    if (result_.counterexample.empty()) result_.counterexample = std::move(message);
  }

  CheckResult finish() {
    if (result_.samples == 0) result_.worst_excess = 0.0;
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

Point random_normal(std::size_t dim, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = normal(rng);
  return p;
}

Point random_unit(std::size_t dim, std::mt19937_64& rng) {
  Point p(dim);
  double n = 0.0;
  while (n == 0.0) {
    p = random_normal(dim, rng);
    n = norm(p);
  }
  return (1.0 / n) * p;
}

// Half the samples sit on the boundary (LMO answers), half are interior draws.
Point sample_feasible(const FeasibleSet& set, std::mt19937_64& rng) {
  if (rng() & 1U) return set.lmo(random_normal(set.dim(), rng));
  return set.random_feasible(rng());
}

Point sample_ambient(const FeasibleSet& set, std::mt19937_64& rng) {
  const double scale = set.kind() == SetKind::Simplex ? 1.0 : 2.0 * set.radius();
  return random_normal(set.dim(), rng, scale);
}

LossSpec default_losses(Algo algo, const FeasibleSet& set, std::uint64_t seed) {
  LossSpec spec;
  spec.dim = set.dim();
  spec.seed = seed;
  if (algo == Algo::ScOfw) {
    spec.kind = LossKind::Quadratic;
    spec.lambda = 1.0;
    spec.lipschitz = 0.0;
  } else {
    spec.kind = LossKind::Linear;
    spec.lipschitz = 1.0;
  }
  return spec;
}

Learner learner_for(Algo algo, const FeasibleSet& set, const LossSpec& losses, std::size_t horizon) {
  const LossConstants c = certify_constants(losses, set);
  switch (algo) {
    case Algo::OfwLs:
      return OfwLineSearch(set, horizon, c.lipschitz);
    case Algo::ScOfw:
      return ScOfw(set, c.lambda);
    case Algo::OfwDecay:
      return OfwDecay(set, horizon, c.lipschitz);
    case Algo::Ogd:
      return Ogd(set, c.lipschitz, c.lambda);
  }
  throw std::invalid_argument("unsupported algorithm");
}

void require_fw_learner(Algo algo) {
  if (algo != Algo::OfwLs && algo != Algo::ScOfw) {
    throw std::invalid_argument("check applies to ofw_ls and sc_ofw only");
  }
}

oracle::SurrogateSpec surrogate_of(const Learner& learner) {
  if (const auto* ofw = std::get_if<OfwLineSearch>(&learner)) return oracle::SurrogateSpec::of(*ofw);
  return oracle::SurrogateSpec::of(std::get<ScOfw>(learner));
}

const std::optional<FwStep>& last_step_of(const Learner& learner) {
  if (const auto* ofw = std::get_if<OfwLineSearch>(&learner)) return ofw->last_step();
  return std::get<ScOfw>(learner).last_step();
}

std::string set_label(const FeasibleSet& set) {
  std::string label(to_string(set.kind()));
  label += "(d=" + std::to_string(set.dim());
  if (set.kind() == SetKind::LpBall) label += ",p=" + fmt(set.p());
  if (set.kind() != SetKind::Simplex) label += ",r=" + fmt(set.radius());
  return label + ")";
}

}  // namespace

std::optional<Scope> parse_scope(std::string_view text) {
  if (text == "all") return Scope::All;
  if (text == "sets") return Scope::Sets;
  if (text == "learners") return Scope::Learners;
  if (text == "bounds") return Scope::Bounds;
  return std::nullopt;
}

std::string_view to_string(Scope scope) {
  switch (scope) {
    case Scope::All:
      return "all";
    case Scope::Sets:
      return "sets";
    case Scope::Learners:
      return "learners";
    case Scope::Bounds:
      return "bounds";
  }
  return "unknown";
}

std::string describe(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i > 0) out += ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p[i]);
    out += buf;
  }
  return out + ")";
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string Report::to_json() const {
  nlohmann::json doc;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json entry = {{"name", c.name},         {"scope", c.scope},   {"passed", c.passed},
                            {"samples", c.samples},   {"failures", c.failures}, {"worst_excess", c.worst_excess}};
    if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
    doc["checks"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

CheckResult lmo_optimality(const FeasibleSet& set, std::size_t samples, std::uint64_t seed, LmoFn lmo) {
  if (!lmo) lmo = [&set](const Point& g) { return set.lmo(g); };
  Recorder rec("lmo_optimality/" + set_label(set), "sets");
  auto rng = make_rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point g = random_normal(set.dim(), rng);
    const Point x = set.random_feasible(rng());
    const Point v = lmo(g);
    const double excess = dot(g, v) - dot(g, x) - kLmoSlack;
    rec.sample(excess, [&] {
      return "g=" + describe(g) + " x=" + describe(x) + " lmo(g)=" + describe(v) + " <g,lmo>=" + fmt(dot(g, v)) +
             " <g,x>=" + fmt(dot(g, x));
    });
  }
  return rec.finish();
}

CheckResult oracle_feasibility(const FeasibleSet& set, std::size_t samples, std::uint64_t seed) {
  Recorder rec("oracle_feasibility/" + set_label(set), "sets");
  auto rng = make_rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point g = random_normal(set.dim(), rng);
    const Point v = set.lmo(g);
    rec.sample(set.contains(v) ? -1.0 : 1.0, [&] { return "lmo(" + describe(g) + ") = " + describe(v); });
    const Point y = sample_ambient(set, rng);
    const Point p = set.project(y);
    rec.sample(set.contains(p) ? -1.0 : 1.0, [&] { return "project(" + describe(y) + ") = " + describe(p); });
  }
  return rec.finish();
}

CheckResult set_strong_convexity(const FeasibleSet& set, std::size_t samples, std::uint64_t seed) {
  Recorder rec("set_strong_convexity/" + set_label(set), "sets");
  const double alpha = set.strong_convexity_modulus();
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point x = sample_feasible(set, rng);
    const Point y = sample_feasible(set, rng);
    const double gamma = unit(rng);
    const Point z = random_unit(set.dim(), rng);
    Point w = gamma * x;
    w.add_scaled(1.0 - gamma, y);
    w.add_scaled(gamma * (1.0 - gamma) * 0.5 * alpha * squared_norm(x - y), z);
    const double excess = set.kind() == SetKind::Simplex ? (set.contains(w) ? -1.0 : 1.0)
                                                         : set.set_norm(w) - set.radius() - kLmoSlack;
    rec.sample(excess, [&] {
      return "x=" + describe(x) + " y=" + describe(y) + " gamma=" + fmt(gamma) + " z=" + describe(z);
    });
  }
  return rec.finish();
}

CheckResult projection_idempotence(const FeasibleSet& set, std::size_t samples, std::uint64_t seed) {
  Recorder rec("projection_idempotence/" + set_label(set), "sets");
  auto rng = make_rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point y = sample_ambient(set, rng);
    const Point once = set.project(y);
    const Point twice = set.project(once);
    rec.sample(distance(once, twice) - kProjectionSlack, [&] { return "y=" + describe(y); });
  }
  return rec.finish();
}

CheckResult projection_nonexpansive(const FeasibleSet& set, std::size_t samples, std::uint64_t seed) {
  Recorder rec("projection_nonexpansive/" + set_label(set), "sets");
  auto rng = make_rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point a = sample_ambient(set, rng);
    const Point b = sample_ambient(set, rng);
    const double excess = distance(set.project(a), set.project(b)) - distance(a, b) - kProjectionSlack;
    rec.sample(excess, [&] { return "a=" + describe(a) + " b=" + describe(b); });
  }
  return rec.finish();
}

CheckResult diameter_consistency(const FeasibleSet& set, std::size_t samples, std::uint64_t seed) {
  Recorder rec("diameter_consistency/" + set_label(set), "sets");
  auto rng = make_rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point x = sample_feasible(set, rng);
    const Point y = sample_feasible(set, rng);
    rec.sample(distance(x, y) - set.diameter() - kLmoSlack,
               [&] { return "x=" + describe(x) + " y=" + describe(y); });
  }
  return rec.finish();
}

CheckResult line_search_vs_grid(std::size_t samples, std::uint64_t seed, std::size_t grid_size, double tol) {
  Recorder rec("line_search_vs_grid", "learners");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> log_b(-3.0, 3.0);
  std::uniform_real_distribution<double> slope(-1.0, 1.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const double b = std::pow(10.0, log_b(rng));
    const double a = 4.0 * b * slope(rng);  // unconstrained minimizer spread over [-2, 2]
    const double exact = line_search_quadratic({a, b});
    const double grid = oracle::grid_line_search(a, b, grid_size);
    rec.sample(std::abs(exact - grid) - tol,
               [&] { return "a=" + fmt(a) + " b=" + fmt(b) + " closed=" + fmt(exact) + " grid=" + fmt(grid); });
  }
  return rec.finish();
}

CheckResult line_search_optimality(std::size_t samples, std::uint64_t seed, std::size_t grid_size) {
  Recorder rec("line_search_optimality", "learners");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> log_b(-3.0, 3.0);
  std::uniform_real_distribution<double> slope(-1.0, 1.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const double b = std::pow(10.0, log_b(rng));
    const double a = 4.0 * b * slope(rng);
    const double s = line_search_quadratic({a, b});
    const double g = oracle::grid_line_search(a, b, grid_size);
    const double excess = (a * s + b * s * s) - (a * g + b * g * g) - 1e-12;
    rec.sample(excess, [&] { return "a=" + fmt(a) + " b=" + fmt(b); });
  }
  return rec.finish();
}

CheckResult surrogate_gradient_identity(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed) {
  require_fw_learner(algo);
  Recorder rec(std::string("surrogate_gradient_identity/") + std::string(to_string(algo)) + "/" + set_label(set),
               "learners");
  const LossSpec losses = default_losses(algo, set, seed);
  Learner learner = learner_for(algo, set, losses, rounds);
  std::vector<Point> gradients;
  std::vector<Point> iterates;
  auto rng = make_rng(seed ^ 0xABCDEFULL);
  for (std::size_t t = 1; t <= rounds; ++t) {
    const Point x = decision(learner);
    const Point g = make_round(losses, t, set).grad_at(x);
    iterates.push_back(x);
    gradients.push_back(g);
    update(learner, g);

    const Point probe = set.random_feasible(rng());
    Point naive(set.dim());
    Point fast(set.dim());
    if (const auto* ofw = std::get_if<OfwLineSearch>(&learner)) {
      Point sum(set.dim());
      for (const Point& gs : gradients) sum += gs;
      naive = ofw->eta() * sum;
      naive.add_scaled(2.0, probe - ofw->anchor());
      fast = ofw->surrogate_gradient(probe);
    } else {
      const auto& sc = std::get<ScOfw>(learner);
      for (std::size_t s = 0; s < gradients.size(); ++s) {
        naive += gradients[s];
        naive.add_scaled(sc.lambda(), probe - iterates[s]);
      }
      fast = sc.surrogate_gradient(probe);
    }
    rec.sample(distance(naive, fast) - 1e-9 * std::max(1.0, norm(naive)), [&] {
      return "t=" + std::to_string(t) + " x=" + describe(probe) + " naive=" + describe(naive) +
             " running=" + describe(fast);
    });
  }
  return rec.finish();
}

CheckResult learner_feasibility(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed) {
  Recorder rec(std::string("learner_feasibility/") + std::string(to_string(algo)) + "/" + set_label(set),
               "learners");
  LossSpec losses = default_losses(algo, set, seed);
  if (algo == Algo::Ogd) losses = default_losses(Algo::OfwLs, set, seed);
  Learner learner = learner_for(algo, set, losses, rounds);
  for (std::size_t t = 1; t <= rounds; ++t) {
    const Point x = decision(learner);
    rec.sample(set.contains(x, kFeasibilityTol) ? -1.0 : 1.0,
               [&] { return "t=" + std::to_string(t) + " x=" + describe(x); });
    update(learner, make_round(losses, t, set).grad_at(x));
  }
  const Point last = decision(learner);
  rec.sample(set.contains(last, kFeasibilityTol) ? -1.0 : 1.0, [&] { return "final x=" + describe(last); });
  return rec.finish();
}

CheckResult contraction(Algo algo, const FeasibleSet& set, std::size_t steps, std::uint64_t seed) {
  require_fw_learner(algo);
  Recorder rec(std::string("contraction/") + std::string(to_string(algo)) + "/" + set_label(set), "learners");
  const LossSpec losses = default_losses(algo, set, seed);
  Learner learner = learner_for(algo, set, losses, steps);
  const double alpha = set.strong_convexity_modulus();
  for (std::size_t t = 1; t <= steps; ++t) {
    const Point x = decision(learner);
    update(learner, make_round(losses, t, set).grad_at(x));
    const auto surrogate = surrogate_of(learner);  // F_t
    const FwStep& step = *last_step_of(learner);
    const Point x_star = oracle::surrogate_argmin(surrogate).x_star;
    const double beta = surrogate.curvature();
    const double h_in = surrogate.difference(step.start, x_star);
    const double h_out = surrogate.difference(decision(learner), x_star);
    const double factor = std::max(0.5, 1.0 - alpha * norm(step.surrogate_grad) / (8.0 * beta));
    rec.sample(h_out - h_in * factor - kInvariantSlack, [&] {
      return "t=" + std::to_string(t) + " h_in=" + fmt(h_in) + " h_out=" + fmt(h_out) + " factor=" + fmt(factor) +
             " x_in=" + describe(step.start);
    });
  }
  return rec.finish();
}

CheckResult comparator_drift(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed) {
  require_fw_learner(algo);
  Recorder rec(std::string("comparator_drift/") + std::string(to_string(algo)) + "/" + set_label(set),
               "learners");
  const LossSpec losses = default_losses(algo, set, seed);
  const LossConstants c = certify_constants(losses, set);
  Learner learner = learner_for(algo, set, losses, rounds);
  std::optional<Point> previous;  // argmin of the surrogate before the current round
  if (algo == Algo::OfwLs) previous = oracle::surrogate_argmin(surrogate_of(learner)).x_star;
  for (std::size_t t = 1; t <= rounds; ++t) {
    const Point x = decision(learner);
    update(learner, make_round(losses, t, set).grad_at(x));
    Point current = oracle::surrogate_argmin(surrogate_of(learner)).x_star;  // x*_{t+1}
    if (previous) {
      double limit = 0.0;
      if (algo == Algo::OfwLs) {
        limit = std::get<OfwLineSearch>(learner).eta() * c.lipschitz;
      } else {
        // ||x*_{s-1} - x*_s|| with s = t + 1
        limit = 2.0 * (c.lipschitz + c.lambda * set.diameter()) / (static_cast<double>(t) * c.lambda);
      }
      const double moved = distance(*previous, current);
      rec.sample(moved - limit - kInvariantSlack, [&] {
        return "t=" + std::to_string(t) + " moved=" + fmt(moved) + " limit=" + fmt(limit);
      });
    }
    previous = std::move(current);
  }
  return rec.finish();
}

CheckResult surrogate_lipschitz(const FeasibleSet& set, double lambda, std::size_t rounds, std::size_t pairs,
                                std::uint64_t seed) {
  Recorder rec("surrogate_lipschitz/" + set_label(set), "learners");
  LossSpec losses = default_losses(Algo::ScOfw, set, seed);
  losses.lambda = lambda;
  const LossConstants c = certify_constants(losses, set);
  const double limit = c.lipschitz + lambda * set.diameter();
  ScOfw learner(set, lambda);
  auto rng = make_rng(seed ^ 0x5EEDULL);
  for (std::size_t t = 1; t <= rounds; ++t) {
    const Point x_t = learner.decision();
    const Point g_t = make_round(losses, t, set).grad_at(x_t);
    auto f = [&](const Point& x) { return dot(g_t, x) + 0.5 * lambda * squared_norm(x - x_t); };
    for (std::size_t k = 0; k < pairs; ++k) {
      const Point x = sample_feasible(set, rng);
      const Point y = sample_feasible(set, rng);
      const double excess = std::abs(f(x) - f(y)) - limit * distance(x, y) - 1e-9;
      rec.sample(excess, [&] { return "t=" + std::to_string(t) + " x=" + describe(x) + " y=" + describe(y); });
    }
    learner.update(g_t);
  }
  return rec.finish();
}

CheckResult prefix_optimality(Algo algo, const FeasibleSet& set, std::size_t rounds, std::uint64_t seed) {
  require_fw_learner(algo);
  Recorder rec(std::string("prefix_optimality/") + std::string(to_string(algo)) + "/" + set_label(set),
               "learners");
  const LossSpec losses = default_losses(algo, set, seed);
  Learner learner = learner_for(algo, set, losses, rounds);
  // Per-round surrogate pieces f~_t and the prefix minimizers x*_{t+1}.
  std::vector<std::function<double(const Point&)>> pieces;
  std::vector<Point> leaders;
  for (std::size_t t = 1; t <= rounds; ++t) {
    const Point x_t = decision(learner);
    const Point g_t = make_round(losses, t, set).grad_at(x_t);
    if (const auto* ofw = std::get_if<OfwLineSearch>(&learner)) {
      const double eta = ofw->eta();
      const Point anchor = ofw->anchor();
      if (t == 1) {
        pieces.push_back([=](const Point& x) { return eta * dot(g_t, x) + squared_norm(x - anchor); });
      } else {
        pieces.push_back([=](const Point& x) { return eta * dot(g_t, x); });
      }
    } else {
      const double lambda = std::get<ScOfw>(learner).lambda();
      pieces.push_back([=](const Point& x) { return dot(g_t, x) + 0.5 * lambda * squared_norm(x - x_t); });
    }
    update(learner, g_t);
    leaders.push_back(oracle::surrogate_argmin(surrogate_of(learner)).x_star);
  }
  const auto total = surrogate_of(learner);
  const auto best = oracle::surrogate_argmin(total);
  double leaders_sum = 0.0;
  for (std::size_t t = 0; t < rounds; ++t) leaders_sum += pieces[t](leaders[t]);
  double best_sum = 0.0;
  for (const auto& piece : pieces) best_sum += piece(best.x_star);
  const double excess = leaders_sum - best_sum - static_cast<double>(rounds) * oracle::kOracleTol;
  rec.sample(excess, [&] { return "sum f(x*_{t+1})=" + fmt(leaders_sum) + " min sum f=" + fmt(best_sum); });
  return rec.finish();
}

CheckResult surrogate_growth(Algo algo, const FeasibleSet& set, std::size_t rounds, std::size_t samples,
                             std::uint64_t seed) {
  require_fw_learner(algo);
  Recorder rec(std::string("surrogate_growth/") + std::string(to_string(algo)) + "/" + set_label(set),
               "learners");
  const LossSpec losses = default_losses(algo, set, seed);
  Learner learner = learner_for(algo, set, losses, rounds);
  auto rng = make_rng(seed ^ 0x6A0D7ULL);
  for (std::size_t t = 1; t <= rounds; ++t) {
    const Point x_t = decision(learner);
    update(learner, make_round(losses, t, set).grad_at(x_t));
    const auto surrogate = surrogate_of(learner);
    const auto best = oracle::surrogate_argmin(surrogate);
    const double alpha = surrogate.curvature();
    for (std::size_t k = 0; k < samples; ++k) {
      const Point x = sample_feasible(set, rng);
      const double gap = surrogate.difference(x, best.x_star);
      const double growth = 0.5 * alpha * squared_norm(x - best.x_star) - gap - kInvariantSlack;
      rec.sample(growth, [&] { return "quadratic growth t=" + std::to_string(t) + " x=" + describe(x); });
      const double domination =
          std::sqrt(0.5 * alpha) * std::sqrt(std::max(gap, 0.0)) - norm(surrogate.gradient(x)) - kInvariantSlack;
      rec.sample(domination, [&] { return "gradient domination t=" + std::to_string(t) + " x=" + describe(x); });
    }
  }
  return rec.finish();
}

namespace {

std::string spec_label(const ExperimentSpec& spec) {
  return std::string(to_string(spec.algo)) + "/" + set_label(spec.set.build()) + "/" +
         std::string(to_string(spec.loss.kind)) + "/seed=" + std::to_string(spec.loss.seed) +
         "/T=" + std::to_string(spec.horizon);
}

}  // namespace

CheckResult gap_schedule(const ExperimentSpec& base) {
  ExperimentSpec spec = base;
  spec.gap_check = true;
  Recorder rec("gap_schedule/" + spec_label(spec), "bounds");
  const RegretTrace trace = run_experiment(spec);
  for (const RoundRecord& r : trace.rounds) {
    if (!r.gap) continue;
    const double gap = *r.gap;
    rec.sample(-gap - kFirstGapTol, [&] { return "t=" + std::to_string(r.t) + " negative gap " + fmt(gap); });
    if (spec.algo == Algo::OfwLs && r.t == 1) {
      rec.sample(std::abs(gap) - kFirstGapTol, [&] { return "t=1 gap " + fmt(gap) + " is not zero"; });
    }
    if (r.gap_bound) {
      rec.sample(gap - *r.gap_bound - kGapSlack, [&] {
        return "t=" + std::to_string(r.t) + " gap=" + fmt(gap) + " bound=" + fmt(*r.gap_bound);
      });
    }
  }
  return rec.finish();
}

CheckResult regret_bound(const ExperimentSpec& base) {
  ExperimentSpec spec = base;
  spec.gap_check = false;
  Recorder rec("regret_bound/" + spec_label(spec), "bounds");
  const RegretTrace trace = run_experiment(spec);
  if (!trace.final_bound) {
    rec.fail("no applicable theorem for " + spec_label(spec));
    return rec.finish();
  }
  rec.sample(trace.final_regret - *trace.final_bound,
             [&] { return "R(T)=" + fmt(trace.final_regret) + " bound=" + fmt(*trace.final_bound); });
  return rec.finish();
}

namespace {

ExperimentSpec canonical(SetDescriptor set, LossKind kind, Algo algo, std::size_t horizon, std::uint64_t seed) {
  ExperimentSpec spec;
  spec.set = set;
  spec.loss.kind = kind;
  spec.loss.dim = set.dim;
  spec.loss.seed = seed;
  if (kind == LossKind::Linear) {
    spec.loss.lipschitz = 1.0;
    spec.loss.lambda = 0.0;
  } else {
    spec.loss.lipschitz = 0.0;
    spec.loss.lambda = 1.0;
  }
  spec.algo = algo;
  spec.horizon = horizon;
  return spec;
}

}  // namespace

Report verify_suite(Scope scope) {
  Report report;
  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };
  const bool all = scope == Scope::All;

  if (all || scope == Scope::Sets) {
    const std::vector<FeasibleSet> sets = {FeasibleSet::l2_ball(5, 1.0), FeasibleSet::lp_ball(5, 1.5, 1.0),
                                           FeasibleSet::l1_ball(5, 2.0), FeasibleSet::simplex(5)};
    std::uint64_t seed = 100;
    for (const FeasibleSet& set : sets) {
      add(lmo_optimality(set, 10000, ++seed));
      add(oracle_feasibility(set, 2000, ++seed));
      if (set.strongly_convex()) add(set_strong_convexity(set, 10000, ++seed));
      add(projection_idempotence(set, 1000, ++seed));
      add(projection_nonexpansive(set, 1000, ++seed));
      add(diameter_consistency(set, 10000, ++seed));
    }
  }

  if (all || scope == Scope::Learners) {
    add(line_search_vs_grid(1000, 7));
    add(line_search_optimality(1000, 8));
    const FeasibleSet ball = FeasibleSet::l2_ball(10, 1.0);
    const FeasibleSet lp = FeasibleSet::lp_ball(6, 1.5, 1.0);
    const FeasibleSet simplex = FeasibleSet::simplex(10);
    for (Algo algo : {Algo::OfwLs, Algo::ScOfw}) {
      add(surrogate_gradient_identity(algo, ball, 200, 11));
      add(contraction(algo, ball, 100, 12));
      add(contraction(algo, lp, 100, 13));
      add(comparator_drift(algo, ball, 200, 14));
      add(prefix_optimality(algo, ball, 64, 15));
      add(surrogate_growth(algo, ball, 32, 16, 16));
    }
    add(comparator_drift(Algo::ScOfw, simplex, 200, 17));
    add(surrogate_lipschitz(ball, 1.0, 50, 20, 18));
    add(surrogate_lipschitz(simplex, 0.5, 50, 20, 19));
    for (Algo algo : {Algo::OfwLs, Algo::ScOfw, Algo::OfwDecay, Algo::Ogd}) {
      add(learner_feasibility(algo, ball, 300, 20));
      add(learner_feasibility(algo, simplex, 300, 21));
      add(learner_feasibility(algo, lp, 100, 22));
    }
  }

  if (all || scope == Scope::Bounds) {
    const SetDescriptor ball{SetKind::L2Ball, 10, 1.0, 2.0};
    const SetDescriptor simplex{SetKind::Simplex, 10, 0.0, 1.0};
    const auto ofw = canonical(ball, LossKind::Linear, Algo::OfwLs, 512, 1);
    const auto sc_ball = canonical(ball, LossKind::Quadratic, Algo::ScOfw, 512, 1);
    const auto sc_simplex = canonical(simplex, LossKind::Quadratic, Algo::ScOfw, 512, 1);
    for (const auto& spec : {ofw, sc_ball, sc_simplex}) {
      add(gap_schedule(spec));
      add(regret_bound(spec));
    }
  }
  return report;
}

}  // namespace ofw::verify
