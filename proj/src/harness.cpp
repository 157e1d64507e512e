#include "ofw/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "ofw/oracle.hpp"

namespace ofw {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError(key, "expected a real number, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(const std::string& key, std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(key, "expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(key, "expected true or false, got '" + std::string(text) + "'");
}

SetKind parse_set_kind(std::string_view text) {
  if (text == "l2_ball") return SetKind::L2Ball;
  if (text == "lp_ball") return SetKind::LpBall;
  if (text == "l1_ball") return SetKind::L1Ball;
  if (text == "simplex") return SetKind::Simplex;
  throw ConfigError("set.kind", "unknown set '" + std::string(text) + "'");
}

LossKind parse_loss_kind(std::string_view text) {
  if (text == "linear") return LossKind::Linear;
  if (text == "quadratic") return LossKind::Quadratic;
  throw ConfigError("loss.kind", "unknown loss '" + std::string(text) + "'");
}

Algo parse_algo(std::string_view text) {
  if (text == "ofw_ls") return Algo::OfwLs;
  if (text == "sc_ofw") return Algo::ScOfw;
  if (text == "ofw_decay") return Algo::OfwDecay;
  if (text == "ogd") return Algo::Ogd;
  throw ConfigError("algo", "unknown algorithm '" + std::string(text) + "'");
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "set.kind", "set.dim", "set.r",     "set.p",   "loss.kind", "loss.G",    "loss.lambda", "loss.seed",
      "seed",     "algo",    "T",         "gap_check", "gap_cap", "output",    "learner.lambda"};
  return keys;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

std::optional<double> measure_gap(const Learner& learner) {
  return std::visit(
      [](const auto& l) -> std::optional<double> {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, OfwLineSearch> || std::is_same_v<T, ScOfw>) {
          const auto surrogate = oracle::SurrogateSpec::of(l);
          if (!(surrogate.curvature() > 0.0)) return std::nullopt;
          const auto best = oracle::surrogate_argmin(surrogate, oracle::kOracleTol);
          return surrogate.difference(l.decision(), best.x_star);
        } else {
          return std::nullopt;
        }
      },
      learner);
}

}  // namespace

FeasibleSet SetDescriptor::build() const {
  switch (kind) {
    case SetKind::L2Ball:
      return FeasibleSet::l2_ball(dim, radius);
    case SetKind::LpBall:
      return FeasibleSet::lp_ball(dim, p, radius);
    case SetKind::L1Ball:
      return FeasibleSet::l1_ball(dim, radius);
    case SetKind::Simplex:
      return FeasibleSet::simplex(dim);
  }
  throw ConfigError("set.kind", "unsupported set");
}

void ExperimentSpec::validate() const {
  if (set.dim == 0) throw ConfigError("set.dim", "must be positive");
  if (set.kind != SetKind::Simplex && !(set.radius > 0.0)) throw ConfigError("set.r", "must be positive");
  if (set.kind == SetKind::LpBall && !(set.p > 1.0 && set.p <= 2.0)) throw ConfigError("set.p", "must lie in (1, 2]");
  if (loss.dim != set.dim) throw ConfigError("loss.dim", "must equal set.dim");
  if (horizon == 0) throw ConfigError("T", "must be positive");
  if (loss.kind == LossKind::Linear) {
    if (!(loss.lipschitz > 0.0)) throw ConfigError("loss.G", "linear losses need G > 0");
    if (loss.lambda != 0.0) throw ConfigError("loss.lambda", "linear losses have lambda = 0");
  } else if (!(loss.lambda > 0.0)) {
    throw ConfigError("loss.lambda", "quadratic losses need lambda > 0");
  }
  if (algo == Algo::ScOfw && loss.kind != LossKind::Quadratic) {
    throw ConfigError("algo", "sc_ofw requires quadratic (strongly convex) losses");
  }
  if (learner_lambda && *learner_lambda != loss.lambda) {
    throw ConfigError("learner.lambda", "must equal loss.lambda (misspecified strong convexity is rejected)");
  }
}

ExperimentSpec parse_config(std::string_view text) {
  std::map<std::string, std::string> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
    if (!known_keys().contains(key)) throw ConfigError(key, "unknown key");
    if (value.empty()) throw ConfigError(key, "empty value");
    if (!entries.emplace(key, value).second) throw ConfigError(key, "duplicate key");
  }

  auto require = [&](const std::string& key) -> const std::string& {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ConfigError(key, "missing required key");
    return it->second;
  };
  auto find = [&](const std::string& key) -> const std::string* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  ExperimentSpec spec;
  spec.set.kind = parse_set_kind(require("set.kind"));
  const auto dim = parse_unsigned("set.dim", require("set.dim"));
  if (dim == 0) throw ConfigError("set.dim", "must be positive");
  spec.set.dim = dim;
  if (spec.set.kind == SetKind::Simplex) {
    if (find("set.r")) throw ConfigError("set.r", "the simplex has no radius");
    spec.set.radius = 0.0;
    spec.set.p = 1.0;
  } else {
    spec.set.radius = parse_real("set.r", require("set.r"));
    spec.set.p = spec.set.kind == SetKind::L1Ball ? 1.0 : 2.0;
  }
  if (spec.set.kind == SetKind::LpBall) {
    spec.set.p = parse_real("set.p", require("set.p"));
  } else if (find("set.p")) {
    throw ConfigError("set.p", "only lp_ball takes p");
  }

  spec.loss.kind = parse_loss_kind(require("loss.kind"));
  spec.loss.dim = spec.set.dim;
  if (spec.loss.kind == LossKind::Linear) {
    spec.loss.lipschitz = parse_real("loss.G", require("loss.G"));
    spec.loss.lambda = 0.0;
    if (find("loss.lambda")) throw ConfigError("loss.lambda", "linear losses have no strong convexity");
  } else {
    spec.loss.lambda = parse_real("loss.lambda", require("loss.lambda"));
    if (find("loss.G")) throw ConfigError("loss.G", "quadratic losses derive G = lambda * D from the set");
    spec.loss.lipschitz = 0.0;
  }

  const std::string* seed = find("seed");
  const std::string* loss_seed = find("loss.seed");
  if (seed && loss_seed && parse_unsigned("seed", *seed) != parse_unsigned("loss.seed", *loss_seed)) {
    throw ConfigError("loss.seed", "conflicts with seed");
  }
  if (seed) {
    spec.loss.seed = parse_unsigned("seed", *seed);
  } else if (loss_seed) {
    spec.loss.seed = parse_unsigned("loss.seed", *loss_seed);
  }

  spec.algo = parse_algo(require("algo"));
  spec.horizon = parse_unsigned("T", require("T"));
  if (const auto* v = find("gap_check")) spec.gap_check = parse_bool("gap_check", *v);
  if (const auto* v = find("gap_cap")) spec.gap_cap = parse_unsigned("gap_cap", *v);
  if (const auto* v = find("output")) spec.output = *v;
  if (const auto* v = find("learner.lambda")) spec.learner_lambda = parse_real("learner.lambda", *v);

  spec.validate();
  return spec;
}

Learner make_learner(const ExperimentSpec& spec) {
  FeasibleSet set = spec.set.build();
  const LossConstants constants = certify_constants(spec.loss, set);
  switch (spec.algo) {
    case Algo::OfwLs:
      return OfwLineSearch(std::move(set), spec.horizon, constants.lipschitz);
    case Algo::ScOfw:
      return ScOfw(std::move(set), constants.lambda);
    case Algo::OfwDecay:
      return OfwDecay(std::move(set), spec.horizon, constants.lipschitz);
    case Algo::Ogd:
      return Ogd(std::move(set), constants.lipschitz, constants.lambda);
  }
  throw ConfigError("algo", "unsupported algorithm");
}

RegretTrace run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const FeasibleSet set = spec.set.build();
  std::vector<LossRound> rounds;
  rounds.reserve(spec.horizon);
  for (std::size_t t = 1; t <= spec.horizon; ++t) rounds.push_back(make_round(spec.loss, t, set));
  return run_experiment(spec, rounds);
}

RegretTrace run_experiment(const ExperimentSpec& base, std::span<const LossRound> rounds) {
  if (rounds.empty()) throw std::invalid_argument("run_experiment: no rounds");
  ExperimentSpec spec = base;
  spec.horizon = rounds.size();
  spec.validate();

  const FeasibleSet set = spec.set.build();
  Learner learner = make_learner(spec);
  oracle::PrefixComparator prefix(set);

  RegretTrace trace;
  trace.rounds.reserve(rounds.size());
  double cum_loss = 0.0;
  for (std::size_t t = 1; t <= rounds.size(); ++t) {
    RoundRecord rec;
    rec.t = t;
    const Point& x = decision(learner);
    if (spec.gap_check && t <= spec.gap_cap) {
      rec.gap = measure_gap(learner);
      if (rec.gap) rec.gap_bound = gap_bound(spec, t);
    }
    const LossRound& round = rounds[t - 1];
    rec.loss = round.value_at(x);
    cum_loss += rec.loss;
    const Point gradient = round.grad_at(x);
    update(learner, gradient);

    prefix.absorb(round);
    rec.cum_loss = cum_loss;
    rec.comparator_cum = prefix.value();
    rec.regret = rec.cum_loss - rec.comparator_cum;
    rec.theorem_bound = theorem_bound(spec, t);
    trace.rounds.push_back(rec);
  }

  const auto comparator = oracle::offline_comparator(set, rounds);
  RoundRecord& last = trace.rounds.back();
  last.comparator_cum = comparator.total;
  last.regret = last.cum_loss - comparator.total;
  trace.final_regret = last.regret;
  trace.final_bound = theorem_bound(spec, spec.horizon);
  return trace;
}

std::string_view to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::None:
      return "none";
    case Theorem::OfwStronglyConvexSet:
      return "ofw_ls/strongly_convex_set";
    case Theorem::ScOfwStronglyConvexSet:
      return "sc_ofw/strongly_convex_set";
    case Theorem::ScOfwGeneralSet:
      return "sc_ofw/general_set";
  }
  return "unknown";
}

double ofw_gap_constant(double diameter, double alpha) {
  return std::max(4.0 * diameter * diameter, 4096.0 / (3.0 * alpha * alpha));
}

double scofw_gap_constant(double lipschitz, double lambda, double diameter, double alpha) {
  const double spread = lipschitz + lambda * diameter;
  return std::max(4.0 * spread * spread / lambda, 288.0 * lambda / (alpha * alpha));
}

double scofw_general_constant(double lipschitz, double lambda, double diameter) {
  const double spread = lipschitz + lambda * diameter;
  return 16.0 * spread * spread / lambda;
}

BoundConstants bound_constants(const ExperimentSpec& spec) {
  const FeasibleSet set = spec.set.build();
  const LossConstants constants = certify_constants(spec.loss, set);
  BoundConstants out;
  out.lipschitz = constants.lipschitz;
  out.lambda = constants.lambda;
  out.diameter = set.diameter();
  out.alpha = set.strong_convexity_modulus();
  const double horizon = static_cast<double>(spec.horizon);
  switch (spec.algo) {
    case Algo::OfwLs:
      out.eta = out.diameter / (2.0 * out.lipschitz * std::pow(horizon + 2.0, 2.0 / 3.0));
      if (out.alpha > 0.0) {
        out.theorem = Theorem::OfwStronglyConvexSet;
        out.C = ofw_gap_constant(out.diameter, out.alpha);
      }
      break;
    case Algo::ScOfw:
      if (out.alpha > 0.0) {
        out.theorem = Theorem::ScOfwStronglyConvexSet;
        out.C = scofw_gap_constant(out.lipschitz, out.lambda, out.diameter, out.alpha);
      } else {
        out.theorem = Theorem::ScOfwGeneralSet;
        out.C = scofw_general_constant(out.lipschitz, out.lambda, out.diameter);
      }
      break;
    case Algo::OfwDecay:
      out.eta = out.diameter / (2.0 * out.lipschitz * std::pow(horizon, 0.75));
      break;
    case Algo::Ogd:
      break;
  }
  return out;
}

std::optional<double> theorem_bound(const ExperimentSpec& spec, std::size_t t) {
  if (t == 0) throw std::invalid_argument("theorem_bound: t must be >= 1");
  const BoundConstants k = bound_constants(spec);
  const double td = static_cast<double>(t);
  switch (k.theorem) {
    case Theorem::OfwStronglyConvexSet:
      return 11.0 / 4.0 * k.lipschitz * std::sqrt(k.C) * std::pow(td + 2.0, 2.0 / 3.0);
    case Theorem::ScOfwStronglyConvexSet:
      return k.C * std::sqrt(2.0 * td) + k.C * std::log(td) / 2.0 + k.lipschitz * k.diameter;
    case Theorem::ScOfwGeneralSet:
      return 3.0 * std::sqrt(2.0) * k.C * std::pow(td, 2.0 / 3.0) / 8.0 + k.C * std::log(td) / 8.0 +
             k.lipschitz * k.diameter;
    case Theorem::None:
      break;
  }
  return std::nullopt;
}

std::optional<double> gap_bound(const ExperimentSpec& spec, std::size_t t) {
  if (t == 0) throw std::invalid_argument("gap_bound: t must be >= 1");
  const BoundConstants k = bound_constants(spec);
  const double td = static_cast<double>(t);
  switch (k.theorem) {
    case Theorem::OfwStronglyConvexSet:
      return k.C / std::pow(td + 2.0, 2.0 / 3.0);
    case Theorem::ScOfwStronglyConvexSet:
      if (t >= 2) return k.C;
      break;
    case Theorem::ScOfwGeneralSet:
      if (t >= 2) return k.C * std::cbrt(td - 1.0);
      break;
    case Theorem::None:
      break;
  }
  return std::nullopt;
}

double loglog_slope(std::span<const std::pair<double, double>> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].first > points[i - 1].first)) {
      throw std::invalid_argument("loglog_slope: horizons must be strictly increasing");
    }
  }
  std::vector<std::pair<double, double>> logs;
  for (const auto& [horizon, regret] : points) {
    if (horizon > 0.0 && regret > 0.0) logs.emplace_back(std::log(horizon), std::log(regret));
  }
  if (logs.size() < 3) throw std::invalid_argument("loglog_slope: need at least 3 points with positive regret");
  const double n = static_cast<double>(logs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : logs) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [x, y] : logs) {
    sxy += (x - mean_x) * (y - mean_y);
    sxx += (x - mean_x) * (x - mean_x);
  }
  return sxy / sxx;
}

std::string emit_csv(const RegretTrace& trace) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const RoundRecord& r : trace.rounds) {
    out += std::to_string(r.t);
    for (const std::string& field :
         {format_real(r.loss), format_real(r.cum_loss), format_real(r.comparator_cum), format_real(r.regret),
          format_optional(r.theorem_bound), format_optional(r.gap), format_optional(r.gap_bound)}) {
      out += ',';
      out += field;
    }
    out += '\n';
  }
  return out;
}

std::vector<RoundRecord> parse_csv(std::string_view text) {
  std::vector<RoundRecord> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) {
    throw std::invalid_argument("parse_csv: missing or unexpected header");
  }
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    while (std::getline(cells, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 8) throw std::invalid_argument("parse_csv: expected 8 fields in '" + line + "'");
    auto real = [](const std::string& s) { return std::strtod(s.c_str(), nullptr); };
    auto optional = [&](const std::string& s) -> std::optional<double> {
      if (trim(s).empty()) return std::nullopt;
      return real(s);
    };
    RoundRecord r;
    r.t = static_cast<std::size_t>(std::stoull(fields[0]));
    r.loss = real(fields[1]);
    r.cum_loss = real(fields[2]);
    r.comparator_cum = real(fields[3]);
    r.regret = real(fields[4]);
    r.theorem_bound = optional(fields[5]);
    r.gap = optional(fields[6]);
    r.gap_bound = optional(fields[7]);
    rows.push_back(r);
  }
  return rows;
}

SweepResult run_sweep(const ExperimentSpec& base, std::span<const std::size_t> horizons,
                      std::span<const std::uint64_t> seeds) {
  if (horizons.empty()) throw std::invalid_argument("run_sweep: no horizons");
  if (seeds.empty()) throw std::invalid_argument("run_sweep: no seeds");
  SweepResult result;
  std::vector<std::pair<double, double>> points;
  for (std::size_t horizon : horizons) {
    SweepRow row;
    row.horizon = horizon;
    for (std::uint64_t seed : seeds) {
      ExperimentSpec spec = base;
      spec.horizon = horizon;
      spec.loss.seed = seed;
      spec.gap_check = false;
      const auto start = std::chrono::steady_clock::now();
      const RegretTrace trace = run_experiment(spec);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      row.seconds = std::max(row.seconds, elapsed.count());
      row.regrets.push_back(trace.final_regret);
      row.theorem_bound = trace.final_bound;
    }
    double sum = 0.0;
    for (double r : row.regrets) sum += r;
    row.mean_regret = sum / static_cast<double>(row.regrets.size());
    points.emplace_back(static_cast<double>(horizon), row.mean_regret);
    result.rows.push_back(std::move(row));
  }
  try {
    result.slope = loglog_slope(points);
  } catch (const std::invalid_argument&) {
    result.slope = std::nullopt;
  }
  return result;
}

std::string emit_sweep_csv(const SweepResult& result) {
  std::string out = "T,mean_regret,min_regret,max_regret,theorem_bound,seconds\n";
  for (const SweepRow& row : result.rows) {
    const auto [lo, hi] = std::minmax_element(row.regrets.begin(), row.regrets.end());
    out += std::to_string(row.horizon) + ',' + format_real(row.mean_regret) + ',' + format_real(*lo) + ',' +
           format_real(*hi) + ',' + format_optional(row.theorem_bound) + ',' + format_real(row.seconds) + '\n';
  }
  out += "# loglog_slope," + format_optional(result.slope) + '\n';
  return out;
}

std::vector<std::string> check_trace(const ExperimentSpec& spec, const RegretTrace& trace) {
  std::vector<std::string> failures;
  if (trace.final_bound && !(trace.final_regret <= *trace.final_bound)) {
    failures.push_back("R(T) = " + format_real(trace.final_regret) + " exceeds bound " +
                       format_real(*trace.final_bound));
  }
  for (const RoundRecord& r : trace.rounds) {
    if (!r.gap) continue;
    if (*r.gap < -kFirstGapTol) {
      failures.push_back("t=" + std::to_string(r.t) + ": negative gap " + format_real(*r.gap));
    }
    if (r.gap_bound && !(*r.gap <= *r.gap_bound + kGapSlack)) {
      failures.push_back("t=" + std::to_string(r.t) + ": gap " + format_real(*r.gap) + " exceeds " +
                         format_real(*r.gap_bound));
    }
    if (spec.algo == Algo::OfwLs && r.t == 1 && std::abs(*r.gap) > kFirstGapTol) {
      failures.push_back("t=1: first gap " + format_real(*r.gap) + " is not zero");
    }
  }
  return failures;
}

}  // namespace ofw
