#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ofw/learners.hpp"
#include "ofw/losses.hpp"
#include "ofw/sets.hpp"

namespace ofw {

/// Malformed or inconsistent experiment configuration. `key()` names the
/// offending dotted key when there is one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct SetDescriptor {
  SetKind kind = SetKind::L2Ball;
  std::size_t dim = 1;
  double radius = 1.0;
  double p = 2.0;

  FeasibleSet build() const;
};

inline constexpr std::size_t kDefaultGapCap = 512;

struct ExperimentSpec {
  SetDescriptor set;
  LossSpec loss;
  Algo algo = Algo::OfwLs;
  std::size_t horizon = 1;
  bool gap_check = false;
  std::size_t gap_cap = kDefaultGapCap;
  std::optional<std::string> output;
  /// Strong-convexity parameter handed to ScOfw when stated separately; must match loss.lambda.
  std::optional<double> learner_lambda;

  /// Throws ConfigError on invalid combinations.
  void validate() const;
};

/// Parses the flat `key = value` format:
///
///   set.kind = l2_ball        # l2_ball | lp_ball | l1_ball | simplex
///   set.dim = 10
///   set.r = 1
///   set.p = 1.5               # lp_ball only
///   loss.kind = linear        # linear | quadratic
///   loss.G = 1                # linear only
///   loss.lambda = 1           # quadratic only
///   seed = 1                  # alias: loss.seed
///   algo = ofw_ls             # ofw_ls | sc_ofw | ofw_decay | ogd
///   T = 1024
///   gap_check = false
///   gap_cap = 512
///   output = trace.csv
///   learner.lambda = 1        # optional; must equal loss.lambda
///
/// Blank lines and `#` comments are ignored. Unknown keys are rejected.
ExperimentSpec parse_config(std::string_view text);

struct RoundRecord {
  std::size_t t = 0;
  double loss = 0.0;
  double cum_loss = 0.0;
  double comparator_cum = 0.0;
  double regret = 0.0;
  std::optional<double> theorem_bound;
  std::optional<double> gap;
  std::optional<double> gap_bound;

  bool operator==(const RoundRecord&) const = default;
};

struct RegretTrace {
  std::vector<RoundRecord> rounds;
  double final_regret = 0.0;
  std::optional<double> final_bound;
};

/// Plays spec.horizon rounds of the online protocol against the seeded adversary.
RegretTrace run_experiment(const ExperimentSpec& spec);

/// Same protocol against caller-supplied rounds (their count overrides spec.horizon).
RegretTrace run_experiment(const ExperimentSpec& spec, std::span<const LossRound> rounds);

Learner make_learner(const ExperimentSpec& spec);

enum class Theorem { None, OfwStronglyConvexSet, ScOfwStronglyConvexSet, ScOfwGeneralSet };

std::string_view to_string(Theorem theorem);

struct BoundConstants {
  Theorem theorem = Theorem::None;
  double C = 0.0;
  double lipschitz = 0.0;
  double lambda = 0.0;
  double diameter = 0.0;
  double alpha = 0.0;
  std::optional<double> eta;  // OfwLs / OfwDecay only
};

BoundConstants bound_constants(const ExperimentSpec& spec);

/// max(4 D^2, 4096 / (3 alpha^2)).
double ofw_gap_constant(double diameter, double alpha);
/// max(4 (G + lambda D)^2 / lambda, 288 lambda / alpha^2).
double scofw_gap_constant(double lipschitz, double lambda, double diameter, double alpha);
/// 16 (G + lambda D)^2 / lambda.
double scofw_general_constant(double lipschitz, double lambda, double diameter);

/// Regret bound at horizon t, or nullopt when no theorem covers the spec.
std::optional<double> theorem_bound(const ExperimentSpec& spec, std::size_t t);

/// Surrogate gap bound at round t, or nullopt when none applies.
std::optional<double> gap_bound(const ExperimentSpec& spec, std::size_t t);

/// Least-squares slope of log R against log T; points with R <= 0 are dropped.
/// Throws std::invalid_argument if fewer than three points survive.
double loglog_slope(std::span<const std::pair<double, double>> points);

inline constexpr std::string_view kCsvHeader = "t,loss,cum_loss,comparator_cum,regret,theorem_bound,gap,gap_bound";

std::string emit_csv(const RegretTrace& trace);
std::vector<RoundRecord> parse_csv(std::string_view text);

struct SweepRow {
  std::size_t horizon = 0;
  std::vector<double> regrets;  // one per seed
  double mean_regret = 0.0;
  std::optional<double> theorem_bound;
  double seconds = 0.0;  // slowest single run at this horizon
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<double> slope;
};

/// Independent runs per (horizon, seed); the slope is fitted to the per-horizon mean regret.
SweepResult run_sweep(const ExperimentSpec& base, std::span<const std::size_t> horizons,
                      std::span<const std::uint64_t> seeds);

std::string emit_sweep_csv(const SweepResult& result);

/// The checks the harness applies after a run: R(T) against the theorem bound
/// and every measured gap against its schedule. Returns human-readable failures.
std::vector<std::string> check_trace(const ExperimentSpec& spec, const RegretTrace& trace);

inline constexpr double kGapSlack = 1e-7;
inline constexpr double kFirstGapTol = 1e-9;

}  // namespace ofw
