#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofw/harness.hpp"
#include "ofw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

ofw::ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ofw::ConfigError("", "cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ofw::parse_config(text.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num_or_none(const std::optional<double>& v) { return v ? num(*v) : "none"; }

int cmd_run(const std::string& config, const std::string& out_flag) {
  const ofw::ExperimentSpec spec = load_spec(config);
  const ofw::RegretTrace trace = ofw::run_experiment(spec);
  const std::string csv = ofw::emit_csv(trace);
  const std::string out = !out_flag.empty() ? out_flag : spec.output.value_or("");
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_text(out, csv);
  }

  std::fprintf(stderr, "R(T) = %.17g  bound = %s\n", trace.final_regret, num_or_none(trace.final_bound).c_str());
  const auto failures = ofw::check_trace(spec, trace);
  for (const auto& f : failures) std::fprintf(stderr, "FAIL %s\n", f.c_str());
  return failures.empty() ? kExitOk : kExitFailure;
}

int cmd_sweep(const std::string& config, const std::vector<std::size_t>& horizons,
              const std::vector<std::uint64_t>& seed_flag, const std::string& out) {
  const ofw::ExperimentSpec base = load_spec(config);
  const std::vector<std::uint64_t> seeds = seed_flag.empty() ? std::vector<std::uint64_t>{base.loss.seed} : seed_flag;
  const ofw::SweepResult result = ofw::run_sweep(base, horizons, seeds);
  const std::string csv = ofw::emit_sweep_csv(result);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_text(out, csv);
    std::printf("%8s  %22s  %22s  %10s\n", "T", "mean R(T)", "bound", "seconds");
    for (const auto& row : result.rows) {
      std::printf("%8zu  %22.12g  %22s  %10.4f\n", row.horizon, row.mean_regret,
                  row.theorem_bound ? num(*row.theorem_bound).c_str() : "none", row.seconds);
    }
    std::printf("loglog slope: %s\n", num_or_none(result.slope).c_str());
  }

  int status = kExitOk;
  for (const auto& row : result.rows) {
    if (!row.theorem_bound) continue;
    for (double r : row.regrets) {
      if (!(r <= *row.theorem_bound)) {
        std::fprintf(stderr, "FAIL T=%zu: R(T) = %.17g exceeds bound %.17g\n", row.horizon, r, *row.theorem_bound);
        status = kExitFailure;
      }
    }
  }
  return status;
}

int cmd_verify(const std::string& scope_text) {
  const auto scope = ofw::verify::parse_scope(scope_text);
  if (!scope) throw ofw::ConfigError("scope", "expected all, sets, learners or bounds, got '" + scope_text + "'");
  const ofw::verify::Report report = ofw::verify::verify_suite(*scope);
  std::cout << report.to_json() << '\n';
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_bounds(const std::string& config) {
  const ofw::ExperimentSpec spec = load_spec(config);
  const ofw::BoundConstants c = ofw::bound_constants(spec);
  std::printf("theorem      %s\n", std::string(ofw::to_string(c.theorem)).c_str());
  std::printf("G            %s\n", num(c.lipschitz).c_str());
  std::printf("lambda       %s\n", num(c.lambda).c_str());
  std::printf("D            %s\n", num(c.diameter).c_str());
  std::printf("alpha        %s\n", num(c.alpha).c_str());
  std::printf("eta          %s\n", num_or_none(c.eta).c_str());
  if (c.theorem == ofw::Theorem::None) {
    std::printf("C            none\n");
    std::printf("bound(T)     none (no applicable theorem)\n");
    return kExitOk;
  }
  std::printf("C            %s\n", num(c.C).c_str());
  std::printf("bound(%zu)%*s%s\n", spec.horizon, static_cast<int>(6 - std::to_string(spec.horizon).size()), "",
              num_or_none(ofw::theorem_bound(spec, spec.horizon)).c_str());
  for (std::size_t t : {std::size_t{1}, std::size_t{2}, spec.horizon}) {
    std::printf("gap_bound(%zu) %s\n", t, num_or_none(ofw::gap_bound(spec, t)).c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online Frank-Wolfe experiment harness"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::vector<std::size_t> horizons;
  std::vector<std::uint64_t> seeds;
  std::string scope = "all";

  auto* run = app.add_subcommand("run", "Play one experiment and emit its CSV trace");
  run->add_option("config", config, "Experiment config file")->required();
  run->add_option("--out", out, "CSV output path (default: config 'output' key, else stdout)");

  auto* sweep = app.add_subcommand("sweep", "Final regret over a list of horizons plus the log-log slope");
  sweep->add_option("config", config, "Experiment config file")->required();
  sweep->add_option("--horizons", horizons, "Comma-separated horizons")->required()->delimiter(',');
  sweep->add_option("--seeds", seeds, "Comma-separated seeds (default: the config seed)")->delimiter(',');
  sweep->add_option("--out", out, "CSV output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run the invariant verification suite");
  verify->add_option("--scope", scope, "all | sets | learners | bounds");

  auto* bounds = app.add_subcommand("bounds", "Print the theorem constants and bound values for a config");
  bounds->add_option("config", config, "Experiment config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(config, out);
    if (*sweep) return cmd_sweep(config, horizons, seeds, out);
    if (*verify) return cmd_verify(scope);
    if (*bounds) return cmd_bounds(config);
  } catch (const ofw::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitOk;
}
