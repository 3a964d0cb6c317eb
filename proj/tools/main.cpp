// ridealog: convert lumped-parameter vehicle models to force-current
// analogue networks, solve the harmonic steady state, and cross-check the
// result against an independent mechanical oracle.
//
// Exit codes: 0 success, 2 configuration/model error, 3 numerical
// singularity, 4 validation failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ridealog/commands.hpp"
#include "ridealog/config.hpp"
#include "ridealog/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

/// Resolves the output stream: explicit flag first, then the config's
/// [output] path, then stdout.
class OutputTarget {
 public:
  OutputTarget(const std::string& flag_path, const std::string& config_path) {
    const std::string& path = flag_path.empty() ? config_path : flag_path;
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw ridealog::ConfigError("cannot open output file '" + path + "'");
      }
      path_ = path;
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void report(std::ostream& diagnostics) const {
    if (!path_.empty()) {
      diagnostics << "wrote " << path_ << '\n';
    }
  }

 private:
  std::ofstream file_;
  std::string path_;
};

int run(int argc, char** argv) {
  CLI::App app{
      "Force-current electrical analogues of lumped-parameter vehicle models:\n"
      "translate to a netlist, solve the harmonic steady state, validate\n"
      "against a mechanical oracle, sweep frequencies, or emit time series."};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "parameter file (key = value sections)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", out_path, "output file ('-' for stdout)");
  };

  // translate ---------------------------------------------------------------
  ridealog::TranslateOptions translate_options;
  CLI::App* translate = app.add_subcommand("translate", "write the analogue netlist");
  add_common(translate);
  translate->add_flag("--pi", translate_options.pi,
                      "replace coupled capacitor pairs by their pi networks");
  translate->add_flag("--norton", translate_options.norton,
                      "apply the source transformation at the drive frequency");

  // solve ---------------------------------------------------------------------
  ridealog::SolveOptions solve_options;
  CLI::App* solve = app.add_subcommand("solve", "solve the harmonic steady state");
  add_common(solve);
  solve->add_flag("--branch-currents", solve_options.branch_currents,
                  "append per-branch currents and the KCL residual");

  // validate ------------------------------------------------------------------
  ridealog::ValidateOptions validate_options;
  double tolerance_flag = 0;
  CLI::App* validate = app.add_subcommand("validate", "cross-check against the mechanical oracle");
  add_common(validate);
  CLI::Option* tol_opt =
      validate->add_option("--tolerance", tolerance_flag, "relative rms threshold");
  validate->add_option("--perturb", validate_options.perturb,
                       "relative tweak of the oracle's lead suspension stiffness "
                       "(demonstrates a detected mismatch)");

  // sweep ----------------------------------------------------------------------
  ridealog::SweepOptions sweep_options;
  double sweep_from = 0, sweep_to = 0;
  int sweep_points = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "frequency sweep as CSV");
  add_common(sweep);
  CLI::Option* from_opt = sweep->add_option("--from", sweep_from, "start frequency [rad/s]");
  CLI::Option* to_opt = sweep->add_option("--to", sweep_to, "end frequency [rad/s]");
  CLI::Option* points_opt = sweep->add_option("--points", sweep_points, "number of rows");
  sweep->add_option("--speeds", sweep_options.speeds_kmh,
                    "sweep these vehicle speeds [km/h] instead of frequencies");

  // timeseries -----------------------------------------------------------------
  ridealog::TimeseriesOptions timeseries_options;
  int periods_flag = 0, samples_flag = 0;
  CLI::App* timeseries =
      app.add_subcommand("timeseries", "steady-state velocity samples as CSV");
  add_common(timeseries);
  CLI::Option* periods_opt =
      timeseries->add_option("--periods", periods_flag, "window length [excitation periods]");
  CLI::Option* samples_opt = timeseries->add_option("--samples", samples_flag, "sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    const ridealog::RunConfig config = ridealog::load_config(config_path);

    if (translate->parsed()) {
      OutputTarget target(out_path, config.output.netlist);
      ridealog::cmd_translate(config, translate_options, target.stream());
      target.report(std::cerr);
      return 0;
    }
    if (solve->parsed()) {
      OutputTarget target(out_path, config.output.solution);
      ridealog::cmd_solve(config, solve_options, target.stream(), std::cerr);
      target.report(std::cerr);
      return 0;
    }
    if (validate->parsed()) {
      if (*tol_opt) {
        validate_options.tolerance = tolerance_flag;
      }
      OutputTarget target(out_path, std::string{});
      const int code = ridealog::cmd_validate(config, validate_options, target.stream());
      target.report(std::cerr);
      return code;
    }
    if (sweep->parsed()) {
      if (*from_opt) {
        sweep_options.from = sweep_from;
      }
      if (*to_opt) {
        sweep_options.to = sweep_to;
      }
      if (*points_opt) {
        sweep_options.points = sweep_points;
      }
      OutputTarget target(out_path, config.output.sweep);
      ridealog::cmd_sweep(config, sweep_options, target.stream());
      target.report(std::cerr);
      return 0;
    }
    if (timeseries->parsed()) {
      if (*periods_opt) {
        timeseries_options.periods = periods_flag;
      }
      if (*samples_opt) {
        timeseries_options.samples = samples_flag;
      }
      OutputTarget target(out_path, config.output.timeseries);
      ridealog::cmd_timeseries(config, timeseries_options, target.stream());
      target.report(std::cerr);
      return 0;
    }
  } catch (const ridealog::SingularSystemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const ridealog::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ridealog::ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ridealog::TopologyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ridealog::AssemblyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ridealog::DegenerateSourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
