#include "ridealog/commands.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ridealog/analogy.hpp"
#include "ridealog/errors.hpp"
#include "ridealog/format.hpp"
#include "ridealog/netlist.hpp"
#include "ridealog/oracle.hpp"
#include "ridealog/solver.hpp"
#include "ridealog/types.hpp"

namespace ridealog {
namespace {

PhasorSolution solve_config(const RunConfig& config, Netlist* netlist_out) {
  const SecondOrderModel model = config.build_model();
  const ExcitationSpec drive = config.excitation();
  Netlist net = apply_norton(translate_force_current(model, drive), drive.omega());
  const PhasorSolution solution = solve(assemble_admittance(net, drive.omega()));
  if (netlist_out != nullptr) {
    *netlist_out = std::move(net);
  }
  return solution;
}

void print_phasor_row(std::ostream& out, const std::string& label, Complex phasor, double omega) {
  const SinusoidRecord record = to_sinusoid(phasor, omega);
  out << label << ',' << format_sig(phasor.real()) << ',' << format_sig(phasor.imag()) << ','
      << format_sig(record.rms) << ',' << format_sig(record.phase_deg) << '\n';
}

}  // namespace

void cmd_translate(const RunConfig& config, const TranslateOptions& options, std::ostream& out) {
  const SecondOrderModel model = config.build_model();
  const ExcitationSpec drive = config.excitation();
  Netlist net = translate_force_current(model, drive);
  if (options.pi) {
    net = expand_pi(net);
  }
  if (options.norton) {
    net = apply_norton(net, drive.omega());
  }
  write_netlist(net, out);
}

void cmd_solve(const RunConfig& config, const SolveOptions& options, std::ostream& out,
               std::ostream& diagnostics) {
  Netlist net;
  const PhasorSolution solution = solve_config(config, &net);

  out << "# harmonic solve at omega_rad_s = " << format_sig(solution.omega) << '\n';
  out << "node,re,im,rms,phase_deg\n";
  for (std::size_t i = 0; i < solution.labels.size(); ++i) {
    print_phasor_row(out, solution.labels[i], solution.voltages(static_cast<Eigen::Index>(i)),
                     solution.omega);
  }
  out << "# condition = " << format_sig(solution.condition) << '\n';
  out << "# residual = " << format_sig(solution.residual) << '\n';

  if (solution.condition > 1e12) {
    diagnostics << "warning: admittance condition estimate " << format_sig(solution.condition)
                << " exceeds 1e12; results may be inaccurate\n";
  }

  if (options.branch_currents) {
    const BranchCurrentReport report = branch_currents(net, solution);
    out << "branch,kind,from,to,re,im,rms,phase_deg\n";
    for (const BranchCurrentRow& row : report.rows) {
      const SinusoidRecord record = to_sinusoid(row.current, solution.omega);
      out << row.name << ',' << row.kind << ',' << row.node_from << ',' << row.node_to << ','
          << format_sig(row.current.real()) << ',' << format_sig(row.current.imag()) << ','
          << format_sig(record.rms) << ',' << format_sig(record.phase_deg) << '\n';
    }
    out << "# max_kcl_residual = " << format_sig(report.max_kcl_residual) << '\n';
  }
}

int cmd_validate(const RunConfig& config, const ValidateOptions& options, std::ostream& out) {
  const ExcitationSpec drive = config.excitation();
  const PhasorSolution solution = solve_config(config, nullptr);

  SecondOrderModel oracle_model;
  if (options.perturb != 0.0) {
    RunConfig tweaked = config;
    const char* key = config.kind == ModelKind::TwoDof ? "k1" : "k_sd";
    tweaked.params[key] *= 1.0 + options.perturb;
    oracle_model = tweaked.build_model();
  } else {
    oracle_model = config.build_model();
  }

  const double tolerance = options.tolerance.value_or(config.solver.tolerance);
  SpectralGrid grid;
  grid.periods = config.solver.periods;
  grid.samples = config.solver.samples;
  const ValidationReport report = validate(oracle_model, drive, solution, tolerance, grid);

  out << "# validation at omega_rad_s = " << format_sig(drive.omega())
      << ", tolerance = " << format_sig(tolerance) << '\n';
  out << "coordinate,rms_circuit,rms_oracle,rel_error\n";
  for (const CoordinateCheck& check : report.coordinates) {
    out << check.label << ',' << format_sig(check.rms_electrical) << ','
        << format_sig(check.rms_mechanical) << ',' << format_sig(check.relative_error) << '\n';
  }
  out << "# max_rel_error = " << format_sig(report.max_relative_error) << '\n';
  out << "# max_phase_delta_deg = " << format_sig(report.max_phase_delta_deg) << '\n';
  out << "# spectral_vs_closed_form = " << format_sig(report.spectral_vs_closed_form) << '\n';
  out << (report.passed ? "PASS" : "FAIL") << '\n';
  return report.passed ? 0 : 4;
}

void cmd_sweep(const RunConfig& config, const SweepOptions& options, std::ostream& out) {
  const SecondOrderModel model = config.build_model();
  const ExcitationSpec drive = config.excitation();

  std::vector<double> omegas;
  if (!options.speeds_kmh.empty()) {
    if (options.from || options.to || options.points) {
      throw ConfigError("a speed sweep excludes --from/--to/--points");
    }
    if (!drive.road) {
      throw ConfigError("a speed sweep needs a road-excited model");
    }
    for (double speed_kmh : options.speeds_kmh) {
      if (!(speed_kmh > 0)) {
        throw ConfigError("sweep speeds must be positive");
      }
      omegas.push_back(2.0 * pi * (speed_kmh / 3.6) / drive.road->lambda);
    }
  } else {
    const std::optional<double> from = options.from ? options.from : config.solver.sweep_from;
    const std::optional<double> to = options.to ? options.to : config.solver.sweep_to;
    if (!from || !to) {
      throw ConfigError(
          "no sweep range: pass --from/--to or set sweep_from/sweep_to in [solver]");
    }
    const int points = options.points.value_or(config.solver.sweep_points.value_or(101));
    if (!(*from > 0)) {
      throw ConfigError("sweep range must start above 0 rad/s");
    }
    if (*to < *from) {
      throw ConfigError("sweep end must not precede its start");
    }
    if (points < 1) {
      throw ConfigError("sweep needs at least one point");
    }
    if (points == 1) {
      omegas.push_back(*from);
    } else {
      const double step = (*to - *from) / (points - 1);
      for (int i = 0; i < points; ++i) {
        omegas.push_back(i + 1 == points ? *to : *from + step * i);
      }
    }
  }

  write_sweep_csv(sweep(model, drive, omegas), out);
}

void cmd_timeseries(const RunConfig& config, const TimeseriesOptions& options, std::ostream& out) {
  const SecondOrderModel model = config.build_model();
  const ExcitationSpec drive = config.excitation();
  SpectralGrid grid;
  grid.periods = options.periods.value_or(config.solver.periods);
  grid.samples = options.samples.value_or(config.solver.samples);
  write_timeseries_csv(spectral_velocities(model, drive, grid), out);
}

}  // namespace ridealog
