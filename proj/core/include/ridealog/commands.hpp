#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "ridealog/config.hpp"

namespace ridealog {

// Command bodies shared by the CLI and the tests. Each takes a parsed
// RunConfig plus its flags and writes deterministic text; failures surface as
// the library's exception types (the CLI maps them to exit codes).

struct TranslateOptions {
  bool pi = false;          // expand coupled pairs into their pi networks
  bool norton = false;      // pre-transform sources at the drive frequency
};

/// Netlist text for the configured model.
void cmd_translate(const RunConfig& config, const TranslateOptions& options, std::ostream& out);

struct SolveOptions {
  bool branch_currents = false;
};

/// Per-node phasor table (re, im, rms, phase in degrees) plus conditioning
/// footer; `branch_currents` appends a per-branch table with the KCL
/// residual. A condition estimate above 1e12 warns on `diagnostics`.
void cmd_solve(const RunConfig& config, const SolveOptions& options, std::ostream& out,
               std::ostream& diagnostics);

struct ValidateOptions {
  std::optional<double> tolerance;   // overrides the [solver] tolerance
  double perturb = 0.0;              // relative tweak of the oracle's lead suspension
                                     // stiffness; nonzero forces a visible mismatch
};

/// Runs the circuit against both mechanical routes and prints the
/// per-coordinate table (dependent point included). Returns 0 on PASS, 4 on
/// FAIL.
[[nodiscard]] int cmd_validate(const RunConfig& config, const ValidateOptions& options,
                               std::ostream& out);

struct SweepOptions {
  std::optional<double> from;        // [rad/s]
  std::optional<double> to;          // [rad/s]
  std::optional<int> points;
  std::vector<double> speeds_kmh;    // alternative x-axis: vehicle speeds
};

/// Frequency-sweep CSV. The range comes from the flags, falling back to the
/// [solver] sweep keys; `speeds_kmh` instead derives one frequency per speed
/// through the road wavelength.
void cmd_sweep(const RunConfig& config, const SweepOptions& options, std::ostream& out);

struct TimeseriesOptions {
  std::optional<int> periods;
  std::optional<int> samples;
};

/// Steady-state velocity samples of every coordinate (dependent point
/// included) as CSV with an rms footer row.
void cmd_timeseries(const RunConfig& config, const TimeseriesOptions& options, std::ostream& out);

}  // namespace ridealog
