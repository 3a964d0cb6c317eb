#pragma once

#include <map>
#include <optional>
#include <string>

#include "ridealog/model.hpp"

namespace ridealog {

enum class ModelKind { TwoDof, HalfCar, ThreeAxle };

[[nodiscard]] std::string to_string(ModelKind kind);
[[nodiscard]] ModelKind model_kind_from_string(const std::string& name);   // ConfigError

/// Numerical settings from the [solver] section. The sweep range is an
/// optional default for the sweep command (flags override it).
struct SolverSettings {
  double tolerance = 1e-3;       // validation rms threshold (relative)
  int periods = 10;              // spectral window length [excitation periods]
  int samples = 1024;            // spectral sample count
  std::optional<double> sweep_from;    // [rad/s]
  std::optional<double> sweep_to;      // [rad/s]
  std::optional<int> sweep_points;

  bool operator==(const SolverSettings&) const = default;
};

/// Default output destinations from the [output] section; empty string means
/// "not set" (commands fall back to stdout unless a flag says otherwise).
struct OutputPaths {
  std::string netlist;
  std::string solution;
  std::string sweep;
  std::string timeseries;

  bool operator==(const OutputPaths&) const = default;
};

/// One parsed parameter file. Parsing normalizes convenience forms (v_kmh is
/// converted to v, a redundant `l` is cross-checked and dropped), so equal
/// physical setups compare equal.
struct RunConfig {
  ModelKind kind = ModelKind::ThreeAxle;
  std::map<std::string, double> params;       // [model] block, keyed by symbol
  std::map<std::string, double> excitation_values;   // [excitation] block
  SolverSettings solver;
  OutputPaths output;

  bool operator==(const RunConfig&) const = default;

  [[nodiscard]] TwoDofParams two_dof_params() const;
  [[nodiscard]] HalfCarParams half_car_params() const;
  [[nodiscard]] ThreeAxleParams three_axle_params() const;

  [[nodiscard]] SecondOrderModel build_model() const;
  [[nodiscard]] ExcitationSpec excitation() const;
};

/// Parses `key = value` text with `[model] [excitation] [solver] [output]`
/// sections and `#` comments. Throws ConfigError naming the offending key or
/// line; all per-kind required/unknown/duplicate-key checks happen here.
[[nodiscard]] RunConfig parse_config(const std::string& text);

/// parse_config over a file's contents; ConfigError when unreadable.
[[nodiscard]] RunConfig load_config(const std::string& path);

/// Canonical text form: fixed key order, 17-significant-digit numbers. The
/// result reparses to an equal RunConfig and re-serializes byte-identically.
[[nodiscard]] std::string write_canonical(const RunConfig& config);

}  // namespace ridealog
