#pragma once

#include <stdexcept>
#include <string>

namespace ridealog {

/// Invalid or inconsistent physical parameters (non-positive mass, bad geometry, ...).
/// The message names the offending key.
struct ModelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Model shape the analogy cannot represent (e.g. inertial coupling outside
/// the sprung 2x2 block).
struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Netlist cannot be stamped as-is (raw voltage source, zero-valued inductor, ...).
struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Source transformation asked for with zero series admittance.
struct DegenerateSourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear system numerically singular; carries the node (or coordinate) that
/// produced the failing pivot.
struct SingularSystemError : std::runtime_error {
  SingularSystemError(const std::string& what, std::string node)
      : std::runtime_error(what), node_label(std::move(node)) {}
  std::string node_label;
};

/// Config file problems: syntax, unknown/missing keys, unit violations.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ridealog
