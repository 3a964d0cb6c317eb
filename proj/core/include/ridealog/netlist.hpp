#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ridealog/types.hpp"

namespace ridealog {

/// Ground is always node 0, labeled "0".
inline constexpr int ground_node = 0;

enum class BranchKind { Conductance, Inductor, Capacitor, CurrentSource, VoltageSource };

[[nodiscard]] char branch_kind_letter(BranchKind kind);
[[nodiscard]] BranchKind branch_kind_from_letter(char letter);

/// Two-terminal element. Passives carry `value` (G [S], L [H], C [F]);
/// sources carry `phasor` (rms, complex). Negative passive values are legal:
/// coupling-derived branches are equivalent-circuit artifacts.
struct Branch {
  BranchKind kind = BranchKind::Conductance;
  std::string name;
  int node_from = ground_node;
  int node_to = ground_node;
  double value = 0;
  Complex phasor{};
  std::string provenance;
};

/// Electrostatic coupling replacing the sprung-mass 2x2 inertia block:
/// self-capacitances c_a, c_b with mutual c_m (sign carries the coupling
/// orientation; flipping `dot_aligned` negates it).
struct CoupledCapacitorPair {
  int node_a = 0, node_b = 0;
  double c_a = 0, c_b = 0, c_m = 0;
  bool dot_aligned = true;
  std::string provenance;
};

/// Node/branch graph of the electrical analogue. Branch values are frequency
/// independent; sources are stored as rms phasors and the solve frequency is
/// supplied separately.
struct Netlist {
  std::vector<std::string> node_labels{ "0" };
  std::vector<Branch> branches;
  std::vector<CoupledCapacitorPair> couplings;
  std::vector<int> coordinate_nodes;   // mechanical coordinate -> node index

  /// Returns the node with this label, creating it if needed.
  int add_node(const std::string& label);
  /// Index of an existing labeled node; throws AssemblyError if unknown.
  [[nodiscard]] int node_of(const std::string& label) const;
  [[nodiscard]] int node_count() const { return static_cast<int>(node_labels.size()); }
};

/// One branch per line: `KIND NAME NODE_FROM NODE_TO VALUE [# provenance]`,
/// kinds G/L/C/I/V/KCAP; KCAP lines carry `nodeA nodeB C_A C_B C_M`; complex
/// source values as `re,im`. Passive values round-trip exactly.
void write_netlist(const Netlist& net, std::ostream& out);
[[nodiscard]] Netlist read_netlist(std::istream& in);

}  // namespace ridealog
