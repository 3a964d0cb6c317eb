#pragma once

#include <array>
#include <vector>

#include "ridealog/model.hpp"
#include "ridealog/netlist.hpp"
#include "ridealog/types.hpp"

namespace ridealog {

// ============================================================================
// Model -> netlist translation (force-current analogy)
// ============================================================================

/// Translates a mechanical model into its force-current analogue:
/// mass -> grounded capacitor C=m, spring -> inductor L=1/k, damper ->
/// conductance G=d, inertial coupling -> coupled capacitor pair, road input ->
/// voltage source behind the tyre (G_r, L_r) branches at a dedicated source
/// node, applied force -> current source. Wall anchorages land on ground.
///
/// The road excitation supplies the per-axle source phasors; pass it whenever
/// the model has road-excited axles.
[[nodiscard]] Netlist translate_force_current(const SecondOrderModel& model,
                                              const HarmonicRoadExcitation& excitation);
[[nodiscard]] Netlist translate_force_current(const SecondOrderModel& model);
[[nodiscard]] Netlist translate_force_current(const SecondOrderModel& model,
                                              const ExcitationSpec& excitation);

// ============================================================================
// Equivalent-network transformations
// ============================================================================

/// Pi equivalent of a coupled pair: grounded (C_A - C_M) at node_a, grounded
/// (C_B - C_M) at node_b, series C_M between them. Stamps match the pair at
/// every frequency; the series branch may be negative.
[[nodiscard]] std::array<Branch, 3> pi_equivalent(const CoupledCapacitorPair& pair);

/// Netlist with every coupled pair replaced by its pi network.
[[nodiscard]] Netlist expand_pi(const Netlist& net);

struct NortonEquivalent {
  Complex current;            // rms current source phasor, into the load node
  Complex shunt_admittance;   // equals the series admittance, now grounded
};

/// Voltage source behind a series admittance -> current source Y*V in
/// parallel with the same admittance. Throws DegenerateSourceError on zero
/// series admittance.
[[nodiscard]] NortonEquivalent norton_transform(Complex v_src, Complex series_admittance);

/// Applies the source transformation to every voltage source: the source's
/// internal node disappears, its series branches re-ground at the load node,
/// and a current source of value Y_series(omega)*V is injected there. The
/// result is assembly-ready at the given frequency.
[[nodiscard]] Netlist apply_norton(const Netlist& net, double omega);

// ============================================================================
// Nodal assembly
// ============================================================================

struct AdmittanceSystem {
  double omega = 0;
  ComplexMatrix Y;                    // node admittance matrix, ground eliminated
  ComplexVector I;                    // source currents into each node
  std::vector<int> nodes;             // netlist node per matrix row
  std::vector<std::string> labels;    // node label per matrix row
  std::vector<int> disconnected;      // rows with no stamped branch (singular warning)
};

/// Admittance of a passive branch at omega: G, 1/(j*omega*L), or j*omega*C.
[[nodiscard]] Complex branch_admittance(const Branch& branch, double omega);

/// Stamps every branch and coupling into the nodal system at omega. Raw
/// voltage sources are rejected: apply_norton first.
[[nodiscard]] AdmittanceSystem assemble_admittance(const Netlist& net, double omega);

}  // namespace ridealog
