#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ridealog/analogy.hpp"
#include "ridealog/model.hpp"
#include "ridealog/netlist.hpp"
#include "ridealog/types.hpp"

namespace ridealog {

/// Node-voltage phasors of one harmonic solve. Voltages are rms and map to
/// point velocities of the mechanical model.
struct PhasorSolution {
  double omega = 0;
  ComplexVector voltages;
  std::vector<int> nodes;
  std::vector<std::string> labels;
  double residual = 0;             // ||Y*U - I||_inf
  double condition = 0;            // 1-norm condition estimate of Y

  [[nodiscard]] Complex at(const std::string& label) const;
};

/// Solves Y*U = I by pivoted complex LU (no explicit inversion). Throws
/// SingularSystemError, naming the offending node, when a pivot falls below
/// 1e-13*||Y||_1 or the residual exceeds 1e-9*||I||_inf.
[[nodiscard]] PhasorSolution solve(const AdmittanceSystem& sys);

/// rms/phase form. Realizes in time as sqrt(2)*rms*sin(omega*t + phase).
struct SinusoidRecord {
  double rms = 0;
  double phase_deg = 0;            // in (-180, 180]
  double omega = 0;

  [[nodiscard]] double phase_rad() const { return phase_deg * pi / 180.0; }
  [[nodiscard]] double sample(double t) const;
};

[[nodiscard]] SinusoidRecord to_sinusoid(Complex phasor, double omega);

/// Branch current via Ohm's law on the solved voltages. Coupled pairs report
/// one row per side (the current drawn into the coupling at that node).
struct BranchCurrentRow {
  std::string name;
  std::string kind;                // G/L/C/I or KCAP
  std::string node_from, node_to;
  Complex current;                 // rms, measured from -> to (sources: injected)
};

struct BranchCurrentReport {
  std::vector<BranchCurrentRow> rows;
  double max_kcl_residual = 0;     // worst node imbalance, should be ~1e-9*max|I|
};

/// Per-branch currents for the (assembly-ready) netlist the solution came
/// from, plus a KCL residual over every non-ground node.
[[nodiscard]] BranchCurrentReport branch_currents(const Netlist& net,
                                                  const PhasorSolution& solution);

/// Frequency sweep: one row per omega, translated and solved independently.
/// Road drives keep Y and lambda fixed; the speed follows each omega.
struct SweepRow {
  double omega = 0;
  bool singular = false;
  ComplexVector voltages;          // empty when singular
};

struct SweepTable {
  std::vector<std::string> labels;
  std::vector<SweepRow> rows;
};

[[nodiscard]] SweepTable sweep(const SecondOrderModel& model, const ExcitationSpec& drive,
                               const std::vector<double>& omegas);

/// CSV: header `omega_rad_s,node,rms,phase_deg,re,im`, six significant
/// digits, one row per (omega, node); singular rows carry `nan` fields.
void write_sweep_csv(const SweepTable& table, std::ostream& out);

}  // namespace ridealog
