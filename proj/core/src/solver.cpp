#include "ridealog/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "ridealog/errors.hpp"
#include "ridealog/format.hpp"

namespace ridealog {

Complex PhasorSolution::at(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return voltages(static_cast<Eigen::Index>(i));
  throw AssemblyError("no solved node '" + label + "'");
}

PhasorSolution solve(const AdmittanceSystem& sys) {
  const Eigen::Index n = sys.Y.rows();
  PhasorSolution sol;
  sol.omega = sys.omega;
  sol.nodes = sys.nodes;
  sol.labels = sys.labels;
  if (n == 0) return sol;

  const double norm1 = sys.Y.cwiseAbs().colwise().sum().maxCoeff();
  Eigen::PartialPivLU<ComplexMatrix> lu(sys.Y);

  // A vanishing pivot in column i means node i could not be eliminated
  // (a structurally disconnected node shows up here as a zero column).
  const auto pivots = lu.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(pivots(i)) < 1e-13 * norm1) {
      throw SingularSystemError(
          "admittance matrix is numerically singular at node " + sys.labels[i],
          sys.labels[i]);
    }
  }

  sol.voltages = lu.solve(sys.I);
  const double rcond = lu.rcond();
  sol.condition = rcond > 0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();

  const double i_norm = sys.I.size() ? sys.I.cwiseAbs().maxCoeff() : 0.0;
  sol.residual = (sys.Y * sol.voltages - sys.I).cwiseAbs().maxCoeff();
  if (sol.residual > 1e-9 * i_norm) {
    Eigen::Index worst = 0;
    (sys.Y * sol.voltages - sys.I).cwiseAbs().maxCoeff(&worst);
    throw SingularSystemError("solution residual exceeds tolerance near node " +
                                  sys.labels[worst],
                              sys.labels[worst]);
  }
  return sol;
}

double SinusoidRecord::sample(double t) const {
  return std::sqrt(2.0) * rms * std::sin(omega * t + phase_rad());
}

SinusoidRecord to_sinusoid(Complex phasor, double omega) {
  SinusoidRecord rec;
  rec.rms = std::abs(phasor);
  rec.omega = omega;
  if (rec.rms == 0.0) {
    rec.phase_deg = 0.0;
    return rec;
  }
  rec.phase_deg = std::arg(phasor) * 180.0 / pi;  // arg yields (-pi, pi]
  if (rec.phase_deg <= -180.0) rec.phase_deg = 180.0;
  return rec;
}

BranchCurrentReport branch_currents(const Netlist& net, const PhasorSolution& solution) {
  BranchCurrentReport report;
  const auto voltage = [&](int node) -> Complex {
    if (node == ground_node) return Complex{};
    for (std::size_t i = 0; i < solution.nodes.size(); ++i)
      if (solution.nodes[i] == node) return solution.voltages(static_cast<Eigen::Index>(i));
    throw AssemblyError("node " + net.node_labels[node] + " missing from the solution");
  };

  // KCL bookkeeping: currents leaving each node minus injections must cancel.
  std::vector<Complex> imbalance(net.node_labels.size(), Complex{});
  double source_scale = 0;

  for (const Branch& b : net.branches) {
    BranchCurrentRow row;
    row.name = b.name;
    row.kind = std::string(1, branch_kind_letter(b.kind));
    row.node_from = net.node_labels[b.node_from];
    row.node_to = net.node_labels[b.node_to];
    if (b.kind == BranchKind::VoltageSource)
      throw AssemblyError("branch currents need a source-transformed netlist");
    if (b.kind == BranchKind::CurrentSource) {
      row.current = b.phasor;
      imbalance[b.node_to] -= b.phasor;
      imbalance[b.node_from] += b.phasor;
      source_scale = std::max(source_scale, std::abs(b.phasor));
    } else {
      const Complex y = branch_admittance(b, solution.omega);
      row.current = y * (voltage(b.node_from) - voltage(b.node_to));
      imbalance[b.node_from] += row.current;
      imbalance[b.node_to] -= row.current;
    }
    report.rows.push_back(std::move(row));
  }

  const Complex jw = jc * solution.omega;
  for (const CoupledCapacitorPair& pair : net.couplings) {
    const double c_m = pair.dot_aligned ? pair.c_m : -pair.c_m;
    const Complex u_a = voltage(pair.node_a);
    const Complex u_b = voltage(pair.node_b);
    const Complex into_a = jw * (pair.c_a * u_a - c_m * u_b);
    const Complex into_b = jw * (pair.c_b * u_b - c_m * u_a);
    const std::string tag =
        net.node_labels[pair.node_a] + net.node_labels[pair.node_b];
    report.rows.push_back({"CC_" + tag + "@" + net.node_labels[pair.node_a], "KCAP",
                           net.node_labels[pair.node_a], "0", into_a});
    report.rows.push_back({"CC_" + tag + "@" + net.node_labels[pair.node_b], "KCAP",
                           net.node_labels[pair.node_b], "0", into_b});
    imbalance[pair.node_a] += into_a;
    imbalance[pair.node_b] += into_b;
  }

  for (std::size_t node = 1; node < imbalance.size(); ++node)
    report.max_kcl_residual = std::max(report.max_kcl_residual, std::abs(imbalance[node]));
  return report;
}

SweepTable sweep(const SecondOrderModel& model, const ExcitationSpec& drive,
                 const std::vector<double>& omegas) {
  SweepTable table;
  table.labels = model.labels;
  for (const double omega : omegas) {
    if (!(omega > 0)) throw ModelError("sweep frequencies must be > 0");
    SweepRow row;
    row.omega = omega;
    try {
      const ExcitationSpec here = drive.at_omega(omega);
      const Netlist net = apply_norton(translate_force_current(model, here), omega);
      row.voltages = solve(assemble_admittance(net, omega)).voltages;
    } catch (const SingularSystemError&) {
      row.singular = true;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_sweep_csv(const SweepTable& table, std::ostream& out) {
  out << "omega_rad_s,node,rms,phase_deg,re,im\n";
  for (const SweepRow& row : table.rows) {
    if (row.singular) {
      out << format_sig(row.omega) << ",*,nan,nan,nan,nan\n";
      continue;
    }
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
      const Complex u = row.voltages(static_cast<Eigen::Index>(i));
      const SinusoidRecord rec = to_sinusoid(u, row.omega);
      out << format_sig(row.omega) << ',' << table.labels[i] << ','
          << format_sig(rec.rms) << ',' << format_sig(rec.phase_deg) << ','
          << format_sig(u.real()) << ',' << format_sig(u.imag()) << '\n';
    }
  }
}

}  // namespace ridealog
