#include "ridealog/analogy.hpp"

#include <cmath>
#include <string>

#include "ridealog/errors.hpp"

namespace ridealog {

namespace {

bool is_axle(const SecondOrderModel& model, int coordinate, AxleInput* out) {
  for (const AxleInput& axle : model.axles) {
    if (axle.coordinate == coordinate) {
      if (out) *out = axle;
      return true;
    }
  }
  return false;
}

/// Emits the branches of one symmetric coefficient matrix (D or K): each
/// off-diagonal entry becomes an explicit coupling branch, each nonzero row
/// sum a grounded branch, and the row sums of road-excited coordinates become
/// the tyre branches toward that axle's source node.
void emit_matrix_branches(Netlist& net, const SecondOrderModel& model, const Matrix& A,
                          BranchKind kind, const std::vector<int>& source_nodes,
                          const char* element, const char* tyre_element) {
  const int n = model.dof();
  const auto value_of = [kind](double coefficient) {
    // Springs map through their reciprocal (L = 1/k); dampers map directly.
    return kind == BranchKind::Inductor ? 1.0 / coefficient : coefficient;
  };
  const char letter = branch_kind_letter(kind);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double coefficient = -A(i, j);
      if (coefficient == 0.0) continue;
      Branch b;
      b.kind = kind;
      b.name = std::string(1, letter) + "_" + model.labels[i] + model.labels[j];
      b.node_from = net.coordinate_nodes[i];
      b.node_to = net.coordinate_nodes[j];
      b.value = value_of(coefficient);
      b.provenance = std::string(element) + " " + model.labels[i] + "-" + model.labels[j];
      net.branches.push_back(std::move(b));
    }
  }

  for (int i = 0; i < n; ++i) {
    const double row_sum = A.row(i).sum();
    const double scale = A.row(i).cwiseAbs().maxCoeff();
    AxleInput axle;
    if (is_axle(model, i, &axle)) {
      // The row sum of an excited coordinate is exactly its tyre constant;
      // anything else means the matrix disagrees with the excitation map.
      const double tyre = kind == BranchKind::Inductor ? axle.k_r : axle.d_r;
      if (std::abs(row_sum - tyre) > 1e-9 * std::max(scale, std::abs(tyre)))
        throw TopologyError("row sum of coordinate " + model.labels[i] +
                            " does not match its tyre constant");
      if (tyre == 0.0) continue;
      Branch b;
      b.kind = kind;
      b.name = std::string(1, letter) + "_r" + model.labels[i];
      b.node_from = net.coordinate_nodes[i];
      b.node_to = source_nodes[i];
      b.value = value_of(tyre);
      b.provenance = std::string(tyre_element) + " " + model.labels[i];
      net.branches.push_back(std::move(b));
      continue;
    }
    if (std::abs(row_sum) <= 1e-12 * scale) continue;
    Branch b;
    b.kind = kind;
    b.name = std::string(1, letter) + "_" + model.labels[i] + "0";
    b.node_from = net.coordinate_nodes[i];
    b.node_to = ground_node;
    b.value = value_of(row_sum);
    b.provenance = std::string(element) + " " + model.labels[i] + "-ground";
    net.branches.push_back(std::move(b));
  }
}

}  // namespace

Netlist translate_force_current(const SecondOrderModel& model,
                                const ExcitationSpec& excitation) {
  check_model(model);
  const int n = model.dof();

  Netlist net;
  for (int i = 0; i < n; ++i)
    net.coordinate_nodes.push_back(net.add_node(model.labels[i]));

  // Inertia: grounded capacitors, with the sprung 2x2 block (when coupled)
  // as one electrostatic capacitor pair. Coupling anywhere else has no
  // translation.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (model.M(i, j) != 0.0 && !(i == 0 && j == 1))
        throw TopologyError("inertial coupling outside the sprung block at (" +
                            model.labels[i] + "," + model.labels[j] + ")");
  int first_uncoupled = 0;
  if (n >= 2 && model.M(0, 1) != 0.0) {
    CoupledCapacitorPair pair;
    pair.node_a = net.coordinate_nodes[0];
    pair.node_b = net.coordinate_nodes[1];
    pair.c_a = model.M(0, 0);
    pair.c_b = model.M(1, 1);
    pair.c_m = -model.M(0, 1);
    pair.provenance = "coupled sprung inertia " + model.labels[0] + "-" + model.labels[1];
    net.couplings.push_back(pair);
    first_uncoupled = 2;
  }
  for (int i = first_uncoupled; i < n; ++i) {
    if (model.M(i, i) == 0.0) continue;
    Branch b;
    b.kind = BranchKind::Capacitor;
    b.name = "C_" + model.labels[i];
    b.node_from = net.coordinate_nodes[i];
    b.node_to = ground_node;
    b.value = model.M(i, i);
    b.provenance = "inertia " + model.labels[i];
    net.branches.push_back(std::move(b));
  }

  // Per-axle source nodes, created before the tyre branches reference them.
  std::vector<int> source_nodes(n, -1);
  if (!model.axles.empty()) {
    if (!excitation.road)
      throw ModelError("road excitation required: the model has road-excited axles");
    const AxlePhasors phasors = excitation_phasors(*excitation.road, model);
    for (std::size_t a = 0; a < model.axles.size(); ++a) {
      const AxleInput& axle = model.axles[a];
      const int src = net.add_node("src_" + axle.label);
      source_nodes[axle.coordinate] = src;
      Branch b;
      b.kind = BranchKind::VoltageSource;
      b.name = "V_" + axle.label;
      b.node_from = src;
      b.node_to = ground_node;
      b.phasor = phasors.velocity(static_cast<Eigen::Index>(a));
      b.provenance = "road velocity source " + axle.label;
      net.branches.push_back(std::move(b));
    }
  }

  emit_matrix_branches(net, model, model.D, BranchKind::Conductance, source_nodes,
                       "damping", "tyre damping");
  emit_matrix_branches(net, model, model.K, BranchKind::Inductor, source_nodes,
                       "spring", "tyre spring");

  if (model.force) {
    Branch b;
    b.kind = BranchKind::CurrentSource;
    b.name = "I_" + model.labels[model.force->coordinate];
    b.node_from = ground_node;
    b.node_to = net.coordinate_nodes[model.force->coordinate];
    b.phasor = applied_force_phasor(*model.force);
    b.provenance = "applied force at " + model.labels[model.force->coordinate];
    net.branches.push_back(std::move(b));
  }
  return net;
}

Netlist translate_force_current(const SecondOrderModel& model,
                                const HarmonicRoadExcitation& excitation) {
  return translate_force_current(model, ExcitationSpec::roadway(excitation));
}

Netlist translate_force_current(const SecondOrderModel& model) {
  return translate_force_current(model, ExcitationSpec{});
}

std::array<Branch, 3> pi_equivalent(const CoupledCapacitorPair& pair) {
  const double c_m = pair.dot_aligned ? pair.c_m : -pair.c_m;
  std::array<Branch, 3> out;
  out[0] = Branch{BranchKind::Capacitor, "C_pi_a", pair.node_a, ground_node,
                  pair.c_a - c_m, Complex{}, pair.provenance + " (pi shunt a)"};
  out[1] = Branch{BranchKind::Capacitor, "C_pi_b", pair.node_b, ground_node,
                  pair.c_b - c_m, Complex{}, pair.provenance + " (pi shunt b)"};
  out[2] = Branch{BranchKind::Capacitor, "C_pi_ab", pair.node_a, pair.node_b,
                  c_m, Complex{}, pair.provenance + " (pi series)"};
  return out;
}

Netlist expand_pi(const Netlist& net) {
  Netlist out = net;
  out.couplings.clear();
  for (const CoupledCapacitorPair& pair : net.couplings) {
    for (Branch b : pi_equivalent(pair)) {
      if (b.value == 0.0) continue;  // degenerate coupling: series branch vanishes
      const std::string suffix =
          "_" + out.node_labels[pair.node_a] + out.node_labels[pair.node_b];
      b.name += suffix;
      out.branches.push_back(std::move(b));
    }
  }
  return out;
}

NortonEquivalent norton_transform(Complex v_src, Complex series_admittance) {
  if (series_admittance == Complex{})
    throw DegenerateSourceError("source transformation needs a nonzero series admittance");
  return NortonEquivalent{series_admittance * v_src, series_admittance};
}

Netlist apply_norton(const Netlist& net, double omega) {
  if (!(omega > 0)) throw AssemblyError("omega must be > 0");

  // Collect the internal node of every voltage source. Only ground-referenced
  // sources are produced by the translator; anything else is unsupported.
  std::vector<int> source_of_node(net.node_count(), -1);
  for (std::size_t i = 0; i < net.branches.size(); ++i) {
    const Branch& b = net.branches[i];
    if (b.kind != BranchKind::VoltageSource) continue;
    if (b.node_to != ground_node)
      throw AssemblyError("voltage source " + b.name + " is not ground referenced");
    if (source_of_node[b.node_from] >= 0)
      throw AssemblyError("two voltage sources share node " + net.node_labels[b.node_from]);
    source_of_node[b.node_from] = static_cast<int>(i);
  }

  // Every branch incident to a source node must lead to one common load node.
  std::vector<int> load_of_node(net.node_count(), -1);
  std::vector<Complex> series_admittance(net.node_count(), Complex{});
  for (const Branch& b : net.branches) {
    if (b.kind == BranchKind::VoltageSource) continue;
    for (const bool from_side : {true, false}) {
      const int here = from_side ? b.node_from : b.node_to;
      const int there = from_side ? b.node_to : b.node_from;
      if (here < 0 || here >= net.node_count() || source_of_node[here] < 0) continue;
      if (b.kind == BranchKind::CurrentSource)
        throw AssemblyError("current source attached to source node " + net.node_labels[here]);
      if (load_of_node[here] >= 0 && load_of_node[here] != there)
        throw AssemblyError("voltage source node " + net.node_labels[here] +
                            " feeds more than one node");
      load_of_node[here] = there;
      series_admittance[here] += branch_admittance(b, omega);
    }
  }

  // Rebuild without the source-internal nodes.
  Netlist out;
  std::vector<int> remap(net.node_count(), -1);
  remap[ground_node] = ground_node;
  for (int node = 1; node < net.node_count(); ++node)
    if (source_of_node[node] < 0) remap[node] = out.add_node(net.node_labels[node]);
  for (int node : net.coordinate_nodes) {
    if (remap[node] < 0)
      throw AssemblyError("coordinate node " + net.node_labels[node] +
                          " is a voltage source terminal");
    out.coordinate_nodes.push_back(remap[node]);
  }

  for (const Branch& b : net.branches) {
    if (b.kind == BranchKind::VoltageSource) {
      const int src_node = b.node_from;
      if (load_of_node[src_node] < 0)
        throw DegenerateSourceError("voltage source " + b.name + " has no series branch");
      const NortonEquivalent norton =
          norton_transform(b.phasor, series_admittance[src_node]);
      Branch inj;
      inj.kind = BranchKind::CurrentSource;
      const auto underscore = b.name.find('_');
      inj.name = "I_" + (underscore == std::string::npos ? b.name : b.name.substr(underscore + 1));
      inj.node_from = ground_node;
      inj.node_to = remap[load_of_node[src_node]];
      inj.phasor = norton.current;
      inj.provenance = b.provenance + " (source transformed)";
      out.branches.push_back(std::move(inj));
      continue;
    }
    Branch moved = b;
    // Series branches of a transformed source become shunts at the load node.
    if (source_of_node[moved.node_from] >= 0) moved.node_from = ground_node;
    else moved.node_from = remap[moved.node_from];
    if (source_of_node[moved.node_to] >= 0) moved.node_to = ground_node;
    else moved.node_to = remap[moved.node_to];
    out.branches.push_back(std::move(moved));
  }
  for (CoupledCapacitorPair pair : net.couplings) {
    if (source_of_node[pair.node_a] >= 0 || source_of_node[pair.node_b] >= 0)
      throw AssemblyError("coupled capacitor attached to a voltage source node");
    pair.node_a = remap[pair.node_a];
    pair.node_b = remap[pair.node_b];
    out.couplings.push_back(pair);
  }
  return out;
}

Complex branch_admittance(const Branch& branch, double omega) {
  const Complex jw = jc * omega;
  switch (branch.kind) {
    case BranchKind::Conductance:
      return Complex(branch.value, 0.0);
    case BranchKind::Inductor:
      if (branch.value == 0.0) throw AssemblyError("inductor " + branch.name + " has zero value");
      return 1.0 / (jw * branch.value);
    case BranchKind::Capacitor:
      return jw * branch.value;
    case BranchKind::CurrentSource:
    case BranchKind::VoltageSource:
      throw AssemblyError("sources have no branch admittance");
  }
  throw AssemblyError("unknown branch kind");
}

AdmittanceSystem assemble_admittance(const Netlist& net, double omega) {
  if (!(omega > 0)) throw AssemblyError("omega must be > 0");
  AdmittanceSystem sys;
  sys.omega = omega;
  const int n = net.node_count() - 1;  // ground eliminated
  sys.Y = ComplexMatrix::Zero(n, n);
  sys.I = ComplexVector::Zero(n);
  for (int node = 1; node <= n; ++node) {
    sys.nodes.push_back(node);
    sys.labels.push_back(net.node_labels[node]);
  }
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  const auto row = [](int node) { return node - 1; };

  for (const Branch& b : net.branches) {
    if (b.kind == BranchKind::VoltageSource)
      throw AssemblyError("raw voltage source " + b.name +
                          ": apply the source transformation before assembly");
    if (b.node_from == b.node_to)
      throw AssemblyError("branch " + b.name + " endpoints coincide");
    if (b.kind == BranchKind::CurrentSource) {
      if (b.node_to != ground_node) sys.I(row(b.node_to)) += b.phasor;
      if (b.node_from != ground_node) sys.I(row(b.node_from)) -= b.phasor;
      continue;
    }
    const Complex y = branch_admittance(b, omega);
    if (b.node_from != ground_node) {
      sys.Y(row(b.node_from), row(b.node_from)) += y;
      touched[row(b.node_from)] = true;
    }
    if (b.node_to != ground_node) {
      sys.Y(row(b.node_to), row(b.node_to)) += y;
      touched[row(b.node_to)] = true;
    }
    if (b.node_from != ground_node && b.node_to != ground_node) {
      sys.Y(row(b.node_from), row(b.node_to)) -= y;
      sys.Y(row(b.node_to), row(b.node_from)) -= y;
    }
  }

  const Complex jw = jc * omega;
  for (const CoupledCapacitorPair& pair : net.couplings) {
    if (pair.node_a == ground_node || pair.node_b == ground_node)
      throw AssemblyError("coupled capacitor pair touches ground");
    if (!(pair.c_a > 0) || !(pair.c_b > 0) || pair.c_a * pair.c_b <= pair.c_m * pair.c_m)
      throw AssemblyError("coupled capacitor pair is not positive definite");
    const double c_m = pair.dot_aligned ? pair.c_m : -pair.c_m;
    sys.Y(row(pair.node_a), row(pair.node_a)) += jw * pair.c_a;
    sys.Y(row(pair.node_b), row(pair.node_b)) += jw * pair.c_b;
    sys.Y(row(pair.node_a), row(pair.node_b)) -= jw * c_m;
    sys.Y(row(pair.node_b), row(pair.node_a)) -= jw * c_m;
    touched[row(pair.node_a)] = true;
    touched[row(pair.node_b)] = true;
  }

  for (int i = 0; i < n; ++i)
    if (!touched[static_cast<std::size_t>(i)]) sys.disconnected.push_back(i + 1);
  return sys;
}

}  // namespace ridealog
