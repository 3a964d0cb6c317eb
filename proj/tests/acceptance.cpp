// Acceptance gate: seven go/no-go checks of the conversion + solve pipeline,
// one PASS/FAIL line each, nonzero exit when any check fails. Tolerances are
// pinned here on purpose; loosening them is not a fix.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ridealog/analogy.hpp"
#include "ridealog/model.hpp"
#include "ridealog/netlist.hpp"
#include "ridealog/oracle.hpp"
#include "ridealog/solver.hpp"
#include "ridealog/types.hpp"

#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace ridealog;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion-%d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) {
    ++failures;
  }
}

std::string err(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", value);
  return buf;
}

PhasorSolution solve_circuit(const SecondOrderModel& model, const ExcitationSpec& drive,
                             double omega, Netlist* net_out = nullptr) {
  Netlist net = apply_norton(translate_force_current(model, drive), omega);
  const PhasorSolution sol = solve(assemble_admittance(net, omega));
  if (net_out != nullptr) {
    *net_out = net;
  }
  return sol;
}

ComplexMatrix mechanical_admittance(const SecondOrderModel& model, double omega) {
  return (jc * omega) * model.M.cast<Complex>() + model.D.cast<Complex>() +
         model.K.cast<Complex>() / (jc * omega);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      best = std::max(best, std::abs(m(r, c)));
    }
  }
  return best;
}

// --- criterion 1: truck admittance entries against the reference table ------
// (x1e5 scale, 4 decimals; tolerance 1e-3 relative + 5e-5 absolute for the
// table rounding)
void criterion_1() {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const HarmonicRoadExcitation road = testing::table_road();
  const double omega = road.omega();
  const Netlist net = apply_norton(translate_force_current(model, road), omega);
  const ComplexMatrix Y = assemble_admittance(net, omega).Y / 1e5;

  struct Entry {
    int r, c;
    Complex value;
  };
  const std::vector<Entry> table = {
      {0, 0, {0.1614, 1.0408}},  {0, 1, {0.0264, 1.9365}},  {0, 2, {-0.1540, 0.1165}},
      {0, 4, {-0.0338, 0.1090}}, {1, 1, {0.2478, 5.4956}},  {1, 3, {-0.1540, 0.4966}},
      {1, 4, {-0.1202, 0.3876}}, {2, 2, {0.1555, 0.0950}},  {3, 3, {0.1555, -0.8006}},
      {4, 4, {0.1555, -0.8006}},
  };

  double worst = 0;
  bool ok = true;
  for (const Entry& e : table) {
    const double gap = std::abs(Y(e.r, e.c) - e.value);
    const double allowed = 1e-3 * std::abs(e.value) + 5e-5;
    worst = std::max(worst, gap);
    ok = ok && gap <= allowed;
    // the matrix is symmetric; the mirrored entry must agree identically
    ok = ok && std::abs(Y(e.c, e.r) - Y(e.r, e.c)) <= 1e-12 * std::abs(Y(e.r, e.c));
  }
  ok = ok && Y(0, 3) == Complex{0.0, 0.0} && Y(2, 3) == Complex{0.0, 0.0};

  report(1, "assembled truck admittance matches the reference entries (x1e-5, tol 1e-3)", ok,
         "worst gap " + err(worst));
}

// --- criterion 2: truck node phasors against the reference solution ---------
// (components 1e-3 absolute; rms 1e-3 absolute; phases 0.05 degrees)
void criterion_2() {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const double omega = drive.omega();
  const PhasorSolution sol = solve_circuit(model, drive, omega);

  const std::vector<Complex> components = {
      {0.0754, 0.5293}, {-0.0987, 0.0033}, {-0.8114, -2.1287},
      {1.7945, -1.4511}, {-2.1784, -0.9272},
  };
  const std::vector<double> rms = {0.5346, 0.0988, 2.2781, 2.3078, 2.3675};
  const std::vector<double> phase_deg = {81.90, 178.11, -110.87, -38.96, -156.94};

  bool ok = sol.voltages.size() == 5;
  double worst = 0;
  for (std::size_t i = 0; ok && i < components.size(); ++i) {
    const Complex u = sol.voltages(static_cast<Eigen::Index>(i));
    const SinusoidRecord rec = to_sinusoid(u, omega);
    const double comp_gap = std::max(std::abs(u.real() - components[i].real()),
                                     std::abs(u.imag() - components[i].imag()));
    const double rms_gap = std::abs(rec.rms - rms[i]);
    const double phase_gap = std::abs(rec.phase_deg - phase_deg[i]);
    worst = std::max({worst, comp_gap, rms_gap});
    ok = comp_gap <= 1e-3 && rms_gap <= 1e-3 && phase_gap <= 0.05;
  }
  report(2, "truck node phasors, rms and phases match the reference solution", ok,
         "worst numeric gap " + err(worst));
}

// --- criterion 3: spectral oracle vs circuit rms ----------------------------
// (rms 1e-3 relative on a, b, d, t, m, c; the two mechanical routes agree
// to 1e-6 relative)
void criterion_3() {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const PhasorSolution sol = solve_circuit(model, drive, drive.omega());

  const ValidationReport rep = validate(model, drive, sol, 1e-3);
  const bool ok = rep.passed && rep.coordinates.size() == 6 &&
                  rep.coordinates.back().label == "c" && rep.max_relative_error <= 1e-3 &&
                  rep.spectral_vs_closed_form <= 1e-6;
  report(3, "time-domain oracle rms matches the circuit on all six points (tol 1e-3)", ok,
         "max rel error " + err(rep.max_relative_error) + ", oracle cross-check " +
             err(rep.spectral_vs_closed_form));
}

// --- criteria 4 and 5: randomized invariants ---------------------------------
// 4: admittance identity and voltage identity at 1e-10 relative over >= 200
//    random models, omega in [1, 500] rad/s
// 5: pi + source transformation leaves node voltages in place at 1e-10
// Returns the wall-clock seconds the randomized suite took (criterion 7).
double criteria_4_5() {
  constexpr int cases = 240;
  static_assert(cases >= 200, "the randomized gate needs at least 200 models");

  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(97);
  double worst_identity = 0;
  double worst_voltage = 0;
  double worst_rewrite = 0;

  for (int i = 0; i < cases; ++i) {
    const testing::RandomCase c = testing::random_case(rng, i);

    const Netlist raw = translate_force_current(c.model, c.drive);
    const AdmittanceSystem sys = assemble_admittance(apply_norton(raw, c.omega), c.omega);

    const ComplexMatrix mech = mechanical_admittance(c.model, c.omega);
    worst_identity = std::max(worst_identity, max_abs(sys.Y - mech) / max_abs(mech));

    const PhasorSolution sol = solve(sys);
    const ComplexVector closed = closed_form_velocity_phasors(c.model, c.drive);
    double scale = 0;
    for (Eigen::Index k = 0; k < closed.size(); ++k) {
      scale = std::max(scale, std::abs(closed(k)));
    }
    for (Eigen::Index k = 0; k < closed.size(); ++k) {
      worst_voltage = std::max(worst_voltage, std::abs(sol.voltages(k) - closed(k)) / scale);
    }

    const PhasorSolution rewritten =
        solve(assemble_admittance(apply_norton(expand_pi(raw), c.omega), c.omega));
    for (Eigen::Index k = 0; k < sol.voltages.size(); ++k) {
      worst_rewrite =
          std::max(worst_rewrite, std::abs(sol.voltages(k) - rewritten.voltages(k)) / scale);
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  report(4,
         "admittance and voltage identities hold at 1e-10 over " + std::to_string(cases) +
             " random models",
         worst_identity <= 1e-10 && worst_voltage <= 1e-10,
         "worst identity " + err(worst_identity) + ", worst voltage " + err(worst_voltage));
  report(5, "pi + source transformation keeps node voltages within 1e-10",
         worst_rewrite <= 1e-10, "worst gap " + err(worst_rewrite));
  return seconds;
}

// --- criterion 6: chain netlist structure ------------------------------------
// (element values map one-to-one onto the mechanical parameters at 1e-12)
void criterion_6() {
  const TwoDofParams p = testing::chain_params();
  const SecondOrderModel model = build_two_dof(p);
  const Netlist net = translate_force_current(model, ExcitationSpec::forced(2.0));

  const auto branch = [&net](const std::string& name) -> const Branch* {
    for (const Branch& b : net.branches) {
      if (b.name == name) {
        return &b;
      }
    }
    return nullptr;
  };
  const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };

  bool ok = net.couplings.empty() && net.branches.size() == 7 && net.node_count() == 3;

  const int n1 = ok ? net.node_of("1") : -1;
  const int n2 = ok ? net.node_of("2") : -1;
  const struct {
    const char* name;
    double value;
    int from, to;
  } passives[] = {
      {"C_1", p.m1, 0, 0},       // grounded mass capacitors (from = own node)
      {"C_2", p.m2, 0, 0},
      {"G_10", p.d1, 0, 0},
      {"L_10", 1.0 / p.k1, 0, 0},
      {"G_12", p.d2, 0, 0},
      {"L_12", 1.0 / p.k2, 0, 0},
  };
  for (const auto& expected : passives) {
    const Branch* b = ok ? branch(expected.name) : nullptr;
    ok = ok && b != nullptr && close(b->value, expected.value);
    if (ok) {
      const std::string name = expected.name;
      const bool coupling_branch = name.size() == 4 && name.back() == '2';
      if (coupling_branch) {   // G_12 / L_12 sit between the two mass nodes
        ok = (b->node_from == n1 && b->node_to == n2) ||
             (b->node_from == n2 && b->node_to == n1);
      } else if (name == "C_2") {
        ok = b->node_from == n2 && b->node_to == ground_node;
      } else {                 // C_1, G_10, L_10 anchor the first mass to ground
        ok = b->node_from == n1 && b->node_to == ground_node;
      }
    }
  }

  const Branch* source = branch("I_2");
  ok = ok && source != nullptr && source->kind == BranchKind::CurrentSource &&
       source->node_to == n2;
  if (ok) {
    const Complex expected = -p.f_amplitude / std::sqrt(2.0) *
                             std::exp(Complex{0.0, 1.0} * p.f_phase);
    ok = std::abs(source->phasor - expected) <= 1e-12 * std::abs(expected);
  }

  report(6, "chain netlist is structurally exact (values within 1e-12, topology one-to-one)", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  const double invariant_seconds = criteria_4_5();
  criterion_6();
  report(7, "randomized invariant suite finishes in under 60 s", invariant_seconds < 60.0,
         err(invariant_seconds) + " s");

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criterion(s) failed\n", failures);
  return 1;
}
