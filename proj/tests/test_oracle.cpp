#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "ridealog/analogy.hpp"
#include "ridealog/errors.hpp"
#include "ridealog/model.hpp"
#include "ridealog/oracle.hpp"
#include "ridealog/solver.hpp"

#include "support/fixtures.hpp"

using namespace ridealog;

namespace {

PhasorSolution solve_circuit(const SecondOrderModel& model, const ExcitationSpec& drive) {
  const double omega = drive.omega();
  const Netlist net = apply_norton(translate_force_current(model, drive), omega);
  return solve(assemble_admittance(net, omega));
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("frequency response of a decoupled pair is the diagonal of receptances") {
  TwoDofParams p;
  p.m1 = 1;
  p.m2 = 1;
  p.k1 = 1;
  p.k2 = 0;
  p.d1 = 0;
  p.d2 = 0;
  p.f_amplitude = 1;
  const SecondOrderModel model = build_two_dof(p);

  // K - omega^2 M = diag(1 - 4, -4) at omega = 2
  const ComplexMatrix H = frequency_response(model, 2.0);
  CHECK(std::abs(H(0, 0) - Complex{-1.0 / 3.0, 0.0}) <= 1e-15);
  CHECK(std::abs(H(1, 1) - Complex{-0.25, 0.0}) <= 1e-15);
  CHECK(std::abs(H(0, 1)) == 0.0);
  CHECK(std::abs(H(1, 0)) == 0.0);

  CHECK_THROWS_AS(static_cast<void>(frequency_response(model, 0.0)), ModelError);
  CHECK_THROWS_AS(static_cast<void>(frequency_response(model, -3.0)), ModelError);
}

TEST_CASE("an exactly singular dynamic stiffness is refused, by name") {
  TwoDofParams p;
  p.m1 = 1;
  p.m2 = 1;
  p.k1 = 4;   // k1 - omega^2 m1 == 0 exactly at omega = 2
  p.k2 = 0;
  p.d1 = 0;
  p.d2 = 0;
  p.f_amplitude = 1;
  const SecondOrderModel model = build_two_dof(p);

  CHECK_THROWS_WITH_AS(static_cast<void>(frequency_response(model, 2.0)),
                       doctest::Contains("dynamic stiffness is singular"), SingularSystemError);
}

TEST_CASE("road drive produces the frozen force phasors") {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const ComplexVector Q = harmonic_force_phasor(model, drive);

  REQUIRE(Q.size() == 5);
  CHECK(std::abs(Q(0)) == 0.0);
  CHECK(std::abs(Q(1)) == 0.0);
  const std::vector<Complex> frozen = {
      {277.6801836348979, -48083.26112068523},
      {-86909.4502454118, -171181.04323880223},
      {-113067.36159414049, 155151.4545482068},
  };
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    CHECK(std::abs(Q(2 + i) - frozen[static_cast<std::size_t>(i)]) <=
          1e-12 * std::abs(frozen[static_cast<std::size_t>(i)]));
  }
}

TEST_CASE("force drive lands the rms force phasor on the driven coordinate") {
  const SecondOrderModel model = build_two_dof(testing::chain_params());
  const ComplexVector Q = harmonic_force_phasor(model, ExcitationSpec::forced(2.0));
  REQUIRE(Q.size() == 2);
  CHECK(std::abs(Q(0)) == 0.0);
  CHECK(std::abs(Q(1) - Complex{-1.0 / std::sqrt(2.0), 0.0}) <= 1e-16);
}

TEST_CASE("drive/model mismatches are reported") {
  const SecondOrderModel chain = build_two_dof(testing::chain_params());
  const SecondOrderModel truck = build_three_axle(testing::truck_params());
  const ExcitationSpec road = ExcitationSpec::roadway(testing::table_road());

  CHECK_THROWS_WITH_AS(static_cast<void>(harmonic_force_phasor(chain, road)),
                       doctest::Contains("no road-excited coordinates"), ModelError);
  CHECK_THROWS_WITH_AS(static_cast<void>(harmonic_force_phasor(truck, ExcitationSpec::forced(5.0))),
                       doctest::Contains("no applied force"), ModelError);
}

TEST_CASE("closed-form velocity phasors match the frozen three-axle solution") {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const ComplexVector U = closed_form_velocity_phasors(model, drive);

  const std::vector<Complex> frozen = {
      {0.07535568985966293, 0.5292916454742332},
      {-0.09870137829432094, 0.00326117532798931},
      {-0.8114302139760677, -2.1287306809559863},
      {1.7945145585352336, -1.4511029105908824},
      {-2.1784431815249663, -0.9271844017698129},
  };
  REQUIRE(U.size() == 5);
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(U(static_cast<Eigen::Index>(i)) - frozen[i]) <= 1e-11 * std::abs(frozen[i]));
  }
}

TEST_CASE("closed-form phasors match the frozen chain solutions") {
  const SecondOrderModel model = build_two_dof(testing::chain_params());
  const ComplexVector U = closed_form_velocity_phasors(model, ExcitationSpec::forced(2.0));
  const Complex u1{-0.02817381005385867, 0.03742028075435414};
  const Complex u2{-0.06156039553618459, 0.05684407491042851};
  REQUIRE(U.size() == 2);
  CHECK(std::abs(U(0) - u1) <= 1e-13 * std::abs(u1));
  CHECK(std::abs(U(1) - u2) <= 1e-13 * std::abs(u2));

  // without damping the response is in quadrature with the drive
  TwoDofParams undamped = testing::chain_params();
  undamped.k1 = 50;
  undamped.k2 = 70;
  undamped.d1 = 0;
  undamped.d2 = 0;
  const ComplexVector V =
      closed_form_velocity_phasors(build_two_dof(undamped), ExcitationSpec::forced(10.0));
  CHECK(std::abs(V(0).real()) <= 1e-16);
  CHECK(std::abs(V(1).real()) <= 1e-16);
  CHECK(V(0).imag() == doctest::Approx(-0.03666479606152468).epsilon(1e-13));
  CHECK(V(1).imag() == doctest::Approx(0.04190262407031392).epsilon(1e-13));
}

TEST_CASE("closed-form phasors match the frozen half-car solution") {
  const SecondOrderModel model = build_half_car(testing::coach_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const ComplexVector U = closed_form_velocity_phasors(model, drive);
  const std::vector<Complex> frozen = {
      {0.10815570317981564, 0.5981924722690715},
      {-0.22300894524904633, -0.1281607580681299},
      {-0.730759334576792, -2.1343511376954245},
      {1.7248434394101733, -1.542997470251824},
  };
  REQUIRE(U.size() == 4);
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(U(static_cast<Eigen::Index>(i)) - frozen[i]) <= 1e-11 * std::abs(frozen[i]));
  }
}

TEST_CASE("spectral oracle reproduces the frozen rms values on the default grid") {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const TimeSeries series = spectral_velocities(model, drive);

  // 10 periods of the drive over 1024 samples
  CHECK(series.dt == doctest::Approx(0.001171875).epsilon(1e-15));
  CHECK(series.n_samples() == 1024);
  CHECK(series.labels == std::vector<std::string>{"a", "b", "d", "t", "m", "c"});

  const std::vector<double> frozen = {0.5346289610216112, 0.09875523956590121,
                                      2.2781381222824453, 2.3078089517809395,
                                      2.3675484387901897, 0.13325392216575177};
  const std::vector<double> rms = series.rms();
  REQUIRE(rms.size() == frozen.size());
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    CAPTURE(i);
    CHECK(rms[i] == doctest::Approx(frozen[i]).epsilon(1e-12));
  }
}

TEST_CASE("spectral rms agrees with the closed form to spectral accuracy") {
  const SecondOrderModel model = build_two_dof(testing::chain_params());
  const ExcitationSpec drive = ExcitationSpec::forced(2.0);

  SpectralGrid grid;
  grid.periods = 7;
  grid.samples = 512;
  const TimeSeries series = spectral_velocities(model, drive, grid);
  const ComplexVector closed = closed_form_velocity_phasors(model, drive);

  const std::vector<double> rms = series.rms();
  REQUIRE(rms.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CAPTURE(i);
    CHECK(std::abs(rms[static_cast<std::size_t>(i)] - std::abs(closed(i))) <=
          1e-9 * std::abs(closed(i)));
  }
}

TEST_CASE("spectral grid limits are enforced") {
  const SecondOrderModel model = build_two_dof(testing::chain_params());
  const ExcitationSpec drive = ExcitationSpec::forced(2.0);

  SpectralGrid bad;
  bad.samples = 2;
  CHECK_THROWS_WITH_AS(static_cast<void>(spectral_velocities(model, drive, bad)),
                       doctest::Contains("even sample count"), ModelError);
  bad.samples = 511;
  CHECK_THROWS_WITH_AS(static_cast<void>(spectral_velocities(model, drive, bad)),
                       doctest::Contains("even sample count"), ModelError);
  bad.samples = 512;
  bad.periods = 0;
  CHECK_THROWS_WITH_AS(static_cast<void>(spectral_velocities(model, drive, bad)),
                       doctest::Contains("Nyquist"), ModelError);
  bad.periods = 256;
  CHECK_THROWS_WITH_AS(static_cast<void>(spectral_velocities(model, drive, bad)),
                       doctest::Contains("Nyquist"), ModelError);
}

TEST_CASE("time-series CSV format") {
  TimeSeries series;
  series.dt = 0.5;
  series.labels = {"x"};
  series.samples.resize(4, 1);
  series.samples << 1.0, 0.0, -1.0, 0.0;

  std::ostringstream out;
  write_timeseries_csv(series, out);
  CHECK(out.str() ==
        "t_s,x\n"
        "0,1.00000\n"
        "0.500000,0\n"
        "1.00000,-1.00000\n"
        "1.50000,0\n"
        "rms,0.707107\n");
}

TEST_CASE("validation passes the circuit solution of the three-axle model") {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const PhasorSolution sol = solve_circuit(model, drive);

  const ValidationReport report = validate(model, drive, sol);
  CHECK(report.passed);
  CHECK(report.tolerance == 1e-3);
  CHECK(report.max_relative_error <= 1e-9);
  CHECK(report.max_phase_delta_deg <= 1e-6);
  CHECK(report.spectral_vs_closed_form <= 1e-9);

  REQUIRE(report.coordinates.size() == 6);
  CHECK(report.coordinates.back().label == "c");
  CHECK(report.coordinates.back().rms_electrical ==
        doctest::Approx(0.13325392216575188).epsilon(1e-11));
  CHECK(report.coordinates.front().label == "a");
  CHECK(report.coordinates.front().rms_mechanical ==
        doctest::Approx(0.5346289610216112).epsilon(1e-12));
}

TEST_CASE("validation fails against a detuned oracle") {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const PhasorSolution sol = solve_circuit(model, drive);

  ThreeAxleParams detuned = testing::truck_params();
  detuned.k_sd *= 1.05;
  const ValidationReport report = validate(build_three_axle(detuned), drive, sol);
  CHECK(!report.passed);
  CHECK(report.max_relative_error > 1e-3);
}

TEST_CASE("validation refuses a solution at the wrong frequency") {
  const SecondOrderModel model = build_three_axle(testing::truck_params());
  const ExcitationSpec drive = ExcitationSpec::roadway(testing::table_road());
  const PhasorSolution sol = solve_circuit(model, drive);

  const ExcitationSpec shifted = drive.at_omega(drive.omega() * 1.01);
  CHECK_THROWS_WITH_AS(static_cast<void>(validate(model, shifted, sol)),
                       doctest::Contains("does not match the excitation frequency"), ModelError);
}

TEST_SUITE_END();
