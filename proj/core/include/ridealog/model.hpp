#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ridealog/types.hpp"

namespace ridealog {

// ============================================================================
// Parameter sets
// ============================================================================

/// Two-mass chain: base-anchored spring/damper (k1, d1) under m1, coupling
/// spring/damper (k2, d2) between m1 and m2, harmonic force applied to m2.
struct TwoDofParams {
  double m1 = 0, m2 = 0;        // masses [kg]
  double k1 = 0, k2 = 0;        // stiffnesses [N/m]
  double d1 = 0, d2 = 0;        // dampings [N s/m]
  double f_amplitude = 0;       // applied-force amplitude [N]
  double f_phase = 0;           // applied-force phase [rad]
};

/// Half-car: sprung mass on two axles, described by the attachment-point
/// displacements over the front and rear axles (inertially coupled).
struct HalfCarParams {
  double m = 0;                 // sprung mass [kg]
  double I_G = 0;               // pitch inertia about the centre of gravity [kg m^2]
  double m_ssd = 0, m_sst = 0;  // unsprung masses, front / rear [kg]
  double k_sd = 0, k_st = 0;    // suspension stiffness [N/m]
  double d_sd = 0, d_st = 0;    // suspension damping [N s/m]
  double k_rd = 0, k_rt = 0;    // tyre stiffness [N/m]
  double d_rd = 0, d_rt = 0;    // tyre damping [N s/m]
  double l_d = 0;               // front attachment to centre of gravity [m]
  double l_t = 0;               // centre of gravity to rear attachment [m]
  double g = 9.81;              // gravity [m/s^2]; only enters the stored static weight vector
};

/// Three-axle vehicle: half-car plus a middle axle whose suspension attaches
/// to the frame at the dependent point c between the two described points.
struct ThreeAxleParams {
  double m = 0;
  double I_G = 0;
  double m_ssd = 0, m_sst = 0, m_ssm = 0;
  double k_sd = 0, k_st = 0, k_sm = 0;
  double d_sd = 0, d_st = 0, d_sm = 0;
  double k_rd = 0, k_rt = 0, k_rm = 0;
  double d_rd = 0, d_rt = 0, d_rm = 0;
  double l_d = 0, l_t = 0;
  double l_a = 0;               // front attachment to middle axle [m]
  double l_b = 0;               // middle axle to rear attachment [m]
  double g = 9.81;

  [[nodiscard]] double l() const { return l_d + l_t; }
};

// ============================================================================
// Assembled second-order model
// ============================================================================

/// Road-excited coordinate: tyre constants plus longitudinal position of the
/// axle measured from the front axle along the travel direction.
struct AxleInput {
  int coordinate = -1;
  std::string label;
  double offset = 0;            // [m] from the front axle
  double k_r = 0;               // tyre stiffness [N/m]
  double d_r = 0;               // tyre damping [N s/m]
};

/// Harmonic force applied directly to one coordinate (two-mass chain drive).
/// The model equations carry it with the stored sign.
struct AppliedForce {
  int coordinate = -1;
  double amplitude = 0;         // [N]
  double phase = 0;             // [rad]
  double sign = -1;             // right-hand-side sign of the force term
};

/// Observation point expressed linearly in two coordinates through the
/// rigid-frame constraint (middle-axle attachment point c).
struct DependentPoint {
  std::string label;
  int coord_a = 0, coord_b = 1;
  double weight_a = 0, weight_b = 0;   // weights sum to 1
};

/// n-dof linear mechanical model M x'' + D x' + K x = Q.
struct SecondOrderModel {
  Matrix M, D, K;
  Vector gravity;                       // static weight vector [N]; excluded from the harmonic solve
  std::vector<std::string> labels;      // coordinate names, fixed order
  std::vector<AxleInput> axles;         // road-excited coordinates
  std::optional<AppliedForce> force;    // direct harmonic drive
  std::optional<DependentPoint> dependent;

  [[nodiscard]] int dof() const { return static_cast<int>(M.rows()); }
};

/// Checks symmetry of M/D/K and positive definiteness of M; throws ModelError.
void check_model(const SecondOrderModel& model);

[[nodiscard]] SecondOrderModel build_two_dof(const TwoDofParams& p);
[[nodiscard]] SecondOrderModel build_half_car(const HalfCarParams& p);
[[nodiscard]] SecondOrderModel build_three_axle(const ThreeAxleParams& p);

// ============================================================================
// Harmonic road excitation
// ============================================================================

/// Sinusoidal road profile of amplitude Y and wavelength lambda traversed at
/// constant speed v. Per-axle phase lags follow from the axle offsets stored
/// on the model.
struct HarmonicRoadExcitation {
  double Y = 0;                 // unevenness amplitude [m]
  double lambda = 0;            // wavelength [m]
  double v = 0;                 // forward speed [m/s]

  [[nodiscard]] double omega() const { return 2.0 * pi * v / lambda; }
};

/// Drive specification: either a road profile (road-excited models, omega
/// derived from speed and wavelength) or a bare frequency for the
/// force-driven chain.
struct ExcitationSpec {
  std::optional<HarmonicRoadExcitation> road;
  std::optional<double> drive_omega;    // [rad/s]

  [[nodiscard]] static ExcitationSpec roadway(const HarmonicRoadExcitation& r);
  [[nodiscard]] static ExcitationSpec forced(double omega);

  [[nodiscard]] double omega() const;
  /// Same drive retuned to a new frequency (road keeps Y and lambda; the
  /// speed is adjusted so that 2*pi*v/lambda = omega).
  [[nodiscard]] ExcitationSpec at_omega(double omega) const;
};

/// Per-axle excitation phasors. The front-axle velocity phasor is the phase
/// reference (real positive, rms Y*omega/sqrt(2)); an axle at offset s lags
/// by 2*pi*s/lambda. A phasor E realizes in time as sqrt(2)*|E|*sin(wt+arg E).
struct AxlePhasors {
  double omega = 0;
  std::vector<int> coordinates;
  ComplexVector velocity;       // rms velocity phasors [m/s]
  ComplexVector displacement;   // velocity/(j*omega) [m]
};

[[nodiscard]] AxlePhasors excitation_phasors(const HarmonicRoadExcitation& e,
                                             const SecondOrderModel& model);

/// Rms phasor of the applied force (amplitude/sqrt(2) at the stored phase),
/// including the model's right-hand-side sign.
[[nodiscard]] Complex applied_force_phasor(const AppliedForce& f);

// ============================================================================
// Dependent point
// ============================================================================

/// Value at the middle-axle attachment point c from the two described points;
/// applies identically to phasors and to time samples.
template <class T>
[[nodiscard]] T dependent_velocity_c(const T& v_a, const T& v_b, const ThreeAxleParams& p) {
  return (p.l_b * v_a - p.l_b * v_b + p.l_d * v_b + p.l_t * v_b) / p.l();
}

/// Same lever rule through the weights stored on a model.
template <class T>
[[nodiscard]] T dependent_value(const DependentPoint& d, const T& v_a, const T& v_b) {
  return d.weight_a * v_a + d.weight_b * v_b;
}

}  // namespace ridealog
