#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ridealog/model.hpp"
#include "ridealog/solver.hpp"
#include "ridealog/types.hpp"

namespace ridealog {

// ============================================================================
// Mechanical frequency-domain oracle
// ============================================================================

/// H(omega) = (K - omega^2*M + j*omega*D)^{-1}: transfer from force phasors
/// to displacement phasors. Throws SingularSystemError (naming the
/// coordinate) when the dynamic stiffness is singular, e.g. an undamped
/// resonance hit exactly.
[[nodiscard]] ComplexMatrix frequency_response(const SecondOrderModel& model, double omega);

/// Right-hand-side force phasor vector: (d_r + k_r/(j*omega))*V_p on each
/// road-excited coordinate, the applied-force phasor on a driven coordinate,
/// zero elsewhere. The static (gravity) part is excluded.
[[nodiscard]] ComplexVector harmonic_force_phasor(const SecondOrderModel& model,
                                                  const ExcitationSpec& excitation);

/// Steady-state velocity phasors j*omega*H(omega)*Q.
[[nodiscard]] ComplexVector closed_form_velocity_phasors(const SecondOrderModel& model,
                                                         const ExcitationSpec& excitation);

// ============================================================================
// Spectral (discrete-Fourier) oracle
// ============================================================================

/// Real velocity samples per coordinate; the dependent point (when the model
/// has one) is appended as the last column.
struct TimeSeries {
  double dt = 0;
  std::vector<std::string> labels;
  Matrix samples;                 // rows: time, columns: coordinates

  [[nodiscard]] int n_samples() const { return static_cast<int>(samples.rows()); }
  [[nodiscard]] std::vector<double> rms() const;
};

struct SpectralGrid {
  int periods = 10;
  int samples = 1024;
};

/// Samples the excitation force on the grid, transforms, multiplies each bin
/// k by j*omega_k*H(omega_k) (two-sided, conjugate symmetry enforced, DC
/// zeroed), and inverse-transforms to real velocity series. The grid spans
/// an integer number of excitation periods, so the tone lands exactly on bin
/// `periods`.
[[nodiscard]] TimeSeries spectral_velocities(const SecondOrderModel& model,
                                             const ExcitationSpec& excitation,
                                             const SpectralGrid& grid = {});

/// CSV: `t_s,<coord1>,...,<coordK>` plus a final `rms,...` footer row.
void write_timeseries_csv(const TimeSeries& series, std::ostream& out);

// ============================================================================
// Cross-domain validation
// ============================================================================

struct CoordinateCheck {
  std::string label;
  double rms_electrical = 0;
  double rms_mechanical = 0;      // spectral (time-domain) route
  double relative_error = 0;
};

struct ValidationReport {
  std::vector<CoordinateCheck> coordinates;   // includes the dependent point
  double max_relative_error = 0;
  double max_phase_delta_deg = 0;             // pairwise deltas vs closed form
  double spectral_vs_closed_form = 0;         // rms gap between the two oracle routes
  double tolerance = 0;
  bool passed = false;
};

/// Compares the circuit solution against both mechanical routes: rms per
/// coordinate against the spectral series, pairwise phase differences against
/// the closed form. Fails when the rms error exceeds `tolerance` or a phase
/// delta exceeds 0.05 degrees.
[[nodiscard]] ValidationReport validate(const SecondOrderModel& model,
                                        const ExcitationSpec& excitation,
                                        const PhasorSolution& electrical,
                                        double tolerance = 1e-3,
                                        const SpectralGrid& grid = {});

}  // namespace ridealog
