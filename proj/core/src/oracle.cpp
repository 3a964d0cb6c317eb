#include "ridealog/oracle.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ridealog/errors.hpp"
#include "ridealog/fft.hpp"
#include "ridealog/format.hpp"

namespace ridealog {
namespace {

ComplexMatrix dynamic_stiffness(const SecondOrderModel& model, double omega) {
  return model.K.cast<Complex>() - (omega * omega) * model.M.cast<Complex>() +
         (jc * omega) * model.D.cast<Complex>();
}

/// Factors K - omega^2*M + j*omega*D with a pivot guard that names the
/// coordinate whose elimination column collapsed.
Eigen::PartialPivLU<ComplexMatrix> factor_dynamic(const SecondOrderModel& model, double omega) {
  const ComplexMatrix A = dynamic_stiffness(model, omega);
  Eigen::PartialPivLU<ComplexMatrix> lu(A);
  double scale = 0;
  for (int c = 0; c < A.cols(); ++c) {
    scale = std::max(scale, A.col(c).cwiseAbs().sum());
  }
  const auto& packed = lu.matrixLU();
  for (int i = 0; i < packed.rows(); ++i) {
    if (std::abs(packed(i, i)) < 1e-13 * scale) {
      throw SingularSystemError("dynamic stiffness is singular at omega=" + format_sig(omega) +
                                    " rad/s near coordinate " + model.labels[static_cast<std::size_t>(i)],
                                model.labels[static_cast<std::size_t>(i)]);
    }
  }
  return lu;
}

}  // namespace

ComplexMatrix frequency_response(const SecondOrderModel& model, double omega) {
  if (!(omega > 0)) {
    throw ModelError("frequency response needs a positive frequency");
  }
  return factor_dynamic(model, omega).inverse();
}

ComplexVector harmonic_force_phasor(const SecondOrderModel& model,
                                    const ExcitationSpec& excitation) {
  ComplexVector Q = ComplexVector::Zero(model.dof());
  if (excitation.road) {
    if (model.axles.empty()) {
      throw ModelError("road excitation given, but the model has no road-excited coordinates");
    }
    const AxlePhasors ph = excitation_phasors(*excitation.road, model);
    for (std::size_t p = 0; p < model.axles.size(); ++p) {
      const AxleInput& ax = model.axles[p];
      Q(ax.coordinate) += (ax.d_r + ax.k_r / (jc * ph.omega)) * ph.velocity(static_cast<int>(p));
    }
  } else {
    if (!model.force) {
      throw ModelError("frequency drive given, but the model has no applied force");
    }
    Q(model.force->coordinate) += applied_force_phasor(*model.force);
  }
  return Q;
}

ComplexVector closed_form_velocity_phasors(const SecondOrderModel& model,
                                           const ExcitationSpec& excitation) {
  const double omega = excitation.omega();
  const ComplexVector Q = harmonic_force_phasor(model, excitation);
  return (jc * omega) * factor_dynamic(model, omega).solve(Q);
}

std::vector<double> TimeSeries::rms() const {
  std::vector<double> out(static_cast<std::size_t>(samples.cols()));
  if (samples.rows() == 0) {
    return out;
  }
  for (Eigen::Index c = 0; c < samples.cols(); ++c) {
    out[static_cast<std::size_t>(c)] =
        std::sqrt(samples.col(c).squaredNorm() / static_cast<double>(samples.rows()));
  }
  return out;
}

TimeSeries spectral_velocities(const SecondOrderModel& model, const ExcitationSpec& excitation,
                               const SpectralGrid& grid) {
  const int n = grid.samples;
  if (n < 4 || n % 2 != 0) {
    throw ModelError("spectral grid needs an even sample count of at least 4");
  }
  if (grid.periods < 1 || 2 * grid.periods >= n) {
    throw ModelError("spectral grid must keep the excitation tone below the Nyquist bin");
  }

  const double omega = excitation.omega();
  const ComplexVector Q = harmonic_force_phasor(model, excitation);
  const double span = grid.periods * 2.0 * pi / omega;   // total window length [s]
  const double dt = span / n;
  const int dof = model.dof();
  const double sqrt2 = std::sqrt(2.0);

  // Sample the harmonic drive and transform each coordinate's force series.
  std::vector<std::vector<Complex>> force_bins(static_cast<std::size_t>(dof));
  for (int c = 0; c < dof; ++c) {
    std::vector<Complex> series(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double t = dt * i;
      series[static_cast<std::size_t>(i)] =
          Complex(sqrt2 * std::imag(Q(c) * std::exp(jc * (omega * t))), 0.0);
    }
    force_bins[static_cast<std::size_t>(c)] = fft::transform(std::move(series), false);
  }

  // Multiply bin k by j*omega_k*H(omega_k) and mirror the upper half so the
  // inverse transform is real. DC carries no steady-state velocity.
  std::vector<std::vector<Complex>> velocity_bins(
      static_cast<std::size_t>(dof), std::vector<Complex>(static_cast<std::size_t>(n)));
  ComplexVector F(dof);
  for (int k = 1; k <= n / 2; ++k) {
    const double omega_k = 2.0 * pi * k / span;
    for (int c = 0; c < dof; ++c) {
      F(c) = force_bins[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
    const ComplexVector W = (jc * omega_k) * factor_dynamic(model, omega_k).solve(F);
    for (int c = 0; c < dof; ++c) {
      auto& bins = velocity_bins[static_cast<std::size_t>(c)];
      if (k == n / 2) {
        bins[static_cast<std::size_t>(k)] = Complex(W(c).real(), 0.0);
      } else {
        bins[static_cast<std::size_t>(k)] = W(c);
        bins[static_cast<std::size_t>(n - k)] = std::conj(W(c));
      }
    }
  }

  TimeSeries out;
  out.dt = dt;
  out.labels = model.labels;
  const bool with_dependent = model.dependent.has_value();
  out.samples.resize(n, dof + (with_dependent ? 1 : 0));

  double max_real = 0;
  double max_imag = 0;
  for (int c = 0; c < dof; ++c) {
    const std::vector<Complex> time =
        fft::transform(std::move(velocity_bins[static_cast<std::size_t>(c)]), true);
    for (int i = 0; i < n; ++i) {
      const Complex& z = time[static_cast<std::size_t>(i)];
      out.samples(i, c) = z.real();
      max_real = std::max(max_real, std::abs(z.real()));
      max_imag = std::max(max_imag, std::abs(z.imag()));
    }
  }
  if (max_imag > 1e-9 * std::max(1.0, max_real)) {
    throw std::logic_error("spectral inverse transform produced a non-real series (max imag " +
                           format_sig(max_imag) + ")");
  }

  if (with_dependent) {
    const DependentPoint& dep = *model.dependent;
    out.labels.push_back(dep.label);
    out.samples.col(dof) =
        dep.weight_a * out.samples.col(dep.coord_a) + dep.weight_b * out.samples.col(dep.coord_b);
  }
  return out;
}

void write_timeseries_csv(const TimeSeries& series, std::ostream& out) {
  out << "t_s";
  for (const std::string& label : series.labels) {
    out << ',' << label;
  }
  out << '\n';
  for (Eigen::Index i = 0; i < series.samples.rows(); ++i) {
    out << format_sig(series.dt * static_cast<double>(i));
    for (Eigen::Index c = 0; c < series.samples.cols(); ++c) {
      out << ',' << format_sig(series.samples(i, c));
    }
    out << '\n';
  }
  out << "rms";
  for (double value : series.rms()) {
    out << ',' << format_sig(value);
  }
  out << '\n';
}

ValidationReport validate(const SecondOrderModel& model, const ExcitationSpec& excitation,
                          const PhasorSolution& electrical, double tolerance,
                          const SpectralGrid& grid) {
  ValidationReport report;
  report.tolerance = tolerance;

  const double omega = excitation.omega();
  if (std::abs(electrical.omega - omega) > 1e-9 * omega) {
    throw ModelError("solution frequency " + format_sig(electrical.omega) +
                     " does not match the excitation frequency " + format_sig(omega));
  }

  const ComplexVector closed = closed_form_velocity_phasors(model, excitation);
  const TimeSeries spectral = spectral_velocities(model, excitation, grid);
  const std::vector<double> spectral_rms = spectral.rms();

  const int dof = model.dof();
  std::vector<std::string> labels = model.labels;
  std::vector<Complex> closed_ph(static_cast<std::size_t>(dof));
  std::vector<Complex> circuit_ph(static_cast<std::size_t>(dof));
  for (int i = 0; i < dof; ++i) {
    closed_ph[static_cast<std::size_t>(i)] = closed(i);
    circuit_ph[static_cast<std::size_t>(i)] = electrical.at(model.labels[static_cast<std::size_t>(i)]);
  }
  if (model.dependent) {
    const DependentPoint& dep = *model.dependent;
    labels.push_back(dep.label);
    closed_ph.push_back(dependent_value(dep, closed_ph[static_cast<std::size_t>(dep.coord_a)],
                                        closed_ph[static_cast<std::size_t>(dep.coord_b)]));
    circuit_ph.push_back(dependent_value(dep, circuit_ph[static_cast<std::size_t>(dep.coord_a)],
                                         circuit_ph[static_cast<std::size_t>(dep.coord_b)]));
  }
  if (labels.size() != spectral_rms.size()) {
    throw ModelError("validation coordinate sets do not line up");
  }

  double max_closed = 0;
  for (const Complex& ph : closed_ph) {
    max_closed = std::max(max_closed, std::abs(ph));
  }

  for (std::size_t i = 0; i < labels.size(); ++i) {
    CoordinateCheck check;
    check.label = labels[i];
    check.rms_electrical = std::abs(circuit_ph[i]);
    check.rms_mechanical = spectral_rms[i];
    check.relative_error = std::abs(check.rms_electrical - check.rms_mechanical) /
                           std::max(check.rms_mechanical, 1e-300);
    report.coordinates.push_back(check);
    report.max_relative_error = std::max(report.max_relative_error, check.relative_error);

    const double rms_closed = std::abs(closed_ph[i]);
    report.spectral_vs_closed_form =
        std::max(report.spectral_vs_closed_form,
                 std::abs(spectral_rms[i] - rms_closed) / std::max(rms_closed, 1e-300));

    if (rms_closed > 1e-12 * max_closed && check.rms_electrical > 0) {
      const double delta_deg = std::arg(circuit_ph[i] / closed_ph[i]) * 180.0 / pi;
      report.max_phase_delta_deg = std::max(report.max_phase_delta_deg, std::abs(delta_deg));
    }
  }

  report.passed =
      report.max_relative_error <= tolerance && report.max_phase_delta_deg <= 0.05;
  return report;
}

}  // namespace ridealog
