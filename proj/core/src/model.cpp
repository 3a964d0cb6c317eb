#include "ridealog/model.hpp"

#include <cmath>
#include <utility>

#include "ridealog/errors.hpp"

namespace ridealog {

namespace {

void require_positive(double x, const char* key) {
  if (!(x > 0.0)) throw ModelError(std::string(key) + " must be > 0");
}

void require_nonnegative(double x, const char* key) {
  if (!(x >= 0.0)) throw ModelError(std::string(key) + " must be >= 0");
}

}  // namespace

void check_model(const SecondOrderModel& model) {
  const Matrix* mats[] = {&model.M, &model.D, &model.K};
  const char* names[] = {"M", "D", "K"};
  for (int i = 0; i < 3; ++i) {
    const Matrix& A = *mats[i];
    const double scale = A.cwiseAbs().maxCoeff();
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw ModelError(std::string(names[i]) + " is not symmetric");
  }
  Eigen::LLT<Matrix> llt(model.M);
  if (llt.info() != Eigen::Success)
    throw ModelError("M is not positive definite");
}

SecondOrderModel build_two_dof(const TwoDofParams& p) {
  require_positive(p.m1, "m1");
  require_positive(p.m2, "m2");
  require_nonnegative(p.k1, "k1");   // degenerate springs allowed in the chain
  require_nonnegative(p.k2, "k2");
  require_nonnegative(p.d1, "d1");
  require_nonnegative(p.d2, "d2");
  require_nonnegative(p.f_amplitude, "f_amplitude");

  SecondOrderModel model;
  model.M = Matrix::Zero(2, 2);
  model.M.diagonal() << p.m1, p.m2;
  model.D = Matrix(2, 2);
  model.D << p.d1 + p.d2, -p.d2, -p.d2, p.d2;
  model.K = Matrix(2, 2);
  model.K << p.k1 + p.k2, -p.k2, -p.k2, p.k2;
  model.gravity = Vector::Zero(2);
  model.labels = {"1", "2"};
  model.force = AppliedForce{1, p.f_amplitude, p.f_phase, -1.0};
  check_model(model);
  return model;
}

SecondOrderModel build_half_car(const HalfCarParams& p) {
  require_positive(p.m, "m");
  require_positive(p.I_G, "I_G");
  require_positive(p.m_ssd, "m_ssd");
  require_positive(p.m_sst, "m_sst");
  require_positive(p.k_sd, "k_sd");
  require_positive(p.k_st, "k_st");
  require_positive(p.k_rd, "k_rd");
  require_positive(p.k_rt, "k_rt");
  require_nonnegative(p.d_sd, "d_sd");
  require_nonnegative(p.d_st, "d_st");
  require_nonnegative(p.d_rd, "d_rd");
  require_nonnegative(p.d_rt, "d_rt");
  require_positive(p.l_d, "l_d");
  require_positive(p.l_t, "l_t");
  const double l = p.l_d + p.l_t;

  SecondOrderModel model;
  model.M = Matrix::Zero(4, 4);
  model.M(0, 0) = (p.m * p.l_t * p.l_t + p.I_G) / (l * l);
  model.M(0, 1) = model.M(1, 0) = (p.l_d * p.l_t * p.m - p.I_G) / (l * l);
  model.M(1, 1) = (p.m * p.l_d * p.l_d + p.I_G) / (l * l);
  model.M(2, 2) = p.m_ssd;
  model.M(3, 3) = p.m_sst;

  model.D = Matrix::Zero(4, 4);
  model.D(0, 0) = p.d_sd;
  model.D(0, 2) = model.D(2, 0) = -p.d_sd;
  model.D(1, 1) = p.d_st;
  model.D(1, 3) = model.D(3, 1) = -p.d_st;
  model.D(2, 2) = p.d_sd + p.d_rd;
  model.D(3, 3) = p.d_st + p.d_rt;

  model.K = Matrix::Zero(4, 4);
  model.K(0, 0) = p.k_sd;
  model.K(0, 2) = model.K(2, 0) = -p.k_sd;
  model.K(1, 1) = p.k_st;
  model.K(1, 3) = model.K(3, 1) = -p.k_st;
  model.K(2, 2) = p.k_sd + p.k_rd;
  model.K(3, 3) = p.k_st + p.k_rt;

  model.gravity = Vector(4);
  model.gravity << -p.g * p.m * p.l_t / l, -p.g * p.m * p.l_d / l,
      -p.g * p.m_ssd, -p.g * p.m_sst;
  model.labels = {"a", "b", "d", "t"};
  model.axles = {
      {2, "d", 0.0, p.k_rd, p.d_rd},
      {3, "t", l, p.k_rt, p.d_rt},
  };
  check_model(model);
  return model;
}

SecondOrderModel build_three_axle(const ThreeAxleParams& p) {
  HalfCarParams h;
  h.m = p.m;
  h.I_G = p.I_G;
  h.m_ssd = p.m_ssd;
  h.m_sst = p.m_sst;
  h.k_sd = p.k_sd;
  h.k_st = p.k_st;
  h.d_sd = p.d_sd;
  h.d_st = p.d_st;
  h.k_rd = p.k_rd;
  h.k_rt = p.k_rt;
  h.d_rd = p.d_rd;
  h.d_rt = p.d_rt;
  h.l_d = p.l_d;
  h.l_t = p.l_t;
  h.g = p.g;
  SecondOrderModel half = build_half_car(h);

  require_positive(p.m_ssm, "m_ssm");
  require_positive(p.k_sm, "k_sm");
  require_positive(p.k_rm, "k_rm");
  require_nonnegative(p.d_sm, "d_sm");
  require_nonnegative(p.d_rm, "d_rm");
  require_positive(p.l_a, "l_a");
  require_positive(p.l_b, "l_b");
  const double l = p.l();
  if (std::abs(p.l_a + p.l_b - l) > 1e-9 * l)
    throw ModelError("geometry inconsistency: l_a + l_b must equal l_d + l_t");

  SecondOrderModel model;
  model.M = Matrix::Zero(5, 5);
  model.M.topLeftCorner(4, 4) = half.M;
  model.M(4, 4) = p.m_ssm;

  const double la_l = p.l_a / l;
  const double lb_l = p.l_b / l;
  model.D = Matrix::Zero(5, 5);
  model.D.topLeftCorner(4, 4) = half.D;
  model.D(0, 0) += p.d_sm * lb_l * lb_l;
  model.D(0, 1) = model.D(1, 0) = p.d_sm * la_l * lb_l;
  model.D(0, 4) = model.D(4, 0) = -p.d_sm * lb_l;
  model.D(1, 1) += p.d_sm * la_l * la_l;
  model.D(1, 4) = model.D(4, 1) = -p.d_sm * la_l;
  model.D(4, 4) = p.d_sm + p.d_rm;

  model.K = Matrix::Zero(5, 5);
  model.K.topLeftCorner(4, 4) = half.K;
  model.K(0, 0) += p.k_sm * lb_l * lb_l;
  model.K(0, 1) = model.K(1, 0) = p.k_sm * la_l * lb_l;
  model.K(0, 4) = model.K(4, 0) = -p.k_sm * lb_l;
  model.K(1, 1) += p.k_sm * la_l * la_l;
  model.K(1, 4) = model.K(4, 1) = -p.k_sm * la_l;
  model.K(4, 4) = p.k_sm + p.k_rm;

  model.gravity = Vector(5);
  model.gravity.head(4) = half.gravity;
  model.gravity(4) = -p.g * p.m_ssm;
  model.labels = {"a", "b", "d", "t", "m"};
  model.axles = {
      {2, "d", 0.0, p.k_rd, p.d_rd},
      {3, "t", l, p.k_rt, p.d_rt},
      {4, "m", p.l_a, p.k_rm, p.d_rm},
  };
  model.dependent = DependentPoint{"c", 0, 1, p.l_b / l, (l - p.l_b) / l};
  check_model(model);
  return model;
}

ExcitationSpec ExcitationSpec::roadway(const HarmonicRoadExcitation& r) {
  if (!(r.lambda > 0)) throw ModelError("lambda must be > 0");
  if (!(r.v > 0)) throw ModelError("v must be > 0");
  if (!(r.Y >= 0)) throw ModelError("Y must be >= 0");
  ExcitationSpec spec;
  spec.road = r;
  return spec;
}

ExcitationSpec ExcitationSpec::forced(double omega) {
  if (!(omega > 0)) throw ModelError("omega must be > 0");
  ExcitationSpec spec;
  spec.drive_omega = omega;
  return spec;
}

double ExcitationSpec::omega() const {
  if (road) return road->omega();
  if (drive_omega) return *drive_omega;
  throw ModelError("excitation specifies neither a road profile nor a frequency");
}

ExcitationSpec ExcitationSpec::at_omega(double omega) const {
  if (!(omega > 0)) throw ModelError("omega must be > 0");
  ExcitationSpec spec(*this);
  if (spec.road)
    spec.road->v = omega * spec.road->lambda / (2.0 * pi);
  else
    spec.drive_omega = omega;
  return spec;
}

AxlePhasors excitation_phasors(const HarmonicRoadExcitation& e, const SecondOrderModel& model) {
  static_cast<void>(ExcitationSpec::roadway(e));  // enforce invariants
  AxlePhasors out;
  out.omega = e.omega();
  const int n = static_cast<int>(model.axles.size());
  out.velocity = ComplexVector(n);
  out.displacement = ComplexVector(n);
  const double rms = e.Y * out.omega / std::sqrt(2.0);
  const Complex jw = jc * out.omega;
  for (int i = 0; i < n; ++i) {
    const AxleInput& axle = model.axles[i];
    out.coordinates.push_back(axle.coordinate);
    // Phase lag of the axle at offset s, reduced modulo 2*pi.
    const double phase = -std::remainder(2.0 * pi * axle.offset / e.lambda, 2.0 * pi);
    out.velocity(i) = std::polar(rms, phase);
    out.displacement(i) = out.velocity(i) / jw;
  }
  return out;
}

Complex applied_force_phasor(const AppliedForce& f) {
  return f.sign * std::polar(f.amplitude / std::sqrt(2.0), f.phase);
}

}  // namespace ridealog
