#pragma once

// Shared parameter fixtures. The truck numbers are the bundled example set
// (configs/truck_three_axle.cfg); the chain numbers are an arbitrary small
// integer set whose solution is frozen in the oracle tests.

#include "ridealog/model.hpp"

namespace testing {

inline ridealog::TwoDofParams chain_params() {
  ridealog::TwoDofParams p;
  p.m1 = 2;
  p.m2 = 3;
  p.k1 = 5;
  p.k2 = 7;
  p.d1 = 11;
  p.d2 = 13;
  p.f_amplitude = 1;
  p.f_phase = 0;
  return p;
}

inline ridealog::ThreeAxleParams truck_params() {
  ridealog::ThreeAxleParams p;
  p.m = 22000;
  p.I_G = 21000;
  p.m_ssd = 900;
  p.m_ssm = 1400;
  p.m_sst = 1400;
  p.k_sd = 610000;
  p.k_sm = 2.6e6;
  p.k_st = 2.6e6;
  p.d_sd = 15400;
  p.d_sm = 15400;
  p.d_st = 15400;
  p.k_rd = 1.36e6;
  p.k_rm = 5.43e6;
  p.k_rt = 5.43e6;
  p.d_rd = 150;
  p.d_rm = 150;
  p.d_rt = 150;
  p.l_d = 4.44;
  p.l_t = 1.71;
  p.l_a = 4.80;
  p.l_b = 1.35;
  return p;
}

/// The same vehicle without its middle axle.
inline ridealog::HalfCarParams coach_params() {
  const ridealog::ThreeAxleParams t = truck_params();
  ridealog::HalfCarParams p;
  p.m = t.m;
  p.I_G = t.I_G;
  p.m_ssd = t.m_ssd;
  p.m_sst = t.m_sst;
  p.k_sd = t.k_sd;
  p.k_st = t.k_st;
  p.d_sd = t.d_sd;
  p.d_st = t.d_st;
  p.k_rd = t.k_rd;
  p.k_rt = t.k_rt;
  p.d_rd = t.d_rd;
  p.d_rt = t.d_rt;
  p.l_d = t.l_d;
  p.l_t = t.l_t;
  return p;
}

/// 5 cm unevenness, 2 m wavelength, 60 km/h: omega = 2*pi*(60/3.6)/2.
inline ridealog::HarmonicRoadExcitation table_road() {
  ridealog::HarmonicRoadExcitation e;
  e.Y = 0.05;
  e.lambda = 2.0;
  e.v = 60.0 / 3.6;
  return e;
}

}  // namespace testing
