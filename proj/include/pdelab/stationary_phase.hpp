#pragma once

#include <vector>

#include "pdelab/common.hpp"

namespace pdelab {

// I(k) = int_lo^hi f(t) e^{i k phi(t)} dt
struct OscillatoryIntegral {
  ComplexFn f;
  RealFn phi, dphi, d2phi;
  double k = 1.0;
  double lo = -1.0, hi = 1.0;
};

struct StationaryPoint {
  double t0;
  double phi2;  // phi''(t0)
  cplx contribution;
};

// Interior zeros of phi' by sign scan plus bisection to 1e-12; endpoint zeros are dropped.
std::vector<double> find_stationary_points(const RealFn& dphi, double lo, double hi,
                                           int n_scan = 2000);

struct StationaryPhaseResult {
  cplx value;
  std::vector<StationaryPoint> points;
  bool no_stationary_points = false;
};

StationaryPhaseResult stationary_phase_eval(const OscillatoryIntegral& I, int n_scan = 2000);

// Klein-Gordon u_tt - gamma^2 u_xx + c^2 u = 0, omega(lambda) = sqrt(gamma^2 lambda^2 + c^2).
double kg_omega(double lambda, double gamma, double c);
double kg_omega_prime(double lambda, double gamma, double c);
double kg_omega_second(double lambda, double gamma, double c);
// Root of omega'(lambda) = v for |v| < gamma.
double kg_stationary_lambda(double v, double gamma, double c);

struct FarField {
  cplx value;
  double lambda = 0.0;
  bool outside_cone = false;
};

// Leading term of int F+(l) e^{i(omega t - l x)} dl, plus the F- branch
// int F-(l) e^{-i(omega t + l x)} dl when fminus is given.
FarField kg_farfield(const ComplexFn& fplus, double gamma, double c, double x, double t,
                     const ComplexFn& fminus = nullptr);

// Packet u0(x) = p(x) e^{-i k0 x} with spectrum A(mu) about k0, so that
// u0(x) = int A(mu) e^{-i (k0 + mu) x} dmu over |mu| <= spectral_halfwidth.
struct WavePacket {
  RealFn envelope;
  RealFn spectrum;
  double k0 = 1.0;
  double spectral_halfwidth = 1.0;
};

// p(x) = exp(-(eps x)^2)
WavePacket gaussian_packet(double eps, double k0);

double kg_group_velocity(double k0, double gamma, double c);

// p(x - v_g t) e^{i(omega(k0) t - k0 x)}
cplx wave_packet_transport(const WavePacket& p, double gamma, double c, double x, double t);

// Mode superposition int A(mu) e^{i(omega(k0+mu) t - (k0+mu) x)} dmu by composite Simpson.
cplx packet_exact_field(const WavePacket& p, double gamma, double c, double x, double t);

}  // namespace pdelab
