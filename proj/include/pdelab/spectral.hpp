#pragma once

#include <memory>
#include <vector>

#include "pdelab/grid.hpp"

namespace pdelab {

// Orthonormal eigenfunctions M_k of L M = lambda rho M on [lo, hi].
struct ModeSet {
  std::vector<double> eigenvalues;
  std::vector<RealFn> eigenfunctions;
  Weight weight;
  double lo = 0, hi = 1;
  int quadrature_cells = 4000;

  std::size_t size() const { return eigenvalues.size(); }
};

// M_k = sqrt(2/l) sin(pi k x / l), lambda_k = c2 (pi k / l)^2, k = 1..K.
ModeSet sine_modes(double l, int K, double c2 = 1.0);

std::vector<double> forward(const RealFn& u, const ModeSet& modes);
double inverse(const std::vector<double>& coeffs, const ModeSet& modes, double x);
RealFn inverse(const std::vector<double>& coeffs, const ModeSet& modes);

// Time-dependent forcing of one mode, with exact primitives for the closed-form kinds.
struct ModeForcing {
  enum class Kind { zero, constant, sinusoid, general };
  Kind kind = Kind::zero;
  double amplitude = 0.0;  // constant value or sinusoid amplitude
  double omega = 0.0;      // amplitude * sin(omega t)
  RealFn fn{};

  double operator()(double t) const;
  static ModeForcing none() { return {}; }
  static ModeForcing constant(double c) { return {Kind::constant, c, 0.0, {}}; }
  static ModeForcing sinusoid(double a, double w) { return {Kind::sinusoid, a, w, {}}; }
  static ModeForcing general(RealFn f) { return {Kind::general, 0.0, 0.0, std::move(f)}; }
};

// dN/dt + lambda N = F, one mode.
double parabolic_mode(double lambda, double n0, const ModeForcing& f, double t);
// N'' + lambda N = F, one mode.
double hyperbolic_mode(double lambda, double n0, double dn0, const ModeForcing& f, double t);

// Per-mode solutions; F and B may be empty (no forcing) or have one entry per mode.
std::vector<double> solve_parabolic_modes(const ModeSet& modes, const std::vector<double>& n0,
                                          const std::vector<ModeForcing>& F,
                                          const std::vector<ModeForcing>& B, double t);
std::vector<double> solve_hyperbolic_modes(const ModeSet& modes, const std::vector<double>& n0,
                                           const std::vector<double>& dn0,
                                           const std::vector<ModeForcing>& F,
                                           const std::vector<ModeForcing>& B, double t);

// Boundary term for u_t - c2 u_xx with u(0,t) = g1, u(l,t) = g2 projected on sine mode k.
ModeForcing sine_boundary_term(int k, double l, double c2, RealFn g1, RealFn g2);

// v(x,t) = (x g2 + (l - x) g1) / l
struct BoundaryLift {
  RealFn g1, g1_t, g2, g2_t;
  double l;

  double v(double x, double t) const;
  double v_t(double x, double t) const;
  // Source for w = u - v in w_t - c2 w_xx = rho - v_t (v_xx = 0).
  SpaceTimeFn homogenized_source(SpaceTimeFn rho) const;
  RealFn initial(RealFn f) const;
};

BoundaryLift boundary_lift_1d(RealFn g1, RealFn g1_t, RealFn g2, RealFn g2_t, double l);

// Particular solution (1/2c) int_0^t int_{x-c(t-tau)}^{x+c(t-tau)} g(theta, tau).
double duhamel_wave(const SpaceTimeFn& g, double c, double x, double t);

// u_t - c^2 u_xx = g on [0, l], zero ends and zero initial data, by sine modes.
class DuhamelHeat {
 public:
  DuhamelHeat(SpaceTimeFn g, double c, double l, int K = 32, int projection_cells = 400);
  double operator()(double x, double t) const;
  std::vector<double> coefficients(double t) const;

 private:
  SpaceTimeFn g_;
  ModeSet modes_;
  UniformGrid1D grid_;
};

struct DiskCoefficients {
  double a0 = 0;
  std::vector<double> a, b;  // index 1..K, entry 0 unused
  double operator()(double theta) const;
};

DiskCoefficients disk_transform(const RealFn& u_of_theta, int K, int n_theta = 256);

struct PeriodicEigenvalue {
  double lambda;
  int multiplicity;
};
std::vector<PeriodicEigenvalue> periodic_eigenvalues(int K);

// a_k^{ijl} = int_0^pi M_i M_j M_k M_l with M_k = sqrt(2/pi) sin(k x); symmetric in all four indices.
class CouplingTensor {
 public:
  explicit CouplingTensor(int K);
  int size() const { return K_; }
  double operator()(int k, int i, int j, int l) const;  // 1-based indices
  struct Entry {
    int k, i, j, l;
    double value;
  };
  // Nonzero entries over all ordered (k, i, j, l).
  const std::vector<Entry>& nonzeros() const { return nonzeros_; }

 private:
  int K_;
  std::vector<double> data_;
  std::vector<Entry> nonzeros_;
};

std::shared_ptr<const CouplingTensor> galerkin_couplings(int K);

struct GalerkinTrajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> modes;  // modes[n][k-1]
  double dt = 0;
  bool blow_up = false;
};

// N_k' + (k^2 - lam) N_k = -lam eps^2 sum a_k^{ijl} N_i N_j N_l, k = 1..K.
GalerkinTrajectory nonlinear_heat_galerkin(double lam, double eps, const std::vector<double>& n0,
                                           int K, double t_end, double output_dt = 0.0);

double riccati_single_mode(double lam, double eps, double n1_0, double t);
double stationary_limit(double lam, double eps, double sign);
// Spatially uniform data: u(t) = eps e^{lam t} / sqrt(1 + eps^2 (e^{2 lam t} - 1)).
double uniform_logistic(double lam, double eps, double t);

}  // namespace pdelab
