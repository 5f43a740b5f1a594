#pragma once

#include <limits>
#include <vector>

#include "pdelab/common.hpp"

namespace pdelab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// u_tt = gamma^2 u_xx on the line with u = f, u_t = g at t = 0.
double dalembert(const RealFn& f, const RealFn& g, double gamma, double x, double t);

// -(p u')' + q u = lambda rho u on (0, l),
// alpha1 u(0) - beta1 u'(0) = 0, alpha2 u(l) + beta2 u'(l) = 0.
struct SturmLiouville {
  RealFn p, q, rho;
  double alpha1 = 1, beta1 = 0, alpha2 = 1, beta2 = 0;
  double l = 1;
};

// Eigenfunction tabulated at the RK4 nodes, evaluated by cubic Hermite interpolation.
class TabulatedFunction {
 public:
  TabulatedFunction() = default;
  TabulatedFunction(double lo, double hi, std::vector<double> u, std::vector<double> du);
  double operator()(double x) const;
  double derivative(double x) const;
  const std::vector<double>& values() const { return u_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_ = 0, hi_ = 1, h_ = 1;
  std::vector<double> u_, du_;
};

struct EigenPair {
  double lambda;
  TabulatedFunction eigenfunction;  // rho-normalised
  double norm2;                     // squared rho-norm before normalisation
};

// Boundary determinant whose zeros are the eigenvalues.
double sl_determinant(const SturmLiouville& sl, double lambda, int steps = 2000);
std::vector<EigenPair> sl_shoot(const SturmLiouville& sl, double lambda_lo, double lambda_hi,
                                int steps = 2000);

enum class FourierBasis { sine, cosine, full };

// sine/cosine on [0, l]; full on (-l, l).
struct FourierCoefficients {
  FourierBasis basis;
  double l;
  std::vector<double> a;  // a[0] is the constant mode (unused for sine)
  std::vector<double> b;  // full basis sine part, b[0] unused
  double operator()(double x) const;
};

FourierCoefficients fourier_coeffs(const RealFn& f, FourierBasis basis, double l, int K);

// Sine-mode series on [0, l] with time dependence per equation class.
class SeriesSolution {
 public:
  enum class Kind { parabolic, hyperbolic };
  SeriesSolution(Kind kind, double c, double l, std::vector<double> a, std::vector<double> b);
  double operator()(double x, double t) const;
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }
  double l() const { return l_; }
  double c() const { return c_; }

 private:
  Kind kind_;
  double c_, l_;
  std::vector<double> a_, b_;
};

SeriesSolution heat_series(const RealFn& f, double c, double l, int K = 200);
SeriesSolution wave_series(const RealFn& f, const RealFn& g, double c, double l, int K = 200);

// Laplace on [0,l]x[0,lhat] with u(x,0) = f, u(x,lhat) = g, u = 0 on the vertical sides.
class RectangleSeries {
 public:
  RectangleSeries(double l, double lhat, std::vector<double> f_coeffs, std::vector<double> g_coeffs);
  double operator()(double x, double y) const;

 private:
  double l_, lhat_;
  std::vector<double> fc_, gc_;
};

RectangleSeries laplace_rectangle_series(const RealFn& f, const RealFn& g, double l, double lhat,
                                         int K = 200);
// sinh(a) / sinh(b) for 0 <= a <= b without overflow.
double sinh_ratio(double a, double b);

double heat_kernel(double x, double t, double c);
// Initial data f with support inside [lo, hi] (infinite ends allowed).
double cauchy_heat(const RealFn& f, double c, double x, double t, double lo = -kInfinity,
                   double hi = kInfinity);
// Half line x > 0: u(x,0) = f on [0, f_hi], u(0,t) = g(t).
double halfline_heat(const RealFn& f, const RealFn& g, double c, double x, double t,
                     double f_hi = kInfinity);
double erf_solution(double u0, double c, double x, double t);
// Interval [0, l] with zero ends, images |j| <= J.
double image_series_heat(const RealFn& f, double c, double l, int J, double x, double t);

// Dirichlet problem in y > 0 with u(x, 0) = f supported in [lo, hi].
double laplace_halfplane(const RealFn& f, double x, double y, double lo = -kInfinity,
                         double hi = kInfinity);
double halfplane_heaviside(double x, double y);
// Neumann problem u_y(x, 0) = f, f supported in the finite interval [lo, hi].
double neumann_halfplane(const RealFn& f, double x, double y, double lo, double hi);

// y'' - k^2 y = -f on the line, decaying: y = (1/2k) int e^{-k|x-t|} f(t) dt.
double ode_green_solve(const RealFn& f, double k, double x, double lo, double hi);
double ode_green_constant(double value, double k);
double green_decay(double k, double d);
cplx green_radiating(double k, double d);

// u(x,t) = H(t - x/c) f(t - x/c)
double halfline_wave(const RealFn& f, double c, double x, double t);

double legendre(int k, double x);
double legendre_norm2(int k);

}  // namespace pdelab
