#include "pdelab/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pdelab/numerics.hpp"

namespace pdelab {

namespace {

constexpr double kTol = 1e-10;

double sine_mode(int k, double l, double x) { return std::sqrt(2.0 / l) * std::sin(kPi * k * x / l); }

}  // namespace

double dalembert(const RealFn& f, const RealFn& g, double gamma, double x, double t) {
  if (!(gamma > 0)) throw Error("dalembert: gamma must be positive");
  double u = 0.5 * (f(x + gamma * t) + f(x - gamma * t));
  if (g && t != 0.0) u += adaptive_simpson(g, x - gamma * t, x + gamma * t, kTol) / (2.0 * gamma);
  return u;
}

// ---- Sturm-Liouville -------------------------------------------------------

TabulatedFunction::TabulatedFunction(double lo, double hi, std::vector<double> u,
                                     std::vector<double> du)
    : lo_(lo), hi_(hi), u_(std::move(u)), du_(std::move(du)) {
  if (u_.size() < 2 || u_.size() != du_.size()) throw Error("TabulatedFunction: bad table");
  h_ = (hi_ - lo_) / static_cast<double>(u_.size() - 1);
}

double TabulatedFunction::operator()(double x) const {
  const double r = std::clamp((x - lo_) / h_, 0.0, static_cast<double>(u_.size() - 1));
  const std::size_t i = std::min(static_cast<std::size_t>(r), u_.size() - 2);
  const double s = r - static_cast<double>(i);
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
  return h00 * u_[i] + h10 * h_ * du_[i] + h01 * u_[i + 1] + h11 * h_ * du_[i + 1];
}

double TabulatedFunction::derivative(double x) const {
  const double r = std::clamp((x - lo_) / h_, 0.0, static_cast<double>(u_.size() - 1));
  const std::size_t i = std::min(static_cast<std::size_t>(r), u_.size() - 2);
  const double s = r - static_cast<double>(i);
  const double d00 = 6 * s * s - 6 * s, d10 = 3 * s * s - 4 * s + 1;
  const double d01 = -6 * s * s + 6 * s, d11 = 3 * s * s - 2 * s;
  return (d00 * u_[i] + d01 * u_[i + 1]) / h_ + d10 * du_[i] + d11 * du_[i + 1];
}

namespace {

struct ShotResult {
  std::vector<double> v, dv, w, dw;  // u and u' at the nodes
};

// State (u, p u') for the fundamental pair v (u=1, u'=0) and w (u=0, u'=1).
ShotResult shoot(const SturmLiouville& sl, double lambda, int steps, bool keep) {
  using S = std::array<double, 4>;
  const double h = sl.l / steps;
  auto p = [&](double x) { return sl.p ? sl.p(x) : 1.0; };
  auto q = [&](double x) { return sl.q ? sl.q(x) : 0.0; };
  auto rho = [&](double x) { return sl.rho ? sl.rho(x) : 1.0; };
  auto f = [&](double x, const S& y) {
    const double px = p(x), k = q(x) - lambda * rho(x);
    return S{y[1] / px, k * y[0], y[3] / px, k * y[2]};
  };
  S y{1.0, 0.0, 0.0, p(0.0)};
  ShotResult r;
  auto push = [&](double x, const S& st) {
    const double px = p(x);
    r.v.push_back(st[0]);
    r.dv.push_back(st[1] / px);
    r.w.push_back(st[2]);
    r.dw.push_back(st[3] / px);
  };
  if (keep) push(0.0, y);
  for (int i = 0; i < steps; ++i) {
    y = rk4_step(f, i * h, y, h);
    if (keep) push((i + 1) * h, y);
  }
  if (!keep) push(sl.l, y);
  return r;
}

double determinant_from(const SturmLiouville& sl, const ShotResult& r) {
  const double v = r.v.back(), dv = r.dv.back(), w = r.w.back(), dw = r.dw.back();
  return sl.alpha2 * sl.beta1 * v + sl.alpha2 * sl.alpha1 * w + sl.beta2 * sl.beta1 * dv +
         sl.beta2 * sl.alpha1 * dw;
}

}  // namespace

double sl_determinant(const SturmLiouville& sl, double lambda, int steps) {
  return determinant_from(sl, shoot(sl, lambda, steps, false));
}

std::vector<EigenPair> sl_shoot(const SturmLiouville& sl, double lambda_lo, double lambda_hi,
                                int steps) {
  if (!(sl.l > 0)) throw Error("sl_shoot: l must be positive");
  if (steps < 2 || steps % 2) throw Error("sl_shoot: steps must be even and positive");
  auto det = [&](double lam) { return sl_determinant(sl, lam, steps); };
  const auto roots = find_roots(det, lambda_lo, lambda_hi, 1000, 1e-10);
  std::vector<EigenPair> out;
  const double h = sl.l / steps;
  for (double lam : roots) {
    const auto r = shoot(sl, lam, steps, true);
    std::vector<double> u(r.v.size()), du(r.v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = sl.beta1 * r.v[i] + sl.alpha1 * r.w[i];
      du[i] = sl.beta1 * r.dv[i] + sl.alpha1 * r.dw[i];
    }
    // Simpson on the RK4 nodes.
    double n2 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double x = static_cast<double>(i) * h;
      const double wgt = (i == 0 || i + 1 == u.size()) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      n2 += wgt * (sl.rho ? sl.rho(x) : 1.0) * u[i] * u[i];
    }
    n2 *= h / 3.0;
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] *= inv;
      du[i] *= inv;
    }
    out.push_back({lam, TabulatedFunction(0.0, sl.l, std::move(u), std::move(du)), n2});
  }
  return out;
}

// ---- Fourier series ---------------------------------------------------------

double FourierCoefficients::operator()(double x) const {
  double s = 0.0;
  switch (basis) {
    case FourierBasis::sine:
      for (std::size_t k = 1; k < a.size(); ++k) s += a[k] * sine_mode(static_cast<int>(k), l, x);
      break;
    case FourierBasis::cosine:
      s = a[0] / std::sqrt(l);
      for (std::size_t k = 1; k < a.size(); ++k)
        s += a[k] * std::sqrt(2.0 / l) * std::cos(kPi * static_cast<double>(k) * x / l);
      break;
    case FourierBasis::full:
      s = a[0] / std::sqrt(2.0 * l);
      for (std::size_t k = 1; k < a.size(); ++k) {
        const double arg = kPi * static_cast<double>(k) * x / l;
        s += (a[k] * std::cos(arg) + b[k] * std::sin(arg)) / std::sqrt(l);
      }
      break;
  }
  return s;
}

FourierCoefficients fourier_coeffs(const RealFn& f, FourierBasis basis, double l, int K) {
  if (!(l > 0) || K < 0) throw Error("fourier_coeffs: need l > 0 and K >= 0");
  FourierCoefficients c{basis, l, std::vector<double>(K + 1, 0.0), std::vector<double>(K + 1, 0.0)};
  switch (basis) {
    case FourierBasis::sine:
      for (int k = 1; k <= K; ++k)
        c.a[k] = adaptive_simpson([&](double x) { return f(x) * sine_mode(k, l, x); }, 0.0, l, kTol);
      break;
    case FourierBasis::cosine:
      c.a[0] = adaptive_simpson(f, 0.0, l, kTol) / std::sqrt(l);
      for (int k = 1; k <= K; ++k)
        c.a[k] = std::sqrt(2.0 / l) *
                 adaptive_simpson([&](double x) { return f(x) * std::cos(kPi * k * x / l); }, 0.0,
                                  l, kTol);
      break;
    case FourierBasis::full:
      c.a[0] = adaptive_simpson(f, -l, l, kTol) / std::sqrt(2.0 * l);
      for (int k = 1; k <= K; ++k) {
        c.a[k] = adaptive_simpson([&](double x) { return f(x) * std::cos(kPi * k * x / l); }, -l,
                                  l, kTol) /
                 std::sqrt(l);
        c.b[k] = adaptive_simpson([&](double x) { return f(x) * std::sin(kPi * k * x / l); }, -l,
                                  l, kTol) /
                 std::sqrt(l);
      }
      break;
  }
  return c;
}

SeriesSolution::SeriesSolution(Kind kind, double c, double l, std::vector<double> a,
                               std::vector<double> b)
    : kind_(kind), c_(c), l_(l), a_(std::move(a)), b_(std::move(b)) {}

double SeriesSolution::operator()(double x, double t) const {
  double s = 0.0;
  for (std::size_t k = 1; k < a_.size(); ++k) {
    const double w = kPi * static_cast<double>(k) * c_ / l_;
    const double m = sine_mode(static_cast<int>(k), l_, x);
    if (kind_ == Kind::parabolic) {
      s += a_[k] * std::exp(-w * w * t) * m;
    } else {
      s += (a_[k] * std::cos(w * t) + (k < b_.size() ? b_[k] : 0.0) * std::sin(w * t)) * m;
    }
  }
  return s;
}

SeriesSolution heat_series(const RealFn& f, double c, double l, int K) {
  auto fc = fourier_coeffs(f, FourierBasis::sine, l, K);
  return SeriesSolution(SeriesSolution::Kind::parabolic, c, l, std::move(fc.a), {});
}

SeriesSolution wave_series(const RealFn& f, const RealFn& g, double c, double l, int K) {
  auto fa = fourier_coeffs(f, FourierBasis::sine, l, K);
  std::vector<double> b(K + 1, 0.0);
  if (g) {
    const auto gc = fourier_coeffs(g, FourierBasis::sine, l, K);
    for (int k = 1; k <= K; ++k) b[k] = l / (kPi * k * c) * gc.a[k];
  }
  return SeriesSolution(SeriesSolution::Kind::hyperbolic, c, l, std::move(fa.a), std::move(b));
}

double sinh_ratio(double a, double b) {
  if (b == 0.0) return a == 0.0 ? 1.0 : kInfinity;
  if (b < 20.0) return std::sinh(a) / std::sinh(b);
  return std::exp(a - b) * (-std::expm1(-2.0 * a)) / (-std::expm1(-2.0 * b));
}

RectangleSeries::RectangleSeries(double l, double lhat, std::vector<double> f_coeffs,
                                 std::vector<double> g_coeffs)
    : l_(l), lhat_(lhat), fc_(std::move(f_coeffs)), gc_(std::move(g_coeffs)) {}

double RectangleSeries::operator()(double x, double y) const {
  double s = 0.0;
  for (std::size_t k = 1; k < fc_.size(); ++k) {
    const double w = kPi * static_cast<double>(k) / l_;
    const double top = sinh_ratio(w * y, w * lhat_);
    const double bottom = sinh_ratio(w * (lhat_ - y), w * lhat_);
    s += (gc_[k] * top + fc_[k] * bottom) * sine_mode(static_cast<int>(k), l_, x);
  }
  return s;
}

RectangleSeries laplace_rectangle_series(const RealFn& f, const RealFn& g, double l, double lhat,
                                         int K) {
  if (!(l > 0) || !(lhat > 0)) throw Error("laplace_rectangle_series: bad rectangle");
  return RectangleSeries(l, lhat, fourier_coeffs(f, FourierBasis::sine, l, K).a,
                         fourier_coeffs(g, FourierBasis::sine, l, K).a);
}

// ---- heat kernel family -----------------------------------------------------

double heat_kernel(double x, double t, double c) {
  if (!(t > 0)) throw Error("heat_kernel: t must be positive");
  const double d = 4.0 * c * c * t;
  return std::exp(-x * x / d) / std::sqrt(kPi * d);
}

namespace {

// Half-width beyond which the kernel mass is below 1e-16.
double kernel_reach(double c, double t) { return 12.0 * c * std::sqrt(t); }

double convolve_kernel(const RealFn& f, double c, double centre, double t, double lo, double hi,
                       double sign_flip = 1.0) {
  const double r = kernel_reach(c, t);
  const double a = std::max(lo, centre - r), b = std::min(hi, centre + r);
  if (!(b > a)) return 0.0;
  return adaptive_simpson(
      [&](double s) { return heat_kernel(centre - s, t, c) * f(sign_flip * s); }, a, b, kTol);
}

}  // namespace

double cauchy_heat(const RealFn& f, double c, double x, double t, double lo, double hi) {
  if (!(t > 0)) throw Error("cauchy_heat: t must be positive");
  return convolve_kernel(f, c, x, t, lo, hi);
}

double halfline_heat(const RealFn& f, const RealFn& g, double c, double x, double t,
                     double f_hi) {
  if (!(t > 0)) throw Error("halfline_heat: t must be positive");
  double u = 0.0;
  if (f) {
    // int_0^inf {G(x - s) - G(x + s)} f(s) ds
    u += convolve_kernel(f, c, x, t, 0.0, f_hi);
    const double r = kernel_reach(c, t);
    const double b = std::min(f_hi, r - x);
    if (b > 0)
      u -= adaptive_simpson([&](double s) { return heat_kernel(x + s, t, c) * f(s); }, 0.0, b, kTol);
  }
  if (g) {
    // -2c^2 int_0^t d_x G(x, t - tau) g(tau) dtau with tau = t - x^2 / (4 c^2 mu^2):
    // (2/sqrt(pi)) int_{mu0}^inf e^{-mu^2} g(t - x^2/(4c^2 mu^2)) dmu.
    if (x <= 0.0) return u + g(t);
    const double mu0 = x / (2.0 * c * std::sqrt(t));
    const double mu1 = std::max(mu0, 0.0) + 7.0;
    u += 2.0 / std::sqrt(kPi) *
         adaptive_simpson(
             [&](double mu) {
               return std::exp(-mu * mu) * g(t - x * x / (4.0 * c * c * mu * mu));
             },
             mu0, mu1, 1e-7);
  }
  return u;
}

double erf_solution(double u0, double c, double x, double t) {
  if (!(t > 0)) throw Error("erf_solution: t must be positive");
  return u0 * std::erf(x / (2.0 * c * std::sqrt(t)));
}

double image_series_heat(const RealFn& f, double c, double l, int J, double x, double t) {
  if (!(t > 0)) throw Error("image_series_heat: t must be positive");
  double u = 0.0;
  for (int j = -J; j <= J; ++j) {
    // G(x - s - 2jl) is centred at s = x - 2jl, G(x + s - 2jl) at s = 2jl - x.
    u += convolve_kernel(f, c, x - 2.0 * j * l, t, 0.0, l);
    u -= convolve_kernel(f, c, 2.0 * j * l - x, t, 0.0, l);
  }
  return u;
}

// ---- half plane -------------------------------------------------------------

double laplace_halfplane(const RealFn& f, double x, double y, double lo, double hi) {
  if (!(y > 0)) throw Error("laplace_halfplane: y must be positive");
  // x' = x + y tan(theta) turns the Poisson kernel into d(theta)/pi.
  const double a = std::atan((lo - x) / y), b = std::atan((hi - x) / y);
  if (!(b > a)) return 0.0;
  return adaptive_simpson([&](double th) { return f(x + y * std::tan(th)); }, a, b, kTol) / kPi;
}

double halfplane_heaviside(double x, double y) {
  if (!(y > 0)) throw Error("halfplane_heaviside: y must be positive");
  return 0.5 + std::atan(x / y) / kPi;
}

double neumann_halfplane(const RealFn& f, double x, double y, double lo, double hi) {
  if (!(y > 0)) throw Error("neumann_halfplane: y must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error("neumann_halfplane: need finite support");
  return adaptive_simpson(
             [&](double s) { return std::log((x - s) * (x - s) + y * y) * f(s); }, lo, hi, kTol) /
         (2.0 * kPi);
}

// ---- Green's functions ------------------------------------------------------

double ode_green_solve(const RealFn& f, double k, double x, double lo, double hi) {
  if (!(k > 0)) throw Error("ode_green_solve: k must be positive");
  auto integrand = [&](double s) { return std::exp(-k * std::abs(x - s)) * f(s); };
  const double reach = 40.0 / k;
  const double a = std::max(lo, x - reach), b = std::min(hi, x + reach);
  if (!(b > a)) return 0.0;
  double sum = 0.0;
  // Split at the kink of e^{-k|x-s|}.
  if (x > a && x < b)
    sum = adaptive_simpson(integrand, a, x, kTol) + adaptive_simpson(integrand, x, b, kTol);
  else
    sum = adaptive_simpson(integrand, a, b, kTol);
  return sum / (2.0 * k);
}

double ode_green_constant(double value, double k) {
  if (!(k > 0)) throw Error("ode_green_constant: k must be positive");
  return value / (k * k);
}

double green_decay(double k, double d) { return std::exp(-k * std::abs(d)) / (2.0 * k); }

cplx green_radiating(double k, double d) {
  return cplx(0.0, 1.0) / (2.0 * k) * std::exp(cplx(0.0, k * std::abs(d)));
}

double halfline_wave(const RealFn& f, double c, double x, double t) {
  const double r = t - x / c;
  return r >= 0.0 ? f(r) : 0.0;
}

double legendre(int k, double x) {
  if (k < 0) throw Error("legendre: k must be nonnegative");
  if (k == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int n = 1; n < k; ++n) {
    const double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_norm2(int k) { return 2.0 / (2.0 * k + 1.0); }

}  // namespace pdelab
