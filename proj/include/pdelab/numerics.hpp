#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pdelab/common.hpp"

namespace pdelab {

// Adaptive Simpson quadrature. Throws if the interval is not finite.
double adaptive_simpson(const RealFn& f, double a, double b, double tol = 1e-10,
                        int max_depth = 30);
cplx adaptive_simpson_complex(const ComplexFn& f, double a, double b, double tol = 1e-10,
                      int max_depth = 30);

// Composite Simpson with n (rounded up to even) panels.
double composite_simpson(const RealFn& f, double a, double b, int n);
cplx composite_simpson_complex(const ComplexFn& f, double a, double b, int n);

// Bisection on a bracketing interval; f(a) and f(b) must differ in sign (or vanish).
double bisect(const RealFn& f, double a, double b, double tol);

// Sign-change scan of f on n uniform cells of [a, b], each bracket refined by bisection.
std::vector<double> find_roots(const RealFn& f, double a, double b, int n, double tol);

// Golden-section minimisation of a unimodal f on [a, b].
double golden_section_min(const RealFn& f, double a, double b, double tol);

std::vector<double> linspace(double a, double b, std::size_t n);

// Classical fourth-order Runge-Kutta step for y' = f(s, y).
template <std::size_t N, class F>
std::array<double, N> rk4_step(const F& f, double s, const std::array<double, N>& y, double ds) {
  auto axpy = [](const std::array<double, N>& a, double c, const std::array<double, N>& b) {
    std::array<double, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + c * b[i];
    return r;
  };
  const auto k1 = f(s, y);
  const auto k2 = f(s + 0.5 * ds, axpy(y, 0.5 * ds, k1));
  const auto k3 = f(s + 0.5 * ds, axpy(y, 0.5 * ds, k2));
  const auto k4 = f(s + ds, axpy(y, ds, k3));
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + ds / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace pdelab
