#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdelab/common.hpp"

namespace pdelab {

using SchemeParams = std::map<std::string, double>;

// Amplification polynomial c0 + c1 xi + c2 xi^2 for the mode u_j^n = xi^n e^{i theta j}.
struct SchemeSymbol {
  std::string name;
  std::function<std::vector<cplx>(double theta, const SchemeParams&)> coefficients;
};

SchemeSymbol heat_explicit_symbol();     // params: s
SchemeSymbol heat_qscheme_symbol();      // params: s, Q
SchemeSymbol wave_leapfrog_symbol();     // params: s
SchemeSymbol advection_leapfrog_symbol();  // params: nu = b k / (a h)
SchemeSymbol symbol_by_name(const std::string& name);

struct AmplificationRoots {
  std::vector<cplx> roots;
  bool double_root = false;
};

AmplificationRoots amplification_factors(const SchemeSymbol& symbol, double theta,
                                         const SchemeParams& params);

enum class StabilityClass { strictly_stable, neutrally_stable, unstable, ill_posed };
std::string to_string(StabilityClass c);

struct StabilityVerdict {
  bool stable = false;
  StabilityClass classification = StabilityClass::unstable;
  // scheme case
  std::optional<double> max_modulus, worst_theta;
  // PDE case; omega may be +inf
  std::optional<double> omega, worst_k;
  bool algebraic_growth = false;
  std::string note;
};

inline constexpr double kModulusTolerance = 1e-12;

StabilityVerdict scheme_stability(const SchemeSymbol& symbol, const SchemeParams& params,
                                  int n_theta = 1024);

// Smallest value of params[name] in [lo, hi] at which the scheme turns unstable,
// assuming stable at lo and unstable at hi.
double stability_threshold(const SchemeSymbol& symbol, SchemeParams params, const std::string& name,
                           double lo, double hi, double tol = 1e-9);

// A u_xx + 2B u_xt + C u_tt + D u_x + E u_t + F u = 0
struct PDECoefficients {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
};

// Roots of C lam^2 + (2ikB + E) lam + (-A k^2 + iDk + F) = 0 for u = e^{ikx + lam t}.
std::vector<cplx> normal_mode_lambda(const PDECoefficients& c, double k);

// Symmetric log-spaced wavenumbers in [-k_max, k_max] including 0.
std::vector<double> wavenumber_grid(double k_max, int n_k);

StabilityVerdict stability_index(const PDECoefficients& c, double k_max = 1e3, int n_k = 512);

enum class ModeType { conservative, dissipative, neither };
std::string to_string(ModeType t);
ModeType classify_mode_type(const PDECoefficients& c, double k_max = 1e3, int n_k = 512);

struct DispersionRelation {
  PDECoefficients coeffs;
  double k_lo = 0.1, k_hi = 10.0;
  bool dispersive = false;
  bool analytic_group_velocity = false;

  double omega(double k) const;
  double phase_speed(double k) const;
  double group_velocity(double k) const;
  double group_velocity_numeric(double k) const;
  double omega_second_derivative(double k) const;
};

DispersionRelation dispersion(const PDECoefficients& c, double k_lo = 0.1, double k_hi = 10.0);

}  // namespace pdelab
