#include "pdelab/vonneumann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdelab/numerics.hpp"

namespace pdelab {

namespace {

double param(const SchemeParams& p, const std::string& name) {
  const auto it = p.find(name);
  if (it == p.end()) throw Error("missing scheme parameter: " + name);
  return it->second;
}

double param_or(const SchemeParams& p, const std::string& name, double fallback) {
  const auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

struct QuadraticRoots {
  std::vector<cplx> roots;
  bool double_root;
};

// Roots of c0 + c1 z + c2 z^2 (or the linear case when c2 == 0).
QuadraticRoots solve_poly(const std::vector<cplx>& c) {
  if (c.size() < 2 || c.size() > 3) throw Error("amplification polynomial must have degree 1 or 2");
  if (c.size() == 2 || c[2] == cplx{}) {
    if (c[1] == cplx{}) throw Error("amplification polynomial: leading coefficient is zero");
    return {{-c[0] / c[1]}, false};
  }
  const cplx a = c[2], b = c[1], cc = c[0];
  const cplx disc = b * b - 4.0 * a * cc;
  const cplx sq = std::sqrt(disc);
  // Pick the sign that avoids cancellation.
  const cplx q = -0.5 * (std::real(std::conj(b) * sq) >= 0 ? b + sq : b - sq);
  cplx r1, r2;
  if (q == cplx{}) {
    r1 = r2 = cplx{};
  } else {
    r1 = q / a;
    r2 = cc / q;
  }
  const double scale = std::max({std::norm(b), std::abs(4.0 * a * cc), 1e-300});
  return {{r1, r2}, std::abs(disc) <= 1e-12 * scale};
}

}  // namespace

SchemeSymbol heat_explicit_symbol() {
  return {"heat-explicit", [](double th, const SchemeParams& p) {
            const double s = param(p, "s");
            return std::vector<cplx>{-(1.0 - 2.0 * s * (1.0 - std::cos(th))), 1.0};
          }};
}

SchemeSymbol heat_qscheme_symbol() {
  return {"heat-qscheme", [](double th, const SchemeParams& p) {
            const double s = param(p, "s");
            const double q = param_or(p, "Q", 0.5);
            const double w = 1.0 - std::cos(th);
            return std::vector<cplx>{-(1.0 - 2.0 * (1.0 - q) * s * w), 1.0 + 2.0 * q * s * w};
          }};
}

SchemeSymbol wave_leapfrog_symbol() {
  return {"wave-leapfrog", [](double th, const SchemeParams& p) {
            const double pp = param(p, "s") * (std::cos(th) - 1.0);
            return std::vector<cplx>{1.0, -2.0 * (1.0 + pp), 1.0};
          }};
}

SchemeSymbol advection_leapfrog_symbol() {
  return {"advection-leapfrog", [](double th, const SchemeParams& p) {
            const double nu = param(p, "nu");
            return std::vector<cplx>{-1.0, cplx(0.0, 2.0 * nu * std::sin(th)), 1.0};
          }};
}

SchemeSymbol symbol_by_name(const std::string& name) {
  if (name == "heat-explicit") return heat_explicit_symbol();
  if (name == "heat-qscheme" || name == "crank-nicolson") return heat_qscheme_symbol();
  if (name == "wave-leapfrog") return wave_leapfrog_symbol();
  if (name == "advection-leapfrog") return advection_leapfrog_symbol();
  throw Error("unknown scheme: " + name);
}

AmplificationRoots amplification_factors(const SchemeSymbol& symbol, double theta,
                                         const SchemeParams& params) {
  auto r = solve_poly(symbol.coefficients(theta, params));
  return {std::move(r.roots), r.double_root};
}

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::strictly_stable: return "strictly stable";
    case StabilityClass::neutrally_stable: return "neutrally stable";
    case StabilityClass::unstable: return "unstable";
    case StabilityClass::ill_posed: return "ill-posed";
  }
  return "?";
}

StabilityVerdict scheme_stability(const SchemeSymbol& symbol, const SchemeParams& params,
                                  int n_theta) {
  if (n_theta < 64) throw Error("scheme_stability: n_theta must be at least 64");
  StabilityVerdict v;
  double max_mod = -1.0, worst = 0.0;
  bool unit_away_from_zero = false;
  bool double_on_circle = false;
  for (int m = 0; m < n_theta; ++m) {
    const double th = 2.0 * kPi * m / n_theta;
    const auto r = amplification_factors(symbol, th, params);
    for (const auto& xi : r.roots) {
      const double a = std::abs(xi);
      if (a > max_mod) {
        max_mod = a;
        worst = th;
      }
      if (m != 0 && a >= 1.0 - kModulusTolerance) unit_away_from_zero = true;
    }
    // theta = 0 carries the scheme's copy of the PDE's own u = a + b t solution.
    if (m != 0 && r.double_root && std::abs(std::abs(r.roots[0]) - 1.0) <= 1e-9)
      double_on_circle = true;
  }
  v.max_modulus = max_mod;
  v.worst_theta = worst;
  v.stable = max_mod <= 1.0 + kModulusTolerance;
  if (!v.stable) {
    v.classification = StabilityClass::unstable;
  } else if (unit_away_from_zero) {
    v.classification = StabilityClass::neutrally_stable;
  } else {
    v.classification = StabilityClass::strictly_stable;
  }
  if (v.stable && double_on_circle) {
    v.algebraic_growth = true;
    v.classification = StabilityClass::neutrally_stable;
    v.note = "double root on the unit circle: algebraic growth possible";
  }
  return v;
}

double stability_threshold(const SchemeSymbol& symbol, SchemeParams params, const std::string& name,
                           double lo, double hi, double tol) {
  auto stable_at = [&](double x) {
    params[name] = x;
    return scheme_stability(symbol, params).stable;
  };
  if (!stable_at(lo)) throw Error("stability_threshold: unstable at the lower end");
  if (stable_at(hi)) throw Error("stability_threshold: stable at the upper end");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (stable_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<cplx> normal_mode_lambda(const PDECoefficients& c, double k) {
  const cplx i(0.0, 1.0);
  const cplx c1 = 2.0 * i * k * c.B + c.E;
  const cplx c0 = -c.A * k * k + i * c.D * k + c.F;
  if (c.C == 0.0) {
    if (c1 == cplx{}) throw Error("normal_mode_lambda: degenerate equation (C = E = 0)");
    return {-c0 / c1};
  }
  const cplx disc = std::sqrt(c1 * c1 - 4.0 * c.C * c0);
  return {(-c1 + disc) / (2.0 * c.C), (-c1 - disc) / (2.0 * c.C)};
}

std::vector<double> wavenumber_grid(double k_max, int n_k) {
  const int half = n_k / 2;
  const double k_min = std::min(1e-3, k_max / 10.0);
  std::vector<double> ks;
  ks.reserve(static_cast<std::size_t>(2 * half + 1));
  const double l0 = std::log10(k_min), l1 = std::log10(k_max);
  for (int i = half - 1; i >= 0; --i) ks.push_back(-std::pow(10.0, l0 + (l1 - l0) * i / (half - 1)));
  ks.push_back(0.0);
  for (int i = 0; i < half; ++i) ks.push_back(std::pow(10.0, l0 + (l1 - l0) * i / (half - 1)));
  return ks;
}

namespace {

double max_real(const std::vector<cplx>& r) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& z : r) m = std::max(m, z.real());
  return m;
}

// Re lam keeps growing over the last sampled decade of one tail.
bool unbounded_tail(const std::vector<double>& ks, const std::vector<double>& re, bool positive,
                    double k_max) {
  std::vector<std::pair<double, double>> tail;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double k = positive ? ks[i] : -ks[i];
    if (k >= k_max / 10.0 * (1.0 - 1e-12)) tail.emplace_back(k, re[i]);
  }
  std::sort(tail.begin(), tail.end());
  if (tail.size() < 3) return false;
  for (std::size_t i = 1; i < tail.size(); ++i)
    if (tail[i].second < tail[i - 1].second) return false;
  const double first = tail.front().second, last = tail.back().second;
  // Growth at least like a positive power of k across the decade.
  return last > 0.0 && last >= 2.0 * std::max(first, 1e-300);
}

}  // namespace

StabilityVerdict stability_index(const PDECoefficients& c, double k_max, int n_k) {
  if (n_k < 256) throw Error("stability_index: n_k must be at least 256");
  const auto ks = wavenumber_grid(k_max, n_k);
  std::vector<double> re(ks.size());
  StabilityVerdict v;
  double omega = -std::numeric_limits<double>::infinity(), worst = 0.0;
  bool all_double = true;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto r = normal_mode_lambda(c, ks[i]);
    re[i] = max_real(r);
    if (re[i] > omega) {
      omega = re[i];
      worst = ks[i];
    }
    if (r.size() == 2) {
      const cplx i1(0.0, 1.0);
      const cplx c1 = 2.0 * i1 * ks[i] * c.B + c.E;
      const cplx c0 = -c.A * ks[i] * ks[i] + i1 * c.D * ks[i] + c.F;
      const double scale = std::max({std::norm(c1), std::abs(4.0 * c.C * c0), 1.0});
      if (std::abs(c1 * c1 - 4.0 * c.C * c0) >= 1e-12 * scale) all_double = false;
    } else {
      all_double = false;
    }
  }
  v.worst_k = worst;
  if (unbounded_tail(ks, re, true, k_max) || unbounded_tail(ks, re, false, k_max)) {
    v.omega = std::numeric_limits<double>::infinity();
    v.stable = false;
    v.classification = StabilityClass::ill_posed;
    v.note = "Re lambda grows without bound as |k| increases (heuristic tail test)";
    return v;
  }
  constexpr double tol = 1e-12;
  if (std::abs(omega) <= tol) omega = 0.0;
  v.omega = omega;
  v.stable = omega <= 0.0;
  v.classification = omega > 0.0    ? StabilityClass::unstable
                     : omega == 0.0 ? StabilityClass::neutrally_stable
                                    : StabilityClass::strictly_stable;
  if (all_double) {
    v.algebraic_growth = true;
    v.note = "double root at every k: algebraic growth possible";
  }
  return v;
}

std::string to_string(ModeType t) {
  switch (t) {
    case ModeType::conservative: return "conservative";
    case ModeType::dissipative: return "dissipative";
    case ModeType::neither: return "neither";
  }
  return "?";
}

ModeType classify_mode_type(const PDECoefficients& c, double k_max, int n_k) {
  const auto ks = wavenumber_grid(k_max, n_k);
  double max_abs = 0.0;
  std::vector<double> re(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto r = normal_mode_lambda(c, ks[i]);
    re[i] = max_real(r);
    for (const auto& z : r) max_abs = std::max(max_abs, std::abs(z.real()));
  }
  if (max_abs < 1e-12) return ModeType::conservative;
  // Dissipative: Re lam < 0 except at isolated samples where |Re lam| < 1e-10.
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (re[i] < -1e-10) continue;
    if (re[i] > 1e-10) return ModeType::neither;
    const bool left_ok = i == 0 || re[i - 1] < -1e-10;
    const bool right_ok = i + 1 == re.size() || re[i + 1] < -1e-10;
    if (!left_ok || !right_ok) return ModeType::neither;
  }
  return ModeType::dissipative;
}

double DispersionRelation::omega(double k) const {
  double w = 0.0;
  for (const auto& z : normal_mode_lambda(coeffs, k)) w = std::max(w, std::abs(z.imag()));
  return w;
}

double DispersionRelation::phase_speed(double k) const {
  if (k == 0.0) throw Error("phase speed undefined at k = 0");
  return omega(k) / k;
}

double DispersionRelation::group_velocity_numeric(double k) const {
  const double d = 1e-6 * (1.0 + std::abs(k));
  return (omega(k + d) - omega(k - d)) / (2.0 * d);
}

double DispersionRelation::group_velocity(double k) const {
  if (analytic_group_velocity) {
    // C w^2 = F - A k^2, so w' = -A k / (C w).
    const double w = omega(k);
    if (w == 0.0) return group_velocity_numeric(k);
    return -coeffs.A * k / (coeffs.C * w);
  }
  return group_velocity_numeric(k);
}

double DispersionRelation::omega_second_derivative(double k) const {
  // Wider step than v_g: the second difference loses two orders to rounding.
  const double d = 1e-3 * (1.0 + std::abs(k));
  return (omega(k + d) - 2.0 * omega(k) + omega(k - d)) / (d * d);
}

DispersionRelation dispersion(const PDECoefficients& c, double k_lo, double k_hi) {
  if (classify_mode_type(c) != ModeType::conservative)
    throw Error("dispersion: equation is not conservative");
  DispersionRelation d;
  d.coeffs = c;
  d.k_lo = k_lo;
  d.k_hi = k_hi;
  d.analytic_group_velocity = c.B == 0.0 && c.D == 0.0 && c.E == 0.0 && c.C != 0.0;
  for (double k : linspace(k_lo, k_hi, 200))
    if (std::abs(d.omega_second_derivative(k)) > 1e-8) {
      d.dispersive = true;
      break;
    }
  return d;
}

}  // namespace pdelab
