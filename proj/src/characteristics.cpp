#include "pdelab/characteristics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdelab/numerics.hpp"

namespace pdelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using State = std::array<double, 3>;

State rhs(const CharacteristicProblem& p, const State& y) {
  return {p.a(y[0], y[1], y[2]), p.b(y[0], y[1], y[2]), p.c(y[0], y[1], y[2])};
}

State initial_state(const CharacteristicProblem& p, double tau) {
  return {p.x0(tau), p.t0(tau), p.phi(tau)};
}

State advance(const CharacteristicProblem& p, State y, double s_from, double s_to, double ds) {
  const double span = s_to - s_from;
  if (span == 0.0) return y;
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(span) / ds - 1e-9)));
  const double h = span / n;
  auto f = [&p](double, const State& st) { return rhs(p, st); };
  for (int i = 0; i < n; ++i) y = rk4_step(f, s_from + i * h, y, h);
  return y;
}

bool finite(const State& y) {
  return std::isfinite(y[0]) && std::isfinite(y[1]) && std::isfinite(y[2]);
}

double deriv(const RealFn& f, double tau) {
  const double d = 1e-5 * (1.0 + std::abs(tau));
  return (f(tau + d) - f(tau - d)) / (2.0 * d);
}

}  // namespace

CharacteristicProblem CharacteristicProblem::make_linear(SpaceTimeFn a, SpaceTimeFn b,
                                                         SpaceTimeFn c, SpaceTimeFn d, RealFn x0,
                                                         RealFn t0, RealFn phi, double tau_lo,
                                                         double tau_hi) {
  CharacteristicProblem p;
  p.a = [a](double x, double t, double) { return a(x, t); };
  p.b = [b](double x, double t, double) { return b(x, t); };
  p.c = [c, d](double x, double t, double v) {
    return (c ? c(x, t) * v : 0.0) + (d ? d(x, t) : 0.0);
  };
  p.x0 = std::move(x0);
  p.t0 = std::move(t0);
  p.phi = std::move(phi);
  p.tau_lo = tau_lo;
  p.tau_hi = tau_hi;
  p.linear = true;
  return p;
}

CharacteristicProblem CharacteristicProblem::make_quasilinear(StateFn a, StateFn b, StateFn c,
                                                              RealFn x0, RealFn t0, RealFn phi,
                                                              double tau_lo, double tau_hi) {
  CharacteristicProblem p;
  p.a = std::move(a);
  p.b = std::move(b);
  p.c = c ? std::move(c) : StateFn([](double, double, double) { return 0.0; });
  p.x0 = std::move(x0);
  p.t0 = std::move(t0);
  p.phi = std::move(phi);
  p.tau_lo = tau_lo;
  p.tau_hi = tau_hi;
  return p;
}

CharacteristicFamily::CharacteristicFamily(CharacteristicProblem p, std::vector<double> tau,
                                           std::vector<double> s, double ds)
    : p_(std::move(p)), tau_(std::move(tau)), s_(std::move(s)), ds_(ds) {
  const std::size_t n = tau_.size() * s_.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  x_.assign(n, nan);
  t_.assign(n, nan);
  u_.assign(n, nan);
  delta_.assign(n, nan);
  truncated_.assign(tau_.size(), false);
}

CharacteristicState CharacteristicFamily::state_at(double s, double tau) const {
  const auto y = advance(p_, initial_state(p_, tau), 0.0, s, ds_);
  return {y[0], y[1], y[2]};
}

CharacteristicFamily integrate_family(const CharacteristicProblem& p, int n_tau, int n_s,
                                      double s_max, double s_min) {
  if (n_tau < 2 || n_s < 2) throw Error("integrate_family: n_tau and n_s must be at least 2");
  if (!(s_max > s_min)) throw Error("integrate_family: need s_max > s_min");
  if (!p.a || !p.b || !p.c || !p.x0 || !p.t0 || !p.phi)
    throw Error("integrate_family: incomplete problem");
  const double ds = (s_max - s_min) / n_s;
  CharacteristicFamily f(p, linspace(p.tau_lo, p.tau_hi, static_cast<std::size_t>(n_tau)),
                         linspace(s_min, s_max, static_cast<std::size_t>(n_s) + 1), ds);
  auto step = [&p](double, const State& y) { return rhs(p, y); };
  for (std::size_t i = 0; i < f.tau_.size(); ++i) {
    State y = advance(p, initial_state(p, f.tau_[i]), 0.0, s_min, ds);
    for (std::size_t j = 0; j < f.s_.size(); ++j) {
      if (j > 0) y = rk4_step(step, f.s_[j - 1], y, ds);
      if (!finite(y)) {
        f.truncated_[i] = true;
        break;
      }
      const auto k = f.index(i, j);
      f.x_[k] = y[0];
      f.t_[k] = y[1];
      f.u_[k] = y[2];
    }
  }
  // Delta = a dt/dtau - b dx/dtau, central in tau, one-sided at the ends.
  const std::size_t nt = f.tau_.size();
  for (std::size_t i = 0; i < nt; ++i) {
    const std::size_t il = i == 0 ? 0 : i - 1;
    const std::size_t ir = i + 1 == nt ? i : i + 1;
    const double dtau = f.tau_[ir] - f.tau_[il];
    for (std::size_t j = 0; j < f.s_.size(); ++j) {
      const auto k = f.index(i, j);
      const double x_tau = (f.x_[f.index(ir, j)] - f.x_[f.index(il, j)]) / dtau;
      const double t_tau = (f.t_[f.index(ir, j)] - f.t_[f.index(il, j)]) / dtau;
      f.delta_[k] = p.a(f.x_[k], f.t_[k], f.u_[k]) * t_tau - p.b(f.x_[k], f.t_[k], f.u_[k]) * x_tau;
    }
  }
  return f;
}

double evaluate_solution(const CharacteristicFamily& f, double x, double t) {
  const auto& p = f.problem();
  // Seed from the nearest non-characteristic stored point.
  double best = kInf, s = 0.0, tau = 0.0;
  for (std::size_t i = 0; i < f.tau().size(); ++i)
    for (std::size_t j = 0; j < f.s().size(); ++j) {
      const auto k = f.index(i, j);
      if (!std::isfinite(f.delta()[k]) || std::abs(f.delta()[k]) <= 1e-12) continue;
      const double d = std::hypot(f.x()[k] - x, f.t()[k] - t);
      if (d < best) {
        best = d;
        s = f.s()[j];
        tau = f.tau()[i];
      }
    }
  if (!std::isfinite(best)) throw Error("evaluate_solution: characteristic or uncovered point");

  const double dtau_fd = 1e-6 * (1.0 + std::abs(tau));
  for (int it = 0; it < 50; ++it) {
    const auto st = f.state_at(s, tau);
    const double rx = st.x - x, rt = st.t - t;
    if (std::hypot(rx, rt) < 1e-10) return st.u;
    const auto sp = f.state_at(s, tau + dtau_fd);
    const auto sm = f.state_at(s, tau - dtau_fd);
    const double x_tau = (sp.x - sm.x) / (2.0 * dtau_fd);
    const double t_tau = (sp.t - sm.t) / (2.0 * dtau_fd);
    const double x_s = p.a(st.x, st.t, st.u), t_s = p.b(st.x, st.t, st.u);
    const double det = x_s * t_tau - x_tau * t_s;
    if (std::abs(det) <= 1e-12) throw Error("evaluate_solution: characteristic or uncovered point");
    const double d_s = (t_tau * rx - x_tau * rt) / det;
    const double d_tau = (-t_s * rx + x_s * rt) / det;
    s -= d_s;
    tau -= d_tau;
  }
  std::ostringstream msg;
  msg << "evaluate_solution: Newton did not converge at (" << x << ", " << t << ")";
  throw Error(msg.str());
}

double initial_jacobian(const CharacteristicProblem& p, double tau) {
  const double x = p.x0(tau), t = p.t0(tau), u = p.phi(tau);
  return p.a(x, t, u) * deriv(p.t0, tau) - p.b(x, t, u) * deriv(p.x0, tau);
}

CharacteristicPointScan detect_characteristic_points(const CharacteristicProblem& p, int n_tau) {
  if (n_tau < 2) throw Error("detect_characteristic_points: n_tau must be at least 2");
  CharacteristicPointScan out;
  auto delta = [&p](double tau) { return initial_jacobian(p, tau); };
  double max_abs = 0.0;
  for (double tau : linspace(p.tau_lo, p.tau_hi, static_cast<std::size_t>(n_tau) + 1))
    max_abs = std::max(max_abs, std::abs(delta(tau)));
  if (max_abs < 1e-10) {
    out.fully_characteristic = true;
    return out;
  }
  out.points = find_roots(delta, p.tau_lo, p.tau_hi, n_tau, 1e-10);
  return out;
}

ShockReport shock_time(const RealFn& dphi, double tau_lo, double tau_hi, int n) {
  if (n < 100) throw Error("shock_time: need at least 100 samples");
  if (!(tau_hi > tau_lo)) throw Error("shock_time: empty tau domain");
  ShockReport r;
  r.method = "analytic-formula";
  auto g = [&dphi](double tau) {
    const double d = dphi(tau);
    return d < -1e-14 ? -1.0 / d : kInf;
  };
  const auto tau = linspace(tau_lo, tau_hi, static_cast<std::size_t>(n));
  std::vector<double> val(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) val[i] = g(tau[i]);

  // Candidate minima; runs of equal values count once.
  std::vector<std::pair<double, double>> refined;  // (t, tau)
  const double spacing = tau[1] - tau[0];
  std::size_t i = 0;
  while (i < val.size()) {
    std::size_t j = i;
    while (j + 1 < val.size() && val[j + 1] == val[i]) ++j;
    if (std::isfinite(val[i])) {
      const bool left_ok = i == 0 || val[i - 1] > val[i];
      const bool right_ok = j + 1 == val.size() || val[j + 1] > val[i];
      if (left_ok && right_ok) {
        const double a = tau[i == 0 ? 0 : i - 1];
        const double b = tau[j + 1 == val.size() ? j : j + 1];
        double best_tau = tau[i], best = val[i];
        if (j == i) {
          const double tm = golden_section_min(g, a, b, 1e-10);
          if (g(tm) < best) {
            best = g(tm);
            best_tau = tm;
          }
        }
        refined.emplace_back(best, best_tau);
      }
    }
    i = j + 1;
  }
  if (refined.empty()) {
    r.t_star = kInf;
    r.note = "no breakdown: phi' >= 0 on the domain";
    return r;
  }
  double t_star = kInf;
  for (const auto& [t, _] : refined) t_star = std::min(t_star, t);
  r.t_star = t_star;
  for (const auto& [t, loc] : refined)
    if (t <= t_star + 1e-9 * std::max(1.0, t_star)) {
      if (r.tau_star.empty() || std::abs(loc - r.tau_star.back()) > 2.0 * spacing)
        r.tau_star.push_back(loc);
    }
  for (double loc : r.tau_star)
    if (loc - tau_lo <= spacing || tau_hi - loc <= spacing) {
      const bool lo_side = loc - tau_lo <= spacing;
      // A minimum pushed against the edge: the infimum may lie outside the domain.
      const double inner = g(lo_side ? tau_lo + 2.0 * spacing : tau_hi - 2.0 * spacing);
      if (inner > t_star) {
        r.at_domain_boundary = true;
        r.note = "infimum at domain boundary";
      }
    }
  return r;
}

ShockReport shock_time_from_family(const CharacteristicFamily& f) {
  ShockReport r;
  r.method = "jacobian-zero";
  r.t_star = kInf;
  for (std::size_t i = 0; i < f.tau().size(); ++i) {
    const double d0 = f.delta()[f.index(i, 0)];
    if (!std::isfinite(d0) || d0 == 0.0) continue;
    for (std::size_t j = 1; j < f.s().size(); ++j) {
      const auto k = f.index(i, j), km = f.index(i, j - 1);
      const double d = f.delta()[k];
      if (!std::isfinite(d)) break;
      if ((d < 0) != (d0 < 0) || d == 0.0) {
        const double dm = f.delta()[km];
        const double w = dm / (dm - d);
        const double t = f.t()[km] + w * (f.t()[k] - f.t()[km]);
        if (t < r.t_star) {
          r.t_star = t;
          r.tau_star = {f.tau()[i]};
        }
        break;
      }
    }
  }
  if (!std::isfinite(r.t_star)) r.note = "Jacobian does not vanish on the integrated range";
  return r;
}

BurgersSolution make_burgers(RealFn phi, RealFn dphi, double tau_lo, double tau_hi, int n) {
  BurgersSolution b{std::move(phi), std::move(dphi), {}};
  b.shock = shock_time(b.dphi, tau_lo, tau_hi, n);
  return b;
}

double burgers_implicit(const BurgersSolution& b, double x, double t) {
  if (t >= b.shock.t_star) {
    std::ostringstream msg;
    msg << "burgers_implicit: post-shock time t=" << t << " >= t*=" << b.shock.t_star;
    throw Error(msg.str());
  }
  double u = b.phi(x);
  auto g = [&](double v) { return v - b.phi(x - v * t); };
  double gu = g(u);
  for (int it = 0; it < 100; ++it) {
    if (std::abs(gu) <= 1e-12 * (1.0 + std::abs(u))) return u;
    const double dg = 1.0 + t * b.dphi(x - u * t);
    if (dg == 0.0) break;
    double step = -gu / dg;
    double next = u + step, gn = g(next);
    for (int half = 0; half < 40 && !(std::abs(gn) < std::abs(gu)); ++half) {
      step *= 0.5;
      next = u + step;
      gn = g(next);
    }
    if (next == u) return u;
    u = next;
    gu = gn;
  }
  if (std::abs(gu) <= 1e-10 * (1.0 + std::abs(u))) return u;
  std::ostringstream msg;
  msg << "burgers_implicit: Newton did not converge at (" << x << ", " << t << ")";
  throw Error(msg.str());
}

}  // namespace pdelab
