#pragma once

#include <string>
#include <vector>

#include "pdelab/common.hpp"

namespace pdelab {

// f(x, t, u)
using StateFn = std::function<double(double, double, double)>;

// a u_x + b u_t = c along the curve (x0(tau), t0(tau)) carrying u = phi(tau);
// characteristics solve dx/ds = a, dt/ds = b, du/ds = c.
struct CharacteristicProblem {
  StateFn a, b, c;
  RealFn x0, t0, phi;
  double tau_lo = 0.0, tau_hi = 1.0;
  bool linear = false;

  // a(x,t) v_x + b(x,t) v_t = c(x,t) v + d(x,t)
  static CharacteristicProblem make_linear(SpaceTimeFn a, SpaceTimeFn b, SpaceTimeFn c,
                                           SpaceTimeFn d, RealFn x0, RealFn t0, RealFn phi,
                                           double tau_lo, double tau_hi);
  // a(x,t,u) u_x + b(x,t,u) u_t = c(x,t,u)
  static CharacteristicProblem make_quasilinear(StateFn a, StateFn b, StateFn c, RealFn x0,
                                                RealFn t0, RealFn phi, double tau_lo,
                                                double tau_hi);
};

struct CharacteristicState {
  double x, t, u;
};

class CharacteristicFamily {
 public:
  CharacteristicFamily(CharacteristicProblem p, std::vector<double> tau, std::vector<double> s,
                       double ds);

  const CharacteristicProblem& problem() const { return p_; }
  const std::vector<double>& tau() const { return tau_; }
  const std::vector<double>& s() const { return s_; }
  std::size_t index(std::size_t i_tau, std::size_t j_s) const { return i_tau * s_.size() + j_s; }
  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& t() const { return t_; }
  const std::vector<double>& u() const { return u_; }
  const std::vector<double>& delta() const { return delta_; }
  // Per tau: true when the integration stopped early on a non-finite state.
  const std::vector<bool>& truncated() const { return truncated_; }
  double step() const { return ds_; }

  // State at arbitrary (s, tau) by RK4 from s = 0 with step close to step().
  CharacteristicState state_at(double s, double tau) const;

 private:
  friend CharacteristicFamily integrate_family(const CharacteristicProblem&, int, int, double,
                                               double);
  CharacteristicProblem p_;
  std::vector<double> tau_, s_;
  double ds_;
  std::vector<double> x_, t_, u_, delta_;
  std::vector<bool> truncated_;
};

// RK4 along s in [s_min, s_max] with n_s steps, for n_tau uniformly spaced tau values.
CharacteristicFamily integrate_family(const CharacteristicProblem& p, int n_tau, int n_s,
                                      double s_max, double s_min = 0.0);

// u at (x, t) by Newton inversion of (s, tau) -> (x, t).
double evaluate_solution(const CharacteristicFamily& f, double x, double t);

// Jacobian a dt0/dtau - b dx0/dtau on the initial curve.
double initial_jacobian(const CharacteristicProblem& p, double tau);

struct CharacteristicPointScan {
  std::vector<double> points;
  bool fully_characteristic = false;
};

CharacteristicPointScan detect_characteristic_points(const CharacteristicProblem& p, int n_tau);

struct ShockReport {
  double t_star = 0.0;  // +inf when no breakdown
  std::vector<double> tau_star;
  std::string method;   // "analytic-formula" or "jacobian-zero"
  bool at_domain_boundary = false;
  std::string note;
};

// t* = min over tau of -1/phi'(tau) on [tau_lo, tau_hi].
ShockReport shock_time(const RealFn& dphi, double tau_lo, double tau_hi, int n = 2000);

// First zero of the Jacobian along each integrated characteristic.
ShockReport shock_time_from_family(const CharacteristicFamily& f);

// Inviscid Burgers u_t + u u_x = 0 with u(x, 0) = phi(x), before the shock.
struct BurgersSolution {
  RealFn phi, dphi;
  ShockReport shock;
};

BurgersSolution make_burgers(RealFn phi, RealFn dphi, double tau_lo, double tau_hi, int n = 2000);

// Solves u = phi(x - u t); throws once t >= t*.
double burgers_implicit(const BurgersSolution& b, double x, double t);

}  // namespace pdelab
