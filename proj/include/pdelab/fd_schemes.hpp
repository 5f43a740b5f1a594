#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdelab/grid.hpp"

namespace pdelab {

struct BoundaryCondition {
  enum class Kind { dirichlet, neumann };
  Kind kind = Kind::dirichlet;
  RealFn g;  // value (Dirichlet) or outward x-derivative u_x (Neumann) as a function of t; empty means 0

  double operator()(double t) const { return g ? g(t) : 0.0; }

  static BoundaryCondition dirichlet(RealFn g) { return {Kind::dirichlet, std::move(g)}; }
  static BoundaryCondition dirichlet(double v) {
    return {Kind::dirichlet, [v](double) { return v; }};
  }
  static BoundaryCondition neumann(RealFn g) { return {Kind::neumann, std::move(g)}; }
  static BoundaryCondition neumann(double v) {
    return {Kind::neumann, [v](double) { return v; }};
  }
};

struct BoundarySpec {
  BoundaryCondition lo, hi;
};

// Called after every accepted time level with the step index, time and node values.
using StepObserver = std::function<void(int, double, const std::vector<double>&)>;

// u_t = c^2 u_xx + rho(x, t)
struct HeatProblem {
  double diffusivity = 1.0;  // c^2
  UniformGrid1D grid;
  TimeAxis time;
  RealFn initial;
  BoundarySpec boundary{};
  SpaceTimeFn source{};
  std::vector<int> snapshot_steps{};  // empty: final step only
  StepObserver observer{};
  // State-dependent source r(u) added to rho, always taken at the old time level.
  std::function<double(double)> reaction{};

  double s() const { return diffusivity * time.dt() / (grid.spacing() * grid.spacing()); }
};

// u_tt = c^2 u_xx + rho(x, t)
struct WaveProblem {
  double speed = 1.0;  // c
  UniformGrid1D grid;
  TimeAxis time;
  RealFn initial;
  RealFn velocity{};
  BoundarySpec boundary{};
  SpaceTimeFn source{};
  std::vector<int> snapshot_steps{};
  StepObserver observer{};

  double s() const {
    const double r = speed * time.dt() / grid.spacing();
    return r * r;
  }
};

// a(x, t) u_t + b(x, t, u) u_x = rho(x, t)
struct AdvectionProblem {
  std::function<double(double, double)> a;
  std::function<double(double, double, double)> b;
  UniformGrid1D grid;
  TimeAxis time;
  RealFn initial;
  SpaceTimeFn source{};
  std::vector<int> snapshot_steps{};
  StepObserver observer{};
};

struct Snapshot {
  int step;
  double t;
  GridFunction u;
};

struct BlowUp {
  int step;
  double max_value;
};

inline constexpr double kBlowUpThreshold = 1e8;

struct Evolution {
  std::string scheme;
  double h = 0, k = 0, s = 0, q = 0;
  std::vector<Snapshot> snapshots;
  std::optional<BlowUp> blow_up;
  std::vector<std::string> warnings;
  std::vector<double> max_history;  // max |u| at every time level

  const Snapshot& last() const;
};

Evolution heat_explicit(const HeatProblem& p);
Evolution heat_qscheme(const HeatProblem& p, double q);
Evolution heat_explicit_neumann(const HeatProblem& p);
Evolution wave_leapfrog(const WaveProblem& p);
Evolution advection_leapfrog(const AdvectionProblem& p);

// Exact solution with its derivatives, for manufactured-source studies.
struct ManufacturedSolution {
  SpaceTimeFn u, u_t, u_tt, u_x, u_xx;
};

enum class EquationTag { heat, wave };

struct ManufacturedData {
  SpaceTimeFn source;
  RealFn initial, velocity;
  RealFn boundary_lo, boundary_hi;
};

// Source making sol an exact solution of u_t - c2 u_xx = rho (heat) or u_tt - c2 u_xx = rho (wave).
ManufacturedData mms_residual_source(const ManufacturedSolution& sol, EquationTag tag, double c2,
                                     double x_lo, double x_hi);

// u = a exp(-b (x - x0 cos(w t))^2)
ManufacturedSolution oscillating_gaussian(double a, double b, double x0, double omega);

// u_e = h(x,t) [x g(t)/h(l,t) + (l-x) f(t)/h(0,t)] / l, which has u(0,t)=f, u(l,t)=g.
struct SmoothFactor {
  SpaceTimeFn h, h_t, h_x, h_xx;
};
ManufacturedSolution boundary_matched_solution(RealFn f, RealFn f_t, RealFn g, RealFn g_t,
                                               SmoothFactor h, double l);

// One CSV per snapshot plus manifest.json in dir.
void export_evolution(const Evolution& e, const std::string& dir);

}  // namespace pdelab
