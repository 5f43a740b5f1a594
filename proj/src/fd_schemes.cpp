#include "pdelab/fd_schemes.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pdelab/linalg.hpp"

namespace pdelab {

const Snapshot& Evolution::last() const {
  if (snapshots.empty()) throw Error("Evolution: no snapshots");
  return snapshots.back();
}

namespace {

// Collects requested snapshots and watches for blow-up.
class Recorder {
 public:
  Recorder(Evolution& e, const UniformGrid1D& g, const TimeAxis& t, const std::vector<int>& steps,
           const StepObserver& observer)
      : e_(e), grid_(g), time_(t), observer_(observer) {
    if (steps.empty()) {
      wanted_.insert(t.steps());
    } else {
      for (int s : steps) {
        if (s < 0 || s > t.steps()) throw Error("snapshot step outside the time axis");
        wanted_.insert(s);
      }
    }
  }

  // Returns false when the run must stop.
  bool record(int n, const std::vector<double>& u) {
    const double m = norm_linf(u);
    const bool bad = !std::isfinite(m) || m > kBlowUpThreshold;
    e_.max_history.push_back(m);
    if (observer_) observer_(n, time_.time(n), u);
    for (double v : u)
      if (!std::isfinite(v)) {
        e_.blow_up = BlowUp{n, m};
        break;
      }
    if (bad) e_.blow_up = BlowUp{n, m};
    if (bad || wanted_.count(n)) e_.snapshots.push_back({n, time_.time(n), GridFunction(grid_, u)});
    return !bad;
  }

 private:
  Evolution& e_;
  const UniformGrid1D& grid_;
  const TimeAxis& time_;
  const StepObserver& observer_;
  std::set<int> wanted_;
};

void require_dirichlet(const BoundarySpec& b, const char* who) {
  if (b.lo.kind != BoundaryCondition::Kind::dirichlet ||
      b.hi.kind != BoundaryCondition::Kind::dirichlet)
    throw Error(std::string(who) + ": Dirichlet boundaries required");
}

double source_at(const SpaceTimeFn& rho, double x, double t) { return rho ? rho(x, t) : 0.0; }

std::vector<double> initial_values(const RealFn& phi, const UniformGrid1D& g) {
  if (!phi) throw Error("initial condition missing");
  return sample(phi, g).values;
}

}  // namespace

Evolution heat_explicit(const HeatProblem& p) {
  require_dirichlet(p.boundary, "heat_explicit");
  return heat_qscheme(p, 0.0);
}

Evolution heat_qscheme(const HeatProblem& p, double q) {
  require_dirichlet(p.boundary, "heat_qscheme");
  if (!(q >= 0.0 && q <= 1.0)) throw Error("heat_qscheme: Q must lie in [0, 1]");
  if (!(p.diffusivity > 0)) throw Error("heat problem: diffusivity must be positive");
  const auto& g = p.grid;
  const int n = g.cells();
  const double k = p.time.dt();
  const double s = p.s();

  Evolution e;
  e.scheme = q == 0.0 ? "heat-explicit" : "heat-qscheme";
  e.h = g.spacing();
  e.k = k;
  e.s = s;
  e.q = q;
  Recorder rec(e, g, p.time, p.snapshot_steps, p.observer);

  auto u = initial_values(p.initial, g);
  u[0] = p.boundary.lo(p.time.t0());
  u[n] = p.boundary.hi(p.time.t0());
  if (!rec.record(0, u)) return e;

  const int m = n - 1;  // interior unknowns
  std::vector<double> sub(m, -s * q), diag(m, 1.0 + 2.0 * s * q), sup(m, -s * q), rhs(m);
  std::vector<double> next(u.size());
  for (int step = 0; step < p.time.steps(); ++step) {
    const double t0 = p.time.time(step);
    const double t1 = p.time.time(step + 1);
    const double lo1 = p.boundary.lo(t1), hi1 = p.boundary.hi(t1);
    if (q == 0.0) {
      for (int i = 1; i < n; ++i)
        next[i] = s * (u[i + 1] + u[i - 1]) + (1.0 - 2.0 * s) * u[i] +
                  k * source_at(p.source, g.node(i), t0) + (p.reaction ? k * p.reaction(u[i]) : 0.0);
    } else if (m > 0) {
      for (int i = 1; i < n; ++i) {
        const double x = g.node(i);
        const double rho = p.source ? (1.0 - q) * p.source(x, t0) + q * p.source(x, t1) : 0.0;
        rhs[i - 1] = u[i] + s * (1.0 - q) * (u[i + 1] - 2.0 * u[i] + u[i - 1]) + k * rho;
        if (p.reaction) rhs[i - 1] += k * p.reaction(u[i]);
      }
      rhs[0] += s * q * lo1;
      rhs[m - 1] += s * q * hi1;
      const auto x = solve_tridiagonal(sub, diag, sup, rhs);
      std::copy(x.begin(), x.end(), next.begin() + 1);
    }
    next[0] = lo1;
    next[n] = hi1;
    u.swap(next);
    if (!rec.record(step + 1, u)) break;
  }
  return e;
}

Evolution heat_explicit_neumann(const HeatProblem& p) {
  if (p.boundary.lo.kind != BoundaryCondition::Kind::neumann ||
      p.boundary.hi.kind != BoundaryCondition::Kind::neumann)
    throw Error("heat_explicit_neumann: Neumann boundaries required");
  if (!(p.diffusivity > 0)) throw Error("heat problem: diffusivity must be positive");
  const auto& g = p.grid;
  const int n = g.cells();
  const double h = g.spacing();
  const double k = p.time.dt();
  const double s = p.s();

  Evolution e;
  e.scheme = "heat-explicit-neumann";
  e.h = h;
  e.k = k;
  e.s = s;
  Recorder rec(e, g, p.time, p.snapshot_steps, p.observer);

  auto u = initial_values(p.initial, g);
  if (!rec.record(0, u)) return e;
  std::vector<double> next(u.size());
  for (int step = 0; step < p.time.steps(); ++step) {
    const double t = p.time.time(step);
    // Ghost values from the centred boundary derivative.
    const double ghost_lo = u[1] - 2.0 * h * p.boundary.lo(t);
    const double ghost_hi = u[n - 1] + 2.0 * h * p.boundary.hi(t);
    for (int i = 0; i <= n; ++i) {
      const double left = i == 0 ? ghost_lo : u[i - 1];
      const double right = i == n ? ghost_hi : u[i + 1];
      next[i] = s * (right + left) + (1.0 - 2.0 * s) * u[i] + k * source_at(p.source, g.node(i), t);
    }
    u.swap(next);
    if (!rec.record(step + 1, u)) break;
  }
  return e;
}

Evolution wave_leapfrog(const WaveProblem& p) {
  require_dirichlet(p.boundary, "wave_leapfrog");
  if (!(p.speed > 0)) throw Error("wave problem: speed must be positive");
  const auto& g = p.grid;
  const int n = g.cells();
  const double k = p.time.dt();
  const double s = p.s();

  Evolution e;
  e.scheme = "wave-leapfrog";
  e.h = g.spacing();
  e.k = k;
  e.s = s;
  Recorder rec(e, g, p.time, p.snapshot_steps, p.observer);

  auto prev = initial_values(p.initial, g);
  const double t0 = p.time.t0();
  if (!rec.record(0, prev)) return e;
  if (p.time.steps() == 0) return e;

  // First layer from the central difference for u_t(x,0) = psi; the source enters as k^2 rho / 2.
  std::vector<double> cur(prev.size());
  for (int j = 1; j < n; ++j) {
    const double x = g.node(j);
    const double psi = p.velocity ? p.velocity(x) : 0.0;
    cur[j] = 0.5 * s * (prev[j + 1] + prev[j - 1]) + (1.0 - s) * prev[j] + k * psi +
             0.5 * k * k * source_at(p.source, x, t0);
  }
  cur[0] = p.boundary.lo(p.time.time(1));
  cur[n] = p.boundary.hi(p.time.time(1));
  if (!rec.record(1, cur)) return e;

  std::vector<double> next(prev.size());
  for (int step = 1; step < p.time.steps(); ++step) {
    const double t = p.time.time(step);
    for (int j = 1; j < n; ++j)
      next[j] = s * (cur[j + 1] + cur[j - 1]) + 2.0 * (1.0 - s) * cur[j] - prev[j] +
                k * k * source_at(p.source, g.node(j), t);
    next[0] = p.boundary.lo(p.time.time(step + 1));
    next[n] = p.boundary.hi(p.time.time(step + 1));
    prev.swap(cur);
    cur.swap(next);
    if (!rec.record(step + 1, cur)) break;
  }
  return e;
}

Evolution advection_leapfrog(const AdvectionProblem& p) {
  if (!p.a || !p.b) throw Error("advection problem: coefficients a and b required");
  const auto& g = p.grid;
  const int n = g.cells();
  const double h = g.spacing();
  const double k = p.time.dt();

  Evolution e;
  e.scheme = "advection-leapfrog";
  e.h = h;
  e.k = k;
  Recorder rec(e, g, p.time, p.snapshot_steps, p.observer);

  auto a_at = [&](double x, double t) {
    const double a = p.a(x, t);
    if (a == 0.0) {
      std::ostringstream msg;
      msg << "advection_leapfrog: coefficient a vanishes at x=" << x << ", t=" << t;
      throw Error(msg.str());
    }
    return a;
  };

  const int edge = std::max(1, static_cast<int>(std::ceil(0.05 * n)));
  bool warned = false;
  auto check_edges = [&](const std::vector<double>& u, double t) {
    if (warned) return;
    const double m = norm_linf(u);
    double edge_max = 0.0;
    for (int i = 0; i <= edge; ++i) edge_max = std::max({edge_max, std::abs(u[i]), std::abs(u[n - i])});
    if (m > 0 && edge_max > 1e-6 * m) {
      std::ostringstream msg;
      msg << "solution reaches the boundary zones at t=" << t << " (edge max " << edge_max
          << ", sup " << m << ")";
      e.warnings.push_back(msg.str());
      warned = true;
    }
  };

  auto prev = initial_values(p.initial, g);
  const double t0 = p.time.t0();
  prev[0] = prev[n] = 0.0;
  check_edges(prev, t0);
  if (!rec.record(0, prev)) return e;
  if (p.time.steps() == 0) return e;

  double max_courant = 0.0;
  std::vector<double> cur(prev.size(), 0.0);
  for (int j = 1; j < n; ++j) {
    const double x = g.node(j);
    const double a = a_at(x, t0);
    const double v = p.b(x, t0, prev[j]) / a;
    max_courant = std::max(max_courant, std::abs(v) * k / h);
    const double diff = v > 0 ? prev[j] - prev[j - 1] : prev[j + 1] - prev[j];
    cur[j] = prev[j] - k / h * v * diff + k * source_at(p.source, x, t0) / a;
  }
  check_edges(cur, p.time.time(1));
  if (!rec.record(1, cur)) return e;

  std::vector<double> next(prev.size(), 0.0);
  for (int step = 1; step < p.time.steps(); ++step) {
    const double t = p.time.time(step);
    for (int j = 1; j < n; ++j) {
      const double x = g.node(j);
      const double a = a_at(x, t);
      const double v = p.b(x, t, cur[j]) / a;
      max_courant = std::max(max_courant, std::abs(v) * k / h);
      next[j] = prev[j] - k / h * v * (cur[j + 1] - cur[j - 1]) +
                2.0 * k * source_at(p.source, x, t) / a;
    }
    prev.swap(cur);
    cur.swap(next);
    check_edges(cur, p.time.time(step + 1));
    if (!rec.record(step + 1, cur)) break;
  }
  e.s = max_courant;
  return e;
}

ManufacturedData mms_residual_source(const ManufacturedSolution& sol, EquationTag tag, double c2,
                                     double x_lo, double x_hi) {
  ManufacturedData d;
  if (tag == EquationTag::heat) {
    d.source = [u_t = sol.u_t, u_xx = sol.u_xx, c2](double x, double t) {
      return u_t(x, t) - c2 * u_xx(x, t);
    };
  } else {
    d.source = [u_tt = sol.u_tt, u_xx = sol.u_xx, c2](double x, double t) {
      return u_tt(x, t) - c2 * u_xx(x, t);
    };
  }
  d.initial = [u = sol.u](double x) { return u(x, 0.0); };
  if (sol.u_t) d.velocity = [u_t = sol.u_t](double x) { return u_t(x, 0.0); };
  d.boundary_lo = [u = sol.u, x_lo](double t) { return u(x_lo, t); };
  d.boundary_hi = [u = sol.u, x_hi](double t) { return u(x_hi, t); };
  return d;
}

ManufacturedSolution oscillating_gaussian(double a, double b, double x0, double omega) {
  auto z = [x0, omega](double x, double t) { return x - x0 * std::cos(omega * t); };
  auto z_t = [x0, omega](double t) { return x0 * omega * std::sin(omega * t); };
  auto z_tt = [x0, omega](double t) { return x0 * omega * omega * std::cos(omega * t); };
  auto u = [a, b, z](double x, double t) {
    const double zz = z(x, t);
    return a * std::exp(-b * zz * zz);
  };
  ManufacturedSolution m;
  m.u = u;
  m.u_x = [=](double x, double t) { return -2.0 * b * z(x, t) * u(x, t); };
  m.u_xx = [=](double x, double t) {
    const double zz = z(x, t);
    return (4.0 * b * b * zz * zz - 2.0 * b) * u(x, t);
  };
  m.u_t = [=](double x, double t) { return -2.0 * b * z(x, t) * z_t(t) * u(x, t); };
  m.u_tt = [=](double x, double t) {
    const double zz = z(x, t), zt = z_t(t);
    const double g = -2.0 * b * zz * zt;
    return (g * g - 2.0 * b * (zt * zt + zz * z_tt(t))) * u(x, t);
  };
  return m;
}

ManufacturedSolution boundary_matched_solution(RealFn f, RealFn f_t, RealFn g, RealFn g_t,
                                               SmoothFactor hf, double l) {
  // u = h w with w = [x G + (l-x) F] / l, G = g/h(l,.), F = f/h(0,.).
  auto F = [=](double t) { return f(t) / hf.h(0.0, t); };
  auto G = [=](double t) { return g(t) / hf.h(l, t); };
  auto F_t = [=](double t) {
    const double h0 = hf.h(0.0, t);
    return (f_t(t) * h0 - f(t) * hf.h_t(0.0, t)) / (h0 * h0);
  };
  auto G_t = [=](double t) {
    const double hl = hf.h(l, t);
    return (g_t(t) * hl - g(t) * hf.h_t(l, t)) / (hl * hl);
  };
  auto w = [=](double x, double t) { return (x * G(t) + (l - x) * F(t)) / l; };
  auto w_x = [=](double t) { return (G(t) - F(t)) / l; };
  auto w_t = [=](double x, double t) { return (x * G_t(t) + (l - x) * F_t(t)) / l; };
  ManufacturedSolution m;
  m.u = [=](double x, double t) { return hf.h(x, t) * w(x, t); };
  m.u_t = [=](double x, double t) { return hf.h_t(x, t) * w(x, t) + hf.h(x, t) * w_t(x, t); };
  m.u_x = [=](double x, double t) { return hf.h_x(x, t) * w(x, t) + hf.h(x, t) * w_x(t); };
  m.u_xx = [=](double x, double t) {
    return hf.h_xx(x, t) * w(x, t) + 2.0 * hf.h_x(x, t) * w_x(t);
  };
  return m;
}

void export_evolution(const Evolution& e, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["scheme"] = e.scheme;
  manifest["h"] = e.h;
  manifest["k"] = e.k;
  manifest["s"] = e.s;
  manifest["Q"] = e.q;
  manifest["times"] = nlohmann::json::array();
  manifest["files"] = nlohmann::json::array();
  for (const auto& snap : e.snapshots) {
    std::ostringstream name;
    name << "snapshot_" << snap.step << ".csv";
    write_csv((fs::path(dir) / name.str()).string(), snap.u);
    manifest["times"].push_back(snap.t);
    manifest["files"].push_back(name.str());
  }
  if (e.blow_up)
    manifest["blow_up"] = {{"step", e.blow_up->step}, {"max", e.blow_up->max_value}};
  else
    manifest["blow_up"] = nullptr;
  manifest["warnings"] = e.warnings;
  std::ofstream f(fs::path(dir) / "manifest.json");
  if (!f) throw Error("export_evolution: cannot write manifest in " + dir);
  f << manifest.dump(2) << '\n';
}

}  // namespace pdelab
