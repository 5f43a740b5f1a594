#include <cmath>
#include <fstream>

#include "commands_impl.hpp"
#include "pdelab/characteristics.hpp"
#include "pdelab/linalg.hpp"
#include "pdelab/oracles.hpp"
#include "pdelab/spectral.hpp"
#include "util.hpp"

namespace pdelab::app {

using namespace detail;

namespace {

// Heat equation on [0, l] by sine modes, with the constant end values lifted out.
Evolution spectral_heat(const HeatProblem& p, double l, double lo, double hi, int K) {
  const double c2 = p.diffusivity;
  const ModeSet modes = sine_modes(l, K, c2);
  auto lift = [=](double x) { return (x * hi + (l - x) * lo) / l; };
  const auto n0 = forward([&](double x) { return p.initial(x) - lift(x); }, modes);
  Evolution e;
  e.scheme = "heat-spectral";
  e.h = p.grid.spacing();
  e.k = p.time.dt();
  e.s = p.s();
  std::vector<int> steps = p.snapshot_steps;
  if (steps.empty()) steps.push_back(p.time.steps());
  for (int n : steps) {
    const double t = p.time.time(n);
    const auto N = solve_parabolic_modes(modes, n0, {}, {}, t);
    e.snapshots.push_back({n, t, sample([&](double x) { return lift(x) + inverse(N, modes, x); }, p.grid)});
    e.max_history.push_back(norm_linf(e.snapshots.back().u));
  }
  return e;
}

}  // namespace

int cmd_solve_heat(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const double l = cfg.num("l"), c = cfg.num("c"), s = cfg.num("s"), Q = cfg.num("Q");
  const int N = cfg.integer("N"), steps = cfg.integer("steps"), K = cfg.integer("K");
  const auto phi = cfg.profile("phi");
  const std::string method = cfg.choice("method", {"fd", "spectral"});
  const std::string oracle = cfg.choice("oracle", {"none", "heat-series"});
  const std::string bc = cfg.choice("bc", {"dirichlet", "neumann"});
  const double lo = cfg.num("bc_lo"), hi = cfg.num("bc_hi");
  if (!(c > 0)) throw Error("config key 'c': must be positive");

  const UniformGrid1D grid(0.0, l, N);
  const double h = grid.spacing();
  HeatProblem p{c * c, grid, TimeAxis(s * h * h / (c * c), steps), phi.f};
  p.snapshot_steps = snapshot_steps(cfg, steps);
  if (bc == "dirichlet")
    p.boundary = {BoundaryCondition::dirichlet(lo), BoundaryCondition::dirichlet(hi)};
  else
    p.boundary = {BoundaryCondition::neumann(lo), BoundaryCondition::neumann(hi)};

  Evolution e;
  if (method == "spectral") {
    if (bc != "dirichlet") throw Error("config key 'method': spectral route needs bc=dirichlet");
    e = spectral_heat(p, l, lo, hi, K);
  } else if (bc == "neumann") {
    if (Q != 0.0) throw Error("config key 'Q': Neumann runs use the explicit scheme (Q=0)");
    e = heat_explicit_neumann(p);
  } else {
    e = heat_qscheme(p, Q);
  }
  export_evolution(e, rep.dir().string());

  std::vector<ErrorRow> errors;
  if (oracle == "heat-series") {
    if (bc != "dirichlet") throw Error("config key 'oracle': heat-series needs bc=dirichlet");
    auto lift = [=](double x) { return (x * hi + (l - x) * lo) / l; };
    const auto series = heat_series([&](double x) { return phi(x) - lift(x); }, c, l, K);
    for (const auto& snap : e.snapshots)
      errors.push_back(compare_snapshot(
          snap, [&](double x) { return lift(x) + series(x, snap.t); }, rep));
  }
  write_manifest(rep, cfg, e, errors);
  evolution_gates(rep, cfg, e, errors);
  log << e.scheme << ": s=" << format_g17(e.s) << " k=" << format_g17(e.k)
      << (e.blow_up ? " blow-up at step " + std::to_string(e.blow_up->step) : "") << '\n';
  for (const auto& r : errors)
    log << "  t=" << format_g17(r.t) << " max=" << format_g17(r.max) << " l2=" << format_g17(r.l2) << '\n';
  return 0;
}

int cmd_solve_wave(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const double l = cfg.num("l"), c = cfg.num("c"), s = cfg.num("s"), h_req = cfg.num("h");
  const int steps = cfg.integer("steps");
  const auto phi = cfg.profile("phi");
  const auto psi = cfg.profile("psi");
  const std::string oracle = cfg.choice("oracle", {"none", "dalembert", "wave-series"});
  if (!(c > 0) || !(h_req > 0) || !(l > 0)) throw Error("config keys 'c', 'h', 'l' must be positive");
  const int N = static_cast<int>(std::lround(2.0 * l / h_req));
  const UniformGrid1D grid(-l, l, N);
  const double h = grid.spacing();

  WaveProblem p{c, grid, TimeAxis(std::sqrt(s) * h / c, steps), phi.f, psi.f};
  p.boundary = {BoundaryCondition::dirichlet(cfg.num("bc_lo")),
                BoundaryCondition::dirichlet(cfg.num("bc_hi"))};
  p.snapshot_steps = snapshot_steps(cfg, steps);
  const Evolution e = wave_leapfrog(p);
  export_evolution(e, rep.dir().string());

  std::vector<ErrorRow> errors;
  if (oracle == "dalembert") {
    for (const auto& snap : e.snapshots)
      errors.push_back(compare_snapshot(
          snap, [&](double x) { return dalembert(phi.f, psi.f, c, x, snap.t); }, rep));
  } else if (oracle == "wave-series") {
    // Zero ends on [-l, l], shifted to [0, 2l].
    const auto series = wave_series([&](double y) { return phi(y - l); },
                                    [&](double y) { return psi(y - l); }, c, 2.0 * l, cfg.integer("K"));
    for (const auto& snap : e.snapshots)
      errors.push_back(compare_snapshot(snap, [&](double x) { return series(x + l, snap.t); }, rep));
  }
  write_manifest(rep, cfg, e, errors);
  evolution_gates(rep, cfg, e, errors);
  log << e.scheme << ": s=" << format_g17(e.s) << " k=" << format_g17(e.k)
      << (e.blow_up ? " blow-up at step " + std::to_string(e.blow_up->step) : "") << '\n';
  for (const auto& r : errors)
    log << "  t=" << format_g17(r.t) << " max=" << format_g17(r.max) << " l2=" << format_g17(r.l2) << '\n';
  return 0;
}

int cmd_solve_laplace(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const int N = cfg.integer("N");
  const std::string bname = cfg.choice("boundary", {"harmonic-x2y2", "harmonic-xy", "exp-sin"});
  const IterativeMethod method = parse_iterative_method(cfg.str("method"));
  const double tol = cfg.num("tol");
  const int max_iter = cfg.integer("max_iter");

  BoundaryData2D f;
  bool discrete_exact = true;
  if (bname == "harmonic-x2y2") {
    f = [](double x, double y) { return x * x - y * y; };
  } else if (bname == "harmonic-xy") {
    f = [](double x, double y) { return x * y; };
  } else {
    f = [](double x, double y) { return std::exp(kPi * x) * std::sin(kPi * y); };
    discrete_exact = false;
  }
  const LaplaceSystem sys = assemble_laplace_2d(N);
  const auto b = sys.rhs(f);
  nlohmann::json m;
  m["command"] = cfg.command();
  m["params"] = to_json(cfg.values());
  m["method"] = to_string(method);
  m["predicted_rho"] = predicted_spectral_radius(method, N);
  m["predicted_iterations"] = predicted_iteration_count(method, N);
  IterationReport report;
  std::vector<double> x;
  try {
    auto sol = solve_iterative(sys.matrix, b, method, tol, max_iter);
    report = sol.report;
    x = sol.x;
  } catch (const DivergenceError& d) {
    report = d.report;
  }
  m["iterations"] = report.iterations;
  m["converged"] = report.converged;
  m["measured_rho"] = report.estimated_rho;
  std::vector<std::vector<double>> hist;
  for (std::size_t i = 0; i < report.residual_history.size(); ++i)
    hist.push_back({static_cast<double>(i), report.residual_history[i]});
  rep.table("residuals.csv", {"iteration", "residual"}, hist);
  rep.gate("converged", report.converged, report.iterations, max_iter);
  if (!x.empty()) {
    const auto u = sys.embed(x, f);
    write_csv((rep.dir() / "solution.csv").string(), u);
    double err = 0.0;
    for (int j = 0; j <= N; ++j)
      for (int i = 0; i <= N; ++i)
        err = std::max(err, std::abs(u.at(i, j) - f(u.grid.x().node(i), u.grid.y().node(j))));
    m["max_error_vs_boundary_function"] = err;
    if (discrete_exact) rep.gate("discrete-harmonic-error", err < 1e-4, err, 1e-4);
  }
  rep.json("manifest.json", m);
  log << to_string(method) << ": " << report.iterations << " iterations, rho~"
      << format_g17(report.estimated_rho) << " (predicted "
      << format_g17(predicted_spectral_radius(method, N)) << ")\n";
  return 0;
}

int cmd_solve_advection(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const std::string eq = cfg.choice("equation", {"constant", "project2c", "burgers"});
  const double l = cfg.num("l"), cfl = cfg.num("cfl"), t_end = cfg.num("t_end"), b0 = cfg.num("b0");
  const int N = cfg.integer("N");
  const auto phi = cfg.profile("phi");
  const std::string oracle = cfg.choice("oracle", {"none", "characteristics"});
  const double grad_limit = cfg.num("detect_gradient");
  const UniformGrid1D grid(-l, l, N);
  const double h = grid.spacing();

  AdvectionProblem p{nullptr, nullptr, grid, TimeAxis(1.0, 0), phi.f};
  double speed = 0.0;
  if (eq == "constant") {
    p.a = [](double, double) { return 1.0; };
    p.b = [b0](double, double, double) { return b0; };
    speed = std::abs(b0);
  } else if (eq == "project2c") {
    p.a = [](double x, double) { return 3.0 * x * x + 1.0; };
    p.b = [](double, double t, double) { return 2.0 * t; };
    speed = 2.0 * t_end;
  } else {
    p.a = [](double, double) { return 1.0; };
    p.b = [](double, double, double u) { return u; };
    speed = norm_linf(sample(phi.f, grid));
  }
  const double k_max = cfl * h / std::max(speed, 1e-12);
  const int steps = std::max(1, static_cast<int>(std::ceil(t_end / k_max)));
  p.time = TimeAxis(t_end / steps, steps);
  p.snapshot_steps = snapshot_steps(cfg, steps);

  // First time the discrete slope exceeds grad_limit.
  double t_detect = INFINITY;
  if (grad_limit > 0)
    p.observer = [&](int, double t, const std::vector<double>& u) {
      if (std::isfinite(t_detect)) return;
      for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if (std::abs(u[i + 1] - u[i]) / h > grad_limit) {
          t_detect = t;
          return;
        }
    };
  const Evolution e = advection_leapfrog(p);
  export_evolution(e, rep.dir().string());

  std::vector<ErrorRow> errors;
  if (oracle == "characteristics") {
    std::optional<BurgersSolution> burgers;
    if (eq == "burgers") burgers = make_burgers(phi.f, phi.df, -l, l);
    for (const auto& snap : e.snapshots) {
      RealFn exact;
      if (eq == "constant") {
        exact = [&](double x) { return phi(x - b0 * snap.t); };
      } else if (eq == "project2c") {
        exact = [&](double x) { return project2c_exact(phi.f, x, snap.t); };
      } else {
        if (snap.t >= burgers->shock.t_star) continue;
        exact = [&](double x) { return burgers_implicit(*burgers, x, snap.t); };
      }
      errors.push_back(compare_snapshot(snap, exact, rep));
    }
  }
  write_manifest(rep, cfg, e, errors);
  evolution_gates(rep, cfg, e, errors);
  if (grad_limit > 0) {
    rep.summary()["gradient_detection_time"] = std::isfinite(t_detect) ? nlohmann::json(t_detect) : nlohmann::json(nullptr);
    log << "max|u_x| > " << format_g17(grad_limit) << " first at t="
        << (std::isfinite(t_detect) ? format_g17(t_detect) : std::string("never")) << '\n';
  }
  for (const auto& w : e.warnings) log << "warning: " << w << '\n';
  log << e.scheme << ": max Courant " << format_g17(e.s) << ", " << steps << " steps\n";
  return 0;
}

}  // namespace pdelab::app
