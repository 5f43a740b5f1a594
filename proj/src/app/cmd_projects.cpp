#include <cmath>
#include <random>

#include "commands_impl.hpp"
#include "pdelab/characteristics.hpp"
#include "pdelab/oracles.hpp"
#include "pdelab/spectral.hpp"
#include "pdelab/vonneumann.hpp"
#include "util.hpp"

namespace pdelab::app {

using namespace detail;

namespace {

void write_snapshots(const Report& rep, const std::string& prefix, const Evolution& e) {
  for (const auto& s : e.snapshots)
    write_csv((rep.dir() / (prefix + "_" + std::to_string(s.step) + ".csv")).string(), s.u);
}

void orders_gate(Report& rep, const std::string& name, const std::vector<double>& errs, double lo,
                 double hi) {
  const auto orders = observed_orders(errs);
  for (std::size_t i = 0; i < orders.size(); ++i)
    rep.gate(name + "-order-" + std::to_string(i + 1), orders[i] >= lo && orders[i] <= hi, orders[i], lo,
             "expected in [" + format_g17(lo) + ", " + format_g17(hi) + "]");
}

// Max-norm error at t_end of the leapfrog on the moving-Gaussian manufactured solution.
double wave_mms_error(const ManufacturedSolution& sol, double l, int n, double t_end) {
  const auto md = mms_residual_source(sol, EquationTag::wave, 1.0, -l, l);
  const UniformGrid1D grid(-l, l, n);
  const int steps = n;  // k = t_end / n
  WaveProblem p{1.0, grid, TimeAxis(t_end / steps, steps), md.initial, md.velocity};
  p.boundary = {BoundaryCondition::dirichlet(md.boundary_lo), BoundaryCondition::dirichlet(md.boundary_hi)};
  p.source = md.source;
  const Evolution e = wave_leapfrog(p);
  return grid_error(e.last().u, [&](double x) { return sol.u(x, t_end); }).max;
}

}  // namespace

int cmd_project1(const RunConfig& cfg, Report& rep, std::ostream& log) {
  auto& S = rep.summary();
  // b) Gaussian on a long interval against d'Alembert.
  {
    const double a = cfg.num("gauss_a"), b = cfg.num("gauss_b");
    const auto phi = [=](double x) { return a * std::exp(-b * x * x); };
    const UniformGrid1D grid(-10.0, 10.0, 200);
    nlohmann::json runs = nlohmann::json::array();
    for (double s : {0.9, 1.1}) {
      WaveProblem p{1.0, grid, TimeAxis(std::sqrt(s) * grid.spacing(), 60), phi};
      p.snapshot_steps = {0, 20, 40, 60};
      const Evolution e = wave_leapfrog(p);
      write_snapshots(rep, "b_s" + format_g17(s), e);
      double err = 0.0;
      for (const auto& snap : e.snapshots)
        err = std::max(err, grid_error(snap.u, [&](double x) {
                              return dalembert(phi, nullptr, 1.0, x, snap.t);
                            }).max);
      if (!std::isfinite(err)) err = INFINITY;
      runs.push_back({{"s", s}, {"max_error", err}, {"blow_up", e.blow_up.has_value()}});
      if (s < 1)
        rep.gate("b-gaussian-s0.9", err < 0.02, err, 0.02);
      else
        rep.gate("b-gaussian-s1.1-blows-up", e.blow_up.has_value() || err > 1.0,
                 e.blow_up ? INFINITY : err, 1.0);
    }
    S["b"] = runs;
  }
  // c) Manufactured moving Gaussian, dyadic refinement.
  {
    const double t_end = cfg.num("mms_t_end");
    const int n0 = cfg.integer("mms_n0"), levels = cfg.integer("refinements") + 1;
    nlohmann::json cases = nlohmann::json::array();
    const std::vector<std::array<double, 4>> params = {{1.0, 2.0, 0.8, 2.0}, {1.0, 8.0, 0.3, 3.0}};
    for (std::size_t c = 0; c < params.size(); ++c) {
      const auto [a, b, x0, w] = params[c];
      const auto sol = oscillating_gaussian(a, b, x0, w);
      std::vector<double> errs;
      std::vector<std::vector<double>> rows;
      for (int i = 0, n = n0; i < levels; ++i, n *= 2) {
        errs.push_back(wave_mms_error(sol, 1.0, n, t_end));
        rows.push_back({2.0 / n, errs.back()});
      }
      rep.table("c_refinement_" + std::to_string(c + 1) + ".csv", {"h", "max_error"}, rows);
      orders_gate(rep, "c-mms-case" + std::to_string(c + 1), errs, 1.8, 2.2);
      cases.push_back({{"a", a}, {"b", b}, {"x0", x0}, {"omega", w}, {"errors", errs},
                       {"orders", observed_orders(errs)}, {"boundary_lo_max", a * std::exp(-b * (1 - x0) * (1 - x0))}});
    }
    S["c"] = cases;
  }
  // d) Left end driven by sin(omega t), checked against the lifted modal solution.
  {
    const double l = 1.0, L = 2.0 * l;
    const int n = cfg.integer("driven_n"), K = cfg.integer("driven_K");
    const double t_end = cfg.num("driven_t_end");
    nlohmann::json runs = nlohmann::json::array();
    for (double w : {cfg.num("omega"), kPi / L}) {
      const UniformGrid1D grid(-l, l, n);
      const int steps = static_cast<int>(std::ceil(t_end / (0.9 * grid.spacing())));
      WaveProblem p{1.0, grid, TimeAxis(t_end / steps, steps), [](double) { return 0.0; }};
      p.boundary = {BoundaryCondition::dirichlet([w](double t) { return std::sin(w * t); }),
                    BoundaryCondition::dirichlet(0.0)};
      const Evolution e = wave_leapfrog(p);
      // y = x + l in [0, L]; u = (1 - y/L) sin(wt) + sum N_k M_k.
      const ModeSet modes = sine_modes(L, K);
      std::vector<double> n0(K, 0.0), dn0(K), amp(K);
      std::vector<ModeForcing> F(K);
      for (int k = 1; k <= K; ++k) {
        const double ck = std::sqrt(2.0 / L) * L / (k * kPi);  // (1 - y/L, M_k)
        dn0[k - 1] = -w * ck;
        F[k - 1] = ModeForcing::sinusoid(w * w * ck, w);
      }
      const auto N = solve_hyperbolic_modes(modes, n0, dn0, F, {}, t_end);
      const double diff = grid_error(e.last().u, [&](double x) {
                            const double y = x + l;
                            return (1.0 - y / L) * std::sin(w * t_end) + inverse(N, modes, y);
                          }).max;
      double early = 0.0, late = 0.0;
      const std::size_t m = e.max_history.size();
      std::vector<std::vector<double>> hist;
      for (std::size_t i = 0; i < m; ++i) {
        double& slot = i < m / 4 ? early : late;
        slot = std::max(slot, e.max_history[i]);
        hist.push_back({static_cast<double>(i) * e.k, e.max_history[i]});
      }
      rep.table("d_history_omega" + format_g17(w) + ".csv", {"t", "max_abs_u"}, hist);
      write_csv((rep.dir() / ("d_final_omega" + format_g17(w) + ".csv")).string(), e.last().u);
      runs.push_back({{"omega", w}, {"fd_vs_modal_max_diff", diff}, {"max_first_quarter", early},
                      {"max_rest", late}, {"resonant", std::abs(w - kPi / L) < 1e-12}});
      rep.gate("d-driven-fd-vs-modal-omega" + format_g17(w), diff < 0.05, diff, 0.05);
    }
    S["d"] = runs;
  }
  log << "project1 report in " << rep.dir().string() << '\n';
  return 0;
}

int cmd_project2(const RunConfig& cfg, Report& rep, std::ostream& log) {
  auto& S = rep.summary();
  // a) Von Neumann threshold of the centred scheme.
  const double nu_star = stability_threshold(advection_leapfrog_symbol(), {{"nu", 0.5}}, "nu", 0.5, 2.0);
  S["a"] = {{"nu_threshold", nu_star}};
  rep.gate("a-threshold-nu", std::abs(nu_star - 1.0) < 1e-6, nu_star, 1.0, "|nu* - 1| < 1e-6");

  // b) Constant-speed runs on both sides of the threshold.
  {
    const UniformGrid1D grid(-20.0, 20.0, 800);
    const auto phi = [](double x) { return std::exp(-4.0 * (x + 5.0) * (x + 5.0)); };
    nlohmann::json runs = nlohmann::json::array();
    for (double nu : {0.9, 1.1}) {
      const double k = nu * grid.spacing();
      const int steps = static_cast<int>(std::lround(10.0 / k));
      AdvectionProblem p{[](double, double) { return 1.0; }, [](double, double, double) { return 1.0; },
                         grid, TimeAxis(k, steps), phi};
      const Evolution e = advection_leapfrog(p);
      const double t = e.last().t;
      double err = grid_error(e.last().u, [&](double x) { return phi(x - t); }).max;
      if (!std::isfinite(err)) err = INFINITY;
      runs.push_back({{"nu", nu}, {"steps", steps}, {"max_error", err}, {"blow_up", e.blow_up.has_value()}});
      if (nu < 1)
        rep.gate("b-stable-nu0.9", !e.blow_up && err < 0.05, err, 0.05);
      else
        rep.gate("b-unstable-nu1.1", e.blow_up.has_value() || err > 1.0, e.blow_up ? INFINITY : err, 1.0);
    }
    S["b"] = runs;
  }

  // c) Characteristics of (3x^2+1) u_t + 2t u_x = 0, d) the same by finite differences.
  {
    const double gamma = cfg.num("gamma");
    const RealFn phi = [gamma](double x) { return std::exp(-gamma * x * x); };
    auto prob = CharacteristicProblem::make_linear(
        [](double, double t) { return 2.0 * t; }, [](double x, double) { return 3.0 * x * x + 1.0; },
        [](double, double) { return 0.0; }, [](double, double) { return 0.0; },
        [](double tau) { return tau; }, [](double) { return 0.0; }, phi, -3.0, 3.0);
    const auto fam = integrate_family(prob, 25, 400, 1.5);
    std::string polylines;
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < fam.tau().size(); ++i) {
      for (std::size_t j = 0; j < fam.s().size(); ++j) {
        const auto id = fam.index(i, j);
        if (fam.t()[id] > 2.0) break;
        rows.push_back({fam.tau()[i], fam.s()[j], fam.x()[id], fam.t()[id], fam.u()[id]});
        polylines += format_g17(fam.x()[id]) + " " + format_g17(fam.t()[id]) + "\n";
      }
      polylines += "\n";
    }
    rep.table("c_characteristics.csv", {"tau", "s", "x", "t", "u"}, rows);
    rep.text("c_base_characteristics.dat", polylines);
    double char_err = 0.0;
    for (double t : {0.5, 1.0, 1.5})
      for (double x : {-1.0, -0.3, 0.0, 0.4, 1.2})
        char_err = std::max(char_err, std::abs(evaluate_solution(fam, x, t) - project2c_exact(phi, x, t)));
    rep.gate("c-characteristics-vs-cubic", char_err < 1e-6, char_err, 1e-6);

    const UniformGrid1D grid(-5.0, 5.0, 1000);
    const double t_end = 1.5;
    const int steps = static_cast<int>(std::ceil(t_end / (0.5 * grid.spacing() / (2.0 * t_end))));
    AdvectionProblem p{[](double x, double) { return 3.0 * x * x + 1.0; },
                       [](double, double t, double) { return 2.0 * t; }, grid, TimeAxis(t_end / steps, steps), phi};
    p.snapshot_steps = {steps / 3, 2 * steps / 3, steps};
    const Evolution e = advection_leapfrog(p);
    double fd_err = 0.0;
    nlohmann::json snaps = nlohmann::json::array();
    for (const auto& snap : e.snapshots) {
      const double err = grid_error(snap.u, [&](double x) { return project2c_exact(phi, x, snap.t); }).max;
      fd_err = std::max(fd_err, err);
      snaps.push_back({{"t", snap.t}, {"max_error", err}});
      write_csv((rep.dir() / ("d_fd_" + std::to_string(snap.step) + ".csv")).string(), snap.u);
      write_csv((rep.dir() / ("d_exact_" + std::to_string(snap.step) + ".csv")).string(),
                sample([&](double x) { return project2c_exact(phi, x, snap.t); }, grid));
    }
    rep.gate("d-fd-vs-exact", fd_err < 0.01, fd_err, 0.01);
    S["c"] = {{"max_error_characteristics", char_err}};
    S["d"] = snaps;
  }

  // e) Burgers shock times: formula and steepening of the FD solution.
  {
    struct Case {
      const char* name;
      double expected, l;
    };
    const double grad = cfg.num("gradient_limit"), h = cfg.num("shock_h");
    nlohmann::json table = nlohmann::json::array();
    std::vector<std::vector<double>> rows;
    for (const Case& c : {Case{"tent", 1.0, 4.0}, Case{"runge", 8.0 * std::sqrt(3.0) / 9.0, 50.0},
                          Case{"sech", 2.0, 30.0}}) {
      const Profile phi = parse_profile(c.name);
      const ShockReport r = shock_time(phi.df, -c.l, c.l);
      const UniformGrid1D grid(-c.l, c.l, static_cast<int>(std::lround(2.0 * c.l / h)));
      const double t_end = 1.1 * c.expected;
      const double speed = norm_linf(sample(phi.f, grid));
      const int steps = static_cast<int>(std::ceil(t_end / (0.5 * h / speed)));
      AdvectionProblem p{[](double, double) { return 1.0; }, [](double, double, double u) { return u; }, grid,
                         TimeAxis(t_end / steps, steps), phi.f};
      double t_detect = INFINITY;
      p.observer = [&](int, double t, const std::vector<double>& u) {
        if (std::isfinite(t_detect)) return;
        for (std::size_t i = 0; i + 1 < u.size(); ++i)
          if (std::abs(u[i + 1] - u[i]) / grid.spacing() > grad) {
            t_detect = t;
            return;
          }
      };
      advection_leapfrog(p);
      const double rel_formula = std::abs(r.t_star - c.expected) / c.expected;
      const double rel_fd = std::abs(t_detect - c.expected) / c.expected;
      rep.gate(std::string("e-shock-formula-") + c.name, rel_formula < 1e-8, r.t_star, c.expected);
      rep.gate(std::string("e-shock-fd-") + c.name, rel_fd < 0.05, t_detect, c.expected, "within 5%");
      table.push_back({{"profile", c.name}, {"t_star", r.t_star}, {"expected", c.expected},
                       {"fd_detection", std::isfinite(t_detect) ? nlohmann::json(t_detect) : nlohmann::json(nullptr)}});
      rows.push_back({c.expected, r.t_star, t_detect});
    }
    rep.table("e_shock_table.csv", {"expected", "formula", "fd_detection"}, rows);
    S["e"] = table;
  }
  log << "project2 report in " << rep.dir().string() << '\n';
  return 0;
}

int cmd_project3(const RunConfig& cfg, Report& rep, std::ostream& log) {
  auto& S = rep.summary();
  const double l = 1.0;
  // b) Crank-Nicolson on the boundary-matched manufactured solution.
  {
    SmoothFactor hf{[](double x, double t) { return std::exp(-0.5 * t) * (1.0 + 0.5 * x * x); },
                    [](double x, double t) { return -0.5 * std::exp(-0.5 * t) * (1.0 + 0.5 * x * x); },
                    [](double x, double t) { return std::exp(-0.5 * t) * x; },
                    [](double, double t) { return std::exp(-0.5 * t); }};
    const auto sol = boundary_matched_solution([](double t) { return 1.0 + 0.5 * std::sin(2.0 * t); },
                                               [](double t) { return std::cos(2.0 * t); },
                                               [](double t) { return std::cos(t); },
                                               [](double t) { return -std::sin(t); }, hf, l);
    const auto md = mms_residual_source(sol, EquationTag::heat, 1.0, 0.0, l);
    const int n0 = cfg.integer("mms_n0"), levels = cfg.integer("refinements") + 1;
    const double t_end = 1.0;
    std::vector<double> errs;
    std::vector<std::vector<double>> rows;
    for (int i = 0, n = n0; i < levels; ++i, n *= 2) {
      HeatProblem p{1.0, UniformGrid1D(0.0, l, n), TimeAxis(t_end / n, n), md.initial};
      p.boundary = {BoundaryCondition::dirichlet(md.boundary_lo), BoundaryCondition::dirichlet(md.boundary_hi)};
      p.source = md.source;
      const Evolution e = heat_qscheme(p, 0.5);
      errs.push_back(grid_error(e.last().u, [&](double x) { return sol.u(x, t_end); }).max);
      rows.push_back({l / n, errs.back()});
      if (i == levels - 1) {
        write_csv((rep.dir() / "b_fd.csv").string(), e.last().u);
        write_csv((rep.dir() / "b_exact.csv").string(), sample([&](double x) { return sol.u(x, t_end); }, p.grid));
      }
    }
    rep.table("b_refinement.csv", {"h", "max_error"}, rows);
    orders_gate(rep, "b-crank-nicolson", errs, 1.8, 2.2);
    S["b"] = {{"errors", errs}, {"orders", observed_orders(errs)}};
  }
  // c) Finite differences against the lifted finite Fourier transform.
  {
    const RealFn f = [](double t) { return std::sin(t); };
    const RealFn f_t = [](double t) { return std::cos(t); };
    const SpaceTimeFn rho = [](double x, double t) { return std::exp(-t) * std::sin(2.0 * kPi * x); };
    const Profile phi = parse_profile("hat");
    const double t_end = 1.0;
    const int n = 200, steps = 1000, K = cfg.integer("K");
    HeatProblem p{1.0, UniformGrid1D(0.0, l, n), TimeAxis(t_end / steps, steps), phi.f};
    p.boundary = {BoundaryCondition::dirichlet(f), BoundaryCondition::dirichlet(0.0)};
    p.source = rho;
    const Evolution e = heat_qscheme(p, 0.5);

    const BoundaryLift lift = boundary_lift_1d(f, f_t, nullptr, nullptr, l);
    const ModeSet modes = sine_modes(l, K);
    const auto free = solve_parabolic_modes(modes, forward(lift.initial(phi.f), modes), {}, {}, t_end);
    const DuhamelHeat forced(lift.homogenized_source(rho), 1.0, l, K);
    const auto forced_n = forced.coefficients(t_end);
    auto spectral = [&](double x) {
      double s = lift.v(x, t_end);
      for (int k = 0; k < K; ++k) s += (free[k] + forced_n[k]) * modes.eigenfunctions[k](x);
      return s;
    };
    const double diff = grid_error(e.last().u, spectral).max;
    write_csv((rep.dir() / "c_fd.csv").string(), e.last().u);
    write_csv((rep.dir() / "c_spectral.csv").string(), sample(spectral, p.grid));
    rep.gate("c-fd-vs-spectral", diff < 1e-3, diff, 1e-3);
    S["c"] = {{"max_diff", diff}, {"K", K}};
  }
  // d) Nonlinear source lam u (1 - u^2) on (0, pi).
  {
    const double eps = cfg.num("eps"), t_end = cfg.num("sweep_t_end");
    const int n = cfg.integer("sweep_n");
    std::mt19937_64 rng(static_cast<std::uint64_t>(cfg.integer("seed")));
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> r(4);
    for (auto& v : r) v = U(rng);
    r[0] = std::abs(r[0]) + 0.5;  // positive projection on the first mode
    const ModeSet modes = sine_modes(kPi, 4);
    const RealFn u0 = [&](double x) { return eps * inverse(r, modes, x); };
    const UniformGrid1D grid(0.0, kPi, n);
    const double k = 0.4 * grid.spacing() * grid.spacing();
    const int steps = static_cast<int>(std::ceil(t_end / k));
    const auto m1 = sample(modes.eigenfunctions[0], grid);
    const auto m2 = sample(sine_modes(kPi, 2).eigenfunctions[1], grid);
    nlohmann::json sweep = nlohmann::json::array();
    for (double lam : cfg.list("lambdas")) {
      HeatProblem p{1.0, grid, TimeAxis(t_end / steps, steps), u0};
      p.reaction = [lam](double u) { return lam * u * (1.0 - u * u); };
      p.snapshot_steps = {0, steps};
      const Evolution e = heat_explicit(p);
      const auto& uf = e.last().u;
      const double n1 = inner_product(uf, m1), n2 = inner_product(uf, m2);
      const double sup0 = norm_linf(e.snapshots.front().u), sup = norm_linf(uf);
      const double limit = stationary_limit(lam, 1.0, n1);
      write_csv((rep.dir() / ("d_lambda" + format_g17(lam) + ".csv")).string(), uf);
      nlohmann::json row = {{"lambda", lam}, {"N1", n1}, {"N2", n2}, {"max_u", sup}, {"single_mode_limit", limit}};
      if (lam < 1.0) {
        rep.gate("d-decay-lambda" + format_g17(lam), sup < 1e-6 * sup0, sup / sup0, 1e-6);
        row["regime"] = "decay";
      } else if (lam < 4.0) {
        const double rel = std::abs(n1 - limit) / std::abs(limit);
        row["relative_deviation"] = rel;
        row["regime"] = "saturation";
        rep.gate("d-saturation-lambda" + format_g17(lam), rel < 0.02, rel, 0.02);
      } else {
        row["regime"] = "multi-mode (reported only)";
      }
      // Galerkin in the w-scaling u = eps w, same initial data.
      const auto g = nonlinear_heat_galerkin(lam, eps, {r[0], r[1], r[2], r[3], 0, 0, 0, 0}, 8, t_end, t_end);
      row["galerkin_N1"] = eps * g.modes.back()[0];
      sweep.push_back(row);
    }
    S["d"] = sweep;
  }
  log << "project3 report in " << rep.dir().string() << '\n';
  return 0;
}

double cubic_root(double c) {
  // Cardano for xi^3 + xi - c = 0 (p = 1 > 0, one real root), then one Newton polish.
  const double q = std::sqrt(0.25 * c * c + 1.0 / 27.0);
  double xi = std::cbrt(0.5 * c + q) + std::cbrt(0.5 * c - q);
  xi -= (xi * xi * xi + xi - c) / (3.0 * xi * xi + 1.0);
  return xi;
}

double project2c_exact(const RealFn& phi, double x, double t) {
  return phi(cubic_root(x * x * x + x - t * t));
}

}  // namespace pdelab::app
