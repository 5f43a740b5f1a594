#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "oracle_support.hpp"
#include "pdelab/fd_schemes.hpp"

using namespace pdelab;
using testsupport::pi;

namespace {

HeatProblem hat_problem(double s, int steps) {
  const UniformGrid1D g(0.0, 1.0, 50);
  const double h = g.spacing();
  return HeatProblem{1.0, g, TimeAxis(s * h * h, steps), testsupport::hat};
}

double max_error(const Snapshot& snap, const std::function<double(double)>& exact) {
  double e = 0;
  for (std::size_t i = 0; i < snap.u.values.size(); ++i)
    e = std::max(e, std::abs(snap.u[i] - exact(snap.u.grid.node(static_cast<int>(i)))));
  return e;
}

// Central differences of a space-time function.
double d_dx(const SpaceTimeFn& f, double x, double t, double e = 1e-5) {
  return (f(x + e, t) - f(x - e, t)) / (2 * e);
}
double d_dt(const SpaceTimeFn& f, double x, double t, double e = 1e-5) {
  return (f(x, t + e) - f(x, t - e)) / (2 * e);
}

}  // namespace

TEST_CASE("explicit heat below the threshold tracks the hat series") {
  const auto p = hat_problem(0.49, 100);
  const auto e = heat_explicit(p);
  REQUIRE(!e.blow_up);
  const double t = e.last().t;
  CHECK(t == doctest::Approx(0.49 * 100 / 2500.0));
  CHECK(max_error(e.last(), [t](double x) { return testsupport::hat_series(x, t); }) < 0.02);
  CHECK(e.s == doctest::Approx(0.49));
  CHECK(e.max_history.size() == 101);
}

TEST_CASE("explicit heat above the threshold amplifies the grid mode") {
  const auto stable = heat_explicit(hat_problem(0.49, 100));
  const auto unstable = heat_explicit(hat_problem(0.51, 100));
  const double t = unstable.last().t;
  const double err = max_error(unstable.last(), [t](double x) { return testsupport::hat_series(x, t); });
  CHECK(err > 0.02);
  // The sawtooth grows by about |1 - 4s| = 1.04 per step, so longer runs blow up.
  const auto longer = heat_explicit(hat_problem(0.51, 1500));
  REQUIRE(longer.blow_up);
  CHECK(longer.blow_up->max_value > kBlowUpThreshold);
  CHECK(longer.blow_up->step < 1500);
  CHECK(longer.snapshots.back().step == longer.blow_up->step);
  CHECK(stable.max_history.back() < 1.0);
}

TEST_CASE("Crank-Nicolson and implicit stay bounded at large s") {
  for (double q : {0.5, 1.0}) {
    auto p = hat_problem(10.0, 200);
    const auto e = heat_qscheme(p, q);
    CHECK(!e.blow_up);
    CHECK(e.q == q);
    CHECK(e.max_history.back() <= 1.0);
  }
  CHECK_THROWS_AS(heat_qscheme(hat_problem(0.4, 10), 1.5), Error);
}

TEST_CASE("implicit scheme reproduces a single sine mode decay") {
  const UniformGrid1D g(0.0, 1.0, 100);
  const double k = 1e-4;
  HeatProblem p{1.0, g, TimeAxis(k, 1000), [](double x) { return std::sin(pi * x); }};
  const auto e = heat_qscheme(p, 0.5);
  const double t = e.last().t;
  CHECK(max_error(e.last(), [t](double x) { return std::exp(-pi * pi * t) * std::sin(pi * x); }) < 1e-4);
}

TEST_CASE("Neumann scheme conserves the trapezoid mass") {
  const UniformGrid1D g(0.0, 1.0, 40);
  HeatProblem p{1.0, g, TimeAxis(0.4 / 1600.0, 500), [](double x) { return std::exp(-20 * (x - 0.3) * (x - 0.3)); },
                {BoundaryCondition::neumann(0.0), BoundaryCondition::neumann(0.0)}};
  p.snapshot_steps = {0, 500};
  const auto e = heat_explicit_neumann(p);
  auto mass = [](const GridFunction& u) {
    double m = 0;
    const std::size_t n = u.values.size();
    for (std::size_t i = 0; i < n; ++i) m += (i == 0 || i + 1 == n ? 0.5 : 1.0) * u[i];
    return m;
  };
  CHECK(mass(e.snapshots[1].u) == doctest::Approx(mass(e.snapshots[0].u)).epsilon(1e-12));
  HeatProblem d = p;
  d.boundary = {};
  CHECK_THROWS_AS(heat_explicit_neumann(d), Error);
  CHECK_THROWS_AS(heat_explicit(p), Error);
}

TEST_CASE("reaction term reproduces exponential growth of a mode") {
  const UniformGrid1D g(0.0, 1.0, 100);
  const double alpha = 12.0;
  HeatProblem p{1.0, g, TimeAxis(2e-5, 5000), [](double x) { return std::sin(pi * x); }};
  p.reaction = [alpha](double u) { return alpha * u; };
  const auto e = heat_explicit(p);
  const double t = e.last().t;
  const double amp = std::exp((alpha - pi * pi) * t);
  CHECK(max_error(e.last(), [&](double x) { return amp * std::sin(pi * x); }) < 1e-3 * amp);
}

TEST_CASE("observer sees every time level") {
  auto p = hat_problem(0.4, 20);
  int calls = 0;
  double last_t = -1;
  p.observer = [&](int n, double t, const std::vector<double>& u) {
    CHECK(n == calls);
    CHECK(u.size() == 51);
    last_t = t;
    ++calls;
  };
  p.snapshot_steps = {5, 10, 20};
  const auto e = heat_explicit(p);
  CHECK(calls == 21);
  CHECK(last_t == doctest::Approx(e.last().t));
  REQUIRE(e.snapshots.size() == 3);
  CHECK(e.snapshots[1].step == 10);
  p.snapshot_steps = {21};
  CHECK_THROWS_AS(heat_explicit(p), Error);
}

TEST_CASE("leapfrog at s = 1 is exact for d'Alembert data") {
  const UniformGrid1D g(-20.0, 20.0, 400);
  auto phi = [](double x) { return std::exp(-x * x); };
  WaveProblem p{1.0, g, TimeAxis(0.1, 60), phi};
  const auto e = wave_leapfrog(p);
  CHECK(e.s == doctest::Approx(1.0));
  const double t = e.last().t;
  CHECK(max_error(e.last(), [&](double x) { return 0.5 * (phi(x + t) + phi(x - t)); }) < 1e-12);
}

TEST_CASE("leapfrog at s = 0.9 is accurate and at s = 1.1 blows up") {
  const UniformGrid1D g(-20.0, 20.0, 400);
  auto phi = [](double x) { return std::exp(-x * x); };
  const double h = g.spacing();
  WaveProblem ok{1.0, g, TimeAxis(std::sqrt(0.9) * h, 60), phi};
  const auto e = wave_leapfrog(ok);
  const double t = e.last().t;
  CHECK(max_error(e.last(), [&](double x) { return 0.5 * (phi(x + t) + phi(x - t)); }) < 0.02);
  WaveProblem bad{1.0, g, TimeAxis(std::sqrt(1.1) * h, 2000), phi};
  CHECK(wave_leapfrog(bad).blow_up.has_value());
}

TEST_CASE("manufactured solutions carry consistent derivatives") {
  const auto m = oscillating_gaussian(1.0, 2.0, 0.8, 2.0);
  for (double x : {-0.7, 0.1, 0.9})
    for (double t : {0.2, 1.3}) {
      CHECK(m.u_x(x, t) == doctest::Approx(d_dx(m.u, x, t)).epsilon(1e-7));
      CHECK(m.u_xx(x, t) == doctest::Approx(d_dx(m.u_x, x, t)).epsilon(1e-7));
      CHECK(m.u_t(x, t) == doctest::Approx(d_dt(m.u, x, t)).epsilon(1e-7));
      CHECK(m.u_tt(x, t) == doctest::Approx(d_dt(m.u_t, x, t)).epsilon(1e-7));
    }
  auto f = [](double t) { return std::cos(t); };
  auto f_t = [](double t) { return -std::sin(t); };
  auto g = [](double t) { return 1 + t * t; };
  auto g_t = [](double t) { return 2 * t; };
  SmoothFactor hf{[](double x, double t) { return std::exp(-t) * (2 + std::sin(x)); },
                  [](double x, double t) { return -std::exp(-t) * (2 + std::sin(x)); },
                  [](double x, double t) { return std::exp(-t) * std::cos(x); },
                  [](double x, double t) { return -std::exp(-t) * std::sin(x); }};
  const auto b = boundary_matched_solution(f, f_t, g, g_t, hf, 2.0);
  for (double t : {0.0, 0.5, 2.0}) {
    CHECK(b.u(0.0, t) == doctest::Approx(f(t)));
    CHECK(b.u(2.0, t) == doctest::Approx(g(t)));
  }
  for (double x : {0.3, 1.1})
    for (double t : {0.4, 1.2}) {
      CHECK(b.u_t(x, t) == doctest::Approx(d_dt(b.u, x, t)).epsilon(1e-7));
      CHECK(b.u_xx(x, t) == doctest::Approx(d_dx(b.u_x, x, t)).epsilon(1e-7));
    }
}

TEST_CASE("leapfrog and Crank-Nicolson converge at second order") {
  const auto m = oscillating_gaussian(1.0, 2.0, 0.8, 2.0);
  std::vector<double> hs, wave_err, heat_err;
  for (int r = 0; r < 4; ++r) {
    const int n = 40 << r;
    const UniformGrid1D g(-1.0, 1.0, n);
    const double h = g.spacing();
    const double t_end = 1.0;
    {
      const auto d = mms_residual_source(m, EquationTag::wave, 1.0, -1.0, 1.0);
      WaveProblem p{1.0, g, TimeAxis(t_end / n, n), d.initial, d.velocity,
                    {BoundaryCondition::dirichlet(d.boundary_lo), BoundaryCondition::dirichlet(d.boundary_hi)},
                    d.source};
      wave_err.push_back(max_error(wave_leapfrog(p).last(), [&](double x) { return m.u(x, t_end); }));
    }
    {
      const auto d = mms_residual_source(m, EquationTag::heat, 1.0, -1.0, 1.0);
      HeatProblem p{1.0, g, TimeAxis(t_end / n, n), d.initial,
                    {BoundaryCondition::dirichlet(d.boundary_lo), BoundaryCondition::dirichlet(d.boundary_hi)},
                    d.source};
      heat_err.push_back(max_error(heat_qscheme(p, 0.5).last(), [&](double x) { return m.u(x, t_end); }));
    }
    hs.push_back(h);
  }
  for (std::size_t i = 1; i < hs.size(); ++i) {
    CHECK(std::log2(wave_err[i - 1] / wave_err[i]) == doctest::Approx(2.0).epsilon(0.1));
    CHECK(std::log2(heat_err[i - 1] / heat_err[i]) == doctest::Approx(2.0).epsilon(0.1));
  }
}

TEST_CASE("advection leapfrog transports a pulse and warns at the edges") {
  const UniformGrid1D g(-5.0, 5.0, 1000);
  AdvectionProblem p{[](double, double) { return 1.0; }, [](double, double, double) { return 1.0; }, g,
                     TimeAxis(0.005, 400), [](double x) { return std::exp(-4 * x * x); }};
  const auto e = advection_leapfrog(p);
  const double t = e.last().t;
  CHECK(max_error(e.last(), [t](double x) { return std::exp(-4 * (x - t) * (x - t)); }) < 5e-3);
  CHECK(e.warnings.empty());
  CHECK(e.s == doctest::Approx(0.5));
  p.time = TimeAxis(0.005, 1000);
  const auto far = advection_leapfrog(p);
  REQUIRE(far.warnings.size() == 1);
  CHECK(far.warnings[0].find("boundary") != std::string::npos);
  p.a = [](double x, double) { return x; };
  CHECK_THROWS_AS(advection_leapfrog(p), Error);
}

TEST_CASE("evolution export writes snapshots and manifest") {
  auto p = hat_problem(0.4, 10);
  p.snapshot_steps = {0, 10};
  const auto e = heat_explicit(p);
  const auto dir = std::filesystem::temp_directory_path() / "pdelab_fd_export";
  std::filesystem::remove_all(dir);
  export_evolution(e, dir.string());
  CHECK(std::filesystem::exists(dir / "snapshot_0.csv"));
  CHECK(std::filesystem::exists(dir / "snapshot_10.csv"));
  std::ifstream f(dir / "manifest.json");
  const std::string text((std::istreambuf_iterator<char>(f)), {});
  CHECK(text.find("\"heat-explicit\"") != std::string::npos);
  CHECK(text.find("\"blow_up\": null") != std::string::npos);
  std::filesystem::remove_all(dir);
}
