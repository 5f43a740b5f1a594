#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle_support.hpp"
#include "pdelab/characteristics.hpp"

using namespace pdelab;
using testsupport::pi;

namespace {

double gauss(double x) { return std::exp(-x * x); }

CharacteristicProblem burgers_problem(RealFn phi, double lo, double hi) {
  return CharacteristicProblem::make_quasilinear([](double, double, double u) { return u; },
                                                 [](double, double, double) { return 1.0; },
                                                 [](double, double, double) { return 0.0; },
                                                 [](double tau) { return tau; },
                                                 [](double) { return 0.0; }, std::move(phi), lo, hi);
}

// -1 / phi' minimised by an independent scan plus golden section.
double oracle_shock(const std::function<double(double)>& dphi, double lo, double hi) {
  auto g = [&](double x) {
    const double d = dphi(x);
    return d < 0 ? -1.0 / d : 1e300;
  };
  return g(testsupport::golden_min(g, lo, hi));
}

}  // namespace

TEST_CASE("linear transport with decay matches the closed form") {
  const auto p = CharacteristicProblem::make_linear(
      [](double, double) { return 2.0; }, [](double, double) { return 1.0; },
      [](double, double) { return -0.5; }, [](double, double) { return 0.0; },
      [](double tau) { return tau; }, [](double) { return 0.0; }, gauss, -4.0, 4.0);
  CHECK(p.linear);
  const auto fam = integrate_family(p, 161, 100, 1.0);
  for (double x : {-1.0, 0.3, 1.7})
    for (double t : {0.2, 0.9}) {
      const double exact = gauss(x - 2 * t) * std::exp(-0.5 * t);
      CHECK(evaluate_solution(fam, x, t) == doctest::Approx(exact).epsilon(1e-8));
    }
  const auto st = fam.state_at(0.5, 1.0);
  CHECK(st.x == doctest::Approx(2.0));
  CHECK(st.t == doctest::Approx(0.5));
  CHECK(st.u == doctest::Approx(gauss(1.0) * std::exp(-0.25)).epsilon(1e-10));
}

TEST_CASE("variable-speed transport follows curved characteristics") {
  // u_t + x u_x = 0: u = phi(x e^{-t}).
  const auto p = CharacteristicProblem::make_linear(
      [](double x, double) { return x; }, [](double, double) { return 1.0; },
      [](double, double) { return 0.0; }, [](double, double) { return 0.0; },
      [](double tau) { return tau; }, [](double) { return 0.0; }, gauss, -3.0, 3.0);
  const auto fam = integrate_family(p, 121, 200, 1.0);
  for (double x : {-1.5, 0.4, 2.0})
    CHECK(evaluate_solution(fam, x, 0.8) == doctest::Approx(gauss(x * std::exp(-0.8))).epsilon(1e-8));
}

TEST_CASE("initial Jacobian and characteristic points") {
  auto one = [](double, double, double) { return 1.0; };
  auto zero = [](double, double, double) { return 0.0; };
  const auto along = CharacteristicProblem::make_quasilinear(one, one, zero, [](double tau) { return tau; },
                                                             [](double tau) { return tau; }, gauss, 0, 1);
  CHECK(detect_characteristic_points(along, 50).fully_characteristic);
  const auto parab = CharacteristicProblem::make_quasilinear(
      one, one, zero, [](double tau) { return tau; }, [](double tau) { return tau * tau; }, gauss, 0, 1);
  CHECK(initial_jacobian(parab, 0.2) == doctest::Approx(2 * 0.2 - 1));
  const auto scan = detect_characteristic_points(parab, 50);
  CHECK(!scan.fully_characteristic);
  REQUIRE(scan.points.size() == 1);
  CHECK(scan.points[0] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("analytic shock times") {
  CHECK(std::abs(shock_time([](double) { return -1.0; }, -1, 1).t_star - 1.0) < 1e-8);
  const auto s = shock_time([](double x) { return std::cos(x); }, -5, 5);
  CHECK(std::abs(s.t_star - 1.0) < 1e-8);
  REQUIRE(s.tau_star.size() == 2);
  CHECK(s.tau_star[0] == doctest::Approx(-pi).epsilon(1e-6));
  CHECK(s.tau_star[1] == doctest::Approx(pi).epsilon(1e-6));
  auto tent_d = [](double x) { return std::abs(x) >= 1 ? 0.0 : (x < 0 ? 1.0 : -1.0); };
  CHECK(std::abs(shock_time(tent_d, -2, 2).t_star - 1.0) < 1e-8);
  CHECK(s.method == "analytic-formula");
  CHECK(std::isinf(shock_time([](double) { return 1.0; }, 0, 1).t_star));
}

TEST_CASE("shock times against the golden-section oracle") {
  auto runge_d = [](double x) { return -2 * x / ((1 + x * x) * (1 + x * x)); };
  auto sech_d = [](double x) { return -std::tanh(x) / std::cosh(x); };
  const double runge_oracle = oracle_shock(runge_d, -10, 10);
  const double sech_oracle = oracle_shock(sech_d, -10, 10);
  CHECK(runge_oracle == doctest::Approx(8 * std::sqrt(3.0) / 9).epsilon(1e-10));
  CHECK(sech_oracle == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(std::abs(shock_time(runge_d, -10, 10).t_star - runge_oracle) < 1e-8);
  CHECK(std::abs(shock_time(sech_d, -10, 10).t_star - sech_oracle) < 1e-8);
}

TEST_CASE("boundary infimum is flagged") {
  // phi = -x^2 on [0, 2]: -1/phi' = 1/(2x) decreases to the right edge.
  const auto r = shock_time([](double x) { return -2 * x; }, 0, 2);
  CHECK(r.at_domain_boundary);
  CHECK(r.t_star == doctest::Approx(0.25));
  CHECK(!shock_time([](double x) { return std::cos(x); }, -5, 5).at_domain_boundary);
}

TEST_CASE("Jacobian zero of the integrated family matches the formula") {
  auto phi = [](double x) { return 1 / (1 + x * x); };
  const auto fam = integrate_family(burgers_problem(phi, -5, 5), 2001, 400, 2.0);
  const auto r = shock_time_from_family(fam);
  CHECK(r.method == "jacobian-zero");
  CHECK(r.t_star == doctest::Approx(8 * std::sqrt(3.0) / 9).epsilon(2e-3));
  REQUIRE(r.tau_star.size() == 1);
  CHECK(r.tau_star[0] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-2));
}

TEST_CASE("implicit Burgers solution agrees with characteristics") {
  auto phi = [](double x) { return 1 / (1 + x * x); };
  auto dphi = [](double x) { return -2 * x / ((1 + x * x) * (1 + x * x)); };
  const auto b = make_burgers(phi, dphi, -10, 10);
  const auto fam = integrate_family(burgers_problem(phi, -10, 10), 801, 200, 1.0);
  for (double x : {-0.5, 0.5, 1.0, 2.0}) {
    const double u = burgers_implicit(b, x, 1.0);
    CHECK(u - phi(x - u) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(evaluate_solution(fam, x, 1.0) == doctest::Approx(u).epsilon(1e-6));
  }
  CHECK_THROWS_AS(burgers_implicit(b, 0.5, 1.6), Error);
}
