#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pdelab/classify.hpp"

using namespace pdelab;

namespace {

const std::vector<Point2> kSamples{{0, 0}, {0.5, -1}, {2, 3}};

// A px^2 + 2B px py + C py^2 for a level-set gradient (px, py).
double quadratic(double a, double b, double c, const LinearFamily& f) {
  return a * f.px * f.px + 2 * b * f.px * f.py + c * f.py * f.py;
}

}  // namespace

TEST_CASE("model equations classify by the discriminant") {
  const double c2 = 4.0;
  const auto wave = classify2(SecondOrderPDE2::constant(1, 0, -c2), kSamples);
  CHECK(wave.kind == PdeKind::hyperbolic);
  CHECK(wave.uniform);
  for (double d : wave.discriminants) CHECK(d == c2);
  REQUIRE(wave.omega_plus);
  CHECK(wave.omega_plus->real() == doctest::Approx(2.0));
  CHECK(wave.omega_minus->real() == doctest::Approx(-2.0));

  const auto heat = classify2(SecondOrderPDE2::constant(0, 0, -1, 0, 1), kSamples);
  CHECK(heat.kind == PdeKind::parabolic);
  CHECK(heat.discriminants[0] == 0.0);
  CHECK(!heat.omega_plus);

  const auto laplace = classify2(SecondOrderPDE2::constant(1, 0, 1), {{0.3, 0.3}});
  CHECK(laplace.kind == PdeKind::elliptic);
  CHECK(laplace.discriminants[0] == -1.0);
  CHECK(!laplace.uniform);
  CHECK(laplace.omega_plus->imag() == doctest::Approx(1.0));
}

TEST_CASE("roots solve the characteristic quadratic") {
  const double a = 2, b = 0.5, c = -3;
  const auto r = classify2(SecondOrderPDE2::constant(a, b, c), {{0, 0}});
  for (auto z : {*r.omega_plus, *r.omega_minus}) CHECK(std::abs(a * z * z + 2 * b * z + c) < 1e-12);
  const auto deg = classify2(SecondOrderPDE2::constant(0, 1.5, 3), {{0, 0}});
  CHECK(deg.kind == PdeKind::hyperbolic);
  REQUIRE(deg.degree_one_root);
  CHECK(*deg.degree_one_root == doctest::Approx(-1.0));
}

TEST_CASE("mixed type is an error naming the points") {
  SecondOrderPDE2 tricomi = SecondOrderPDE2::constant(1, 0, 1);
  tricomi.A = [](double, double y) { return y; };  // y u_xx + u_yy
  try {
    classify2(tricomi, {{0, 1}, {0, -1}});
    FAIL("expected mixed type error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("mixed") != std::string::npos);
    CHECK(msg.find("-1") != std::string::npos);
  }
  CHECK_THROWS_AS(classify2(tricomi, {}), Error);
}

TEST_CASE("characteristic families annihilate the principal part") {
  const auto wave = characteristic_families_constant(1, 0, -9);
  REQUIRE(wave.families.size() == 2);
  for (const auto& f : wave.families) CHECK(quadratic(1, 0, -9, f) == doctest::Approx(0.0));
  // Level sets are x +- 3 y = const in the (x, y) naming.
  CHECK(std::abs(wave.families[0].px) == doctest::Approx(3.0));
  const auto heat = characteristic_families_constant(0, 0, 1);
  REQUIRE(heat.families.size() == 1);
  CHECK(heat.families[0].py == 0.0);
  const auto lap = characteristic_families_constant(1, 0, 1);
  CHECK(lap.families.empty());
  CHECK(lap.note == "no real characteristics");
}

TEST_CASE("principal part transform agrees with the chain rule") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 20; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const AffineMap m{u(rng), u(rng), u(rng), u(rng)};
    const auto p = transform_principal_part(a, b, c, m);
    const auto q = principal_part_by_chain_rule(a, b, c, m);
    CHECK(p.xixi == doctest::Approx(q.xixi).epsilon(1e-10));
    CHECK(p.xieta == doctest::Approx(q.xieta).epsilon(1e-10));
    CHECK(p.etaeta == doctest::Approx(q.etaeta).epsilon(1e-10));
    // Sylvester: the discriminant scales by the squared Jacobian.
    const double before = b * b - a * c;
    const double after = 0.25 * p.xieta * p.xieta - p.xixi * p.etaeta;
    CHECK(after == doctest::Approx(before * m.jacobian() * m.jacobian()).epsilon(1e-9));
  }
}

TEST_CASE("canonical forms") {
  const auto h = canonical_transform_constant(1, 0.5, -2);
  CHECK(h.kind == PdeKind::hyperbolic);
  CHECK(h.principal.xieta == 1.0);
  CHECK(std::abs(h.principal.xixi) < 1e-10);
  CHECK(std::abs(h.principal.etaeta) < 1e-10);

  const auto p = canonical_transform_constant(1, 2, 4);
  CHECK(p.kind == PdeKind::parabolic);
  CHECK(std::abs(p.principal.xixi) < 1e-10);
  CHECK(std::abs(p.principal.xieta) < 1e-10);
  CHECK(p.principal.etaeta == 1.0);

  const auto e = canonical_transform_constant(2, 1, 3);
  CHECK(e.kind == PdeKind::elliptic);
  CHECK(e.principal.xixi == 1.0);
  CHECK(std::abs(e.principal.xieta) < 1e-10);
  CHECK(e.principal.etaeta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("n-dimensional classification by eigenvalue signs") {
  const auto heat3 = classify_ndim({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(heat3.kind == PdeKind::parabolic);
  CHECK(heat3.coordinate_scale[0] == 0.0);
  CHECK(heat3.coordinate_scale[2] == 1.0);
  CHECK(classify_ndim({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}).kind == PdeKind::hyperbolic);
  CHECK(classify_ndim({{2, 1, 0}, {1, 2, 0}, {0, 0, 3}}).kind == PdeKind::elliptic);
  CHECK(classify_ndim({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}).kind ==
        PdeKind::ultrahyperbolic);
  // Non-symmetric input is symmetrised first.
  const auto s = classify_ndim({{1, 4}, {0, 1}});
  CHECK(s.symmetrized[0][1] == 2.0);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(3.0));
  CHECK(s.kind == PdeKind::hyperbolic);
  CHECK(s.coordinate_scale[1] == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK_THROWS_AS(classify_ndim({{1}}), Error);
}

TEST_CASE("characteristic surfaces") {
  const std::vector<std::vector<double>> wave{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  CHECK(characteristic_surface_check(wave, {1, 0, 1}).characteristic);  // light cone normal
  const auto s = characteristic_surface_check(wave, {1, 1, 0});
  CHECK(!s.characteristic);
  CHECK(s.value == 2.0);
  CHECK(characteristic_surface_check(wave, {0, 0, 0}).degenerate);
  CHECK_THROWS_AS(characteristic_surface_check(wave, {1, 0}), Error);
}
