#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "oracle_support.hpp"
#include "pdelab/grid.hpp"
#include "pdelab/numerics.hpp"

using namespace pdelab;

TEST_CASE("uniform grid nodes and spacing") {
  const UniformGrid1D g(0.0, 1.0, 50);
  CHECK(g.size() == 51);
  CHECK(g.spacing() == doctest::Approx(0.02));
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(50) == 1.0);
  CHECK(g.node(25) == doctest::Approx(0.5));
  CHECK_THROWS_AS(UniformGrid1D(1.0, 0.0, 10), Error);
  CHECK_THROWS_AS(UniformGrid1D(0.0, 1.0, 0), Error);
}

TEST_CASE("time axis") {
  const TimeAxis t(0.1, 10, 1.0);
  CHECK(t.time(0) == 1.0);
  CHECK(t.end() == doctest::Approx(2.0));
}

TEST_CASE("2D grid indexing is row-major in x") {
  const UniformGrid2D g(UniformGrid1D(0, 1, 4), UniformGrid1D(0, 2, 3));
  CHECK(g.size() == 20);
  CHECK(g.index(2, 1) == 7);
  const auto f = sample([](double x, double y) { return x + 10 * y; }, g);
  CHECK(f.at(4, 3) == doctest::Approx(1.0 + 20.0));
}

TEST_CASE("trapezoid inner product of sines") {
  const UniformGrid1D g(0.0, testsupport::pi, 64);
  const auto s1 = sample([](double x) { return std::sin(x); }, g);
  const auto s2 = sample([](double x) { return std::sin(2 * x); }, g);
  CHECK(inner_product(s1, s1) == doctest::Approx(testsupport::pi / 2).epsilon(1e-12));
  CHECK(std::abs(inner_product(s1, s2)) < 1e-13);
}

TEST_CASE("weighted norm and errors") {
  const UniformGrid1D g(0.0, 2.0, 10);
  const auto one = sample([](double) { return 1.0; }, g);
  CHECK(norm_l2(one) == doctest::Approx(std::sqrt(2.0)));
  CHECK(norm_l2(one, Weight([](double) { return 4.0; })) == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK_THROWS_AS(inner_product(one, one, Weight([](double x) { return x - 1; })), Error);
  const auto other = sample([](double) { return 1.0; }, UniformGrid1D(0.0, 2.0, 11));
  CHECK_THROWS_AS(inner_product(one, other), Error);
  CHECK(norm_linf(std::vector<double>{1, -3, 2}) == 3.0);
}

TEST_CASE("sample reports the offending node") {
  const UniformGrid1D g(0.0, 1.0, 4);
  try {
    sample([](double x) { return x > 0.6 ? NAN : x; }, g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("0.75") != std::string::npos);
  }
}

TEST_CASE("csv output round trips with 17 digits") {
  const UniformGrid1D g(0.0, 1.0, 3);
  const auto f = sample([](double x) { return std::exp(x) / 3.0; }, g);
  std::ostringstream os;
  write_csv(os, f);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,u");
  for (int i = 0; i <= 3; ++i) {
    std::getline(is, line);
    const auto comma = line.find(',');
    CHECK(std::stod(line.substr(0, comma)) == g.node(i));
    CHECK(std::stod(line.substr(comma + 1)) == f[i]);
  }
}

TEST_CASE("quadrature helpers") {
  CHECK(adaptive_simpson([](double x) { return std::exp(x); }, 0, 1) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-12));
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return x; }, 0, INFINITY), Error);
  const auto roots = find_roots([](double x) { return std::sin(x); }, 0.5, 10.0, 100, 1e-12);
  REQUIRE(roots.size() == 3);
  CHECK(roots[2] == doctest::Approx(3 * testsupport::pi).epsilon(1e-12));
  CHECK(golden_section_min([](double x) { return (x - 0.3) * (x - 0.3); }, 0, 1, 1e-10) ==
        doctest::Approx(0.3).epsilon(1e-8));
}
