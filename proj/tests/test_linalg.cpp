#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "oracle_support.hpp"
#include "pdelab/linalg.hpp"

using namespace pdelab;

namespace {

// Dense five-point matrix built directly from the stencil.
std::vector<std::vector<double>> dense_laplace(int n) {
  const int m = n - 1;
  std::vector<std::vector<double>> a(m * m, std::vector<double>(m * m, 0.0));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      const int k = j * m + i;
      a[k][k] = -4.0;
      if (i > 0) a[k][k - 1] = 1.0;
      if (i < m - 1) a[k][k + 1] = 1.0;
      if (j > 0) a[k][k - m] = 1.0;
      if (j < m - 1) a[k][k + m] = 1.0;
    }
  return a;
}

}  // namespace

TEST_CASE("sparse matrix merges duplicates and drops zeros") {
  const SparseMatrix a(2, 3, {{0, 2, 1.0}, {0, 2, 2.0}, {1, 0, 5.0}, {1, 1, 0.0}, {0, 0, -1.0}});
  CHECK(a.nonzeros() == 3);
  CHECK(a.at(0, 2) == 3.0);
  CHECK(a.at(1, 1) == 0.0);
  const auto y = a.multiply({1.0, 2.0, 3.0});
  CHECK(y[0] == doctest::Approx(8.0));
  CHECK(y[1] == doctest::Approx(5.0));
  CHECK(a.transpose().at(2, 0) == 3.0);
  CHECK(a.transpose().transpose() == a);
  CHECK_THROWS_AS(SparseMatrix(2, 2, {{2, 0, 1.0}}), Error);
}

TEST_CASE("matrix market output is one-based") {
  const SparseMatrix a(2, 2, {{0, 0, 1.5}, {1, 0, -2.0}});
  std::ostringstream os;
  a.write_matrix_market(os);
  const std::string s = os.str();
  CHECK(s.find("%%MatrixMarket") == 0);
  CHECK(s.find("2 2 2") != std::string::npos);
  CHECK(s.find("2 1 -2") != std::string::npos);
}

TEST_CASE("LDU split reassembles the matrix") {
  const auto sys = assemble_laplace_2d(5);
  const auto d = DecompositionLDU::of(sys.matrix);
  const auto dense = sys.matrix.to_dense();
  for (std::size_t i = 0; i < dense.size(); ++i)
    for (std::size_t j = 0; j < dense.size(); ++j) {
      const double v = d.lower.at(i, j) + d.upper.at(i, j) + (i == j ? d.diagonal[i] : 0.0);
      CHECK(v == dense[i][j]);
    }
}

TEST_CASE("five-point matrix matches the stencil and is symmetric") {
  for (int n : {2, 3, 6}) {
    const auto sys = assemble_laplace_2d(n);
    CHECK(sys.matrix.to_dense() == dense_laplace(n));
    CHECK(sys.matrix.transpose() == sys.matrix);
  }
  CHECK_THROWS_AS(assemble_laplace_2d(1), Error);
}

TEST_CASE("closed-form spectrum agrees with a dense eigensolve") {
  for (int n = 2; n <= 8; ++n) {
    auto exact = laplace_spectrum(n);
    std::sort(exact.begin(), exact.end());
    const auto eig = symmetric_eigen(dense_laplace(n));
    REQUIRE(eig.values.size() == exact.size());
    for (std::size_t k = 0; k < exact.size(); ++k) CHECK(std::abs(eig.values[k] - exact[k]) < 1e-9);
  }
}

TEST_CASE("symmetric eigen returns orthonormal vectors") {
  const std::vector<std::vector<double>> a = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  const auto e = symmetric_eigen(a);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      double av = 0;
      for (std::size_t j = 0; j < 3; ++j) av += a[i][j] * e.vectors[k][j];
      CHECK(av == doctest::Approx(e.values[k] * e.vectors[k][i]).epsilon(1e-10));
    }
    for (std::size_t l = 0; l < 3; ++l) {
      double dot = 0;
      for (std::size_t j = 0; j < 3; ++j) dot += e.vectors[k][j] * e.vectors[l][j];
      CHECK(dot == doctest::Approx(k == l ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("iterative solutions agree with dense elimination") {
  const int n = 8;
  const auto sys = assemble_laplace_2d(n);
  const BoundaryData2D f = [](double x, double y) { return std::exp(x) * std::sin(3 * y) + x * y; };
  const auto b = sys.rhs(f);
  const auto ref = testsupport::dense_solve(sys.matrix.to_dense(), b);
  for (auto m : {IterativeMethod::jacobi, IterativeMethod::gauss_seidel}) {
    const auto sol = solve_iterative(sys.matrix, b, m, 1e-12, 100000);
    CHECK(sol.report.converged);
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(sol.x[i] - ref[i]) < 1e-9);
  }
}

TEST_CASE("discrete harmonic boundary data is reproduced") {
  const auto sys = assemble_laplace_2d(16);
  const BoundaryData2D f = [](double x, double y) { return x * x - y * y; };
  const auto sol = solve_iterative(sys.matrix, sys.rhs(f), IterativeMethod::gauss_seidel, 1e-12, 100000);
  const auto u = sys.embed(sol.x, f);
  for (int j = 0; j <= 16; ++j)
    for (int i = 0; i <= 16; ++i) CHECK(std::abs(u.at(i, j) - f(i / 16.0, j / 16.0)) < 1e-10);
}

TEST_CASE("convergence factors follow the spectral radius") {
  const int n = 16;
  const auto sys = assemble_laplace_2d(n);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> x0(sys.matrix.rows());
  for (auto& v : x0) v = u(rng);
  const std::vector<double> zero(x0.size(), 0.0);
  // Zero data: the iterate is the error, so every mode is present.
  const auto j = solve_iterative(sys.matrix, zero, IterativeMethod::jacobi, 1e-8, 100000, x0);
  const auto g = solve_iterative(sys.matrix, zero, IterativeMethod::gauss_seidel, 1e-8, 100000, x0);
  const double pj = predicted_spectral_radius(IterativeMethod::jacobi, n);
  CHECK(pj == doctest::Approx(1 - 2 * std::pow(std::sin(testsupport::pi / 32), 2)));
  CHECK(std::abs(j.report.estimated_rho - pj) / pj < 0.1);
  CHECK(std::abs(g.report.estimated_rho - pj * pj) / (pj * pj) < 0.1);
}

TEST_CASE("Gauss-Seidel needs about half the Jacobi sweeps") {
  const auto sys = assemble_laplace_2d(16);
  const auto b = sys.rhs([](double x, double y) { return x * x - y * y; });
  const auto j = solve_iterative(sys.matrix, b, IterativeMethod::jacobi, 1e-8, 100000);
  const auto g = solve_iterative(sys.matrix, b, IterativeMethod::gauss_seidel, 1e-8, 100000);
  const double ratio = double(g.report.iterations) / j.report.iterations;
  CHECK(ratio >= 0.4);
  CHECK(ratio <= 0.6);
  // The N^2 ln N estimate is only an order of magnitude.
  CHECK(j.report.iterations < 2 * predicted_iteration_count(IterativeMethod::jacobi, 16));
  CHECK(j.report.iterations > 0.5 * predicted_iteration_count(IterativeMethod::jacobi, 16));
}

TEST_CASE("divergence is reported with the history") {
  const SparseMatrix a(2, 2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 1}});
  try {
    solve_iterative(a, {1, 1}, IterativeMethod::jacobi, 1e-10, 1000);
    FAIL("expected divergence");
  } catch (const DivergenceError& e) {
    CHECK(!e.report.converged);
    CHECK(e.report.residual_history.size() > 2);
  }
  const SparseMatrix z(2, 2, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  std::vector<double> x{0, 0};
  CHECK_THROWS_AS(jacobi_sweep(z, {1, 1}, x), Error);
  CHECK(parse_iterative_method("gauss-seidel") == IterativeMethod::gauss_seidel);
  CHECK_THROWS_AS(parse_iterative_method("sor"), Error);
}

TEST_CASE("tridiagonal solve against dense elimination") {
  const std::vector<double> sub{0, -1, -1, -1}, diag{4, 4, 4, 4}, sup{-1, -1, -1, 0}, rhs{1, 2, 3, 4};
  const auto x = solve_tridiagonal(sub, diag, sup, rhs);
  const auto ref = testsupport::dense_solve({{4, -1, 0, 0}, {-1, 4, -1, 0}, {0, -1, 4, -1}, {0, 0, -1, 4}}, rhs);
  for (int i = 0; i < 4; ++i) CHECK(x[i] == doctest::Approx(ref[i]).epsilon(1e-14));
  CHECK_THROWS_AS(solve_tridiagonal({0, 1}, {0, 1}, {1, 0}, {1, 1}), Error);
  const auto ev = tridiag_eigenvalues(2.0, -1.0, 3);
  CHECK(ev[0] == doctest::Approx(2 - 2 * std::cos(testsupport::pi / 4)));
}
