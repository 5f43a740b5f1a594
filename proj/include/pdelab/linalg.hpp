#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pdelab/common.hpp"
#include "pdelab/grid.hpp"

namespace pdelab {

struct Triplet {
  int row, col;
  double value;
};

// Compressed-row matrix. Columns strictly increase within a row; zeros are dropped.
class SparseMatrix {
 public:
  SparseMatrix(int n_rows, int n_cols, std::vector<Triplet> entries);

  int rows() const { return n_rows_; }
  int cols() const { return n_cols_; }
  std::size_t nonzeros() const { return values_.size(); }
  const std::vector<std::size_t>& offsets() const { return offsets_; }
  const std::vector<int>& columns() const { return columns_; }
  const std::vector<double>& values() const { return values_; }

  double at(int i, int j) const;
  std::vector<double> multiply(const std::vector<double>& x) const;
  SparseMatrix transpose() const;
  std::vector<std::vector<double>> to_dense() const;
  bool operator==(const SparseMatrix& o) const;

  void write_matrix_market(std::ostream& os) const;

 private:
  int n_rows_, n_cols_;
  std::vector<std::size_t> offsets_;
  std::vector<int> columns_;
  std::vector<double> values_;
};

// A = L + D + U with L strictly lower and U strictly upper.
struct DecompositionLDU {
  SparseMatrix lower, upper;
  std::vector<double> diagonal;

  static DecompositionLDU of(const SparseMatrix& a);
};

using BoundaryData2D = std::function<double(double, double)>;

// Five-point Laplacian on the unit square, h = 1/N, interior nodes in
// lexicographic order k = (j-1)(N-1) + (i-1).
struct LaplaceSystem {
  int n;
  SparseMatrix matrix;

  std::vector<double> rhs(const BoundaryData2D& f) const;
  // Interior solution plus boundary values of f, on the (N+1)^2 grid.
  GridFunction2D embed(const std::vector<double>& interior, const BoundaryData2D& f) const;
};

LaplaceSystem assemble_laplace_2d(int n);

std::vector<double> tridiag_eigenvalues(double a, double b, int n);
std::vector<double> laplace_spectrum(int n);

enum class IterativeMethod { jacobi, gauss_seidel };
std::string to_string(IterativeMethod m);
IterativeMethod parse_iterative_method(const std::string& s);

void jacobi_sweep(const SparseMatrix& a, const std::vector<double>& b, std::vector<double>& x);
void gauss_seidel_sweep(const SparseMatrix& a, const std::vector<double>& b, std::vector<double>& x);

struct IterationReport {
  int iterations = 0;
  std::vector<double> residual_history;
  bool converged = false;
  double estimated_rho = 0.0;
};

struct IterativeSolution {
  std::vector<double> x;
  IterationReport report;
};

class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, IterationReport r) : Error(what), report(std::move(r)) {}
  IterationReport report;
};

double residual_inf(const SparseMatrix& a, const std::vector<double>& b, const std::vector<double>& x);

IterativeSolution solve_iterative(const SparseMatrix& a, const std::vector<double>& b,
                                  IterativeMethod method, double tol, int max_iter,
                                  std::vector<double> x0 = {});

double predicted_spectral_radius(IterativeMethod method, int n);
double predicted_iteration_count(IterativeMethod method, int n);

// Thomas algorithm for sub[i] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i].
// sub[0] and sup[n-1] are ignored. Throws when a pivot falls below 1e-14 in magnitude.
std::vector<double> solve_tridiagonal(const std::vector<double>& sub, const std::vector<double>& diag,
                                      const std::vector<double>& sup, std::vector<double> rhs);

// Dense symmetric eigensolver by cyclic Jacobi rotations.
struct SymmetricEigen {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<double>> vectors;   // vectors[k] is the eigenvector for values[k]
};
SymmetricEigen symmetric_eigen(std::vector<std::vector<double>> a, double rel_tol = 1e-14,
                               int max_sweeps = 100);

}  // namespace pdelab
