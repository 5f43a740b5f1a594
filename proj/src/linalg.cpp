#include "pdelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pdelab {

SparseMatrix::SparseMatrix(int n_rows, int n_cols, std::vector<Triplet> entries)
    : n_rows_(n_rows), n_cols_(n_cols) {
  if (n_rows < 1 || n_cols < 1) throw Error("SparseMatrix: dimensions must be positive");
  for (const auto& e : entries)
    if (e.row < 0 || e.row >= n_rows || e.col < 0 || e.col >= n_cols)
      throw Error("SparseMatrix: entry out of range");
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  // Merge duplicates, then drop zeros.
  std::vector<Triplet> merged;
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  offsets_.assign(static_cast<std::size_t>(n_rows) + 1, 0);
  for (const auto& e : merged) {
    if (e.value == 0.0) continue;
    columns_.push_back(e.col);
    values_.push_back(e.value);
    ++offsets_[static_cast<std::size_t>(e.row) + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

double SparseMatrix::at(int i, int j) const {
  const auto b = columns_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
  const auto e = columns_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
  const auto it = std::lower_bound(b, e, j);
  return (it != e && *it == j) ? values_[static_cast<std::size_t>(it - columns_.begin())] : 0.0;
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
  if (x.size() != static_cast<std::size_t>(n_cols_)) throw Error("SparseMatrix: size mismatch");
  std::vector<double> y(static_cast<std::size_t>(n_rows_), 0.0);
  for (int i = 0; i < n_rows_; ++i) {
    double s = 0.0;
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) s += values_[p] * x[columns_[p]];
    y[i] = s;
  }
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (int i = 0; i < n_rows_; ++i)
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p)
      t.push_back({columns_[p], i, values_[p]});
  return SparseMatrix(n_cols_, n_rows_, std::move(t));
}

std::vector<std::vector<double>> SparseMatrix::to_dense() const {
  std::vector<std::vector<double>> d(n_rows_, std::vector<double>(n_cols_, 0.0));
  for (int i = 0; i < n_rows_; ++i)
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) d[i][columns_[p]] = values_[p];
  return d;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return n_rows_ == o.n_rows_ && n_cols_ == o.n_cols_ && offsets_ == o.offsets_ &&
         columns_ == o.columns_ && values_ == o.values_;
}

void SparseMatrix::write_matrix_market(std::ostream& os) const {
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << n_rows_ << ' ' << n_cols_ << ' ' << values_.size() << '\n';
  for (int i = 0; i < n_rows_; ++i)
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p)
      os << i + 1 << ' ' << columns_[p] + 1 << ' ' << format_g17(values_[p]) << '\n';
}

DecompositionLDU DecompositionLDU::of(const SparseMatrix& a) {
  std::vector<Triplet> lo, up;
  std::vector<double> d(static_cast<std::size_t>(a.rows()), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (std::size_t p = a.offsets()[i]; p < a.offsets()[i + 1]; ++p) {
      const int j = a.columns()[p];
      const double v = a.values()[p];
      if (j < i)
        lo.push_back({i, j, v});
      else if (j > i)
        up.push_back({i, j, v});
      else
        d[i] = v;
    }
  return {SparseMatrix(a.rows(), a.cols(), std::move(lo)),
          SparseMatrix(a.rows(), a.cols(), std::move(up)), std::move(d)};
}

LaplaceSystem assemble_laplace_2d(int n) {
  if (n < 2) throw Error("assemble_laplace_2d: N must be at least 2");
  const int m = n - 1;
  std::vector<Triplet> t;
  auto idx = [m](int i, int j) { return (j - 1) * m + (i - 1); };
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= m; ++i) {
      const int k = idx(i, j);
      t.push_back({k, k, -4.0});
      if (i > 1) t.push_back({k, idx(i - 1, j), 1.0});
      if (i < m) t.push_back({k, idx(i + 1, j), 1.0});
      if (j > 1) t.push_back({k, idx(i, j - 1), 1.0});
      if (j < m) t.push_back({k, idx(i, j + 1), 1.0});
    }
  return {n, SparseMatrix(m * m, m * m, std::move(t))};
}

std::vector<double> LaplaceSystem::rhs(const BoundaryData2D& f) const {
  const int m = n - 1;
  const double h = 1.0 / n;
  std::vector<double> b(static_cast<std::size_t>(m * m), 0.0);
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= m; ++i) {
      double s = 0.0;
      if (i == 1) s += f(0.0, j * h);
      if (i == m) s += f(1.0, j * h);
      if (j == 1) s += f(i * h, 0.0);
      if (j == m) s += f(i * h, 1.0);
      b[(j - 1) * m + (i - 1)] = -s;
    }
  return b;
}

GridFunction2D LaplaceSystem::embed(const std::vector<double>& interior,
                                    const BoundaryData2D& f) const {
  const int m = n - 1;
  if (interior.size() != static_cast<std::size_t>(m * m))
    throw Error("LaplaceSystem::embed: size mismatch");
  UniformGrid1D axis(0.0, 1.0, n);
  GridFunction2D u(UniformGrid2D(axis, axis));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      if (i == 0 || j == 0 || i == n || j == n)
        u.at(i, j) = f(axis.node(i), axis.node(j));
      else
        u.at(i, j) = interior[(j - 1) * m + (i - 1)];
    }
  return u;
}

std::vector<double> tridiag_eigenvalues(double a, double b, int n) {
  if (n < 1) throw Error("tridiag_eigenvalues: n must be positive");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[k - 1] = a + 2.0 * b * std::cos(kPi * k / (n + 1));
  return out;
}

std::vector<double> laplace_spectrum(int n) {
  if (n < 2) throw Error("laplace_spectrum: N must be at least 2");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
  for (int l = 1; l < n; ++l)
    for (int k = 1; k < n; ++k) {
      const double sk = std::sin(kPi * k / (2.0 * n));
      const double sl = std::sin(kPi * l / (2.0 * n));
      out.push_back(-4.0 * (sk * sk + sl * sl));
    }
  return out;
}

std::string to_string(IterativeMethod m) {
  return m == IterativeMethod::jacobi ? "jacobi" : "gauss-seidel";
}

IterativeMethod parse_iterative_method(const std::string& s) {
  if (s == "jacobi") return IterativeMethod::jacobi;
  if (s == "gauss-seidel" || s == "gs" || s == "gauss_seidel") return IterativeMethod::gauss_seidel;
  throw Error("unknown iterative method: " + s);
}

namespace {

double diagonal_entry(const SparseMatrix& a, int i) {
  const double d = a.at(i, i);
  if (d == 0.0) {
    std::ostringstream msg;
    msg << "zero diagonal entry in row " << i;
    throw Error(msg.str());
  }
  return d;
}

}  // namespace

void jacobi_sweep(const SparseMatrix& a, const std::vector<double>& b, std::vector<double>& x) {
  std::vector<double> next(x.size());
  for (int i = 0; i < a.rows(); ++i) {
    const double d = diagonal_entry(a, i);
    double s = b[i];
    for (std::size_t p = a.offsets()[i]; p < a.offsets()[i + 1]; ++p)
      if (a.columns()[p] != i) s -= a.values()[p] * x[a.columns()[p]];
    next[i] = s / d;
  }
  x.swap(next);
}

void gauss_seidel_sweep(const SparseMatrix& a, const std::vector<double>& b,
                        std::vector<double>& x) {
  for (int i = 0; i < a.rows(); ++i) {
    const double d = diagonal_entry(a, i);
    double s = b[i];
    for (std::size_t p = a.offsets()[i]; p < a.offsets()[i + 1]; ++p)
      if (a.columns()[p] != i) s -= a.values()[p] * x[a.columns()[p]];
    x[i] = s / d;
  }
}

double residual_inf(const SparseMatrix& a, const std::vector<double>& b,
                    const std::vector<double>& x) {
  const auto ax = a.multiply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) r = std::max(r, std::abs(b[i] - ax[i]));
  return r;
}

IterativeSolution solve_iterative(const SparseMatrix& a, const std::vector<double>& b,
                                  IterativeMethod method, double tol, int max_iter,
                                  std::vector<double> x0) {
  if (!(tol > 0)) throw Error("solve_iterative: tol must be positive");
  if (a.rows() != a.cols() || b.size() != static_cast<std::size_t>(a.rows()))
    throw Error("solve_iterative: size mismatch");
  if (x0.empty()) x0.assign(b.size(), 0.0);
  IterativeSolution sol{std::move(x0), {}};
  auto& rep = sol.report;
  const double r0 = residual_inf(a, b, sol.x);
  double r = r0;
  while (r >= tol && rep.iterations < max_iter) {
    if (method == IterativeMethod::jacobi)
      jacobi_sweep(a, b, sol.x);
    else
      gauss_seidel_sweep(a, b, sol.x);
    ++rep.iterations;
    r = residual_inf(a, b, sol.x);
    rep.residual_history.push_back(r);
    if (!std::isfinite(r) || r > 1e6 * std::max(r0, tol)) {
      std::ostringstream msg;
      msg << to_string(method) << " iteration diverged after " << rep.iterations
          << " sweeps (residual " << r << ")";
      throw DivergenceError(msg.str(), rep);
    }
  }
  rep.converged = r < tol;
  const auto& h = rep.residual_history;
  if (h.size() >= 2) {
    const std::size_t n_ratios = std::min<std::size_t>(10, h.size() - 1);
    double log_sum = 0.0;
    for (std::size_t i = h.size() - n_ratios; i < h.size(); ++i)
      log_sum += std::log(h[i] / h[i - 1]);
    rep.estimated_rho = std::exp(log_sum / static_cast<double>(n_ratios));
  }
  return sol;
}

double predicted_spectral_radius(IterativeMethod method, int n) {
  if (n < 2) throw Error("predicted_spectral_radius: N must be at least 2");
  const double s = std::sin(kPi / (2.0 * n));
  const double rho_j = std::abs(1.0 - 2.0 * s * s);
  return method == IterativeMethod::jacobi ? rho_j : rho_j * rho_j;
}

double predicted_iteration_count(IterativeMethod method, int n) {
  if (n < 2) throw Error("predicted_iteration_count: N must be at least 2");
  const double c = method == IterativeMethod::jacobi ? 4.0 : 2.0;
  return c / (kPi * kPi) * n * n * std::log(static_cast<double>(n));
}

std::vector<double> solve_tridiagonal(const std::vector<double>& sub, const std::vector<double>& diag,
                                      const std::vector<double>& sup, std::vector<double> rhs) {
  const std::size_t n = diag.size();
  if (sub.size() != n || sup.size() != n || rhs.size() != n)
    throw Error("solve_tridiagonal: size mismatch");
  std::vector<double> c(n, 0.0);
  double pivot = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) pivot = diag[i] - sub[i] * c[i - 1];
    if (std::abs(pivot) < 1e-14) {
      std::ostringstream msg;
      msg << "solve_tridiagonal: pivot below 1e-14 at row " << i;
      throw Error(msg.str());
    }
    c[i] = sup[i] / pivot;
    rhs[i] = (rhs[i] - (i > 0 ? sub[i] * rhs[i - 1] : 0.0)) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
  return rhs;
}

SymmetricEigen symmetric_eigen(std::vector<std::vector<double>> a, double rel_tol,
                               int max_sweeps) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error("symmetric_eigen: matrix not square");
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  double frob = 0.0;
  for (const auto& row : a)
    for (double x : row) frob += x * x;
  frob = std::sqrt(frob);
  const double thresh = rel_tol * std::max(frob, 1e-300);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (std::sqrt(off) <= thresh) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) <= 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });
  SymmetricEigen out;
  for (std::size_t k : order) {
    out.values.push_back(a[k][k]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i][k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace pdelab
