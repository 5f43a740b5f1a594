#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pdelab/common.hpp"

namespace pdelab {

// Closed interval [lo, hi] split into n_cells equal cells; nodes 0..n_cells.
class UniformGrid1D {
 public:
  UniformGrid1D(double lo, double hi, int n_cells);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int cells() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) + 1; }
  double spacing() const { return h_; }
  double node(int i) const { return i == n_ ? hi_ : lo_ + i * h_; }
  std::vector<double> nodes() const;

  bool operator==(const UniformGrid1D& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && n_ == o.n_;
  }

 private:
  double lo_, hi_, h_;
  int n_;
};

class TimeAxis {
 public:
  TimeAxis(double dt, int n_steps, double t0 = 0.0);

  double dt() const { return dt_; }
  int steps() const { return n_; }
  double t0() const { return t0_; }
  double time(int n) const { return t0_ + n * dt_; }
  double end() const { return time(n_); }

 private:
  double dt_, t0_;
  int n_;
};

// Row-major storage: index(i, j) = j * (nx + 1) + i.
class UniformGrid2D {
 public:
  UniformGrid2D(UniformGrid1D x, UniformGrid1D y) : x_(x), y_(y) {}

  const UniformGrid1D& x() const { return x_; }
  const UniformGrid1D& y() const { return y_; }
  std::size_t size() const { return x_.size() * y_.size(); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * x_.size() + static_cast<std::size_t>(i);
  }

  bool operator==(const UniformGrid2D& o) const { return x_ == o.x_ && y_ == o.y_; }

 private:
  UniformGrid1D x_, y_;
};

struct GridFunction {
  UniformGrid1D grid;
  std::vector<double> values;

  GridFunction(UniformGrid1D g, std::vector<double> v);
  explicit GridFunction(UniformGrid1D g) : GridFunction(g, std::vector<double>(g.size(), 0.0)) {}

  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

struct GridFunction2D {
  UniformGrid2D grid;
  std::vector<double> values;

  GridFunction2D(UniformGrid2D g, std::vector<double> v);
  explicit GridFunction2D(UniformGrid2D g)
      : GridFunction2D(g, std::vector<double>(g.size(), 0.0)) {}

  double at(int i, int j) const { return values[grid.index(i, j)]; }
  double& at(int i, int j) { return values[grid.index(i, j)]; }
};

// Positive weight rho(x) for the inner product (phi, psi) = int rho phi psi.
class Weight {
 public:
  Weight() = default;  // rho = 1
  explicit Weight(RealFn rho) : rho_(std::move(rho)) {}

  double operator()(double x) const { return rho_ ? rho_(x) : 1.0; }
  bool is_unit() const { return !rho_; }

 private:
  RealFn rho_;
};

GridFunction sample(const RealFn& f, const UniformGrid1D& grid);
GridFunction2D sample(const std::function<double(double, double)>& f, const UniformGrid2D& grid);

// Trapezoid rule for int rho u v over the shared grid.
double inner_product(const GridFunction& u, const GridFunction& v, const Weight& rho = {});
double norm_l2(const GridFunction& u, const Weight& rho = {});
double norm_linf(const GridFunction& u);
double norm_linf(const std::vector<double>& v);

// CSV with header "x,u" or "x,y,u", values printed with %.17g.
void write_csv(std::ostream& os, const GridFunction& u);
void write_csv(std::ostream& os, const GridFunction2D& u);
void write_csv(const std::string& path, const GridFunction& u);
void write_csv(const std::string& path, const GridFunction2D& u);
std::string format_g17(double v);

}  // namespace pdelab
