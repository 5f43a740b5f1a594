#include "pdelab/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace pdelab {

UniformGrid1D::UniformGrid1D(double lo, double hi, int n_cells) : lo_(lo), hi_(hi), n_(n_cells) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
    throw Error("UniformGrid1D: need finite x_lo < x_hi");
  if (n_cells < 1) throw Error("UniformGrid1D: n_cells must be positive");
  h_ = (hi - lo) / n_cells;
  const double last = lo + n_cells * h_;
  if (std::abs(last - hi) > 1e-12 * std::max(1.0, std::abs(hi)))
    throw Error("UniformGrid1D: endpoint not reproduced by x_lo + n*h");
}

std::vector<double> UniformGrid1D::nodes() const {
  std::vector<double> x(size());
  for (int i = 0; i <= n_; ++i) x[i] = node(i);
  return x;
}

TimeAxis::TimeAxis(double dt, int n_steps, double t0) : dt_(dt), t0_(t0), n_(n_steps) {
  if (!(dt > 0) || !std::isfinite(dt)) throw Error("TimeAxis: dt must be positive");
  if (n_steps < 0) throw Error("TimeAxis: n_steps must be nonnegative");
}

GridFunction::GridFunction(UniformGrid1D g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw Error("GridFunction: value count != node count");
}

GridFunction2D::GridFunction2D(UniformGrid2D g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw Error("GridFunction2D: value count != node count");
}

GridFunction sample(const RealFn& f, const UniformGrid1D& grid) {
  GridFunction out(grid);
  for (int i = 0; i <= grid.cells(); ++i) {
    const double x = grid.node(i);
    const double v = f(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "sample: non-finite value at node " << i << " (x=" << x << ")";
      throw Error(msg.str());
    }
    out.values[i] = v;
  }
  return out;
}

GridFunction2D sample(const std::function<double(double, double)>& f, const UniformGrid2D& grid) {
  GridFunction2D out(grid);
  for (int j = 0; j <= grid.y().cells(); ++j)
    for (int i = 0; i <= grid.x().cells(); ++i) {
      const double x = grid.x().node(i), y = grid.y().node(j);
      const double v = f(x, y);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "sample: non-finite value at node (" << i << "," << j << ")";
        throw Error(msg.str());
      }
      out.at(i, j) = v;
    }
  return out;
}

double inner_product(const GridFunction& u, const GridFunction& v, const Weight& rho) {
  if (!(u.grid == v.grid)) throw Error("inner_product: grid mismatch");
  const auto& g = u.grid;
  double sum = 0.0;
  for (int i = 0; i <= g.cells(); ++i) {
    const double x = g.node(i);
    const double w = rho(x);
    if (!(w > 0)) {
      std::ostringstream msg;
      msg << "inner_product: weight not positive at x=" << x;
      throw Error(msg.str());
    }
    const double term = w * u.values[i] * v.values[i];
    sum += (i == 0 || i == g.cells()) ? 0.5 * term : term;
  }
  return sum * g.spacing();
}

double norm_l2(const GridFunction& u, const Weight& rho) {
  return std::sqrt(inner_product(u, u, rho));
}

double norm_linf(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm_linf(const GridFunction& u) { return norm_linf(u.values); }

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const GridFunction& u) {
  os << "x,u\n";
  for (int i = 0; i <= u.grid.cells(); ++i)
    os << format_g17(u.grid.node(i)) << ',' << format_g17(u.values[i]) << '\n';
}

void write_csv(std::ostream& os, const GridFunction2D& u) {
  os << "x,y,u\n";
  for (int j = 0; j <= u.grid.y().cells(); ++j)
    for (int i = 0; i <= u.grid.x().cells(); ++i)
      os << format_g17(u.grid.x().node(i)) << ',' << format_g17(u.grid.y().node(j)) << ','
         << format_g17(u.at(i, j)) << '\n';
}

namespace {
template <class G>
void write_csv_file(const std::string& path, const G& u) {
  std::ofstream f(path);
  if (!f) throw Error("write_csv: cannot open " + path);
  write_csv(f, u);
}
}  // namespace

void write_csv(const std::string& path, const GridFunction& u) { write_csv_file(path, u); }
void write_csv(const std::string& path, const GridFunction2D& u) { write_csv_file(path, u); }

}  // namespace pdelab
