#include "pdelab/numerics.hpp"

#include <cmath>
#include <utility>

namespace pdelab {

namespace {

template <class T, class F>
T simpson_rec(const F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec<T>(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec<T>(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class T, class F>
T simpson_adaptive(const F& f, double a, double b, double tol, int max_depth) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw Error("adaptive_simpson: infinite interval");
  if (a == b) return T{};
  // Split into a few panels first so that narrow features are not missed.
  constexpr int kPanels = 8;
  const double w = (b - a) / kPanels;
  T sum{};
  for (int p = 0; p < kPanels; ++p) {
    const double lo = a + p * w;
    const double hi = p + 1 == kPanels ? b : a + (p + 1) * w;
    const T fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const T whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    sum += simpson_rec<T>(f, lo, hi, fa, fm, fb, whole, tol / kPanels, max_depth);
  }
  return sum;
}

template <class T, class F>
T simpson_composite(const F& f, double a, double b, int n) {
  if (n < 2) n = 2;
  if (n % 2) ++n;
  const double h = (b - a) / n;
  T sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * (h / 3.0);
}

}  // namespace

double adaptive_simpson(const RealFn& f, double a, double b, double tol, int max_depth) {
  return simpson_adaptive<double>(f, a, b, tol, max_depth);
}

cplx adaptive_simpson_complex(const ComplexFn& f, double a, double b, double tol, int max_depth) {
  return simpson_adaptive<cplx>(f, a, b, tol, max_depth);
}

double composite_simpson(const RealFn& f, double a, double b, int n) {
  return simpson_composite<double>(f, a, b, n);
}

cplx composite_simpson_complex(const ComplexFn& f, double a, double b, int n) {
  return simpson_composite<cplx>(f, a, b, n);
}

double bisect(const RealFn& f, double a, double b, double tol) {
  double fa = f(a);
  if (fa == 0.0) return a;
  const double fb = f(b);
  if (fb == 0.0) return b;
  if ((fa < 0) == (fb < 0)) throw Error("bisect: interval does not bracket a root");
  while (std::abs(b - a) > tol) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> find_roots(const RealFn& f, double a, double b, int n, double tol) {
  std::vector<double> roots;
  const double h = (b - a) / n;
  double x0 = a;
  double f0 = f(x0);
  if (f0 == 0.0) roots.push_back(x0);
  for (int i = 1; i <= n; ++i) {
    const double x1 = i == n ? b : a + i * h;
    const double f1 = f(x1);
    if (f1 == 0.0) {
      roots.push_back(x1);
    } else if (f0 != 0.0 && (f0 < 0) != (f1 < 0)) {
      roots.push_back(bisect(f, x0, x1, tol));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

double golden_section_min(const RealFn& f, double a, double b, double tol) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (std::abs(b - a) > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + static_cast<double>(i) * h;
  out[n - 1] = b;
  return out;
}

}  // namespace pdelab
