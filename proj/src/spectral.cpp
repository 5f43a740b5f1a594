#include "pdelab/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "pdelab/numerics.hpp"

namespace pdelab {

namespace {
constexpr double kTol = 1e-10;
}

ModeSet sine_modes(double l, int K, double c2) {
  if (!(l > 0) || K < 1) throw Error("sine_modes: need l > 0 and K >= 1");
  ModeSet m;
  m.lo = 0.0;
  m.hi = l;
  m.quadrature_cells = std::max(4000, 8 * K);
  for (int k = 1; k <= K; ++k) {
    const double w = kPi * k / l;
    m.eigenvalues.push_back(c2 * w * w);
    m.eigenfunctions.push_back([w, l](double x) { return std::sqrt(2.0 / l) * std::sin(w * x); });
  }
  return m;
}

std::vector<double> forward(const RealFn& u, const ModeSet& modes) {
  const UniformGrid1D g(modes.lo, modes.hi, modes.quadrature_cells);
  const auto us = sample(u, g);
  std::vector<double> out;
  out.reserve(modes.size());
  for (const auto& m : modes.eigenfunctions) out.push_back(inner_product(us, sample(m, g), modes.weight));
  return out;
}

double inverse(const std::vector<double>& coeffs, const ModeSet& modes, double x) {
  double s = 0.0;
  const std::size_t n = std::min(coeffs.size(), modes.size());
  for (std::size_t k = 0; k < n; ++k) s += coeffs[k] * modes.eigenfunctions[k](x);
  return s;
}

RealFn inverse(const std::vector<double>& coeffs, const ModeSet& modes) {
  return [coeffs, modes](double x) { return inverse(coeffs, modes, x); };
}

double ModeForcing::operator()(double t) const {
  switch (kind) {
    case Kind::zero: return 0.0;
    case Kind::constant: return amplitude;
    case Kind::sinusoid: return amplitude * std::sin(omega * t);
    case Kind::general: return fn(t);
  }
  return 0.0;
}

double parabolic_mode(double lambda, double n0, const ModeForcing& f, double t) {
  double n = n0 * std::exp(-lambda * t);
  switch (f.kind) {
    case ModeForcing::Kind::zero:
      break;
    case ModeForcing::Kind::constant:
      n += f.amplitude * (lambda == 0.0 ? t : -std::expm1(-lambda * t) / lambda);
      break;
    case ModeForcing::Kind::sinusoid: {
      const double w = f.omega;
      const double den = lambda * lambda + w * w;
      if (den == 0.0) break;
      n += f.amplitude *
           (lambda * std::sin(w * t) - w * std::cos(w * t) + w * std::exp(-lambda * t)) / den;
      break;
    }
    case ModeForcing::Kind::general:
      if (t > 0)
        n += adaptive_simpson([&](double tau) { return f.fn(tau) * std::exp(-lambda * (t - tau)); },
                              0.0, t, kTol);
      break;
  }
  return n;
}

namespace {

double sinc(double z) { return std::abs(z) < 1e-8 ? 1.0 - z * z / 6.0 : std::sin(z) / z; }

}  // namespace

double hyperbolic_mode(double lambda, double n0, double dn0, const ModeForcing& f, double t) {
  if (lambda < 0) throw Error("hyperbolic_mode: negative eigenvalue");
  const double a = std::sqrt(lambda);
  double n = a == 0.0 ? n0 + dn0 * t : n0 * std::cos(a * t) + dn0 * std::sin(a * t) / a;
  switch (f.kind) {
    case ModeForcing::Kind::zero:
      break;
    case ModeForcing::Kind::constant:
      n += f.amplitude * (a == 0.0 ? 0.5 * t * t : (1.0 - std::cos(a * t)) / lambda);
      break;
    case ModeForcing::Kind::sinusoid: {
      const double w = f.omega;
      if (a == 0.0) {
        n += f.amplitude * (w == 0.0 ? 0.0 : (t - std::sin(w * t) / w) / w);
        break;
      }
      // (w sin(at) - a sin(wt)) / (a (w^2 - a^2)), rewritten so that w -> a is regular.
      const double d = w - a;
      const double beat = t * sinc(0.5 * d * t);  // 2 sin(d t / 2) / d
      n += f.amplitude * (std::sin(a * t) - a * std::cos(0.5 * (a + w) * t) * beat) / (a * (w + a));
      break;
    }
    case ModeForcing::Kind::general:
      if (t > 0) {
        auto kernel = [&](double tau) {
          return a == 0.0 ? (t - tau) : std::sin(a * (t - tau)) / a;
        };
        n += adaptive_simpson([&](double tau) { return f.fn(tau) * kernel(tau); }, 0.0, t, kTol);
      }
      break;
  }
  return n;
}

namespace {

ModeForcing combine(const std::vector<ModeForcing>& F, const std::vector<ModeForcing>& B,
                    std::size_t k) {
  const ModeForcing f = k < F.size() ? F[k] : ModeForcing{};
  const ModeForcing b = k < B.size() ? B[k] : ModeForcing{};
  if (b.kind == ModeForcing::Kind::zero) return f;
  if (f.kind == ModeForcing::Kind::zero) return b;
  if (f.kind == ModeForcing::Kind::constant && b.kind == ModeForcing::Kind::constant)
    return ModeForcing::constant(f.amplitude + b.amplitude);
  return ModeForcing::general([f, b](double t) { return f(t) + b(t); });
}

void check_sizes(const ModeSet& modes, const std::vector<double>& n0,
                 const std::vector<ModeForcing>& F, const std::vector<ModeForcing>& B) {
  if (n0.size() != modes.size()) throw Error("mode solver: initial data size mismatch");
  if (!F.empty() && F.size() != modes.size()) throw Error("mode solver: forcing size mismatch");
  if (!B.empty() && B.size() != modes.size()) throw Error("mode solver: boundary term size mismatch");
}

}  // namespace

std::vector<double> solve_parabolic_modes(const ModeSet& modes, const std::vector<double>& n0,
                                          const std::vector<ModeForcing>& F,
                                          const std::vector<ModeForcing>& B, double t) {
  check_sizes(modes, n0, F, B);
  std::vector<double> out(modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k)
    out[k] = parabolic_mode(modes.eigenvalues[k], n0[k], combine(F, B, k), t);
  return out;
}

std::vector<double> solve_hyperbolic_modes(const ModeSet& modes, const std::vector<double>& n0,
                                           const std::vector<double>& dn0,
                                           const std::vector<ModeForcing>& F,
                                           const std::vector<ModeForcing>& B, double t) {
  check_sizes(modes, n0, F, B);
  if (dn0.size() != modes.size()) throw Error("mode solver: initial velocity size mismatch");
  std::vector<double> out(modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k)
    out[k] = hyperbolic_mode(modes.eigenvalues[k], n0[k], dn0[k], combine(F, B, k), t);
  return out;
}

ModeForcing sine_boundary_term(int k, double l, double c2, RealFn g1, RealFn g2) {
  // (c2 u_xx, M_k) = c2 [u_x M_k - u M_k']_0^l - lambda_k N_k, and M_k vanishes at both ends.
  const double w = kPi * k / l;
  const double dm0 = std::sqrt(2.0 / l) * w;
  const double dml = dm0 * (k % 2 ? -1.0 : 1.0);
  return ModeForcing::general([=](double t) {
    return c2 * ((g1 ? g1(t) : 0.0) * dm0 - (g2 ? g2(t) : 0.0) * dml);
  });
}

double BoundaryLift::v(double x, double t) const {
  return (x * (g2 ? g2(t) : 0.0) + (l - x) * (g1 ? g1(t) : 0.0)) / l;
}

double BoundaryLift::v_t(double x, double t) const {
  return (x * (g2_t ? g2_t(t) : 0.0) + (l - x) * (g1_t ? g1_t(t) : 0.0)) / l;
}

SpaceTimeFn BoundaryLift::homogenized_source(SpaceTimeFn rho) const {
  const BoundaryLift self = *this;
  return [self, rho](double x, double t) { return (rho ? rho(x, t) : 0.0) - self.v_t(x, t); };
}

RealFn BoundaryLift::initial(RealFn f) const {
  const BoundaryLift self = *this;
  return [self, f](double x) { return f(x) - self.v(x, 0.0); };
}

BoundaryLift boundary_lift_1d(RealFn g1, RealFn g1_t, RealFn g2, RealFn g2_t, double l) {
  if (!(l > 0)) throw Error("boundary_lift_1d: l must be positive");
  return {std::move(g1), std::move(g1_t), std::move(g2), std::move(g2_t), l};
}

double duhamel_wave(const SpaceTimeFn& g, double c, double x, double t) {
  if (!(c > 0)) throw Error("duhamel_wave: c must be positive");
  if (t <= 0) return 0.0;
  auto inner = [&](double tau) {
    const double r = c * (t - tau);
    if (r <= 0) return 0.0;
    return adaptive_simpson([&](double th) { return g(th, tau); }, x - r, x + r, kTol);
  };
  return adaptive_simpson(inner, 0.0, t, 1e-9) / (2.0 * c);
}

DuhamelHeat::DuhamelHeat(SpaceTimeFn g, double c, double l, int K, int projection_cells)
    : g_(std::move(g)), modes_(sine_modes(l, K, c * c)), grid_(0.0, l, projection_cells) {}

std::vector<double> DuhamelHeat::coefficients(double t) const {
  std::vector<double> out(modes_.size(), 0.0);
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    const auto mk = sample(modes_.eigenfunctions[k], grid_);
    auto fk = [&](double tau) {
      return inner_product(sample([&](double x) { return g_(x, tau); }, grid_), mk);
    };
    out[k] = parabolic_mode(modes_.eigenvalues[k], 0.0, ModeForcing::general(fk), t);
  }
  return out;
}

double DuhamelHeat::operator()(double x, double t) const {
  return inverse(coefficients(t), modes_, x);
}

double DiskCoefficients::operator()(double theta) const {
  double s = a0 / std::sqrt(2.0 * kPi);
  for (std::size_t k = 1; k < a.size(); ++k)
    s += (a[k] * std::cos(static_cast<double>(k) * theta) +
          b[k] * std::sin(static_cast<double>(k) * theta)) /
         std::sqrt(kPi);
  return s;
}

DiskCoefficients disk_transform(const RealFn& u, int K, int n_theta) {
  if (K < 0 || n_theta < 2 * K + 1) throw Error("disk_transform: need n_theta > 2K");
  DiskCoefficients c{0.0, std::vector<double>(K + 1, 0.0), std::vector<double>(K + 1, 0.0)};
  const double h = 2.0 * kPi / n_theta;
  // Trapezoid rule on the periodic grid.
  for (int m = 0; m < n_theta; ++m) {
    const double th = m * h;
    const double v = u(th);
    c.a0 += v;
    for (int k = 1; k <= K; ++k) {
      c.a[k] += v * std::cos(k * th);
      c.b[k] += v * std::sin(k * th);
    }
  }
  c.a0 *= h / std::sqrt(2.0 * kPi);
  for (int k = 1; k <= K; ++k) {
    c.a[k] *= h / std::sqrt(kPi);
    c.b[k] *= h / std::sqrt(kPi);
  }
  return c;
}

std::vector<PeriodicEigenvalue> periodic_eigenvalues(int K) {
  std::vector<PeriodicEigenvalue> out{{0.0, 1}};
  for (int k = 1; k <= K; ++k) out.push_back({static_cast<double>(k) * k, 2});
  return out;
}

CouplingTensor::CouplingTensor(int K) : K_(K) {
  if (K < 1) throw Error("galerkin_couplings: K must be positive");
  const std::size_t n = static_cast<std::size_t>(K);
  data_.assign(n * n * n * n, 0.0);
  auto idx = [n](int k, int i, int j, int l) {
    return ((static_cast<std::size_t>(k) * n + i) * n + j) * n + l;
  };
  // One quadrature per unordered index set, then scatter to all permutations.
  for (int a = 1; a <= K; ++a)
    for (int b = a; b <= K; ++b)
      for (int c = b; c <= K; ++c)
        for (int d = c; d <= K; ++d) {
          const double v =
              4.0 / (kPi * kPi) *
              adaptive_simpson(
                  [=](double x) {
                    return std::sin(a * x) * std::sin(b * x) * std::sin(c * x) * std::sin(d * x);
                  },
                  0.0, kPi, kTol);
          std::array<int, 4> p{a - 1, b - 1, c - 1, d - 1};
          do {
            data_[idx(p[0], p[1], p[2], p[3])] = v;
          } while (std::next_permutation(p.begin(), p.end()));
        }
  for (int k = 0; k < K; ++k)
    for (int i = 0; i < K; ++i)
      for (int j = 0; j < K; ++j)
        for (int l = 0; l < K; ++l) {
          const double v = data_[idx(k, i, j, l)];
          if (std::abs(v) > 1e-12) nonzeros_.push_back({k + 1, i + 1, j + 1, l + 1, v});
        }
}

double CouplingTensor::operator()(int k, int i, int j, int l) const {
  if (k < 1 || i < 1 || j < 1 || l < 1 || k > K_ || i > K_ || j > K_ || l > K_)
    throw Error("CouplingTensor: index out of range");
  const std::size_t n = static_cast<std::size_t>(K_);
  return data_[((static_cast<std::size_t>(k - 1) * n + (i - 1)) * n + (j - 1)) * n + (l - 1)];
}

std::shared_ptr<const CouplingTensor> galerkin_couplings(int K) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CouplingTensor>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[K];
  if (!slot) slot = std::make_shared<const CouplingTensor>(K);
  return slot;
}

GalerkinTrajectory nonlinear_heat_galerkin(double lam, double eps, const std::vector<double>& n0,
                                           int K, double t_end, double output_dt) {
  if (K < 1 || K > 32) throw Error("nonlinear_heat_galerkin: K must be in [1, 32]");
  if (n0.size() != static_cast<std::size_t>(K)) throw Error("nonlinear_heat_galerkin: need K initial coefficients");
  if (!(t_end >= 0)) throw Error("nonlinear_heat_galerkin: t_end must be nonnegative");
  const auto tensor = galerkin_couplings(K);
  const double e2 = eps * eps;

  // Step from the largest linear rate plus the cubic rate at the larger of the
  // initial size and the single-mode saturation level.
  double linear = 0.0;
  for (int k = 1; k <= K; ++k) linear = std::max(linear, std::abs(k * k - lam));
  double n_max = norm_linf(n0);
  if (lam > 1.0 && eps > 0) n_max = std::max(n_max, stationary_limit(lam, eps, 1.0));
  const double cubic = 3.0 * std::abs(lam) * e2 * (3.0 / (2.0 * kPi)) * n_max * n_max * K;
  const double rate = std::max(linear + cubic, 1e-12);
  int steps = std::max(1, static_cast<int>(std::ceil(t_end * rate / 0.1)));
  const double dt = t_end > 0 ? t_end / steps : 0.0;
  if (t_end == 0) steps = 0;

  auto rhs = [&](const std::vector<double>& n) {
    std::vector<double> d(n.size());
    for (int k = 1; k <= K; ++k) d[k - 1] = -(k * k - lam) * n[k - 1];
    for (const auto& e : tensor->nonzeros())
      d[e.k - 1] -= lam * e2 * e.value * n[e.i - 1] * n[e.j - 1] * n[e.l - 1];
    return d;
  };

  GalerkinTrajectory tr;
  tr.dt = dt;
  const int every =
      output_dt > 0 && dt > 0 ? std::max(1, static_cast<int>(std::lround(output_dt / dt))) : 1;
  std::vector<double> n = n0;
  tr.times.push_back(0.0);
  tr.modes.push_back(n);
  std::vector<double> tmp(n.size());
  for (int s = 1; s <= steps; ++s) {
    const auto k1 = rhs(n);
    for (std::size_t i = 0; i < n.size(); ++i) tmp[i] = n[i] + 0.5 * dt * k1[i];
    const auto k2 = rhs(tmp);
    for (std::size_t i = 0; i < n.size(); ++i) tmp[i] = n[i] + 0.5 * dt * k2[i];
    const auto k3 = rhs(tmp);
    for (std::size_t i = 0; i < n.size(); ++i) tmp[i] = n[i] + dt * k3[i];
    const auto k4 = rhs(tmp);
    for (std::size_t i = 0; i < n.size(); ++i)
      n[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    const double m = norm_linf(n);
    if (!std::isfinite(m) || m > 1e8) {
      tr.blow_up = true;
      tr.times.push_back(s * dt);
      tr.modes.push_back(n);
      break;
    }
    if (s % every == 0 || s == steps) {
      tr.times.push_back(s == steps ? t_end : s * dt);
      tr.modes.push_back(n);
    }
  }
  return tr;
}

double riccati_single_mode(double lam, double eps, double n1_0, double t) {
  const double a = lam - 1.0;
  if (a == 0.0) throw Error("riccati_single_mode: lambda = 1 is excluded");
  const double beta = 3.0 * lam * eps * eps * n1_0 * n1_0 / (2.0 * kPi * a);
  if (a > 0) {
    const double em = std::exp(-2.0 * a * t);
    return n1_0 / std::sqrt(em * (1.0 - beta) + beta);
  }
  const double e2 = std::exp(2.0 * a * t);
  return n1_0 * std::exp(a * t) / std::sqrt(1.0 + beta * (e2 - 1.0));
}

double stationary_limit(double lam, double eps, double sign) {
  if (lam <= 1.0) return 0.0;
  const double s = sign < 0 ? -1.0 : 1.0;
  return s * std::sqrt(2.0 * kPi / 3.0) * std::sqrt((lam - 1.0) / (lam * eps * eps));
}

double uniform_logistic(double lam, double eps, double t) {
  if (lam > 0) return eps / std::sqrt(std::exp(-2.0 * lam * t) * (1.0 - eps * eps) + eps * eps);
  const double e = std::exp(lam * t);
  return eps * e / std::sqrt(1.0 + eps * eps * (e * e - 1.0));
}

}  // namespace pdelab
