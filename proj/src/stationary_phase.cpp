#include "pdelab/stationary_phase.hpp"

#include <algorithm>
#include <cmath>

#include "pdelab/numerics.hpp"

namespace pdelab {

std::vector<double> find_stationary_points(const RealFn& dphi, double lo, double hi, int n_scan) {
  if (!(hi > lo)) throw Error("find_stationary_points: empty range");
  const double edge = 1e-9 * (hi - lo);
  std::vector<double> out;
  for (double r : find_roots(dphi, lo, hi, n_scan, 1e-12))
    if (r > lo + edge && r < hi - edge) out.push_back(r);
  return out;
}

StationaryPhaseResult stationary_phase_eval(const OscillatoryIntegral& I, int n_scan) {
  if (!(I.k > 0)) throw Error("stationary_phase_eval: k must be positive");
  StationaryPhaseResult res;
  for (double t0 : find_stationary_points(I.dphi, I.lo, I.hi, n_scan)) {
    const double p2 = I.d2phi(t0);
    if (std::abs(p2) < 1e-10)
      throw Error("degenerate stationary point at t = " + std::to_string(t0));
    const double mag = std::sqrt(2.0 * kPi / (I.k * std::abs(p2)));
    const double arg = I.k * I.phi(t0) + (p2 > 0 ? 0.25 : -0.25) * kPi;
    const cplx c = I.f(t0) * mag * std::polar(1.0, arg);
    res.points.push_back({t0, p2, c});
    res.value += c;
  }
  res.no_stationary_points = res.points.empty();
  return res;
}

double kg_omega(double lambda, double gamma, double c) {
  return std::sqrt(gamma * gamma * lambda * lambda + c * c);
}

double kg_omega_prime(double lambda, double gamma, double c) {
  const double w = kg_omega(lambda, gamma, c);
  if (w == 0.0) return gamma;
  return gamma * gamma * lambda / w;
}

double kg_omega_second(double lambda, double gamma, double c) {
  const double s = gamma * gamma * lambda * lambda + c * c;
  return gamma * gamma * c * c / (s * std::sqrt(s));
}

double kg_stationary_lambda(double v, double gamma, double c) {
  if (!(std::abs(v) < gamma)) throw Error("kg_stationary_lambda: |x/t| must be below gamma");
  return (c / gamma) * v / std::sqrt(gamma * gamma - v * v);
}

FarField kg_farfield(const ComplexFn& fplus, double gamma, double c, double x, double t,
                     const ComplexFn& fminus) {
  if (!(t > 0)) throw Error("kg_farfield: t must be positive");
  if (!(gamma > 0) || !(c > 0)) throw Error("kg_farfield: gamma and c must be positive");
  FarField out;
  const double v = x / t;
  if (std::abs(v) >= gamma) {
    out.outside_cone = true;
    return out;
  }
  const double lam = kg_stationary_lambda(v, gamma, c);
  out.lambda = lam;
  const double w = kg_omega(lam, gamma, c);
  const double w2 = kg_omega_second(lam, gamma, c);
  out.value = fplus(lam) / std::sqrt(w2 * t) * std::polar(1.0, w * t - lam * x + 0.25 * kPi);
  if (fminus) {
    // Phase -(omega + lambda v): stationary at -lambda with negative curvature.
    const double lm = -lam;
    out.value += fminus(lm) / std::sqrt(w2 * t) * std::polar(1.0, -w * t - lm * x - 0.25 * kPi);
  }
  return out;
}

WavePacket gaussian_packet(double eps, double k0) {
  if (!(eps > 0)) throw Error("gaussian_packet: eps must be positive");
  WavePacket p;
  p.envelope = [eps](double x) { return std::exp(-eps * eps * x * x); };
  const double a = 1.0 / (2.0 * std::sqrt(kPi) * eps);
  p.spectrum = [eps, a](double mu) { return a * std::exp(-mu * mu / (4.0 * eps * eps)); };
  p.k0 = k0;
  p.spectral_halfwidth = 12.0 * eps;
  return p;
}

double kg_group_velocity(double k0, double gamma, double c) { return kg_omega_prime(k0, gamma, c); }

cplx wave_packet_transport(const WavePacket& p, double gamma, double c, double x, double t) {
  const double vg = kg_group_velocity(p.k0, gamma, c);
  return p.envelope(x - vg * t) * std::polar(1.0, kg_omega(p.k0, gamma, c) * t - p.k0 * x);
}

cplx packet_exact_field(const WavePacket& p, double gamma, double c, double x, double t) {
  const double W = p.spectral_halfwidth;
  // At least 40 nodes per oscillation of the integrand in mu.
  const double rate = gamma * std::abs(t) + std::abs(x) + 1.0;
  const int n = std::max(2000, static_cast<int>(40.0 * 2.0 * W * rate / (2.0 * kPi)));
  auto g = [&](double mu) -> cplx {
    const double l = p.k0 + mu;
    return p.spectrum(mu) * std::polar(1.0, kg_omega(l, gamma, c) * t - l * x);
  };
  return composite_simpson_complex(g, -W, W, n);
}

}  // namespace pdelab
