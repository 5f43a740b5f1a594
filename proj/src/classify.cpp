#include "pdelab/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdelab/linalg.hpp"

namespace pdelab {

SecondOrderPDE2 SecondOrderPDE2::constant(double a, double b, double c, double d, double e,
                                          double f, double g) {
  auto k = [](double v) { return CoefficientField([v](double, double) { return v; }); };
  return {k(a), k(b), k(c), k(d), k(e), k(f), k(g)};
}

std::string to_string(PdeKind k) {
  switch (k) {
    case PdeKind::hyperbolic: return "hyperbolic";
    case PdeKind::parabolic: return "parabolic";
    case PdeKind::elliptic: return "elliptic";
    case PdeKind::ultrahyperbolic: return "ultrahyperbolic";
  }
  return "?";
}

namespace {

PdeKind kind_of(double a, double b, double c) {
  const double d = b * b - a * c;
  const double scale = std::max({b * b, std::abs(a * c), 1e-300});
  if (std::abs(d) <= 1e-12 * scale) return PdeKind::parabolic;
  return d > 0 ? PdeKind::hyperbolic : PdeKind::elliptic;
}

}  // namespace

ClassificationResult classify2(const SecondOrderPDE2& pde, const std::vector<Point2>& samples) {
  if (samples.empty()) throw Error("classify2: need at least one sample point");
  ClassificationResult r{};
  std::vector<PdeKind> kinds;
  for (const auto& p : samples) {
    const double a = pde.A(p.x, p.y), b = pde.B(p.x, p.y), c = pde.C(p.x, p.y);
    r.discriminants.push_back(b * b - a * c);
    kinds.push_back(kind_of(a, b, c));
  }
  std::ostringstream bad;
  int n_bad = 0;
  for (std::size_t i = 1; i < kinds.size(); ++i)
    if (kinds[i] != kinds[0]) {
      bad << (n_bad++ ? ", " : "") << "(" << samples[i].x << ", " << samples[i].y << ")";
    }
  if (n_bad) {
    std::ostringstream msg;
    msg << "classify2: mixed type; " << to_string(kinds[0]) << " at (" << samples[0].x << ", "
        << samples[0].y << ") but different at " << bad.str();
    throw Error(msg.str());
  }
  r.kind = kinds[0];
  r.uniform = samples.size() > 1;
  const double a = pde.A(samples[0].x, samples[0].y);
  const double b = pde.B(samples[0].x, samples[0].y);
  const double c = pde.C(samples[0].x, samples[0].y);
  if (a != 0.0) {
    const cplx sq = std::sqrt(cplx(b * b - a * c, 0.0));
    r.omega_plus = (-b + sq) / a;
    r.omega_minus = (-b - sq) / a;
  } else if (b != 0.0) {
    r.degree_one_root = -c / (2.0 * b);
  }
  return r;
}

CharacteristicFamilies characteristic_families_constant(double a, double b, double c) {
  CharacteristicFamilies out{kind_of(a, b, c), {}, ""};
  // Families xi = px x + py y with A px^2 + 2B px py + C py^2 = 0.
  switch (out.kind) {
    case PdeKind::elliptic:
      out.note = "no real characteristics";
      break;
    case PdeKind::hyperbolic:
      if (a != 0.0) {
        const double sq = std::sqrt(b * b - a * c);
        out.families.push_back({(-b + sq) / a, 1.0});
        out.families.push_back({(-b - sq) / a, 1.0});
      } else {
        out.families.push_back({1.0, 0.0});
        out.families.push_back({c, -2.0 * b});
      }
      break;
    case PdeKind::parabolic:
      if (a != 0.0)
        out.families.push_back({-b / a, 1.0});
      else if (c != 0.0)
        out.families.push_back({1.0, 0.0});
      else
        out.note = "principal part vanishes";
      break;
    default:
      break;
  }
  return out;
}

PrincipalPart transform_principal_part(double a, double b, double c, const AffineMap& m) {
  return {a * m.xi_x * m.xi_x + 2.0 * b * m.xi_x * m.xi_y + c * m.xi_y * m.xi_y,
          2.0 * (a * m.xi_x * m.eta_x + b * (m.xi_x * m.eta_y + m.xi_y * m.eta_x) +
                 c * m.xi_y * m.eta_y),
          a * m.eta_x * m.eta_x + 2.0 * b * m.eta_x * m.eta_y + c * m.eta_y * m.eta_y};
}

PrincipalPart principal_part_by_chain_rule(double a, double b, double c, const AffineMap& m) {
  // L[u] = A u_xx + 2B u_xy + C u_yy by unit-step central differences, exact for quadratics.
  auto apply = [&](auto&& U) {
    auto u = [&](double x, double y) {
      return U(m.xi_x * x + m.xi_y * y, m.eta_x * x + m.eta_y * y);
    };
    const double uxx = u(1, 0) - 2.0 * u(0, 0) + u(-1, 0);
    const double uyy = u(0, 1) - 2.0 * u(0, 0) + u(0, -1);
    const double uxy = (u(1, 1) - u(1, -1) - u(-1, 1) + u(-1, -1)) / 4.0;
    return a * uxx + 2.0 * b * uxy + c * uyy;
  };
  return {apply([](double xi, double) { return 0.5 * xi * xi; }),
          apply([](double xi, double eta) { return xi * eta; }),
          apply([](double, double eta) { return 0.5 * eta * eta; })};
}

CanonicalForm canonical_transform_constant(double a, double b, double c) {
  CanonicalForm out{};
  out.kind = kind_of(a, b, c);
  AffineMap& m = out.map;
  switch (out.kind) {
    case PdeKind::hyperbolic: {
      const auto fam = characteristic_families_constant(a, b, c).families;
      m = {fam[0].px, fam[0].py, fam[1].px, fam[1].py};
      break;
    }
    case PdeKind::parabolic:
      if (a != 0.0) {
        const double w = -b / a;
        m = {w, 1.0, w * w + 1.0, w};
      } else {
        m = {1.0, 0.0, 0.0, 1.0};
      }
      break;
    case PdeKind::elliptic: {
      const double h0 = a * c - b * b;
      m = {-b / a, 1.0, std::sqrt(h0) / a, 0.0};
      break;
    }
    default:
      break;
  }
  if (std::abs(m.jacobian()) <= 1e-14) throw Error("canonical_transform_constant: degenerate map");
  const auto p = transform_principal_part(a, b, c, m);
  const auto check = principal_part_by_chain_rule(a, b, c, m);
  const double size = std::max({std::abs(p.xixi), std::abs(p.xieta), std::abs(p.etaeta), 1.0});
  if (std::abs(p.xixi - check.xixi) > 1e-10 * size ||
      std::abs(p.xieta - check.xieta) > 1e-10 * size ||
      std::abs(p.etaeta - check.etaeta) > 1e-10 * size)
    throw Error("canonical_transform_constant: chain-rule check failed");
  out.scale = out.kind == PdeKind::hyperbolic  ? p.xieta
              : out.kind == PdeKind::parabolic ? p.etaeta
                                               : p.xixi;
  if (out.scale == 0.0) throw Error("canonical_transform_constant: vanishing principal part");
  out.principal = {p.xixi / out.scale, p.xieta / out.scale, p.etaeta / out.scale};
  return out;
}

NdimClassification classify_ndim(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n < 2) throw Error("classify_ndim: dimension must be at least 2");
  NdimClassification out{};
  out.symmetrized.assign(n, std::vector<double>(n));
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error("classify_ndim: matrix not square");
    for (std::size_t j = 0; j < n; ++j) {
      out.symmetrized[i][j] = 0.5 * (a[i][j] + a[j][i]);
      norm += out.symmetrized[i][j] * out.symmetrized[i][j];
    }
  }
  norm = std::sqrt(norm);
  const auto eig = symmetric_eigen(out.symmetrized, 1e-12);
  out.eigenvalues = eig.values;
  out.orthogonal = eig.vectors;
  const double thresh = 1e-10 * std::max(norm, 1e-300);
  int pos = 0, neg = 0, zero = 0;
  for (double l : out.eigenvalues) {
    if (std::abs(l) <= thresh) {
      ++zero;
      out.coordinate_scale.push_back(0.0);
    } else {
      (l > 0 ? pos : neg)++;
      // alpha = xi / sqrt|lambda| turns lambda d^2/dxi^2 into +-d^2/dalpha^2.
      out.coordinate_scale.push_back(1.0 / std::sqrt(std::abs(l)));
    }
  }
  if (zero > 0)
    out.kind = PdeKind::parabolic;
  else if (pos == 0 || neg == 0)
    out.kind = PdeKind::elliptic;
  else if (pos == 1 || neg == 1)
    out.kind = PdeKind::hyperbolic;
  else
    out.kind = PdeKind::ultrahyperbolic;
  return out;
}

SurfaceCheck characteristic_surface_check(const std::vector<std::vector<double>>& a,
                                          const std::vector<double>& g) {
  const std::size_t n = a.size();
  if (g.size() != n) throw Error("characteristic_surface_check: dimension mismatch");
  double v = 0.0, gn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    gn += g[i] * g[i];
    for (std::size_t j = 0; j < n; ++j) v += 0.5 * (a[i][j] + a[j][i]) * g[i] * g[j];
  }
  return {v, std::abs(v) <= 1e-12 * std::max(1.0, gn), gn == 0.0};
}

}  // namespace pdelab
