#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdelab/common.hpp"

namespace pdelab {

using CoefficientField = std::function<double(double, double)>;

// A u_xx + 2B u_xy + C u_yy + D u_x + E u_y + F u = G
struct SecondOrderPDE2 {
  CoefficientField A, B, C, D, E, F, G;

  static SecondOrderPDE2 constant(double a, double b, double c, double d = 0, double e = 0,
                                  double f = 0, double g = 0);
};

enum class PdeKind { hyperbolic, parabolic, elliptic, ultrahyperbolic };
std::string to_string(PdeKind k);

struct Point2 {
  double x, y;
};

struct ClassificationResult {
  PdeKind kind;
  std::vector<double> discriminants;  // B^2 - AC per sample
  // Roots of A z^2 + 2B z + C = 0 at the first sample, when A != 0.
  std::optional<cplx> omega_plus, omega_minus;
  // Root of the degree-one equation 2B z + C = 0 when A = 0 and B != 0.
  std::optional<double> degree_one_root;
  bool uniform = false;  // more than one sample agreed
};

ClassificationResult classify2(const SecondOrderPDE2& pde, const std::vector<Point2>& samples);

// Level-set function xi = px x + py y.
struct LinearFamily {
  double px, py;
  double operator()(double x, double y) const { return px * x + py * y; }
};

struct CharacteristicFamilies {
  PdeKind kind;
  std::vector<LinearFamily> families;
  std::string note;
};

CharacteristicFamilies characteristic_families_constant(double a, double b, double c);

// (xi, eta) = (xi_x x + xi_y y, eta_x x + eta_y y)
struct AffineMap {
  double xi_x, xi_y, eta_x, eta_y;
  double jacobian() const { return xi_x * eta_y - xi_y * eta_x; }
};

// Principal-part coefficients of U_xixi, U_xieta, U_etaeta after the change of variables.
struct PrincipalPart {
  double xixi, xieta, etaeta;
};

PrincipalPart transform_principal_part(double a, double b, double c, const AffineMap& m);
// Same quantities from second differences of U(xi(x,y), eta(x,y)) for quadratic test functions.
PrincipalPart principal_part_by_chain_rule(double a, double b, double c, const AffineMap& m);

struct CanonicalForm {
  PdeKind kind;
  AffineMap map;
  PrincipalPart principal;   // normalised so the leading canonical coefficient is 1
  double scale;              // factor divided out during normalisation
};

// Hyperbolic: U_xieta; parabolic: U_etaeta; elliptic: U_xixi + U_etaeta.
CanonicalForm canonical_transform_constant(double a, double b, double c);

struct NdimClassification {
  PdeKind kind;
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> orthogonal;   // row i maps x to xi_i
  std::vector<double> coordinate_scale;          // alpha_i = scale_i xi_i; 0 for null directions
  std::vector<std::vector<double>> symmetrized;
};

NdimClassification classify_ndim(const std::vector<std::vector<double>>& a);

struct SurfaceCheck {
  double value;
  bool characteristic;
  bool degenerate;  // zero gradient
};

SurfaceCheck characteristic_surface_check(const std::vector<std::vector<double>>& a,
                                          const std::vector<double>& gradient);

}  // namespace pdelab
