#include <cmath>
#include <sstream>

#include "commands_impl.hpp"
#include "pdelab/characteristics.hpp"
#include "pdelab/classify.hpp"
#include "pdelab/oracles.hpp"
#include "pdelab/spectral.hpp"
#include "pdelab/stationary_phase.hpp"
#include "pdelab/vonneumann.hpp"
#include "util.hpp"

namespace pdelab::app {

using namespace detail;

namespace {

nlohmann::json opt(const std::optional<double>& v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
  return *v;
}

nlohmann::json verdict_json(const StabilityVerdict& v) {
  return {{"stable", v.stable},
          {"classification", to_string(v.classification)},
          {"max_modulus", opt(v.max_modulus)},
          {"worst_theta", opt(v.worst_theta)},
          {"omega", opt(v.omega)},
          {"worst_k", opt(v.worst_k)},
          {"algebraic_growth", v.algebraic_growth},
          {"note", v.note}};
}

// "1,0;0,-1" -> rows
std::vector<std::vector<double>> parse_matrix(const std::string& text) {
  std::vector<std::vector<double>> m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<double> r;
    std::stringstream cols(row);
    std::string item;
    while (std::getline(cols, item, ',')) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0) throw Error("config key 'matrix': bad entry '" + item + "'");
      r.push_back(v);
    }
    m.push_back(r);
  }
  return m;
}

}  // namespace

int cmd_stability(const RunConfig& cfg, Report& rep, std::ostream& log) {
  nlohmann::json out;
  const std::string pde = cfg.str("pde");
  if (!pde.empty()) {
    const auto c = cfg.list("pde");
    if (c.size() != 6) throw Error("config key 'pde': expected A,B,C,D,E,F");
    const PDECoefficients pc{c[0], c[1], c[2], c[3], c[4], c[5]};
    const auto v = stability_index(pc);
    out["pde"] = verdict_json(v);
    out["mode_type"] = to_string(classify_mode_type(pc));
    if (pc.C != 0 && pc.B == 0 && pc.E == 0 && pc.D == 0 && std::isfinite(v.omega.value_or(0))) {
      const auto d = dispersion(pc);
      out["dispersive"] = d.dispersive;
    }
    log << "stability index: " << to_string(v.classification) << '\n';
  } else {
    const std::string scheme =
        cfg.choice("scheme", {"heat-explicit", "heat-qscheme", "wave-leapfrog", "advection-leapfrog"});
    const SchemeSymbol sym = symbol_by_name(scheme);
    SchemeParams params{{"s", cfg.num("s")}, {"Q", cfg.num("Q")}, {"nu", cfg.num("nu")}};
    const auto v = scheme_stability(sym, params, cfg.integer("n_theta"));
    out["scheme"] = scheme;
    out["verdict"] = verdict_json(v);
    std::vector<std::vector<double>> rows;
    const int n = cfg.integer("n_theta");
    for (int i = 0; i <= n; ++i) {
      const double th = kPi * i / n;
      double m = 0.0;
      for (const auto& r : amplification_factors(sym, th, params).roots) m = std::max(m, std::abs(r));
      rows.push_back({th, m});
    }
    rep.table("amplification.csv", {"theta", "max_abs_xi"}, rows);
    const std::string thr = cfg.str("threshold");
    if (!thr.empty()) {
      const double lo = cfg.num("threshold_lo"), hi = cfg.num("threshold_hi");
      const double star = stability_threshold(sym, params, thr, lo, hi);
      out["threshold"] = {{"parameter", thr}, {"value", star}};
      log << thr << "* = " << format_g17(star) << '\n';
    }
    log << scheme << ": " << to_string(v.classification) << '\n';
  }
  out["command"] = cfg.command();
  out["params"] = to_json(cfg.values());
  rep.json("manifest.json", out);
  rep.summary() = out;
  return 0;
}

int cmd_classify(const RunConfig& cfg, Report& rep, std::ostream& log) {
  nlohmann::json out;
  const std::string mat = cfg.str("matrix");
  if (!mat.empty()) {
    const auto r = classify_ndim(parse_matrix(mat));
    out = {{"kind", to_string(r.kind)}, {"eigenvalues", r.eigenvalues}, {"orthogonal", r.orthogonal},
           {"coordinate_scale", r.coordinate_scale}};
    log << to_string(r.kind) << '\n';
  } else {
    const double a = cfg.num("A"), b = cfg.num("B"), c = cfg.num("C");
    const auto cls = classify2(SecondOrderPDE2::constant(a, b, c), {{0.0, 0.0}});
    out["kind"] = to_string(cls.kind);
    out["discriminant"] = cls.discriminants.front();
    const auto fam = characteristic_families_constant(a, b, c);
    out["families"] = nlohmann::json::array();
    for (const auto& f : fam.families) out["families"].push_back({f.px, f.py});
    if (!fam.note.empty()) out["note"] = fam.note;
    try {
      const auto cf = canonical_transform_constant(a, b, c);
      out["map"] = {{"xi_x", cf.map.xi_x}, {"xi_y", cf.map.xi_y}, {"eta_x", cf.map.eta_x}, {"eta_y", cf.map.eta_y}};
      out["principal"] = {{"xixi", cf.principal.xixi}, {"xieta", cf.principal.xieta}, {"etaeta", cf.principal.etaeta}};
    } catch (const Error& e) {
      out["canonical_error"] = e.what();
    }
    log << to_string(cls.kind) << " (B^2 - AC = " << format_g17(cls.discriminants.front()) << ")\n";
  }
  out["command"] = cfg.command();
  out["params"] = to_json(cfg.values());
  rep.json("manifest.json", out);
  rep.summary() = out;
  return 0;
}

int cmd_characteristics(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const std::string problem = cfg.choice("problem", {"project2c", "burgers", "constant"});
  const auto phi = cfg.profile("phi");
  const double lo = cfg.num("tau_lo"), hi = cfg.num("tau_hi"), b0 = cfg.num("b0");
  CharacteristicProblem p;
  if (problem == "project2c") {
    p = CharacteristicProblem::make_linear(
        [](double, double t) { return 2.0 * t; }, [](double x, double) { return 3.0 * x * x + 1.0; },
        [](double, double) { return 0.0; }, [](double, double) { return 0.0; },
        [](double tau) { return tau; }, [](double) { return 0.0; }, phi.f, lo, hi);
  } else if (problem == "constant") {
    p = CharacteristicProblem::make_linear(
        [b0](double, double) { return b0; }, [](double, double) { return 1.0; },
        [](double, double) { return 0.0; }, [](double, double) { return 0.0; },
        [](double tau) { return tau; }, [](double) { return 0.0; }, phi.f, lo, hi);
  } else {
    p = CharacteristicProblem::make_quasilinear(
        [](double, double, double u) { return u; }, [](double, double, double) { return 1.0; },
        [](double, double, double) { return 0.0; }, [](double tau) { return tau; },
        [](double) { return 0.0; }, phi.f, lo, hi);
  }
  const auto fam = integrate_family(p, cfg.integer("n_tau"), cfg.integer("n_s"), cfg.num("s_max"));
  std::vector<std::vector<double>> rows;
  std::string dat;
  for (std::size_t i = 0; i < fam.tau().size(); ++i) {
    for (std::size_t j = 0; j < fam.s().size(); ++j) {
      const auto id = fam.index(i, j);
      if (!std::isfinite(fam.x()[id])) break;
      rows.push_back({fam.tau()[i], fam.s()[j], fam.x()[id], fam.t()[id], fam.u()[id], fam.delta()[id]});
      dat += format_g17(fam.x()[id]) + " " + format_g17(fam.t()[id]) + "\n";
    }
    dat += "\n";
  }
  rep.table("characteristics.csv", {"tau", "s", "x", "t", "u", "delta"}, rows);
  rep.text("base_characteristics.dat", dat);
  nlohmann::json m = {{"command", cfg.command()}, {"params", to_json(cfg.values())}};
  const auto shock = shock_time_from_family(fam);
  m["jacobian_shock_time"] = std::isfinite(shock.t_star) ? nlohmann::json(shock.t_star) : nlohmann::json(nullptr);
  rep.json("manifest.json", m);
  rep.summary() = m;
  log << fam.tau().size() << " characteristics written\n";
  return 0;
}

int cmd_shock_time(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const auto phi = cfg.profile("phi");
  const auto r = shock_time(phi.df, cfg.num("lo"), cfg.num("hi"), cfg.integer("n"));
  nlohmann::json m = {{"command", cfg.command()},
                      {"params", to_json(cfg.values())},
                      {"t_star", std::isfinite(r.t_star) ? nlohmann::json(r.t_star) : nlohmann::json("inf")},
                      {"tau_star", r.tau_star},
                      {"method", r.method},
                      {"at_domain_boundary", r.at_domain_boundary},
                      {"note", r.note}};
  const double expect = cfg.num("expect_t_star");
  if (expect > 0) rep.gate("t-star", std::abs(r.t_star - expect) <= 1e-8 * expect, r.t_star, expect);
  rep.json("manifest.json", m);
  rep.summary() = m;
  log << "t* = " << format_g17(r.t_star) << (r.at_domain_boundary ? " (infimum at domain boundary)" : "") << '\n';
  return 0;
}

int cmd_oracle(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const std::string name = cfg.choice(
      "name", {"heat-series", "image-series", "erf", "cauchy-heat", "dalembert", "halfplane-heaviside", "sl-dirichlet"});
  const auto f = cfg.profile("f");
  const double c = cfg.num("c"), l = cfg.num("l"), t = cfg.num("t");
  const double lo = cfg.num("x_lo"), hi = cfg.num("x_hi");
  const int n = cfg.integer("n");
  nlohmann::json m = {{"command", cfg.command()}, {"params", to_json(cfg.values())}};
  std::vector<std::vector<double>> rows;
  if (name == "sl-dirichlet") {
    SturmLiouville sl{[](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 1.0; }};
    sl.l = l;
    const auto pairs = sl_shoot(sl, 0.1, cfg.num("lambda_hi"));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const double exact = std::pow(kPi * (k + 1) / l, 2);
      rows.push_back({static_cast<double>(k + 1), pairs[k].lambda, exact});
    }
    rep.table("eigenvalues.csv", {"k", "lambda", "exact"}, rows);
  } else {
    const UniformGrid1D grid(lo, hi, n);
    RealFn u;
    if (name == "heat-series") {
      auto s = std::make_shared<SeriesSolution>(heat_series(f.f, c, l, cfg.integer("K")));
      u = [s, t](double x) { return (*s)(x, t); };
    } else if (name == "image-series") {
      u = [&](double x) { return image_series_heat(f.f, c, l, cfg.integer("J"), x, t); };
    } else if (name == "erf") {
      u = [&](double x) { return erf_solution(cfg.num("u0"), c, x, t); };
    } else if (name == "cauchy-heat") {
      u = [&](double x) { return cauchy_heat(f.f, c, x, t); };
    } else if (name == "dalembert") {
      u = [&](double x) { return dalembert(f.f, nullptr, c, x, t); };
    } else {
      const double y = cfg.num("y");
      u = [y](double x) { return halfplane_heaviside(x, y); };
    }
    for (double x : grid.nodes()) rows.push_back({x, u(x)});
    rep.table("oracle.csv", {"x", "u"}, rows);
  }
  rep.json("manifest.json", m);
  rep.summary() = m;
  log << name << ": " << rows.size() << " rows\n";
  return 0;
}

int cmd_kg_farfield(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const double gamma = cfg.num("gamma"), c = cfg.num("c"), t = cfg.num("t");
  const auto fp = cfg.profile("fplus");
  const UniformGrid1D grid(cfg.num("x_lo"), cfg.num("x_hi"), cfg.integer("n"));
  std::vector<std::vector<double>> rows;
  int outside = 0;
  for (double x : grid.nodes()) {
    const auto r = kg_farfield([&](double l) { return cplx(fp(l), 0.0); }, gamma, c, x, t);
    outside += r.outside_cone;
    rows.push_back({x, r.value.real(), r.value.imag(), std::abs(r.value)});
  }
  rep.table("farfield.csv", {"x", "re", "im", "abs"}, rows);
  nlohmann::json m = {{"command", cfg.command()}, {"params", to_json(cfg.values())}, {"outside_cone_points", outside}};
  rep.json("manifest.json", m);
  rep.summary() = m;
  log << rows.size() << " points, " << outside << " outside the light cone\n";
  return 0;
}

int cmd_nonlinear_heat(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const double lam = cfg.num("lambda"), eps = cfg.num("eps"), t_end = cfg.num("t_end");
  const int K = cfg.integer("K");
  const std::string param = cfg.choice("param", {"w", "u"});
  const auto h = cfg.profile("h");
  // u = eps w: in the u parameterisation the profile is u(x,0) and is divided by eps.
  const double scale = param == "u" ? 1.0 / eps : 1.0;
  auto n0 = forward([&](double x) { return scale * h(x); }, sine_modes(kPi, K));
  const auto tr = nonlinear_heat_galerkin(lam, eps, n0, K, t_end, cfg.num("output_dt"));
  const double out_scale = param == "u" ? eps : 1.0;
  std::vector<std::string> header{"t"};
  for (int k = 1; k <= K; ++k) header.push_back("N" + std::to_string(k));
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    std::vector<double> r{tr.times[i]};
    for (double v : tr.modes[i]) r.push_back(out_scale * v);
    rows.push_back(r);
  }
  rep.table("trajectory.csv", header, rows);
  nlohmann::json m = {{"command", cfg.command()}, {"params", to_json(cfg.values())}, {"dt", tr.dt},
                      {"blow_up", tr.blow_up}, {"N1_final", out_scale * tr.modes.back()[0]}};
  if (lam != 1.0) {
    m["riccati_N1_final"] = out_scale * riccati_single_mode(lam, eps, n0[0], tr.times.back());
    m["stationary_limit"] = out_scale * stationary_limit(lam, eps, n0[0]);
  }
  rep.json("manifest.json", m);
  rep.summary() = m;
  log << "N1(" << format_g17(tr.times.back()) << ") = " << format_g17(out_scale * tr.modes.back()[0]) << '\n';
  return 0;
}

int cmd_resonance(const RunConfig& cfg, Report& rep, std::ostream& log) {
  const double l = cfg.num("l"), c = cfg.num("c"), t_end = cfg.num("t_end");
  const int i = cfg.integer("i"), n = cfg.integer("n");
  const double lam = std::pow(c * kPi * i / l, 2), a = std::sqrt(lam);
  const double w = cfg.str("omega").empty() ? a * (1.0 + cfg.num("detune")) : cfg.num("omega");
  const auto closed = ModeForcing::sinusoid(1.0, w);
  const auto quad = ModeForcing::general([w](double t) { return std::sin(w * t); });
  std::vector<std::vector<double>> rows;
  double diff = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double t = t_end * j / n;
    const double nc = hyperbolic_mode(lam, 0.0, 0.0, closed, t);
    const double nq = hyperbolic_mode(lam, 0.0, 0.0, quad, t);
    diff = std::max(diff, std::abs(nc - nq));
    rows.push_back({t, nc, nq});
  }
  rep.table("resonance.csv", {"t", "closed_form", "quadrature"}, rows);
  rep.gate("closed-vs-quadrature", diff < 1e-8, diff, 1e-8);
  nlohmann::json m = {{"command", cfg.command()}, {"params", to_json(cfg.values())},
                      {"lambda", lam}, {"omega", w}, {"max_diff", diff}};
  rep.json("manifest.json", m);
  rep.summary() = m;
  log << "lambda=" << format_g17(lam) << " omega=" << format_g17(w) << " max diff " << format_g17(diff) << '\n';
  return 0;
}

}  // namespace pdelab::app
