#include "util.hpp"

#include <cmath>
#include <fstream>

namespace pdelab::app::detail {

std::vector<int> snapshot_steps(const RunConfig& cfg, int steps) {
  std::vector<int> out;
  for (double v : cfg.list("snapshots")) {
    if (v != std::floor(v) || v < 0 || v > steps)
      throw Error("config key 'snapshots': step " + format_g17(v) + " outside [0, " +
                  std::to_string(steps) + "]");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

ErrorRow grid_error(const GridFunction& u, const RealFn& exact) {
  const auto ex = sample(exact, u.grid);
  GridFunction d(u.grid);
  for (std::size_t i = 0; i < d.values.size(); ++i) d[i] = u[i] - ex[i];
  return {0, 0.0, norm_linf(d), norm_l2(d)};
}

ErrorRow compare_snapshot(const Snapshot& s, const RealFn& exact, const Report& rep) {
  write_csv((rep.dir() / ("oracle_" + std::to_string(s.step) + ".csv")).string(),
            sample(exact, s.u.grid));
  ErrorRow r = grid_error(s.u, exact);
  r.step = s.step;
  r.t = s.t;
  return r;
}

void write_manifest(const Report& rep, const RunConfig& cfg, const Evolution& e,
                    const std::vector<ErrorRow>& errors) {
  nlohmann::json m;
  m["command"] = cfg.command();
  m["params"] = to_json(cfg.values());
  m["scheme"] = e.scheme;
  m["h"] = e.h;
  m["k"] = e.k;
  m["s"] = e.s;
  m["Q"] = e.q;
  m["times"] = nlohmann::json::array();
  m["files"] = nlohmann::json::array();
  for (const auto& s : e.snapshots) {
    m["times"].push_back(s.t);
    m["files"].push_back("snapshot_" + std::to_string(s.step) + ".csv");
  }
  m["blow_up"] = e.blow_up.has_value();
  if (e.blow_up) m["blow_up_step"] = e.blow_up->step;
  m["errors"] = nlohmann::json::array();
  for (const auto& r : errors)
    m["errors"].push_back({{"step", r.step}, {"t", r.t}, {"max", r.max}, {"l2", r.l2}});
  m["warnings"] = e.warnings;
  rep.json("manifest.json", m);
  std::vector<std::vector<double>> hist;
  for (std::size_t n = 0; n < e.max_history.size(); ++n)
    hist.push_back({static_cast<double>(n), e.max_history[n]});
  rep.table("history.csv", {"step", "max_abs_u"}, hist);
}

double max_error(const std::vector<ErrorRow>& errors) {
  double m = 0.0;
  for (const auto& r : errors) m = std::max(m, std::isfinite(r.max) ? r.max : INFINITY);
  return m;
}

void evolution_gates(Report& rep, const RunConfig& cfg, const Evolution& e,
                     const std::vector<ErrorRow>& errors) {
  const std::string expect = cfg.choice("expect", {"none", "stable", "blow-up"});
  const double gate = cfg.num("gate_max_error");
  const double err = errors.empty() ? 0.0 : max_error(errors);
  if (expect == "stable") rep.gate("no-blow-up", !e.blow_up, e.blow_up ? 1.0 : 0.0, 0.0);
  if (expect == "blow-up") {
    const bool hit = e.blow_up.has_value() || err > 1.0;
    rep.gate("blow-up-or-error-above-1", hit, e.blow_up ? INFINITY : err, 1.0);
  }
  if (gate > 0 && !errors.empty()) rep.gate("max-error", err < gate, err, gate);
}

std::vector<double> observed_orders(const std::vector<double>& errors) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) out.push_back(std::log2(errors[i] / errors[i + 1]));
  return out;
}

}  // namespace pdelab::app::detail
