#include "pdelab/app/report.hpp"

#include <fstream>
#include <ostream>

#include "pdelab/grid.hpp"

namespace pdelab::app {

Report::Report(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void Report::gate(const std::string& name, bool pass, double value, double threshold,
                  const std::string& detail) {
  gates_.push_back({name, pass, value, threshold, detail});
}

void Report::table(const std::string& file, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows) const {
  std::ofstream f(dir_ / file);
  if (!f) throw Error("cannot write " + (dir_ / file).string());
  for (std::size_t i = 0; i < header.size(); ++i) f << (i ? "," : "") << header[i];
  f << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) f << (i ? "," : "") << format_g17(r[i]);
    f << '\n';
  }
}

void Report::text(const std::string& file, const std::string& content) const {
  std::ofstream f(dir_ / file);
  if (!f) throw Error("cannot write " + (dir_ / file).string());
  f << content;
}

void Report::json(const std::string& file, const nlohmann::json& j) const {
  text(file, j.dump(2) + "\n");
}

nlohmann::json to_json(const KeyValues& kv) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

namespace {

// JSON cannot hold inf/nan; keep them readable.
nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

int Report::finish(const RunConfig& cfg, std::ostream& log) {
  nlohmann::json gates = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& g : gates_) {
    gates.push_back({{"name", g.name},
                     {"pass", g.pass},
                     {"value", number(g.value)},
                     {"threshold", number(g.threshold)},
                     {"detail", g.detail}});
    if (!g.pass) failures.push_back(g.name);
    log << (g.pass ? "PASS " : "FAIL ") << g.name << " value=" << format_g17(g.value)
        << " threshold=" << format_g17(g.threshold) << (g.detail.empty() ? "" : " (" + g.detail + ")")
        << '\n';
  }
  nlohmann::json out = summary_;
  out["command"] = cfg.command();
  out["params"] = to_json(cfg.values());
  out["gates"] = gates;
  out["failures"] = failures;
  out["pass"] = failures.empty();
  json("summary.json", out);
  return failures.empty() ? 0 : 2;
}

}  // namespace pdelab::app
