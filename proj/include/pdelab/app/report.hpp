#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdelab/app/config.hpp"

namespace pdelab::app {

struct Gate {
  std::string name;
  bool pass;
  double value;
  double threshold;
  std::string detail;
};

// Output directory plus the pass/fail gates of one run.
class Report {
 public:
  explicit Report(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  nlohmann::json& summary() { return summary_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void gate(const std::string& name, bool pass, double value, double threshold,
            const std::string& detail = "");
  // CSV with %.17g values.
  void table(const std::string& file, const std::vector<std::string>& header,
             const std::vector<std::vector<double>>& rows) const;
  void text(const std::string& file, const std::string& content) const;
  void json(const std::string& file, const nlohmann::json& j) const;

  // Writes summary.json and returns 0 when every gate passed, 2 otherwise.
  int finish(const RunConfig& cfg, std::ostream& log);

 private:
  std::filesystem::path dir_;
  nlohmann::json summary_ = nlohmann::json::object();
  std::vector<Gate> gates_;
};

nlohmann::json to_json(const KeyValues& kv);

}  // namespace pdelab::app
