#include "pdelab/app/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pdelab::app {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValues parse_key_values(std::istream& in, const std::string& origin) {
  KeyValues kv;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(origin + ":" + std::to_string(n) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open config file " + path);
  return parse_key_values(f, path);
}

RunConfig::RunConfig(std::string command, KeyValues defaults, const KeyValues& file,
                     const KeyValues& cli)
    : command_(std::move(command)), values_(std::move(defaults)) {
  for (const auto* src : {&file, &cli})
    for (const auto& [k, v] : *src) {
      if (!values_.count(k)) throw Error("unknown config key '" + k + "' for " + command_);
      values_[k] = v;
    }
}

const std::string& RunConfig::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error("config key '" + key + "' is not defined for " + command_);
  return it->second;
}

std::string RunConfig::str(const std::string& key) const { return raw(key); }

double RunConfig::num(const std::string& key) const {
  const std::string& v = raw(key);
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (v.empty() || used != v.size() || !std::isfinite(d))
    throw Error("config key '" + key + "': expected a number, got '" + v + "'");
  return d;
}

int RunConfig::integer(const std::string& key) const {
  const double d = num(key);
  if (d != std::floor(d) || std::abs(d) > 1e9)
    throw Error("config key '" + key + "': expected an integer, got '" + raw(key) + "'");
  return static_cast<int>(d);
}

bool RunConfig::flag(const std::string& key) const {
  const std::string& v = raw(key);
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no" || v.empty()) return false;
  throw Error("config key '" + key + "': expected a boolean, got '" + v + "'");
}

Profile RunConfig::profile(const std::string& key) const {
  try {
    return parse_profile(raw(key));
  } catch (const Error& e) {
    throw Error("config key '" + key + "': " + e.what());
  }
}

std::vector<double> RunConfig::list(const std::string& key) const {
  std::vector<double> out;
  std::stringstream ss(raw(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    double d = 0;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error("config key '" + key + "': bad list entry '" + item + "'");
    out.push_back(d);
  }
  return out;
}

std::string RunConfig::choice(const std::string& key, const std::vector<std::string>& allowed) const {
  const std::string& v = raw(key);
  for (const auto& a : allowed)
    if (a == v) return v;
  std::string opts;
  for (const auto& a : allowed) opts += (opts.empty() ? "" : "|") + a;
  throw Error("config key '" + key + "': '" + v + "' is not one of " + opts);
}

}  // namespace pdelab::app
