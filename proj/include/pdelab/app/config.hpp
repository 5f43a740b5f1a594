#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pdelab/app/profiles.hpp"

namespace pdelab::app {

using KeyValues = std::map<std::string, std::string>;

// Flat key=value lines; '#' starts a comment. Malformed lines throw with the line number.
KeyValues parse_key_values(std::istream& in, const std::string& origin);
KeyValues read_config_file(const std::string& path);

// Parameters for one command. Precedence: command line > file > defaults.
class RunConfig {
 public:
  RunConfig(std::string command, KeyValues defaults, const KeyValues& file, const KeyValues& cli);

  const std::string& command() const { return command_; }
  const KeyValues& values() const { return values_; }

  std::string str(const std::string& key) const;
  double num(const std::string& key) const;
  int integer(const std::string& key) const;
  bool flag(const std::string& key) const;
  Profile profile(const std::string& key) const;
  std::vector<double> list(const std::string& key) const;
  // Value must be one of the given choices.
  std::string choice(const std::string& key, const std::vector<std::string>& allowed) const;

 private:
  const std::string& raw(const std::string& key) const;
  std::string command_;
  KeyValues values_;
};

}  // namespace pdelab::app
