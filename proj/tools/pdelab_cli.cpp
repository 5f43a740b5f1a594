// Command-line front end: pdelab <command> [--config FILE] [--out DIR] [--key=value ...]
#include <iostream>

#include "CLI11.hpp"
#include "pdelab/app/commands.hpp"

namespace {

// Splits leftover "--key=value" / "key=value" arguments.
pdelab::app::KeyValues overrides(const std::vector<std::string>& extras) {
  pdelab::app::KeyValues kv;
  for (std::string a : extras) {
    if (a.rfind("--", 0) == 0) a = a.substr(2);
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw pdelab::Error("expected --key=value, got '" + a + "'");
    kv[a.substr(0, eq)] = a.substr(eq + 1);
  }
  return kv;
}

std::string slug(std::string s) {
  for (auto& ch : s)
    if (ch == ' ') ch = '-';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PDE numerics laboratory"};
  app.require_subcommand(1);
  std::string config, out;

  struct Entry {
    CLI::App* sub;
    std::string name;
  };
  std::vector<Entry> entries;
  std::map<std::string, CLI::App*> groups;
  for (const auto& cmd : pdelab::app::command_table()) {
    CLI::App* parent = &app;
    std::string leaf = cmd.name;
    const auto space = cmd.name.find(' ');
    if (space != std::string::npos) {
      const std::string group = cmd.name.substr(0, space);
      if (!groups.count(group)) {
        groups[group] = app.add_subcommand(group, group + " a problem");
        groups[group]->require_subcommand(1);
      }
      parent = groups[group];
      leaf = cmd.name.substr(space + 1);
    }
    std::string help = cmd.help + "\nkeys (default):";
    for (const auto& [k, v] : cmd.defaults) help += "\n  " + k + " (" + (v.empty() ? "unset" : v) + ")";
    CLI::App* sub = parent->add_subcommand(leaf, help);
    sub->allow_extras();
    sub->add_option("--config", config, "key=value file; command-line keys take precedence");
    sub->add_option("--out", out, "output directory");
    entries.push_back({sub, cmd.name});
  }
  std::string manifest;
  CLI::App* plot = app.add_subcommand("plot", "write a gnuplot script next to a manifest");
  plot->add_option("manifest", manifest, "manifest.json of a previous run")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (plot->parsed()) {
      std::cout << pdelab::app::write_plot_script(manifest) << '\n';
      return 0;
    }
    for (const auto& e : entries) {
      if (!e.sub->parsed()) continue;
      const auto file = config.empty() ? pdelab::app::KeyValues{} : pdelab::app::read_config_file(config);
      const std::string dir = out.empty() ? "out/" + slug(e.name) : out;
      const int code = pdelab::app::run_command(e.name, file, overrides(e.sub->remaining()), dir, std::cout);
      if (code != 0) std::cerr << "gate failures recorded in " << dir << "/summary.json\n";
      return code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
