#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pdelab/app/config.hpp"
#include "pdelab/app/report.hpp"

namespace pdelab::app {

struct Command {
  std::string name;  // e.g. "solve heat", "project2"
  std::string help;
  KeyValues defaults;
  int (*run)(const RunConfig&, Report&, std::ostream&);
};

const std::vector<Command>& command_table();
const Command& find_command(const std::string& name);

// Builds the RunConfig, runs the command into out_dir and returns the exit code.
int run_command(const std::string& name, const KeyValues& file, const KeyValues& cli,
                const std::string& out_dir, std::ostream& log);

// Writes plot.gp next to a manifest.json or summary.json produced by a command.
std::string write_plot_script(const std::string& manifest_path);

// Root of xi^3 + xi = c (unique, the cubic is increasing).
double cubic_root(double c);
// Exact solution of (3x^2+1) u_t + 2t u_x = 0 with u(x,0) = phi(x).
double project2c_exact(const RealFn& phi, double x, double t);

}  // namespace pdelab::app
