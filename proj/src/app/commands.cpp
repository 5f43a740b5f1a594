#include "pdelab/app/commands.hpp"

#include <fstream>
#include <sstream>

#include "commands_impl.hpp"

namespace pdelab::app {

namespace {

const KeyValues kEvolutionGates = {{"expect", "none"}, {"gate_max_error", "0"}, {"snapshots", ""}};

KeyValues with(KeyValues base, const KeyValues& extra) {
  for (const auto& [k, v] : extra) base[k] = v;
  return base;
}

}  // namespace

const std::vector<Command>& command_table() {
  static const std::vector<Command> table = {
      {"solve heat", "heat equation on [0, l]: explicit/theta scheme or sine modes",
       with(kEvolutionGates, {{"l", "1"}, {"c", "1"}, {"N", "50"}, {"s", "0.49"}, {"steps", "100"}, {"Q", "0"},
                              {"phi", "hat"}, {"method", "fd"}, {"oracle", "none"}, {"K", "200"},
                              {"bc", "dirichlet"}, {"bc_lo", "0"}, {"bc_hi", "0"}}),
       cmd_solve_heat},
      {"solve wave", "wave equation on [-l, l] by leapfrog",
       with(kEvolutionGates, {{"l", "10"}, {"c", "1"}, {"h", "0.1"}, {"s", "0.9"}, {"steps", "60"},
                              {"phi", "gaussian(1,8,0)"}, {"psi", "const(0)"}, {"oracle", "none"}, {"K", "400"},
                              {"bc_lo", "0"}, {"bc_hi", "0"}}),
       cmd_solve_wave},
      {"solve laplace", "five-point Laplace on the unit square by Jacobi or Gauss-Seidel",
       {{"N", "16"}, {"boundary", "harmonic-x2y2"}, {"method", "jacobi"}, {"tol", "1e-8"}, {"max_iter", "200000"}},
       cmd_solve_laplace},
      {"solve advection", "a u_t + b u_x = 0 on [-l, l] by the centred leapfrog",
       with(kEvolutionGates, {{"equation", "constant"}, {"l", "10"}, {"N", "400"}, {"cfl", "0.5"}, {"t_end", "1"},
                              {"b0", "1"}, {"phi", "gaussian(1,1,0)"}, {"oracle", "none"}, {"detect_gradient", "0"}}),
       cmd_solve_advection},
      {"project1", "wave equation harness: Gaussian, manufactured source, driven string",
       {{"gauss_a", "1"}, {"gauss_b", "8"}, {"mms_t_end", "1"}, {"mms_n0", "40"}, {"refinements", "3"},
        {"omega", "2"}, {"driven_n", "400"}, {"driven_K", "400"}, {"driven_t_end", "10"}},
       cmd_project1},
      {"project2", "advection harness: stability, characteristics, shock times",
       {{"gamma", "1"}, {"gradient_limit", "50"}, {"shock_h", "0.002"}}, cmd_project2},
      {"project3", "heat harness: manufactured source, spectral comparison, nonlinear sweep",
       {{"mms_n0", "20"}, {"refinements", "3"}, {"K", "100"}, {"eps", "0.01"}, {"sweep_t_end", "30"},
        {"sweep_n", "60"}, {"lambdas", "0.5,2,3.5,6"}, {"seed", "12345"}},
       cmd_project3},
      {"stability", "Von Neumann verdict of a scheme, or stability index of a PDE",
       {{"scheme", "heat-explicit"}, {"s", "0.5"}, {"Q", "0"}, {"nu", "0.5"}, {"n_theta", "1024"},
        {"threshold", ""}, {"threshold_lo", "0.1"}, {"threshold_hi", "2"}, {"pde", ""}},
       cmd_stability},
      {"classify", "type and canonical map of A u_xx + 2B u_xy + C u_yy, or of a coefficient matrix",
       {{"A", "1"}, {"B", "0"}, {"C", "-1"}, {"matrix", ""}}, cmd_classify},
      {"characteristics", "base characteristics of a first-order problem",
       {{"problem", "project2c"}, {"phi", "gaussian(1,1,0)"}, {"tau_lo", "-3"}, {"tau_hi", "3"}, {"b0", "1"},
        {"n_tau", "25"}, {"n_s", "400"}, {"s_max", "1.5"}},
       cmd_characteristics},
      {"shock-time", "breakdown time of u_t + u u_x = 0",
       {{"phi", "tent"}, {"lo", "-10"}, {"hi", "10"}, {"n", "2000"}, {"expect_t_star", "0"}}, cmd_shock_time},
      {"oracle", "evaluate an analytic solution on a grid",
       {{"name", "heat-series"}, {"f", "hat"}, {"c", "1"}, {"l", "1"}, {"t", "0.01"}, {"x_lo", "0"}, {"x_hi", "1"},
        {"n", "100"}, {"K", "200"}, {"J", "3"}, {"u0", "1"}, {"y", "1"}, {"lambda_hi", "300"}},
       cmd_oracle},
      {"kg-farfield", "Klein-Gordon far field by stationary phase",
       {{"gamma", "1"}, {"c", "1"}, {"t", "50"}, {"x_lo", "-60"}, {"x_hi", "60"}, {"n", "600"},
        {"fplus", "gaussian(1,1,0)"}},
       cmd_kg_farfield},
      {"nonlinear-heat", "Galerkin modes of u_t - u_xx = lam u (1 - u^2) on (0, pi)",
       {{"lambda", "2"}, {"eps", "0.1"}, {"K", "8"}, {"t_end", "30"}, {"output_dt", "0.1"}, {"param", "w"},
        {"h", "sin(1)"}},
       cmd_nonlinear_heat},
      {"resonance", "sinusoidally forced string mode: closed form against quadrature",
       {{"l", "1"}, {"c", "1"}, {"i", "1"}, {"omega", ""}, {"detune", "0"}, {"t_end", "20"}, {"n", "200"}},
       cmd_resonance},
  };
  return table;
}

const Command& find_command(const std::string& name) {
  for (const auto& c : command_table())
    if (c.name == name) return c;
  throw Error("unknown command '" + name + "'");
}

int run_command(const std::string& name, const KeyValues& file, const KeyValues& cli,
                const std::string& out_dir, std::ostream& log) {
  const Command& cmd = find_command(name);
  const RunConfig cfg(cmd.name, cmd.defaults, file, cli);
  Report rep(out_dir);
  cmd.run(cfg, rep, log);
  return rep.finish(cfg, log);
}

std::string write_plot_script(const std::string& manifest_path) {
  namespace fs = std::filesystem;
  std::ifstream in(manifest_path);
  if (!in) throw Error("cannot open " + manifest_path);
  nlohmann::json m;
  try {
    in >> m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(manifest_path + ": " + e.what());
  }
  const fs::path dir = fs::path(manifest_path).parent_path();
  const std::string command = m.value("command", "");
  std::ostringstream gp;
  gp << "set datafile separator ','\nset key autotitle columnhead\n";
  if (command == "solve heat" || command == "solve wave" || command == "solve advection") {
    const auto& files = m["files"];
    const auto& times = m["times"];
    for (std::size_t i = 0; i < files.size(); ++i) {
      const std::string f = files[i].get<std::string>();
      const std::string step = f.substr(9, f.size() - 13);  // snapshot_<n>.csv
      gp << "set title 't = " << times[i].get<double>() << "'\n";
      gp << "plot '" << f << "' using 1:2 with lines title 'numeric'";
      if (fs::exists(dir / ("oracle_" + step + ".csv")))
        gp << ", 'oracle_" << step << ".csv' using 1:2 with lines dashtype 2 title 'oracle'";
      gp << "\npause -1\n";
    }
    gp << "set title 'max |u| per step'\nset logscale y\n"
       << "plot 'history.csv' using 1:2 with lines title 'max |u|'\npause -1\n";
  } else if (command == "stability") {
    gp << "set title 'max |xi| over theta'\n"
       << "plot 'amplification.csv' using 1:2 with lines title '|xi|'\npause -1\n";
  } else if (command == "characteristics") {
    gp << "set datafile separator whitespace\nunset key\nset xlabel 'x'\nset ylabel 't'\n"
       << "plot 'base_characteristics.dat' using 1:2 with lines\npause -1\n";
  } else if (command == "solve laplace") {
    gp << "set logscale y\nplot 'residuals.csv' using 1:2 with lines title 'residual'\npause -1\n";
  } else if (command == "kg-farfield") {
    gp << "plot 'farfield.csv' using 1:2 with lines title 'Re u', '' using 1:4 with lines title '|u|'\npause -1\n";
  } else if (command == "nonlinear-heat") {
    gp << "plot 'trajectory.csv' using 1:2 with lines title 'N1'\npause -1\n";
  } else if (command == "resonance") {
    gp << "plot 'resonance.csv' using 1:2 with lines title 'closed form', '' using 1:3 with points title 'quadrature'\npause -1\n";
  } else {
    throw Error("plot: no script template for command '" + command + "'");
  }
  const fs::path out = dir / "plot.gp";
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out.string());
  f << gp.str();
  return out.string();
}

}  // namespace pdelab::app
