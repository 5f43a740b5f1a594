#pragma once

#include <ostream>

#include "pdelab/app/commands.hpp"

namespace pdelab::app {

int cmd_solve_heat(const RunConfig&, Report&, std::ostream&);
int cmd_solve_wave(const RunConfig&, Report&, std::ostream&);
int cmd_solve_laplace(const RunConfig&, Report&, std::ostream&);
int cmd_solve_advection(const RunConfig&, Report&, std::ostream&);
int cmd_project1(const RunConfig&, Report&, std::ostream&);
int cmd_project2(const RunConfig&, Report&, std::ostream&);
int cmd_project3(const RunConfig&, Report&, std::ostream&);
int cmd_stability(const RunConfig&, Report&, std::ostream&);
int cmd_classify(const RunConfig&, Report&, std::ostream&);
int cmd_characteristics(const RunConfig&, Report&, std::ostream&);
int cmd_shock_time(const RunConfig&, Report&, std::ostream&);
int cmd_oracle(const RunConfig&, Report&, std::ostream&);
int cmd_kg_farfield(const RunConfig&, Report&, std::ostream&);
int cmd_nonlinear_heat(const RunConfig&, Report&, std::ostream&);
int cmd_resonance(const RunConfig&, Report&, std::ostream&);

}  // namespace pdelab::app
