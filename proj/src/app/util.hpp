#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdelab/app/commands.hpp"
#include "pdelab/fd_schemes.hpp"

namespace pdelab::app::detail {

struct ErrorRow {
  int step;
  double t, max, l2;
};

std::vector<int> snapshot_steps(const RunConfig& cfg, int steps);

// Writes oracle_<step>.csv and returns the error of the snapshot against exact.
ErrorRow compare_snapshot(const Snapshot& s, const RealFn& exact, const Report& rep);

// Error of a grid function against exact, without writing anything.
ErrorRow grid_error(const GridFunction& u, const RealFn& exact);

// manifest.json with {command, params, h, k, s, Q, times, blow_up, errors}.
void write_manifest(const Report& rep, const RunConfig& cfg, const Evolution& e,
                    const std::vector<ErrorRow>& errors);

// Applies the 'expect' and 'gate_max_error' keys.
void evolution_gates(Report& rep, const RunConfig& cfg, const Evolution& e,
                     const std::vector<ErrorRow>& errors);

double max_error(const std::vector<ErrorRow>& errors);

// Observed orders log2(e_i / e_{i+1}).
std::vector<double> observed_orders(const std::vector<double>& errors);

}  // namespace pdelab::app::detail
