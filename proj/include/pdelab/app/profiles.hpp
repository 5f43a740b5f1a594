#pragma once

#include <string>
#include <vector>

#include "pdelab/common.hpp"

namespace pdelab::app {

// Named initial/boundary profile with its derivative.
struct Profile {
  std::string spec;
  RealFn f, df;
  double operator()(double x) const { return f(x); }
};

// Accepts "name" or "name(a,b,...)"; unknown names and bad arities throw Error.
Profile parse_profile(const std::string& spec);
std::vector<std::string> profile_names();

}  // namespace pdelab::app
