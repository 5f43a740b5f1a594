#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace pdelab {

using cplx = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;
// f(x, t)
using SpaceTimeFn = std::function<double(double, double)>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace pdelab
