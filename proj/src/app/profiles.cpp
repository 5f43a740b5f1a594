#include "pdelab/app/profiles.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace pdelab::app {

namespace {

struct Entry {
  std::size_t min_args, max_args;
  std::vector<double> defaults;
  Profile (*make)(const std::vector<double>&);
};

double parse_number(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size() || text.empty())
    throw Error("profile '" + spec + "': bad number '" + text + "'");
  return v;
}

Profile gaussian(const std::vector<double>& p) {
  const double a = p[0], b = p[1], x0 = p[2];
  return {"", [=](double x) { return a * std::exp(-b * (x - x0) * (x - x0)); },
          [=](double x) { return -2.0 * b * (x - x0) * a * std::exp(-b * (x - x0) * (x - x0)); }};
}

// Triangle on [0, 1] with peak 1 at x = 1/2.
Profile hat(const std::vector<double>&) {
  return {"",
          [](double x) {
            if (x <= 0 || x >= 1) return 0.0;
            return x <= 0.5 ? 2.0 * x : 2.0 * (1.0 - x);
          },
          [](double x) {
            if (x <= 0 || x >= 1) return 0.0;
            return x <= 0.5 ? 2.0 : -2.0;
          }};
}

// 1 - |x| on [-1, 1].
Profile tent(const std::vector<double>&) {
  return {"", [](double x) { return std::abs(x) >= 1 ? 0.0 : 1.0 - std::abs(x); },
          [](double x) {
            if (std::abs(x) >= 1) return 0.0;
            return x < 0 ? 1.0 : -1.0;
          }};
}

Profile sine(const std::vector<double>& p) {
  const double m = p[0];
  return {"", [=](double x) { return std::sin(m * x); }, [=](double x) { return m * std::cos(m * x); }};
}

Profile sinpi(const std::vector<double>& p) {
  const double m = p[0] * kPi;
  return {"", [=](double x) { return std::sin(m * x); }, [=](double x) { return m * std::cos(m * x); }};
}

Profile constant(const std::vector<double>& p) {
  const double v = p[0];
  return {"", [=](double) { return v; }, [](double) { return 0.0; }};
}

Profile heaviside(const std::vector<double>&) {
  return {"", [](double x) { return x > 0 ? 1.0 : (x < 0 ? 0.0 : 0.5); }, [](double) { return 0.0; }};
}

Profile sech(const std::vector<double>&) {
  return {"", [](double x) { return 1.0 / std::cosh(x); },
          [](double x) { return -std::tanh(x) / std::cosh(x); }};
}

Profile runge(const std::vector<double>&) {
  return {"", [](double x) { return 1.0 / (1.0 + x * x); },
          [](double x) { return -2.0 * x / ((1.0 + x * x) * (1.0 + x * x)); }};
}

Profile neg_x(const std::vector<double>&) {
  return {"", [](double x) { return -x; }, [](double) { return -1.0; }};
}

Profile one_minus_x2(const std::vector<double>&) {
  return {"", [](double x) { return 1.0 - x * x; }, [](double x) { return -2.0 * x; }};
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"gaussian", {0, 3, {1.0, 1.0, 0.0}, gaussian}},
      {"hat", {0, 0, {}, hat}},
      {"tent", {0, 0, {}, tent}},
      {"sin", {0, 1, {1.0}, sine}},
      {"sinpi", {0, 1, {1.0}, sinpi}},
      {"const", {0, 1, {0.0}, constant}},
      {"heaviside", {0, 0, {}, heaviside}},
      {"sech", {0, 0, {}, sech}},
      {"runge", {0, 0, {}, runge}},
      {"neg-x", {0, 0, {}, neg_x}},
      {"one-minus-x2", {0, 0, {}, one_minus_x2}},
  };
  return r;
}

}  // namespace

std::vector<std::string> profile_names() {
  std::vector<std::string> out;
  for (const auto& [name, e] : registry()) out.push_back(name);
  return out;
}

Profile parse_profile(const std::string& spec) {
  std::string name = spec;
  std::vector<double> args;
  const auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') throw Error("profile '" + spec + "': missing ')'");
    name = spec.substr(0, open);
    const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    if (!inner.empty()) {
      std::stringstream ss(inner);
      std::string item;
      while (std::getline(ss, item, ',')) args.push_back(parse_number(item, spec));
    }
  }
  const auto it = registry().find(name);
  if (it == registry().end()) {
    std::string known;
    for (const auto& n : profile_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error("unknown profile '" + name + "' (known: " + known + ")");
  }
  const Entry& e = it->second;
  if (args.size() < e.min_args || args.size() > e.max_args)
    throw Error("profile '" + spec + "': expected at most " + std::to_string(e.max_args) +
                " arguments");
  std::vector<double> full = e.defaults;
  for (std::size_t i = 0; i < args.size(); ++i) full[i] = args[i];
  Profile p = e.make(full);
  p.spec = spec;
  return p;
}

}  // namespace pdelab::app
