#include "hyperjacobi/log_gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperjacobi/errors.hpp"

namespace hyperjacobi {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with argument reduction, so large |x| keeps its accuracy.
double sin_pi(double x) {
  double r = x - 2.0 * std::floor(x / 2.0);  // r in [0, 2)
  if (r > 1.0) return -std::sin(std::numbers::pi * (r - 1.0));
  return std::sin(std::numbers::pi * r);
}

double lanczos_log(double x) {
  // x >= 1/2
  double z = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  double t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

bool is_gamma_pole(double x) { return x <= 0.0 && x == std::floor(x); }

LogGamma log_gamma(double x) {
  if (!std::isfinite(x)) throw DomainViolation("log_gamma of non-finite argument");
  if (is_gamma_pole(x)) throw PoleError("Gamma has a pole at " + std::to_string(x));
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    double s = sin_pi(x);
    LogGamma r;
    r.log_abs = std::log(std::numbers::pi) - std::log(std::fabs(s)) - lanczos_log(1.0 - x);
    r.sign = s < 0 ? -1 : 1;
    return r;
  }
  return {lanczos_log(x), 1};
}

double gamma_fn(double x) {
  LogGamma g = log_gamma(x);
  return g.sign * std::exp(g.log_abs);
}

double gamma_ratio_real(std::initializer_list<double> num, std::initializer_list<double> den) {
  double log_sum = 0.0;
  int sign = 1;
  for (double v : num) {
    LogGamma g = log_gamma(v);
    log_sum += g.log_abs;
    sign *= g.sign;
  }
  for (double v : den) {
    if (is_gamma_pole(v)) return 0.0;
    LogGamma g = log_gamma(v);
    log_sum -= g.log_abs;
    sign *= g.sign;
  }
  return sign * std::exp(log_sum);
}

}  // namespace hyperjacobi
