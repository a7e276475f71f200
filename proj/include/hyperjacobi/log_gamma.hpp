#pragma once

#include <initializer_list>

namespace hyperjacobi {

struct LogGamma {
  double log_abs = 0.0;  // log|Gamma(x)|
  int sign = 1;
};

// Lanczos (g = 7, 9 terms) with reflection below 1/2.
// PoleError at non-positive integers.
LogGamma log_gamma(double x);

double gamma_fn(double x);

// prod Gamma(num_i) / prod Gamma(den_i), computed in log space.
// A pole in the denominator makes the ratio 0; a pole in the numerator throws.
double gamma_ratio_real(std::initializer_list<double> num, std::initializer_list<double> den);

bool is_gamma_pole(double x);

}  // namespace hyperjacobi
