#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyperjacobi/rational.hpp"
#include "hyperjacobi/real.hpp"

namespace hyperjacobi {

// Upper list a_1..a_n over lower list b_1..b_m.
struct PfqSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

struct PfqSpecReal {
  std::vector<Real> upper;
  std::vector<Real> lower;

  static PfqSpecReal from(const PfqSpec& s);
};

enum class Classification { terminating, convergent_open_disc, convergent_closed_disc, divergent };
std::string to_string(Classification c);

Classification classify(const PfqSpec& spec, const Rational& x);
Classification classify(const PfqSpecReal& spec, Real x);

// How abs_error_bound was obtained.
//   exact: terminating sum, only rounding
//   geometric: ratio bound |t_N| R/(1-R), rigorous once parameters are passed
//   raabe: |t_N| (N+1)/s at x = 1
//   alternating: next-term bound at x = -1 in the monotone regime
//   extrapolated: Richardson on power-law partial sums; an estimate, not a proof
enum class BoundKind { exact, geometric, raabe, alternating, extrapolated };
std::string to_string(BoundKind k);

struct SeriesValue {
  Real value = 0;
  Real abs_error_bound = 0;
  std::size_t terms_used = 0;
  BoundKind bound_kind = BoundKind::exact;
};

struct SeriesOptions {
  Real tol = 1e-12;
  std::size_t max_terms = default_max_terms();
  // Interpret tol relative to |value|.
  bool relative = false;

  static std::size_t default_max_terms();
  // Process-wide override (the CLI maps an environment variable onto this).
  static void set_default_max_terms(std::size_t n);
};

// Exact sum of terms 0..N. Stops early once a term is exactly zero.
Rational pfq_exact_partial(const PfqSpec& spec, const Rational& x, unsigned N);

SeriesValue pfq_eval(const PfqSpecReal& spec, Real x, const SeriesOptions& opts);
SeriesValue pfq_eval(const PfqSpecReal& spec, Real x, Real tol = 1e-12);
SeriesValue pfq_eval(const PfqSpec& spec, Real x, Real tol = 1e-12);

// Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)); needs c-a-b > 0.
Real gauss_sum(Real a, Real b, Real c);

// (2F1(a,b;c;x), (1-x)^(c-a-b) 2F1(c-a,c-b;c;x)) with their bounds.
struct SeriesPair {
  SeriesValue direct;
  SeriesValue transformed;
  Real combined_bound() const { return direct.abs_error_bound + transformed.abs_error_bound; }
};
SeriesPair euler_transform_check(Real a, Real b, Real c, Real x);

// Balanced 3F2(-n, a, b; c, 1+a+b-c-n; 1) in closed form.
Rational pfaff_saalschutz(unsigned n, const Rational& a, const Rational& b, const Rational& c);
PfqSpec balanced_3f2(unsigned n, const Rational& a, const Rational& b, const Rational& c);

// 3F2(a, b, f; (a+b+1)/2, 2f; 1) in Gamma form.
Real watson_sum(Real a, Real b, Real f);
Real watson_sum_shifted(Real a, Real b, Real f, unsigned j);
// The same Gamma product scaled by 2 sqrt(pi) instead of sqrt(pi); kept only so
// the two constants can be compared side by side.
Real watson_sum_shifted_doubled(Real a, Real b, Real f, unsigned j);

// 3F2(a+j, b+j, f+j; c+j, d+f+2j; 1) and its four transformed expressions.
std::array<Real, 5> thomae_3f2_forms(Real a, Real b, Real f, Real c, Real d, unsigned j);

// Product of rising factorials in floating point, interleaving numerator and
// denominator factors so that long products do not overflow.
// num/den entries are (base, order).
Real pochhammer_ratio(const std::vector<std::pair<Real, unsigned>>& num,
                      const std::vector<std::pair<Real, unsigned>>& den);
Real rising_real(Real x, unsigned n);

}  // namespace hyperjacobi
