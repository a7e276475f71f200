#pragma once

#include <cstddef>

#include "hyperjacobi/jacobi.hpp"
#include "hyperjacobi/numeric_identity.hpp"
#include "hyperjacobi/rational.hpp"
#include "hyperjacobi/real.hpp"

namespace hyperjacobi {

// Beta density f(x|a,b) = x^(a-1)(1-x)^(b-1)/B(a,b) on [0,1]. The density h on
// [-1,1] satisfies 2h(2x-1|a,b) = f(x|a,b), so h-integrals reuse the same moments.
struct BetaParams {
  Rational a;
  Rational b;

  // DomainViolation unless a > 0 and b > 0.
  void require_density(const char* who) const;
};

// int_0^1 (x-1)^k f(x|a,b) dx = (-1)^k (b)^(k)/(a+b)^(k)
Rational moment_shifted(unsigned k, const Rational& a, const Rational& b);

// int_0^1 x^n f(x|a,b) dx, recombined from the shifted moments.
Rational moment_power(unsigned n, const Rational& a, const Rational& b);
// The same value as (a)^(n)/(a+b)^(n).
Rational moment_power_closed(unsigned n, const Rational& a, const Rational& b);

// Sum of c_m M_m. For a J polynomial this is the integral against h(x|a,b) on [-1,1].
Rational integrate_poly_exact(const PolyInPowersOfXMinus1& p, const Rational& a, const Rational& b);

enum class CrossForm { first, second };

// first:  int K_n(x|a,c) f(x|a,b) dx = (a)^(n)(c-b)^(n)/(n!(a+b)^(n))
// second: int K_n(x|c,b) f(x|a,b) dx = (-1)^n (b)^(n)(c-a)^(n)/(n!(a+b)^(n))
Rational cross_integral_closed(unsigned n, const Rational& a, const Rational& b, const Rational& c, CrossForm which);
// Same integral through integrate_poly_exact.
Rational cross_integral_moments(unsigned n, const Rational& a, const Rational& b, const Rational& c, CrossForm which);

// int_0^1 x^t K_j(x|f,d) f(x|f,d) dx through moments (slow for large t).
Rational power_times_k_integral_moments(unsigned t, unsigned j, const Rational& f, const Rational& d);
// Closed form C(t,j)(d)^(j)(f)^(t)/(f+d)^(t+j), from the balanced 3F2 that the
// moment sum collapses to.
Rational power_times_k_integral_closed(unsigned t, unsigned j, const Rational& f, const Rational& d);

// int 2F1(a,b;c;x) K_j(x|f,d) f(x|f,d) dx in closed form with an inner 3F2 at 1.
Real integral_2f1_K_closed(unsigned j, Real a, Real b, Real c, Real f, Real d);
// The f = c case as a pure Gamma product.
Real integral_2f1_K_f_eq_c(unsigned j, Real a, Real b, Real c, Real d);

struct OracleValue {
  Real value = 0;
  Real abs_error_bound = 0;
  std::size_t terms_used = 0;
};

// Independent route: integrate the power series of 2F1 term by term against
// K_j f. Tail bound |u_T|(T+1)/s with s = c-a-b+d once the terms are monotone.
OracleValue integrate_series_oracle(unsigned j, Real a, Real b, Real c, const Rational& f, const Rational& d,
                                    Real tol, std::size_t max_terms = 2000000);

// Numeric identities: the Gamma/4F3 and Gamma/3F2(-1) forms, the
// finite-sum expression for 3F2(a+n,b+n,1+n;c+n,1+m+2n;1), the closed form
// against the oracle, and the f = c Gamma product.
std::vector<NumericIdentity> integrals_identity_suite();

// Right-hand side of the finite-sum expression (n, m small non-negative integers).
// The sum cancels heavily; rounding_bound, if given, receives a floating-point
// error allowance built from the magnitudes of the cancelling terms.
Real finite_sum_3f2(unsigned n, unsigned m, Real a, Real b, Real c, Real* rounding_bound = nullptr);

}  // namespace hyperjacobi
