#pragma once

#include "hyperjacobi/rational.hpp"

namespace hyperjacobi {

// (x)^(n) = x(x+1)...(x+n-1); empty product is 1.
Rational rising(const Rational& x, unsigned n);

// (a)_(n) = a(a-1)...(a-n+1).
Rational falling(const Rational& a, unsigned n);

// Extended binomial falling(alpha, n)/n!.
Rational binom_ext(const Rational& alpha, unsigned n);

// Gamma(x+n)/Gamma(x) as a finite product. Throws PoleError when x is a
// non-positive integer, since Gamma(x) itself is then undefined.
Rational gamma_ratio(const Rational& x, unsigned n);

Rational factorial(unsigned n);
// Ordinary binomial C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);

// A rising factorial together with its arguments.
struct PochhammerValue {
  Rational value;
  Rational base;
  unsigned order = 0;

  static PochhammerValue of(const Rational& base, unsigned order) {
    return {rising(base, order), base, order};
  }
};

}  // namespace hyperjacobi
