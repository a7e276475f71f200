#include "hyperjacobi/pochhammer.hpp"

#include "hyperjacobi/errors.hpp"

namespace hyperjacobi {

Rational rising(const Rational& x, unsigned n) {
  Rational r(1);
  Rational t = x;
  for (unsigned j = 0; j < n; ++j) {
    if (t.is_zero()) return Rational(0);
    r *= t;
    t += Rational(1);
  }
  return r;
}

Rational falling(const Rational& a, unsigned n) {
  Rational r(1);
  Rational t = a;
  for (unsigned j = 0; j < n; ++j) {
    if (t.is_zero()) return Rational(0);
    r *= t;
    t -= Rational(1);
  }
  return r;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(c);
}

Rational binom_ext(const Rational& alpha, unsigned n) { return falling(alpha, n) / factorial(n); }

Rational gamma_ratio(const Rational& x, unsigned n) {
  if (x.is_nonpositive_integer())
    throw PoleError("gamma_ratio: Gamma(" + x.to_string() + ") is a pole");
  return rising(x, n);
}

}  // namespace hyperjacobi
