#pragma once

#include <vector>

#include "hyperjacobi/rational.hpp"

namespace hyperjacobi {

// J lives on [-1,1] (weight h), K on [0,1] (weight f).
enum class Variant { J, K };

struct JacobiBasis {
  Rational a;
  Rational b;
  Variant variant = Variant::K;
};

// sum_m c_m u^m with u = x-1 (K) or u = (x-1)/2 (J).
class PolyInPowersOfXMinus1 {
 public:
  PolyInPowersOfXMinus1(Variant v, std::vector<Rational> coeffs);

  Variant variant() const { return variant_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  Rational evaluate(const Rational& x) const;
  // Coefficients of 1, x, x^2, ... in the ordinary power basis.
  std::vector<Rational> to_monomial() const;
  Rational leading_monomial_coeff() const { return to_monomial().back(); }

  // Product of two polynomials of the same variant.
  PolyInPowersOfXMinus1 operator*(const PolyInPowersOfXMinus1& o) const;

 private:
  Variant variant_;
  std::vector<Rational> coeffs_;
};

// e_{n,m}(a,b) = C(n,m) (a+b+n-1)^(m) (b+m)^(n-m) / n!
Rational e_coeff(unsigned n, unsigned m, const Rational& a, const Rational& b);
// All e_{n,m}, m = 0..n, in O(n) Pochhammer steps.
std::vector<Rational> e_coeffs(unsigned n, const Rational& a, const Rational& b);

// Inverse connection coefficients, product form with (a+b+m-1)^(m)(a+b+2m)^(n-m)
// in the denominator. DomainViolation when that denominator vanishes.
Rational etilde_coeff(unsigned n, unsigned m, const Rational& a, const Rational& b);
// Same coefficients written with (a+b+2m-1)/(a+b+m-1)^(n+1).
Rational etilde_coeff_alt(unsigned n, unsigned m, const Rational& a, const Rational& b);

PolyInPowersOfXMinus1 k_poly(unsigned n, const Rational& a, const Rational& b);
PolyInPowersOfXMinus1 j_poly(unsigned n, const Rational& a, const Rational& b);
PolyInPowersOfXMinus1 jacobi_poly(unsigned n, const JacobiBasis& basis);

Rational eval_k(unsigned n, const Rational& a, const Rational& b, const Rational& x);
Rational eval_j(unsigned n, const Rational& a, const Rational& b, const Rational& x);

// [etilde_{n,0} .. etilde_{n,n}]: (x-1)^n = sum etilde_{n,m} K_m, and
// ((x-1)/2)^n = sum etilde_{n,m} J_m.
std::vector<Rational> monomial_to_jacobi(unsigned n, const JacobiBasis& basis);

// Coefficient of x^n in K_n, from the expanded polynomial.
Rational leading_coeff_k(unsigned n, const Rational& a, const Rational& b);
Rational leading_coeff_j(unsigned n, const Rational& a, const Rational& b);

// int_0^1 K_n^2 f(x|a,b) dx for n >= 1, a, b > 0.
Rational norm_sq_k(unsigned n, const Rational& a, const Rational& b);

struct SymmetryVerdict {
  bool reflection_j = false;  // (-1)^n J_n(-x|a,b) == J_n(x|b,a)
  bool affine_map = false;    // J_n(2x-1|a,b) == K_n(x|a,b)
  bool reflection_k = false;  // (-1)^n K_n(x|a,b) == K_n(1-x|b,a)
  bool all() const { return reflection_j && affine_map && reflection_k; }
};
SymmetryVerdict symmetry_check(unsigned n, const Rational& a, const Rational& b, const Rational& x);

// K_n(x|a,b) through (a)^(n)/n! 2F1(-n, a+b+n-1; a; x) = (-1)^n K_n(x|a,b).
Rational k_via_2f1(unsigned n, const Rational& a, const Rational& b, const Rational& x);
// K_n(x|a,b) through (b)^(n)/n! 2F1(-n, a+b+n-1; b; 1-x).
Rational k_via_2f1_reflected(unsigned n, const Rational& a, const Rational& b, const Rational& x);
// J_n(x|a,b) through (b)^(n)/n! 2F1(-n, a+b+n-1; b; (1-x)/2).
Rational j_via_2f1(unsigned n, const Rational& a, const Rational& b, const Rational& x);

}  // namespace hyperjacobi
