#include "hyperjacobi/jacobi.hpp"

#include <string>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/pochhammer.hpp"

namespace hyperjacobi {

namespace {

void check_index(unsigned n, unsigned m) {
  if (m > n) throw IndexError("coefficient index m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
}

Rational sign_pow(unsigned k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// Terminating 2F1(-n, p; q; z), summed directly.
Rational terminating_2f1(unsigned n, const Rational& p, const Rational& q, const Rational& z) {
  Rational sum(0), term(1);
  for (unsigned j = 0; j <= n; ++j) {
    sum += term;
    if (j == n) break;
    Rational den = (q + Rational(static_cast<long>(j))) * Rational(static_cast<long>(j + 1));
    if (den.is_zero()) throw PoleError("terminating 2F1: lower parameter " + q.to_string() + " hits a pole");
    term *= Rational(-static_cast<long>(n) + static_cast<long>(j)) * (p + Rational(static_cast<long>(j))) * z / den;
  }
  return sum;
}

}  // namespace

PolyInPowersOfXMinus1::PolyInPowersOfXMinus1(Variant v, std::vector<Rational> coeffs)
    : variant_(v), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Rational PolyInPowersOfXMinus1::evaluate(const Rational& x) const {
  Rational u = x - Rational(1);
  if (variant_ == Variant::J) u /= Rational(2);
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

std::vector<Rational> PolyInPowersOfXMinus1::to_monomial() const {
  // c * u^m with u = (x-1)/s: expand (x-1)^m binomially.
  const std::size_t n = coeffs_.size();
  std::vector<Rational> out(n, Rational(0));
  Rational scale(1);
  for (std::size_t m = 0; m < n; ++m) {
    Rational c = coeffs_[m] / scale;
    for (std::size_t k = 0; k <= m; ++k) {
      Rational t = c * binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
      if ((m - k) % 2 == 1) t = -t;
      out[k] += t;
    }
    if (variant_ == Variant::J) scale *= Rational(2);
  }
  return out;
}

PolyInPowersOfXMinus1 PolyInPowersOfXMinus1::operator*(const PolyInPowersOfXMinus1& o) const {
  if (variant_ != o.variant_) throw std::invalid_argument("product of J and K polynomials");
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[i + k] += coeffs_[i] * o.coeffs_[k];
  return {variant_, std::move(c)};
}

Rational e_coeff(unsigned n, unsigned m, const Rational& a, const Rational& b) {
  check_index(n, m);
  return binomial(n, m) * rising(a + b + Rational(static_cast<long>(n) - 1), m) *
         rising(b + Rational(static_cast<long>(m)), n - m) / factorial(n);
}

std::vector<Rational> e_coeffs(unsigned n, const Rational& a, const Rational& b) {
  // prefix (s)^(m), suffix (b+m)^(n-m)
  const Rational s = a + b + Rational(static_cast<long>(n) - 1);
  std::vector<Rational> suffix(n + 1, Rational(1));
  for (unsigned m = n; m-- > 0;) suffix[m] = suffix[m + 1] * (b + Rational(static_cast<long>(m)));
  std::vector<Rational> out;
  out.reserve(n + 1);
  Rational prefix(1);
  const Rational nf = factorial(n);
  for (unsigned m = 0; m <= n; ++m) {
    out.push_back(binomial(n, m) * prefix * suffix[m] / nf);
    prefix *= s + Rational(static_cast<long>(m));
  }
  return out;
}

Rational etilde_coeff(unsigned n, unsigned m, const Rational& a, const Rational& b) {
  check_index(n, m);
  const Rational ab = a + b;
  Rational den = factorial(n - m) * rising(ab + Rational(static_cast<long>(m) - 1), m) *
                 rising(ab + Rational(2 * static_cast<long>(m)), n - m);
  if (den.is_zero())
    throw PoleError("etilde_coeff: a+b=" + ab.to_string() + " makes a Pochhammer denominator vanish");
  return sign_pow(n - m) * factorial(n) * rising(b + Rational(static_cast<long>(m)), n - m) / den;
}

Rational etilde_coeff_alt(unsigned n, unsigned m, const Rational& a, const Rational& b) {
  check_index(n, m);
  const Rational ab = a + b;
  Rational den = factorial(n - m) * rising(ab + Rational(static_cast<long>(m) - 1), n + 1);
  if (den.is_zero())
    throw PoleError("etilde_coeff_alt: a+b=" + ab.to_string() + " makes (a+b+m-1)^(n+1) vanish");
  return sign_pow(n - m) * factorial(n) * rising(b + Rational(static_cast<long>(m)), n - m) *
         (ab + Rational(2 * static_cast<long>(m) - 1)) / den;
}

PolyInPowersOfXMinus1 k_poly(unsigned n, const Rational& a, const Rational& b) {
  return {Variant::K, e_coeffs(n, a, b)};
}

PolyInPowersOfXMinus1 j_poly(unsigned n, const Rational& a, const Rational& b) {
  return {Variant::J, e_coeffs(n, a, b)};
}

PolyInPowersOfXMinus1 jacobi_poly(unsigned n, const JacobiBasis& basis) {
  return basis.variant == Variant::K ? k_poly(n, basis.a, basis.b) : j_poly(n, basis.a, basis.b);
}

Rational eval_k(unsigned n, const Rational& a, const Rational& b, const Rational& x) {
  return k_poly(n, a, b).evaluate(x);
}

Rational eval_j(unsigned n, const Rational& a, const Rational& b, const Rational& x) {
  return j_poly(n, a, b).evaluate(x);
}

std::vector<Rational> monomial_to_jacobi(unsigned n, const JacobiBasis& basis) {
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (unsigned m = 0; m <= n; ++m) out.push_back(etilde_coeff(n, m, basis.a, basis.b));
  return out;
}

Rational leading_coeff_k(unsigned n, const Rational& a, const Rational& b) {
  return k_poly(n, a, b).leading_monomial_coeff();
}

Rational leading_coeff_j(unsigned n, const Rational& a, const Rational& b) {
  return j_poly(n, a, b).leading_monomial_coeff();
}

Rational norm_sq_k(unsigned n, const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw DomainViolation("norm_sq_k needs a > 0 and b > 0 (got a=" + a.to_string() + ", b=" + b.to_string() + ")");
  if (n == 0) throw DomainViolation("norm_sq_k is stated for n >= 1");
  const Rational ab = a + b;
  return rising(a, n) * rising(b, n) /
         (factorial(n) * (ab + Rational(2 * static_cast<long>(n) - 1)) * rising(ab, n - 1));
}

SymmetryVerdict symmetry_check(unsigned n, const Rational& a, const Rational& b, const Rational& x) {
  SymmetryVerdict v;
  const Rational sg = sign_pow(n);
  v.reflection_j = sg * eval_j(n, a, b, -x) == eval_j(n, b, a, x);
  v.affine_map = eval_j(n, a, b, Rational(2) * x - Rational(1)) == eval_k(n, a, b, x);
  v.reflection_k = sg * eval_k(n, a, b, x) == eval_k(n, b, a, Rational(1) - x);
  return v;
}

Rational k_via_2f1(unsigned n, const Rational& a, const Rational& b, const Rational& x) {
  const Rational p = a + b + Rational(static_cast<long>(n) - 1);
  return sign_pow(n) * rising(a, n) / factorial(n) * terminating_2f1(n, p, a, x);
}

Rational k_via_2f1_reflected(unsigned n, const Rational& a, const Rational& b, const Rational& x) {
  const Rational p = a + b + Rational(static_cast<long>(n) - 1);
  return rising(b, n) / factorial(n) * terminating_2f1(n, p, b, Rational(1) - x);
}

Rational j_via_2f1(unsigned n, const Rational& a, const Rational& b, const Rational& x) {
  const Rational p = a + b + Rational(static_cast<long>(n) - 1);
  return rising(b, n) / factorial(n) * terminating_2f1(n, p, b, (Rational(1) - x) / Rational(2));
}

}  // namespace hyperjacobi
