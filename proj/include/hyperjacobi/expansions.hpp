#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperjacobi/hypergeom.hpp"
#include "hyperjacobi/jacobi.hpp"
#include "hyperjacobi/numeric_identity.hpp"
#include "hyperjacobi/real.hpp"

namespace hyperjacobi {

// orthogonal: sum_j c_j P_j(x) with P_j = K_j(x|f,d) or J_j(x|f,d).
// power: sum_k c_k x^k g_k(x) where g_k carries an inner series in x.
enum class ExpansionKind { orthogonal, power };

struct TruncatedValue {
  Real value = 0;
  // Last partial-sum change when the certificate fired.
  Real tail_estimate = 0;
  unsigned terms = 0;
  bool certified = false;
};

class ExpansionSeries {
 public:
  using CoeffFn = std::function<Real(unsigned)>;
  using TermFn = std::function<Real(unsigned, Real)>;  // power kind: full term k at x
  using TargetFn = std::function<Real(Real)>;

  static ExpansionSeries orthogonal(std::string form_tag, Variant variant, Real f, Real d, CoeffFn coeff,
                                    TargetFn target);
  static ExpansionSeries power(std::string form_tag, TermFn term, TargetFn target);

  const std::string& form_tag() const { return tag_; }
  ExpansionKind kind() const { return kind_; }
  // Basis parameters (orthogonal kind only).
  const JacobiBasis& basis() const { return basis_; }

  // Cached; safe to call from several threads.
  Real coefficient(unsigned j) const;
  // c_j P_j(x), or the k-th power-kind term.
  Real term(unsigned j, Real x) const;
  Real partial_eval(Real x, unsigned J) const;
  // The function being expanded, evaluated directly.
  Real direct(Real x) const { return target_(x); }
  // max |term| over the last three indices up to J.
  Real tail_estimate(Real x, unsigned J) const;
  // Sum until three consecutive |term| fall below tol.
  TruncatedValue truncate(Real x, Real tol, unsigned max_terms = 160) const;

 private:
  ExpansionSeries() = default;
  Real basis_value(unsigned j, Real x) const;

  struct Cache;
  std::string tag_;
  ExpansionKind kind_ = ExpansionKind::orthogonal;
  JacobiBasis basis_;
  CoeffFn coeff_;
  TermFn power_term_;
  TargetFn target_;
  std::shared_ptr<Cache> cache_;
};

// Expansions of pFq in the K and J bases.
ExpansionSeries expand_pfq_K(const PfqSpecReal& spec, Real f, Real d);
// Argument map: sum c_j J_j(x|f,d) = pFq((1+x)/2).
ExpansionSeries expand_pfq_J(const PfqSpecReal& spec, Real f, Real d);
// Power-kind expansion singling out lower parameter b1 (b1 != 1).
ExpansionSeries expand_pfq_power(const PfqSpecReal& spec, std::size_t b1_index);

// Tags: 2F1-1, 2F1-1a, 2F1-1b, 2F1-1d, 2F1-1alt (J basis), 2F1-2, 2F1-2a, 2F1-2b,
// 2F1-2d, 2F1-2alt (K basis), 2F1-2star (f is ignored, basis K(x|c,d)),
// 2F1-3 and 2F1-3-euler (power kind, f and d ignored).
ExpansionSeries expand_2f1(const std::string& form_tag, Real a, Real b, Real c, Real f, Real d);
std::vector<std::string> expand_2f1_tags();

ExpansionSeries expand_2f1_f_eq_c(Real a, Real b, Real c, Real d);

// 2F1(a,b;(a+b+1)/2;x) on K(x|f,f). printed = true keeps the printed Gamma
// product verbatim (it does not reproduce the function).
ExpansionSeries expand_2f1_watson(Real a, Real b, Real f, bool printed = false);
// 2F1(a,b;c;x) on K(x|2c-b-1, 1+b+2a-2c).
ExpansionSeries expand_2f1_watson2(Real a, Real b, Real c, bool printed = false);

// Exact identity for 2F1(-n,b;c;x) on K(x|f,d) with d = b-c+1-n.
struct TerminatingReport {
  unsigned n = 0;
  Rational b, c, f, d;
  std::vector<Rational> lhs;  // monomial coefficients of (c)^(n) 2F1(-n,b;c;x)
  std::vector<Rational> rhs;  // monomial coefficients of the Jacobi sum
  unsigned nonzero_terms = 0;
  bool pass = false;
};
TerminatingReport expand_2f1_terminating(unsigned n, const Rational& b, const Rational& c, const Rational& f);

// x = 0 / x = 1 readings of the K expansion: the two general forms
// (suspect, printed vs corrected weight) and the two f = c closed forms.
std::vector<NumericIdentity> special_value_identities();

// 1 = G sum_j (-1)^j (a)_j(b)_j(c+d-1)_j(c+d+2j-1)/(j!(c+d-a)_j(c+d-b)_j), summed as a 4F3 at -1.
NumericOutcome special_value_sc1(Real a, Real b, Real c, Real d);
// Gauss sum = G sum_j (d)_j(a)_j(b)_j(c+d-1)_j(c+d+2j-1)/(j!(c)_j(c+d-a)_j(c+d-b)_j), as a 5F4 at 1.
NumericOutcome special_value_sc2(Real a, Real b, Real c, Real d);

}  // namespace hyperjacobi
