#include "hyperjacobi/beta_integrals.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/hypergeom.hpp"
#include "hyperjacobi/log_gamma.hpp"
#include "hyperjacobi/pochhammer.hpp"

namespace hyperjacobi {

namespace {

Rational sign_pow(unsigned k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

void require_positive(const Rational& a, const Rational& b, const char* who) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw DomainViolation(std::string(who) + " needs a > 0 and b > 0 (got a=" + a.to_string() +
                          ", b=" + b.to_string() + ")");
}

Real pfq1(std::vector<Real> up, std::vector<Real> lo, Real x, Real* bound = nullptr) {
  SeriesOptions o;
  o.tol = 1e-13;
  o.relative = true;
  SeriesValue v = pfq_eval(PfqSpecReal{std::move(up), std::move(lo)}, x, o);
  if (bound) *bound += v.abs_error_bound;
  return v.value;
}

}  // namespace

void BetaParams::require_density(const char* who) const { require_positive(a, b, who); }

Rational moment_shifted(unsigned k, const Rational& a, const Rational& b) {
  require_positive(a, b, "moment_shifted");
  return sign_pow(k) * rising(b, k) / rising(a + b, k);
}

Rational moment_power(unsigned n, const Rational& a, const Rational& b) {
  // x^n = (1 + (x-1))^n
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k) acc += binomial(n, k) * moment_shifted(k, a, b);
  return acc;
}

Rational moment_power_closed(unsigned n, const Rational& a, const Rational& b) {
  require_positive(a, b, "moment_power_closed");
  return rising(a, n) / rising(a + b, n);
}

Rational integrate_poly_exact(const PolyInPowersOfXMinus1& p, const Rational& a, const Rational& b) {
  require_positive(a, b, "integrate_poly_exact");
  const auto& c = p.coeffs();
  Rational acc(0);
  Rational bk(1), abk(1);  // (b)^(m), (a+b)^(m)
  for (std::size_t m = 0; m < c.size(); ++m) {
    Rational mom = bk / abk;
    if (m % 2 == 1) mom = -mom;
    acc += c[m] * mom;
    bk *= b + Rational(static_cast<long>(m));
    abk *= a + b + Rational(static_cast<long>(m));
  }
  return acc;
}

Rational cross_integral_closed(unsigned n, const Rational& a, const Rational& b, const Rational& c,
                               CrossForm which) {
  require_positive(a, b, "cross_integral_closed");
  if (c.sign() <= 0) throw DomainViolation("cross_integral_closed needs c > 0 (got c=" + c.to_string() + ")");
  const Rational den = factorial(n) * rising(a + b, n);
  if (which == CrossForm::first) return rising(a, n) * rising(c - b, n) / den;
  return sign_pow(n) * rising(b, n) * rising(c - a, n) / den;
}

Rational cross_integral_moments(unsigned n, const Rational& a, const Rational& b, const Rational& c,
                                CrossForm which) {
  if (c.sign() <= 0) throw DomainViolation("cross_integral_moments needs c > 0 (got c=" + c.to_string() + ")");
  PolyInPowersOfXMinus1 p = which == CrossForm::first ? k_poly(n, a, c) : k_poly(n, c, b);
  return integrate_poly_exact(p, a, b);
}

Rational power_times_k_integral_moments(unsigned t, unsigned j, const Rational& f, const Rational& d) {
  // x^t = sum_i C(t,i) (x-1)^i, multiplied into K_j and integrated term by term.
  std::vector<Rational> xt;
  for (unsigned i = 0; i <= t; ++i) xt.push_back(binomial(t, i));
  PolyInPowersOfXMinus1 pt(Variant::K, std::move(xt));
  return integrate_poly_exact(pt * k_poly(j, f, d), f, d);
}

Rational power_times_k_integral_closed(unsigned t, unsigned j, const Rational& f, const Rational& d) {
  require_positive(f, d, "power_times_k_integral_closed");
  if (t < j) return Rational(0);
  return binomial(t, j) * rising(d, j) * rising(f, t) / rising(f + d, t + j);
}

Real integral_2f1_K_closed(unsigned j, Real a, Real b, Real c, Real f, Real d) {
  if (!(f > 0 && d > 0)) throw DomainViolation("integral_2f1_K_closed needs f > 0 and d > 0");
  if (!(c - a - b > 0)) throw DomainViolation("integral_2f1_K_closed needs c-a-b > 0");
  if (is_gamma_pole(c)) throw PoleError("integral_2f1_K_closed: c is a non-positive integer");
  const Real J = static_cast<Real>(j);
  Real pre = pochhammer_ratio({{f, j}, {d, j}, {a, j}, {b, j}}, {{1, j}, {f + d, 2 * j}, {c, j}});
  if (pre == 0) return 0;
  return pre * pfq1({a + J, b + J, f + J}, {c + J, d + f + 2 * J}, 1.0);
}

Real integral_2f1_K_f_eq_c(unsigned j, Real a, Real b, Real c, Real d) {
  if (!(c > 0 && d > 0)) throw DomainViolation("integral_2f1_K_f_eq_c needs c > 0 and d > 0");
  if (!(c - a - b > 0)) throw DomainViolation("integral_2f1_K_f_eq_c needs c-a-b > 0");
  Real pre = pochhammer_ratio({{d, j}, {a, j}, {b, j}}, {{1, j}, {d + c - a, j}, {d + c - b, j}});
  return pre * gamma_ratio_real({c + d, d + c - a - b}, {d + c - a, d + c - b});
}

OracleValue integrate_series_oracle(unsigned j, Real a, Real b, Real c, const Rational& f, const Rational& d,
                                    Real tol, std::size_t max_terms) {
  require_positive(f, d, "integrate_series_oracle");
  if (!(c - a - b > 0)) throw DomainViolation("integrate_series_oracle needs c-a-b > 0");
  if (is_gamma_pole(c)) throw PoleError("integrate_series_oracle: c is a non-positive integer");
  const Real fr = f.to_double(), dr = d.to_double();
  const Real s = c - a - b + dr;

  // u_t = [(a)_t(b)_t/((c)_t t!)] * int x^t K_j f ; zero for t < j.
  const Real J = static_cast<Real>(j);
  Real u = pochhammer_ratio({{a, j}, {b, j}, {dr, j}, {fr, j}}, {{c, j}, {1, j}, {fr + dr, 2 * j}});
  Real sum = u, abs_sum = std::fabs(u);
  Real neg = 0;
  for (Real p : {a, b, c, fr}) neg = std::max(neg, -p);
  const Real t0 = 2 * (std::floor(neg) + 1) + J + 2;
  if (u == 0) return {0, 0, j + 1};

  for (std::size_t k = j; k < max_terms; ++k) {
    const Real t = static_cast<Real>(k);
    Real r = (a + t) * (b + t) / ((c + t) * (t + 1 - J)) * (fr + t) / (fr + dr + t + J);
    u *= r;
    sum += u;
    abs_sum += std::fabs(u);
    if (u == 0) return {sum, 4 * 2.2e-16 * abs_sum, k + 2};
    if (t + 1 >= t0) {
      const Real tn = t + 1;
      Real rn = std::fabs((a + tn) * (b + tn) / ((c + tn) * (tn + 1 - J)) * (fr + tn) / (fr + dr + tn + J));
      if (rn < 1) {
        Real tail = std::fabs(u) * (tn + 1) / s;
        Real bound = tail + 4 * 2.2e-16 * abs_sum;
        if (bound <= tol) return {sum, bound, k + 2};
      }
    }
  }
  throw NoConvergence("integrate_series_oracle: tail bound above " + std::to_string(tol) + " after " +
                      std::to_string(max_terms) + " terms");
}

Real finite_sum_3f2(unsigned n, unsigned m, Real a, Real b, Real c, Real* rounding_bound) {
  // (c-N)^(N) Gamma(c-N) = Gamma(c) keeps the bracket free of Gamma poles at integer c.
  Real total = 0, magnitude = 0;
  for (unsigned j = 0; j <= n; ++j) {
    const unsigned N = j + m;
    const Real Nr = static_cast<Real>(N);
    Real bracket = gamma_ratio_real({c, c - a - b + Nr}, {c - a, c - b});
    Real bracket_abs = std::fabs(bracket);
    Real partial = 0, term = 1;  // (a-N)_k (b-N)_k / k!
    for (unsigned k = 0; k < N; ++k) {
      Real t = term * rising_real(c - Nr + k, N - k);
      partial += t;
      bracket_abs += std::fabs(t);
      term *= (a - Nr + k) * (b - Nr + k) / (k + 1);
    }
    bracket -= partial;
    Real den = rising_real(a - Nr, N) * rising_real(b - Nr, N);
    if (den == 0) throw PoleError("finite_sum_3f2: (a-N)^(N)(b-N)^(N) vanishes");
    Real coef = binomial(n, j).to_double() * rising_real(static_cast<Real>(n + m), j);
    total += ((j % 2) ? -coef : coef) * bracket / den;
    magnitude += coef * bracket_abs / std::fabs(den);
  }
  Real pre = factorial(2 * n + m).to_double() * rising_real(c, n) /
             (factorial(n).to_double() * rising_real(a, n) * rising_real(b, n));
  // Gamma ratios carry a few ulps each; 64 eps covers them and the summation.
  if (rounding_bound) *rounding_bound = 64 * std::numeric_limits<Real>::epsilon() * std::fabs(pre) * magnitude;
  return pre * total;
}

namespace {
Real uniform(std::mt19937_64& rng, Real lo, Real hi) { return std::uniform_real_distribution<Real>(lo, hi)(rng); }
}  // namespace

std::vector<NumericIdentity> integrals_identity_suite() {
  std::vector<NumericIdentity> out;

  {
    NumericIdentity id;
    id.id = "INT-GAMMA-4F3";
    id.anchor = "Gamma ratio as a two-term combination of 4F3 at 1";
    id.param_names = {"a", "b", "c", "d"};
    id.suspect = true;
    id.tolerance = 1e-6;
    id.points = {{0.5, 1.0 / 3, 2, 1.5}, {0.25, -0.5, 3, 1}, {-0.3, 0.7, 2.5, 2}, {1.5, 0.25, 4, 0.5}};
    auto make = [](bool printed) {
      return [printed](const std::vector<Real>& p) {
        const Real a = p[0], b = p[1], c = p[2], d = p[3];
        NumericOutcome o;
        o.lhs = gamma_ratio_real({c, c - a - b, c + d - a, c + d - b}, {c - a, c - b, c + d, c + d - a - b});
        Real coef = 2 * a * b * d / (c * (c + d - a) * (c + d - b));
        if (printed) coef *= c + d - 1;
        o.rhs = pfq1({a, b, d, c + d - 1}, {c, c + d - a, c + d - b}, 1.0, &o.bound) +
                coef * pfq1({a + 1, b + 1, d + 1, c + d}, {c + 1, c + d - a + 1, c + d - b + 1}, 1.0, &o.bound);
        return o;
      };
    };
    id.sample = [](std::mt19937_64& rng) {
      Real a = uniform(rng, -0.5, 0.75), b = uniform(rng, -0.5, 0.75);
      return std::vector<Real>{a, b, a + b + uniform(rng, 1, 3), uniform(rng, 0.5, 2)};
    };
    id.forms = {{"printed", make(true)}, {"corrected", make(false)}};
    out.push_back(std::move(id));
  }

  {
    NumericIdentity id;
    id.id = "INT-GAMMA-3F2M1";
    id.anchor = "Gamma ratio as a two-term combination of 3F2 at -1";
    id.param_names = {"a", "b", "c", "d"};
    id.suspect = true;
    id.tolerance = 1e-6;
    id.points = {{0.5, 1.0 / 3, 2, 1.5}, {0.5, 0, 2, 1.5}, {0.25, -0.5, 3, 1}, {-0.3, 0.4, 2.5, 2}, {0.75, 0.25, 4, 0.5}};
    auto make = [](bool printed) {
      return [printed](const std::vector<Real>& p) {
        const Real a = p[0], b = p[1], c = p[2], d = p[3], s = c + d;
        NumericOutcome o;
        o.lhs = gamma_ratio_real({s - a, s - b}, {s, s - a - b});
        std::vector<Real> lower = printed ? std::vector<Real>{s + 1, s + 1} : std::vector<Real>{s - a + 1, s - b + 1};
        o.rhs = pfq1({a, b, s - 1}, {s - a, s - b}, -1.0, &o.bound) -
                2 * a * b / ((s - a) * (s - b)) * pfq1({a + 1, b + 1, s}, lower, -1.0, &o.bound);
        return o;
      };
    };
    id.sample = [](std::mt19937_64& rng) {
      Real a = uniform(rng, -0.5, 0.5), b = uniform(rng, -0.5, 0.5);
      return std::vector<Real>{a, b, a + b + uniform(rng, 1, 3), uniform(rng, 0.5, 2)};
    };
    id.forms = {{"printed", make(true)}, {"corrected", make(false)}};
    out.push_back(std::move(id));
  }

  {
    NumericIdentity id;
    id.id = "INT-3F2-FINITE";
    id.anchor = "3F2(a+n,b+n,1+n;c+n,1+m+2n;1) as a finite sum";
    id.param_names = {"n", "m", "a", "b", "c"};
    id.tolerance = 1e-6;
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned m = 0; m <= 3; ++m) {
        id.points.push_back({static_cast<Real>(n), static_cast<Real>(m), 0.5, 1.0 / 3, 3});
        id.points.push_back({static_cast<Real>(n), static_cast<Real>(m), -0.25, 0.6, 2.5});
      }
    id.sample = [](std::mt19937_64& rng) {
      std::uniform_int_distribution<int> nm(0, 3);
      Real n = nm(rng), m = nm(rng), a = uniform(rng, -0.5, 0.5), b = uniform(rng, -0.5, 0.5);
      return std::vector<Real>{n, m, a, b, a + b + uniform(rng, 1, 3)};
    };
    id.forms = {{"stated", [](const std::vector<Real>& p) {
                   const auto n = static_cast<unsigned>(p[0]), m = static_cast<unsigned>(p[1]);
                   const Real a = p[2], b = p[3], c = p[4];
                   NumericOutcome o;
                   o.lhs = pfq1({a + n, b + n, 1.0 + n}, {c + n, 1.0 + m + 2.0 * n}, 1.0, &o.bound);
                   Real rb = 0;
                   o.rhs = finite_sum_3f2(n, m, a, b, c, &rb);
                   o.bound += rb;
                   return o;
                 }}};
    out.push_back(std::move(id));
  }

  {
    NumericIdentity id;
    id.id = "INT-2F1-K-ORACLE";
    id.anchor = "integral of 2F1 K_j f, closed form against termwise series integration";
    id.param_names = {"j", "a", "b", "c", "f", "d"};
    id.tolerance = 1e-7;
    id.points = {{1, 0.5, 1.0 / 3, 3, 1, 2}, {0, 0.5, 1.0 / 3, 3, 1, 2}, {2, -0.5, 0.75, 2.5, 1.5, 1},
                 {3, 0.25, 0.25, 2, 0.5, 2.5}};
    // f and d are small rationals so the oracle's exact moments stay cheap.
    id.sample = [](std::mt19937_64& rng) {
      std::uniform_int_distribution<int> jj(0, 3), num(1, 9), den(1, 9);
      Real j = jj(rng), a = uniform(rng, -0.5, 0.5), b = uniform(rng, -0.5, 0.5);
      Real c = a + b + uniform(rng, 1, 3);
      Real f = static_cast<Real>(num(rng)) / den(rng);
      Real d = 1 + static_cast<Real>(num(rng)) / den(rng);
      return std::vector<Real>{j, a, b, c, f, d};
    };
    id.forms = {{"stated", [](const std::vector<Real>& p) {
                   const auto j = static_cast<unsigned>(p[0]);
                   NumericOutcome o;
                   o.lhs = integral_2f1_K_closed(j, p[1], p[2], p[3], p[4], p[5]);
                   OracleValue ov = integrate_series_oracle(j, p[1], p[2], p[3], Rational::from_double(p[4]),
                                                            Rational::from_double(p[5]), 1e-9);
                   o.rhs = ov.value;
                   o.bound = ov.abs_error_bound;
                   return o;
                 }}};
    out.push_back(std::move(id));
  }

  {
    NumericIdentity id;
    id.id = "INT-2F1-K-F-EQ-C";
    id.anchor = "integral of 2F1 K_j f at f = c as a Gamma product";
    id.param_names = {"j", "a", "b", "c", "d"};
    id.tolerance = 1e-8;
    for (unsigned j = 0; j <= 4; ++j) {
      id.points.push_back({static_cast<Real>(j), 0.5, 1.0 / 3, 3, 2});
      id.points.push_back({static_cast<Real>(j), -0.5, 0.25, 2, 1.5});
    }
    id.sample = [](std::mt19937_64& rng) {
      std::uniform_int_distribution<int> jj(0, 4);
      Real j = jj(rng), a = uniform(rng, -0.5, 0.5), b = uniform(rng, -0.5, 0.5);
      return std::vector<Real>{j, a, b, a + b + uniform(rng, 1.5, 3), uniform(rng, 0.5, 3)};
    };
    id.forms = {{"stated", [](const std::vector<Real>& p) {
                   const auto j = static_cast<unsigned>(p[0]);
                   NumericOutcome o;
                   o.lhs = integral_2f1_K_closed(j, p[1], p[2], p[3], p[3], p[4]);
                   o.rhs = integral_2f1_K_f_eq_c(j, p[1], p[2], p[3], p[4]);
                   return o;
                 }}};
    out.push_back(std::move(id));
  }

  return out;
}

}  // namespace hyperjacobi
