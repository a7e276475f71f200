#include "hyperjacobi/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <unordered_map>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/log_gamma.hpp"
#include "hyperjacobi/pochhammer.hpp"

namespace hyperjacobi {

struct ExpansionSeries::Cache {
  std::mutex m;
  std::unordered_map<unsigned, Real> coeffs;
  std::unordered_map<unsigned, PolyInPowersOfXMinus1> polys;
};

namespace {

// Inner series at 1 for coefficient formulas. The shifted parameters grow with j
// and the extrapolation needs partial sums well past their size.
Real F1(std::vector<Real> up, std::vector<Real> lo) {
  // A 3F2 at 1 whose parametric excess s is small converges like N^(-s). Thomae's
  // relation trades s for the largest upper parameter a:
  //   3F2(a,b,c;d,e;1) = G(d)G(e)G(s)/(G(a)G(s+b)G(s+c)) 3F2(d-a,e-a,s;s+b,s+c;1)
  if (up.size() == 3 && lo.size() == 2) {
    std::sort(up.begin(), up.end(), std::greater<>());
    const Real a = up[0], b = up[1], c = up[2], d = lo[0], e = lo[1];
    const Real s = d + e - a - b - c;
    if (s > 0 && s < 2 && a > s + 1 && !is_gamma_pole(s + b) && !is_gamma_pole(s + c) && !is_gamma_pole(d) &&
        !is_gamma_pole(e)) {
      const Real pre = gamma_ratio_real({d, e, s}, {a, s + b, s + c});
      if (pre == 0) return 0;
      SeriesOptions o;
      o.tol = 1e-12;
      o.relative = true;
      o.max_terms = std::max<std::size_t>(o.max_terms, 4000000);
      return pre * pfq_eval(PfqSpecReal{{d - a, e - a, s}, {s + b, s + c}}, 1.0, o).value;
    }
  }
  SeriesOptions o;
  o.tol = 1e-12;
  o.relative = true;
  o.max_terms = std::max<std::size_t>(o.max_terms, 4000000);
  return pfq_eval(PfqSpecReal{std::move(up), std::move(lo)}, 1.0, o).value;
}

Real F(const PfqSpecReal& spec, Real x) {
  SeriesOptions o;
  o.tol = 1e-12;
  o.relative = true;
  return pfq_eval(spec, x, o).value;
}

Real P(std::vector<std::pair<Real, unsigned>> num, std::vector<std::pair<Real, unsigned>> den) {
  return pochhammer_ratio(num, den);
}

void require_fd(Real f, Real d, const char* who) {
  if (!(f > 0 && d > 0)) throw DomainViolation(std::string(who) + " needs f > 0 and d > 0");
}

void require_gauss(Real a, Real b, Real c, const char* who) {
  if (!(c - a - b > 0)) throw DomainViolation(std::string(who) + " needs c-a-b > 0");
  if (is_gamma_pole(c)) throw PoleError(std::string(who) + ": c is a non-positive integer");
}

Real sign_pow(unsigned k) { return (k % 2 == 0) ? 1.0 : -1.0; }

Real uniform(std::mt19937_64& rng, Real lo, Real hi) { return std::uniform_real_distribution<Real>(lo, hi)(rng); }

Real ghk_coefficient(const PfqSpecReal& spec, Real f, Real d, unsigned j) {
  const Real J = static_cast<Real>(j);
  std::vector<std::pair<Real, unsigned>> num, den;
  for (Real a : spec.upper) num.emplace_back(a, j);
  for (Real b : spec.lower) den.emplace_back(b, j);
  den.emplace_back(d + f + J - 1, j);
  Real pre = P(num, den);
  if (pre == 0) return 0;
  std::vector<Real> up, lo;
  for (Real a : spec.upper) up.push_back(a + J);
  up.push_back(f + J);
  for (Real b : spec.lower) lo.push_back(b + J);
  lo.push_back(d + f + 2 * J);
  return pre * F1(up, lo);
}

void require_pfq_expansion_domain(const PfqSpecReal& spec, Real f, Real d, const char* who) {
  require_fd(f, d, who);
  if (spec.upper.size() > spec.lower.size() + 1)
    throw DomainViolation(std::string(who) + " needs at most one more upper than lower parameter");
  if (spec.upper.size() == spec.lower.size() + 1) {
    Real s = 0;
    for (Real b : spec.lower) s += b;
    for (Real a : spec.upper) s -= a;
    if (!(s > 0)) throw DomainViolation(std::string(who) + " needs sum(lower) - sum(upper) > 0");
  }
}

}  // namespace

ExpansionSeries ExpansionSeries::orthogonal(std::string form_tag, Variant variant, Real f, Real d, CoeffFn coeff,
                                            TargetFn target) {
  ExpansionSeries s;
  s.tag_ = std::move(form_tag);
  s.kind_ = ExpansionKind::orthogonal;
  s.basis_ = JacobiBasis{Rational::from_double(f), Rational::from_double(d), variant};
  s.coeff_ = std::move(coeff);
  s.target_ = std::move(target);
  s.cache_ = std::make_shared<Cache>();
  return s;
}

ExpansionSeries ExpansionSeries::power(std::string form_tag, TermFn term, TargetFn target) {
  ExpansionSeries s;
  s.tag_ = std::move(form_tag);
  s.kind_ = ExpansionKind::power;
  s.power_term_ = std::move(term);
  s.target_ = std::move(target);
  s.cache_ = std::make_shared<Cache>();
  return s;
}

Real ExpansionSeries::coefficient(unsigned j) const {
  if (kind_ == ExpansionKind::power) throw std::logic_error("power-kind expansions have x-dependent terms");
  {
    std::lock_guard<std::mutex> lock(cache_->m);
    auto it = cache_->coeffs.find(j);
    if (it != cache_->coeffs.end()) return it->second;
  }
  // Computed outside the lock; concurrent writers store the same value.
  Real v = coeff_(j);
  std::lock_guard<std::mutex> lock(cache_->m);
  cache_->coeffs.emplace(j, v);
  return v;
}

Real ExpansionSeries::basis_value(unsigned j, Real x) const {
  std::optional<PolyInPowersOfXMinus1> poly;
  {
    std::lock_guard<std::mutex> lock(cache_->m);
    auto it = cache_->polys.find(j);
    if (it != cache_->polys.end()) poly = it->second;
  }
  if (!poly) {
    poly = jacobi_poly(j, basis_);
    std::lock_guard<std::mutex> lock(cache_->m);
    cache_->polys.emplace(j, *poly);
  }
  // Exact evaluation: the (x-1)-power coefficients alternate and cancel badly in floating point.
  return poly->evaluate(Rational::from_double(x)).to_double();
}

Real ExpansionSeries::term(unsigned j, Real x) const {
  if (kind_ == ExpansionKind::power) return power_term_(j, x);
  Real c = coefficient(j);
  if (c == 0) return 0;
  return c * basis_value(j, x);
}

Real ExpansionSeries::partial_eval(Real x, unsigned J) const {
  Real s = 0;
  for (unsigned j = 0; j <= J; ++j) s += term(j, x);
  return s;
}

Real ExpansionSeries::tail_estimate(Real x, unsigned J) const {
  Real m = 0;
  for (unsigned j = J >= 2 ? J - 2 : 0; j <= J; ++j) m = std::max(m, std::fabs(term(j, x)));
  return m;
}

TruncatedValue ExpansionSeries::truncate(Real x, Real tol, unsigned max_terms) const {
  TruncatedValue out;
  int small = 0;
  for (unsigned j = 0; j < max_terms; ++j) {
    Real t = term(j, x);
    out.value += t;
    out.terms = j + 1;
    out.tail_estimate = std::fabs(t);
    small = std::fabs(t) < tol ? small + 1 : 0;
    if (small >= 3) {
      out.certified = true;
      return out;
    }
  }
  return out;
}

ExpansionSeries expand_pfq_K(const PfqSpecReal& spec, Real f, Real d) {
  require_pfq_expansion_domain(spec, f, d, "expand_pfq_K");
  return ExpansionSeries::orthogonal(
      "GHK1", Variant::K, f, d, [spec, f, d](unsigned j) { return ghk_coefficient(spec, f, d, j); },
      [spec](Real x) { return F(spec, x); });
}

ExpansionSeries expand_pfq_J(const PfqSpecReal& spec, Real f, Real d) {
  require_pfq_expansion_domain(spec, f, d, "expand_pfq_J");
  return ExpansionSeries::orthogonal(
      "GHJ1", Variant::J, f, d, [spec, f, d](unsigned j) { return ghk_coefficient(spec, f, d, j); },
      [spec](Real x) { return F(spec, (1 + x) / 2); });
}

ExpansionSeries expand_pfq_power(const PfqSpecReal& spec, std::size_t b1_index) {
  if (b1_index >= spec.lower.size()) throw DomainViolation("expand_pfq_power: no lower parameter at that index");
  const Real b1 = spec.lower[b1_index];
  if (b1 == 1) throw DomainViolation("expand_pfq_power needs b1 != 1");
  if (is_gamma_pole(b1 - 1)) throw PoleError("expand_pfq_power: b1-1 is a non-positive integer");
  auto term = [spec, b1_index, b1](unsigned k, Real x) -> Real {
    if (!(std::fabs(x) < 1)) throw DomainViolation("expand_pfq_power evaluates only for |x| < 1");
    const Real K = static_cast<Real>(k);
    std::vector<std::pair<Real, unsigned>> num, den{{1, k}, {1, k}};
    PfqSpecReal inner;
    for (Real a : spec.upper) {
      num.emplace_back(a, k);
      inner.upper.push_back(a + K);
    }
    inner.lower.push_back(1 + K);
    for (std::size_t s = 0; s < spec.lower.size(); ++s) {
      if (s == b1_index) continue;
      den.emplace_back(spec.lower[s], k);
      inner.lower.push_back(spec.lower[s] + K);
    }
    Real pre = (b1 - 1) * sign_pow(k) / (b1 - 1 + K) * P(num, den) * std::pow(x, K);
    if (pre == 0) return 0;
    return pre * F(inner, x);
  };
  return ExpansionSeries::power("GHS1", term, [spec](Real x) { return F(spec, x); });
}

std::vector<std::string> expand_2f1_tags() {
  return {"2F1-1", "2F1-1a", "2F1-1b", "2F1-1d", "2F1-1alt", "2F1-2",      "2F1-2a",
          "2F1-2b", "2F1-2d", "2F1-2alt", "2F1-2star", "2F1-3", "2F1-3-euler"};
}

ExpansionSeries expand_2f1(const std::string& tag, Real a, Real b, Real c, Real f, Real d) {
  require_gauss(a, b, c, "expand_2f1");
  const PfqSpecReal spec{{a, b}, {c}};

  if (tag == "2F1-3" || tag == "2F1-3-euler") {
    if (c == 1) throw DomainViolation("expand_2f1: the power form needs c != 1");
    if (tag == "2F1-3") return expand_pfq_power(spec, 0);
    auto term = [a, b, c](unsigned k, Real x) -> Real {
      if (!(std::fabs(x) < 1)) throw DomainViolation("2F1-3-euler evaluates only for |x| < 1");
      const Real K = static_cast<Real>(k);
      Real pre = (c - 1) * sign_pow(k) / (c - 1 + K) * P({{a, k}, {b, k}}, {{1, k}, {1, k}}) *
                 std::pow(x / (1 - x), K) * std::pow(1 - x, 1 - a - b);
      if (pre == 0) return 0;
      return pre * F(PfqSpecReal{{1 - a, 1 - b}, {1 + K}}, x);
    };
    return ExpansionSeries::power(tag, term, [spec](Real x) { return F(spec, x); });
  }

  if (tag == "2F1-2star") return expand_2f1_f_eq_c(a, b, c, d);

  require_fd(f, d, "expand_2f1");
  if (tag.size() < 5 || tag.rfind("2F1-", 0) != 0) throw std::invalid_argument("unknown expansion form '" + tag + "'");
  const bool j_basis = tag.rfind("2F1-1", 0) == 0;
  const std::string family = tag.substr(5);  // "", "a", "b", "d", "alt" after the digit
  const Variant v = j_basis ? Variant::J : Variant::K;
  auto target = j_basis ? ExpansionSeries::TargetFn([spec](Real x) { return F(spec, (1 + x) / 2); })
                        : ExpansionSeries::TargetFn([spec](Real x) { return F(spec, x); });

  ExpansionSeries::CoeffFn coeff;
  if (family.empty()) {
    coeff = [spec, f, d](unsigned j) { return ghk_coefficient(spec, f, d, j); };
  } else if (family == "a") {
    if (!(c - a > 0)) throw DomainViolation("form a needs c > a");
    const Real G = gamma_ratio_real({c, c + d - a - b}, {c - a, c + d - b});
    coeff = [=](unsigned j) {
      const Real J = j;
      Real pre = G * P({{a, j}, {b, j}}, {{d + f + J - 1, j}, {c + d - b, j}});
      return pre == 0 ? 0.0 : pre * F1({a + J, d + f - b + J, d + J}, {d + c - b + J, d + f + 2 * J});
    };
  } else if (family == "b") {
    if (!(c - f > 0)) throw DomainViolation("form b needs c > f");
    const Real G = gamma_ratio_real({c, c + d - a - b}, {c - f, c + d + f - a - b});
    coeff = [=](unsigned j) {
      const Real J = j;
      Real pre = G * P({{a, j}, {b, j}}, {{d + f + J - 1, j}, {c + d + f - a - b, j}});
      return pre == 0 ? 0.0
                      : pre * F1({f + J, d + f - b + J, d + f - a + J}, {c + d + f - a - b + J, d + f + 2 * J});
    };
  } else if (family == "d") {
    const Real G = gamma_ratio_real({d + f, c + d - a - b}, {d, c + d + f - a - b});
    coeff = [=](unsigned j) {
      const Real J = j;
      Real pre = G * P({{a, j}, {b, j}, {d + f, 2 * j}}, {{c, j}, {d + f + J - 1, j}, {d, j}, {c + d + f - a - b, j}});
      return pre == 0 ? 0.0 : pre * F1({f + J, c - a, c - b}, {c + J, c + d + f - a - b + J});
    };
  } else if (family == "alt") {
    if (!(d + f - a > 0)) throw DomainViolation("form alt needs d+f > a");
    const Real G = gamma_ratio_real({d + f, c + d - a - b}, {d + f - a, c + d - b});
    coeff = [=](unsigned j) {
      const Real J = j;
      Real pre =
          G * P({{a, j}, {b, j}, {d + f, 2 * j}}, {{c, j}, {d + f + J - 1, j}, {d + f - a, j}, {c + d - b, j}});
      return pre == 0 ? 0.0 : pre * F1({a + J, c - b, c - f}, {c + J, c + d - b + J});
    };
  } else {
    throw std::invalid_argument("unknown expansion form '" + tag + "'");
  }
  return ExpansionSeries::orthogonal(tag, v, f, d, coeff, target);
}

ExpansionSeries expand_2f1_f_eq_c(Real a, Real b, Real c, Real d) {
  require_gauss(a, b, c, "expand_2f1_f_eq_c");
  require_fd(c, d, "expand_2f1_f_eq_c");
  if (c + d == 1) throw DomainViolation("expand_2f1_f_eq_c needs c+d != 1");
  const Real G = gamma_ratio_real({c + d - 1, c + d - a - b}, {c + d - a, c + d - b});
  auto coeff = [=](unsigned j) {
    const Real J = j;
    return G * (c + d + 2 * J - 1) * P({{a, j}, {b, j}, {c + d - 1, j}}, {{c, j}, {c + d - a, j}, {c + d - b, j}});
  };
  const PfqSpecReal spec{{a, b}, {c}};
  return ExpansionSeries::orthogonal("2F1-2star", Variant::K, c, d, coeff, [spec](Real x) { return F(spec, x); });
}

ExpansionSeries expand_2f1_watson(Real a, Real b, Real f, bool printed) {
  if (!(f > 0)) throw DomainViolation("expand_2f1_watson needs f > 0");
  if (!(2 * f + 1 > a + b)) throw DomainViolation("expand_2f1_watson needs 2f+1 > a+b");
  const Real c = (a + b + 1) / 2;
  require_gauss(a, b, c, "expand_2f1_watson");
  const PfqSpecReal spec{{a, b}, {c}};
  ExpansionSeries::CoeffFn coeff;
  if (printed) {
    coeff = [=](unsigned j) {
      const Real J = j;
      Real pre = P({{a, j}, {b, j}}, {{c, j}, {2 * f + J - 1, j}});
      if (pre == 0) return 0.0;
      return std::sqrt(std::numbers::pi) * pre *
             gamma_ratio_real({f + (1 - a - b) / 2, f + 0.5 + J},
                              {(a + 1 + J) / 2, (b + 1 + J) / 2, (2 * f + 1 - a + J) / 2, (2 * f + 1 - b + J) / 2});
    };
  } else {
    coeff = [=](unsigned j) {
      Real pre = P({{a, j}, {b, j}}, {{c, j}, {2 * f + j - 1.0, j}});
      return pre == 0 ? 0.0 : pre * watson_sum_shifted(a, b, f, j);
    };
  }
  return ExpansionSeries::orthogonal(printed ? "PART-B-printed" : "PART-B", Variant::K, f, f, coeff,
                                     [spec](Real x) { return F(spec, x); });
}

ExpansionSeries expand_2f1_watson2(Real a, Real b, Real c, bool printed) {
  const Real f = 2 * c - b - 1, d = 1 + b + 2 * a - 2 * c;
  if (!(f > 0 && d > 0)) throw DomainViolation("expand_2f1_watson2 needs 2c-b-1 > 0 and 1+b+2a-2c > 0");
  require_gauss(a, b, c, "expand_2f1_watson2");
  const PfqSpecReal spec{{a, b}, {c}};
  ExpansionSeries::CoeffFn coeff;
  if (printed) {
    coeff = [=](unsigned j) {
      const Real J = j;
      Real pre = P({{b, j}, {2 * a, 2 * j}}, {{c, j}, {2 * a + J - 1, j}, {1 + 2 * a - c, j}});
      if (pre == 0) return 0.0;
      return std::sqrt(std::numbers::pi) * pre *
             gamma_ratio_real({a + 1 - c, a + 0.5 + J, c + J}, {(b + 1 + J) / 2, c + (J - 1 - b) / 2,
                                                               a + (J + 1 - b) / 2, a + 1 - c + (J + b) / 2});
    };
  } else {
    coeff = [=](unsigned j) {
      Real pre = P({{a, j}, {b, j}}, {{c, j}, {2 * a + j - 1.0, j}});
      // 3F2(b+j, f+j, a+j; c+j, 2a+2j; 1) is a Watson sum with (A+B+1)/2 = c+j, C = a+j
      return pre == 0 ? 0.0 : pre * watson_sum_shifted(b, f, a, j);
    };
  }
  return ExpansionSeries::orthogonal(printed ? "PART-C-printed" : "PART-C", Variant::K, f, d, coeff,
                                     [spec](Real x) { return F(spec, x); });
}

TerminatingReport expand_2f1_terminating(unsigned n, const Rational& b, const Rational& c, const Rational& f) {
  TerminatingReport r;
  r.n = n;
  r.b = b;
  r.c = c;
  r.f = f;
  r.d = b - c + Rational(1) - Rational(static_cast<long>(n));
  const Rational& d = r.d;
  const Rational nr(static_cast<long>(n));

  r.lhs.assign(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) {
    // (c)^(n)/(c)^(k) = (c+k)^(n-k): stays finite even when c is a small negative integer
    r.lhs[k] = rising(-nr, k) * rising(b, k) * rising(c + Rational(static_cast<long>(k)), n - k) / factorial(k);
  }

  r.rhs.assign(n + 1, Rational(0));
  const Rational sg = n % 2 ? Rational(-1) : Rational(1);
  for (unsigned j = 0; j <= n; ++j) {
    const Rational jr(static_cast<long>(j));
    Rational den = rising(d + f + jr - Rational(1), n + 1);
    if (den.is_zero())
      throw PoleError("expand_2f1_terminating: (d+f+j-1)^(n+1) vanishes at j=" + std::to_string(j) +
                      " (d+f=" + (d + f).to_string() + ")");
    Rational w = sg * factorial(n) / factorial(n - j) * rising(b, j) * rising(c - b, n - j) * rising(c - f, n - j) *
                 (d + f + Rational(2) * jr - Rational(1)) / den;
    if (w.is_zero()) continue;
    ++r.nonzero_terms;
    auto mono = k_poly(j, f, d).to_monomial();
    for (unsigned k = 0; k < mono.size(); ++k) r.rhs[k] += w * mono[k];
  }
  r.pass = r.lhs == r.rhs;
  return r;
}

NumericOutcome special_value_sc1(Real a, Real b, Real c, Real d) {
  const Real s = c + d;
  if (s == 1) throw DomainViolation("special_value_sc1 needs c+d != 1");
  SeriesOptions o;
  o.tol = 1e-12;
  o.relative = true;
  SeriesValue v = pfq_eval(PfqSpecReal{{a, b, s - 1, (s + 1) / 2}, {(s - 1) / 2, s - a, s - b}}, -1.0, o);
  const Real G = gamma_ratio_real({s - 1, s - a - b}, {s - a, s - b});
  return {1.0, G * (s - 1) * v.value, std::fabs(G * (s - 1)) * v.abs_error_bound};
}

NumericOutcome special_value_sc2(Real a, Real b, Real c, Real d) {
  const Real s = c + d;
  if (s == 1) throw DomainViolation("special_value_sc2 needs c+d != 1");
  SeriesOptions o;
  o.tol = 1e-12;
  o.relative = true;
  SeriesValue v = pfq_eval(PfqSpecReal{{d, a, b, s - 1, (s + 1) / 2}, {c, (s - 1) / 2, s - a, s - b}}, 1.0, o);
  const Real G = gamma_ratio_real({s - 1, s - a - b}, {s - a, s - b});
  return {gauss_sum(a, b, c), G * (s - 1) * v.value, std::fabs(G * (s - 1)) * v.abs_error_bound};
}

std::vector<NumericIdentity> special_value_identities() {
  std::vector<NumericIdentity> out;
  auto general_sample = [](std::mt19937_64& rng) {
    Real a = uniform(rng, -0.5, 0.5), b = uniform(rng, -0.5, 0.5);
    return std::vector<Real>{a, b, a + b + uniform(rng, 3, 4), uniform(rng, 1, 2), uniform(rng, 2, 3)};
  };
  // c kept away from 0 and c+d away from 1 so no lower parameter sits near a pole.
  auto sc_sample = [](std::mt19937_64& rng) {
    for (;;) {
      Real a = uniform(rng, -0.5, 0.75), b = uniform(rng, -0.5, 0.75);
      Real c = a + b + uniform(rng, 1, 3), d = uniform(rng, 0.5, 3);
      if (c > 0.1 && std::fabs(c + d - 1) > 0.05) return std::vector<Real>{a, b, c, d};
    }
  };
  const std::vector<std::vector<Real>> general_points = {
      {0.5, 1.0 / 3, 4, 1.5, 2.5}, {-0.5, 0.25, 3.5, 1, 3}, {0.25, -0.25, 4, 2, 2}, {0.5, 0.5, 5, 1, 2}};

  auto general = [](bool at_one, bool printed) {
    return [at_one, printed](const std::vector<Real>& p) {
      const Real a = p[0], b = p[1], c = p[2], f = p[3], d = p[4];
      const PfqSpecReal spec{{a, b}, {c}};
      NumericOutcome o;
      o.lhs = at_one ? gauss_sum(a, b, c) : 1.0;
      Real sum = 0;
      int small = 0;
      for (unsigned j = 0; j < 400 && small < 3; ++j) {
        // corrected weights are K_j(0|f,d) = (-1)^j (f)_j/j! and K_j(1|f,d) = (d)_j/j!
        Real w;
        if (at_one)
          w = printed ? P({}, {{d, j}}) : P({{d, j}}, {{1, j}});
        else
          w = sign_pow(j) * (printed ? P({}, {{f, j}}) : P({{f, j}}, {{1, j}}));
        Real t = w * ghk_coefficient(spec, f, d, j);
        sum += t;
        small = std::fabs(t) < 1e-11 ? small + 1 : 0;
        o.bound = 10 * std::fabs(t);
      }
      o.rhs = sum;
      return o;
    };
  };

  {
    NumericIdentity id;
    id.id = "SV-GENERAL-X0";
    id.anchor = "K expansion of 2F1 read at x = 0";
    id.param_names = {"a", "b", "c", "f", "d"};
    id.suspect = true;
    id.tolerance = 1e-7;
    id.points = general_points;
    id.sample = general_sample;
    id.forms = {{"printed", general(false, true)}, {"corrected", general(false, false)}};
    out.push_back(std::move(id));
  }
  {
    NumericIdentity id;
    id.id = "SV-GENERAL-X1";
    id.anchor = "K expansion of 2F1 read at x = 1";
    id.param_names = {"a", "b", "c", "f", "d"};
    id.suspect = true;
    id.tolerance = 1e-7;
    id.points = general_points;
    id.sample = general_sample;
    id.forms = {{"printed", general(true, true)}, {"corrected", general(true, false)}};
    out.push_back(std::move(id));
  }
  const std::vector<std::vector<Real>> sc_points = {
      {0.5, 1.0 / 3, 2, 1.5}, {-0.5, 0.25, 1.5, 2}, {0.25, 0.25, 3, 1}, {-0.25, -0.5, 1, 0.5}, {0.75, -0.5, 2.5, 3}};
  {
    NumericIdentity id;
    id.id = "SV-SC1";
    id.anchor = "f = c expansion at x = 0 sums to 1";
    id.param_names = {"a", "b", "c", "d"};
    id.tolerance = 1e-7;
    id.points = sc_points;
    id.sample = sc_sample;
    id.forms = {{"stated", [](const std::vector<Real>& p) { return special_value_sc1(p[0], p[1], p[2], p[3]); }}};
    out.push_back(std::move(id));
  }
  {
    NumericIdentity id;
    id.id = "SV-SC2";
    id.anchor = "f = c expansion at x = 1 gives the Gauss sum";
    id.param_names = {"a", "b", "c", "d"};
    id.tolerance = 1e-7;
    id.points = sc_points;
    id.sample = sc_sample;
    id.forms = {{"stated", [](const std::vector<Real>& p) { return special_value_sc2(p[0], p[1], p[2], p[3]); }}};
    out.push_back(std::move(id));
  }
  return out;
}

}  // namespace hyperjacobi
