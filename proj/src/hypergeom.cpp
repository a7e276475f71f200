#include "hyperjacobi/hypergeom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/log_gamma.hpp"
#include "hyperjacobi/pochhammer.hpp"

namespace hyperjacobi {

namespace {

constexpr Real kNearPole = 1e-9;
constexpr Real kEps = std::numeric_limits<Real>::epsilon();
constexpr int kMaxRichardsonColumns = 10;

std::atomic<std::size_t> g_default_max_terms{100000};

bool is_nonpositive_int(Real v) { return v <= 0 && v == std::floor(v); }

// Neumaier compensated summation.
struct Accumulator {
  Real sum = 0, carry = 0;
  void add(Real x) {
    Real t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }
  Real value() const { return sum + carry; }
};

std::optional<unsigned> termination_degree(const PfqSpecReal& spec) {
  std::optional<unsigned> deg;
  for (Real a : spec.upper) {
    if (is_nonpositive_int(a)) {
      auto d = static_cast<unsigned>(-a);
      if (!deg || d < *deg) deg = d;
    }
  }
  return deg;
}

void check_lower(const PfqSpecReal& spec, std::optional<unsigned> degree) {
  for (Real b : spec.lower) {
    if (!std::isfinite(b)) throw DomainViolation("non-finite lower parameter");
    Real r = std::round(b);
    if (r > 0 || std::fabs(b - r) >= kNearPole) continue;
    // Pole sits at term index -r + 1; harmless if the series stops before it.
    if (degree && static_cast<Real>(*degree) <= -r) continue;
    std::ostringstream os;
    os << "lower parameter " << b << " is within " << kNearPole << " of the pole " << r;
    throw PoleError(os.str());
  }
}

std::string describe(const PfqSpecReal& s) {
  std::ostringstream os;
  os << s.upper.size() << "F" << s.lower.size() << "(";
  for (std::size_t i = 0; i < s.upper.size(); ++i) os << (i ? "," : "") << s.upper[i];
  os << ";";
  for (std::size_t i = 0; i < s.lower.size(); ++i) os << (i ? "," : "") << s.lower[i];
  os << ")";
  return os.str();
}

// Ratio bound valid for every index k' >= k (k past all parameter sign changes).
Real geometric_ratio_bound(const std::vector<Real>& up_sorted, const std::vector<Real>& low_sorted, Real ax,
                           Real k) {
  Real r = ax;
  const std::size_t paired = std::min(up_sorted.size(), low_sorted.size());
  for (std::size_t i = 0; i < paired; ++i) {
    Real q = (k + up_sorted[i]) / (k + low_sorted[i]);
    if (q > 1) r *= q;
  }
  for (std::size_t i = paired; i < low_sorted.size(); ++i) r /= (k + low_sorted[i]);
  for (std::size_t i = paired; i < up_sorted.size(); ++i) r *= (k + up_sorted[i]);
  return r;
}

// Richardson table over partial sums at N0 * 2^i, error ~ sum_k c_k N^-(p0+k).
class Richardson {
 public:
  explicit Richardson(Real p0) : p0_(p0) {}

  void push(Real partial) {
    std::vector<Real> row{partial};
    if (!rows_.empty()) {
      const auto& prev = rows_.back();
      const std::size_t cols = std::min<std::size_t>(prev.size() + 1, kMaxRichardsonColumns);
      for (std::size_t k = 1; k < cols; ++k) {
        Real f = std::pow(2.0, p0_ + static_cast<Real>(k - 1)) - 1.0;
        row.push_back(row[k - 1] + (row[k - 1] - prev[k - 1]) / f);
      }
    }
    rows_.push_back(std::move(row));
  }

  // Best column: smallest change between the last two rows.
  bool estimate(Real& value, Real& err, Real& amplification) const {
    if (rows_.size() < 3) return false;
    const auto& cur = rows_.back();
    const auto& prev = rows_[rows_.size() - 2];
    bool found = false;
    for (std::size_t k = 1; k < prev.size() && k < cur.size(); ++k) {
      Real d = std::fabs(cur[k] - prev[k]);
      if (!found || d < err) {
        err = d;
        value = cur[k];
        found = true;
        amplification = 1;
        for (std::size_t c = 0; c < k; ++c) amplification *= 1 + 2 / (std::pow(2.0, p0_ + static_cast<Real>(c)) - 1);
      }
    }
    return found;
  }

 private:
  Real p0_;
  std::vector<std::vector<Real>> rows_;
};

enum class Regime { geometric, power_law, alternating };

}  // namespace

std::size_t SeriesOptions::default_max_terms() { return g_default_max_terms.load(); }
void SeriesOptions::set_default_max_terms(std::size_t n) { g_default_max_terms.store(n == 0 ? 1 : n); }

PfqSpecReal PfqSpecReal::from(const PfqSpec& s) {
  PfqSpecReal r;
  for (const auto& a : s.upper) r.upper.push_back(a.to_double());
  for (const auto& b : s.lower) r.lower.push_back(b.to_double());
  return r;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::terminating: return "terminating";
    case Classification::convergent_open_disc: return "convergent_open_disc";
    case Classification::convergent_closed_disc: return "convergent_closed_disc";
    case Classification::divergent: return "divergent";
  }
  return "?";
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::geometric: return "geometric";
    case BoundKind::raabe: return "raabe";
    case BoundKind::alternating: return "alternating";
    case BoundKind::extrapolated: return "extrapolated";
  }
  return "?";
}

Classification classify(const PfqSpec& spec, const Rational& x) {
  for (const auto& a : spec.upper)
    if (a.is_nonpositive_integer()) return Classification::terminating;
  const std::size_t n = spec.upper.size(), m = spec.lower.size();
  if (n <= m) return Classification::convergent_closed_disc;
  if (n > m + 1) return x.is_zero() ? Classification::convergent_open_disc : Classification::divergent;
  const Rational ax = abs(x);
  if (ax < Rational(1)) return Classification::convergent_open_disc;
  if (ax > Rational(1)) return Classification::divergent;
  Rational s(0);
  for (const auto& b : spec.lower) s += b;
  for (const auto& a : spec.upper) s -= a;
  return s.sign() > 0 ? Classification::convergent_closed_disc : Classification::divergent;
}

Classification classify(const PfqSpecReal& spec, Real x) {
  if (termination_degree(spec)) return Classification::terminating;
  const std::size_t n = spec.upper.size(), m = spec.lower.size();
  if (n <= m) return Classification::convergent_closed_disc;
  if (n > m + 1) return x == 0 ? Classification::convergent_open_disc : Classification::divergent;
  const Real ax = std::fabs(x);
  if (ax < 1) return Classification::convergent_open_disc;
  if (ax > 1) return Classification::divergent;
  Real s = 0;
  for (Real b : spec.lower) s += b;
  for (Real a : spec.upper) s -= a;
  return s > 0 ? Classification::convergent_closed_disc : Classification::divergent;
}

Rational pfq_exact_partial(const PfqSpec& spec, const Rational& x, unsigned N) {
  Rational sum(1), term(1);
  for (unsigned j = 0; j < N; ++j) {
    const Rational jr(static_cast<long>(j));
    Rational num = x, den(static_cast<long>(j + 1));
    for (const auto& a : spec.upper) num *= a + jr;
    if (num.is_zero()) break;  // terminated: every later term is zero
    for (const auto& b : spec.lower) den *= b + jr;
    if (den.is_zero()) throw PoleError("pfq_exact_partial: lower parameter pole at term " + std::to_string(j + 1));
    term *= num / den;
    sum += term;
  }
  return sum;
}

SeriesValue pfq_eval(const PfqSpecReal& spec, Real x, const SeriesOptions& opts) {
  if (!std::isfinite(x)) throw DomainViolation("non-finite argument");
  for (Real a : spec.upper)
    if (!std::isfinite(a)) throw DomainViolation("non-finite upper parameter");
  const auto degree = termination_degree(spec);
  check_lower(spec, degree);

  if (degree) {
    Accumulator acc;
    Real t = 1, abs_sum = 1;
    acc.add(1);
    for (unsigned j = 0; j < *degree; ++j) {
      Real r = x / static_cast<Real>(j + 1);
      for (Real a : spec.upper) r *= a + j;
      for (Real b : spec.lower) r /= b + j;
      t *= r;
      acc.add(t);
      abs_sum += std::fabs(t);
    }
    return {acc.value(), 4 * kEps * abs_sum, static_cast<std::size_t>(*degree) + 1, BoundKind::exact};
  }
  if (x == 0) return {1, 0, 1, BoundKind::exact};

  if (classify(spec, x) == Classification::divergent)
    throw Divergent("series " + describe(spec) + " diverges at x=" + std::to_string(x));

  const std::size_t n = spec.upper.size(), m = spec.lower.size();
  Regime regime = Regime::geometric;
  if (n == m + 1 && std::fabs(x) == 1) regime = x > 0 ? Regime::power_law : Regime::alternating;

  Real s = 0, pmax = 0, neg = 0;
  for (Real b : spec.lower) s += b;
  for (Real a : spec.upper) s -= a;
  for (Real p : spec.upper) { pmax = std::max(pmax, std::fabs(p)); neg = std::max(neg, -p); }
  for (Real p : spec.lower) { pmax = std::max(pmax, std::fabs(p)); neg = std::max(neg, -p); }
  const Real k0 = neg > 0 ? std::floor(neg) + 1 : 0;

  std::vector<Real> up_sorted = spec.upper, low_sorted = spec.lower;
  low_sorted.push_back(1.0);  // the j! in the term
  std::sort(up_sorted.begin(), up_sorted.end(), std::greater<>());
  std::sort(low_sorted.begin(), low_sorted.end(), std::greater<>());

  std::size_t checkpoint = 64;
  while (static_cast<Real>(checkpoint) < 8 * (pmax + 1) || static_cast<Real>(checkpoint) < 4 * k0) checkpoint *= 2;
  Richardson rich(regime == Regime::alternating ? s + 1 : s);

  Accumulator acc;
  acc.add(1);
  Real t = 1, abs_sum = 1;
  const Real ax = std::fabs(x);
  for (std::size_t k = 0; k < opts.max_terms; ++k) {
    const Real kr = static_cast<Real>(k);
    Real r = x / (kr + 1);
    for (Real a : spec.upper) r *= a + kr;
    for (Real b : spec.lower) r /= b + kr;
    t *= r;
    acc.add(t);
    abs_sum += std::fabs(t);
    const std::size_t idx = k + 1;
    const Real idr = static_cast<Real>(idx);
    const Real value = acc.value();
    const Real target = opts.relative ? opts.tol * std::fabs(value) : opts.tol;
    const Real rounding = 4 * kEps * abs_sum;

    if (idr >= k0) {
      if (regime == Regime::geometric) {
        Real R = geometric_ratio_bound(up_sorted, low_sorted, ax, idr);
        if (R < 1) {
          Real trunc = std::fabs(t) * R / (1 - R);
          if (trunc + rounding <= target) return {value, trunc + rounding, idx + 1, BoundKind::geometric};
        }
      } else if (idr >= 2 * k0 + 2) {
        Real rn = 1 / (idr + 1);
        for (Real a : spec.upper) rn *= a + idr;
        for (Real b : spec.lower) rn /= b + idr;
        rn = std::fabs(rn);
        if (rn < 1) {
          Real trunc = regime == Regime::power_law ? std::fabs(t) * (idr + 1) / s : std::fabs(t) * rn;
          if (trunc + rounding <= target)
            return {value, trunc + rounding, idx + 1,
                    regime == Regime::power_law ? BoundKind::raabe : BoundKind::alternating};
        }
      }
    }

    if (regime != Regime::geometric && idx == checkpoint) {
      rich.push(value);
      Real v = 0, err = 0, amp = 1;
      if (rich.estimate(v, err, amp)) {
        const Real bound = err + 8 * kEps * abs_sum * amp;
        const Real tgt = opts.relative ? opts.tol * std::fabs(v) : opts.tol;
        if (bound <= tgt) return {v, bound, idx + 1, BoundKind::extrapolated};
      }
      checkpoint *= 2;
    }
  }
  std::ostringstream os;
  os << "series " << describe(spec) << " at x=" << x << " did not reach tol " << opts.tol << " within "
     << opts.max_terms << " terms";
  throw NoConvergence(os.str());
}

SeriesValue pfq_eval(const PfqSpecReal& spec, Real x, Real tol) {
  SeriesOptions o;
  o.tol = tol;
  return pfq_eval(spec, x, o);
}

SeriesValue pfq_eval(const PfqSpec& spec, Real x, Real tol) { return pfq_eval(PfqSpecReal::from(spec), x, tol); }

Real gauss_sum(Real a, Real b, Real c) {
  if (is_nonpositive_int(c)) throw PoleError("gauss_sum: c=" + std::to_string(c) + " is a non-positive integer");
  if (!(c - a - b > 0)) throw DomainViolation("gauss_sum needs c-a-b > 0");
  return gamma_ratio_real({c, c - a - b}, {c - a, c - b});
}

SeriesPair euler_transform_check(Real a, Real b, Real c, Real x) {
  if (!(std::fabs(x) < 1)) throw DomainViolation("euler_transform_check needs |x| < 1");
  if (is_nonpositive_int(c)) throw PoleError("euler_transform_check: c is a non-positive integer");
  SeriesPair p;
  p.direct = pfq_eval(PfqSpecReal{{a, b}, {c}}, x, 1e-14);
  SeriesValue inner = pfq_eval(PfqSpecReal{{c - a, c - b}, {c}}, x, 1e-14);
  Real w = std::pow(1 - x, c - a - b);
  p.transformed = {w * inner.value, w * inner.abs_error_bound, inner.terms_used, inner.bound_kind};
  return p;
}

Rational pfaff_saalschutz(unsigned n, const Rational& a, const Rational& b, const Rational& c) {
  Rational den = rising(c, n) * rising(c - a - b, n);
  if (den.is_zero()) throw PoleError("pfaff_saalschutz: (c)^(n)(c-a-b)^(n) vanishes");
  return rising(c - a, n) * rising(c - b, n) / den;
}

PfqSpec balanced_3f2(unsigned n, const Rational& a, const Rational& b, const Rational& c) {
  return {{Rational(-static_cast<long>(n)), a, b}, {c, Rational(1) + a + b - c - Rational(static_cast<long>(n))}};
}

namespace {

Real watson_gamma_product(Real A, Real B, Real C) {
  if (!(2 * C + 1 > A + B)) throw DomainViolation("Watson sum needs 2f+1 > a+b");
  return std::sqrt(std::numbers::pi) *
         gamma_ratio_real({C + 0.5, (A + B + 1) / 2, C - (A + B - 1) / 2},
                          {(A + 1) / 2, (B + 1) / 2, C - (A - 1) / 2, C - (B - 1) / 2});
}

}  // namespace

Real watson_sum(Real a, Real b, Real f) { return watson_gamma_product(a, b, f); }

Real watson_sum_shifted(Real a, Real b, Real f, unsigned j) {
  const Real jr = static_cast<Real>(j);
  return watson_gamma_product(a + jr, b + jr, f + jr);
}

Real watson_sum_shifted_doubled(Real a, Real b, Real f, unsigned j) { return 2 * watson_sum_shifted(a, b, f, j); }

std::array<Real, 5> thomae_3f2_forms(Real a, Real b, Real f, Real c, Real d, unsigned j) {
  const Real J = static_cast<Real>(j);
  SeriesOptions o;
  o.tol = 1e-13;
  o.relative = true;
  auto F = [&](std::vector<Real> up, std::vector<Real> lo) { return pfq_eval(PfqSpecReal{up, lo}, 1.0, o).value; };
  const Real s = c + d - a - b;
  std::array<Real, 5> out{};
  out[0] = F({a + J, b + J, f + J}, {c + J, d + f + 2 * J});
  out[1] = gamma_ratio_real({c + J, s}, {c - a, c + d - b + J}) *
           F({a + J, d + f - b + J, d + J}, {d + c - b + J, d + f + 2 * J});
  out[2] = gamma_ratio_real({c + J, s}, {c - f, c + d + f - a - b + J}) *
           F({f + J, d + f - b + J, d + f - a + J}, {c + d + f - a - b + J, d + f + 2 * J});
  out[3] = gamma_ratio_real({d + f + 2 * J, s}, {d + f - a + J, d + c - b + J}) *
           F({a + J, c - b, c - f}, {c + J, d + c - b + J});
  out[4] = gamma_ratio_real({d + f + 2 * J, s}, {d + J, c + d + f - a - b + J}) *
           F({f + J, c - a, c - b}, {c + J, c + d + f - a - b + J});
  return out;
}

Real pochhammer_ratio(const std::vector<std::pair<Real, unsigned>>& num,
                      const std::vector<std::pair<Real, unsigned>>& den) {
  std::vector<Real> nf, df;
  for (const auto& [x, n] : num)
    for (unsigned i = 0; i < n; ++i) nf.push_back(x + i);
  for (const auto& [x, n] : den)
    for (unsigned i = 0; i < n; ++i) df.push_back(x + i);
  Real r = 1;
  std::size_t i = 0, k = 0;
  while (i < nf.size() || k < df.size()) {
    if (i < nf.size()) r *= nf[i++];
    if (k < df.size()) {
      if (df[k] == 0) throw PoleError("pochhammer_ratio: vanishing denominator factor");
      r /= df[k++];
    }
  }
  return r;
}

Real rising_real(Real x, unsigned n) {
  Real r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x + i;
  return r;
}

}  // namespace hyperjacobi
