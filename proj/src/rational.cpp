#include "hyperjacobi/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hyperjacobi/errors.hpp"

namespace hyperjacobi {

Rational::Rational(long num, long den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw DomainViolation("cannot convert non-finite double to rational");
  // mpq_set_d is exact for finite doubles.
  mpq_class q(v);
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return std::invalid_argument("not a rational literal: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto is_int = [](std::string_view t) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!is_int(s)) throw bad();
    return Rational(mpz_class(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class d(den);
  if (d == 0) throw bad();
  return Rational(mpq_class(mpz_class(strip_plus(num)), d));
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw PoleError("zero to a negative power");
    return (Rational(1) / *this).pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace hyperjacobi
