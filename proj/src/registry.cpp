#include "hyperjacobi/registry.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/expansions.hpp"
#include "hyperjacobi/jacobi.hpp"
#include "hyperjacobi/pochhammer.hpp"

namespace hyperjacobi {

namespace {

Rational R(const Rational& x, unsigned n) { return rising(x, n); }
Rational Q(long v) { return Rational(v); }
Rational Q(unsigned v) { return Rational(static_cast<long>(v)); }
Rational C(unsigned n, unsigned k) { return binomial(n, k); }
Rational sg(unsigned k) { return k % 2 ? Q(-1L) : Q(1L); }
Rational delta0(unsigned n) { return n == 0 ? Q(1L) : Q(0L); }
bool nz(const Rational& x, unsigned n) { return !R(x, n).is_zero(); }

// Every j = 0..n satisfies pred(j).
template <class Pred>
bool all_j(unsigned n, Pred pred) {
  for (unsigned j = 0; j <= n; ++j)
    if (!pred(j)) return false;
  return true;
}

IdentityForm stated(std::function<Rational(const Params&, unsigned)> lhs,
                    std::function<Rational(const Params&, unsigned)> rhs) {
  return {"stated", std::move(lhs), std::move(rhs)};
}

auto always = [](const Params&, unsigned) { return true; };

std::vector<IdentityEntry> build_pochhammer() {
  std::vector<IdentityEntry> out;

  out.push_back({"ID-REFL", "pochhammer", "rising factorial of -x-n+1 as a signed rising factorial", {"x"}, 0, 15,
                 false, always,
                 {stated([](const Params& p, unsigned n) { return R(-p[0] - Q(n) + Q(1L), n); },
                         [](const Params& p, unsigned n) { return sg(n) * R(p[0], n); })}});

  {
    auto rhs = [](const Params& p, unsigned n) { return binom_ext(p[0] + p[1], n); };
    out.push_back({"ID-CV", "pochhammer", "Chu-Vandermonde convolution of extended binomials", {"alpha", "beta"}, 0,
                   15, true, always,
                   {{"printed",
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j) s += C(n, j) * binom_ext(p[0], j) * binom_ext(p[1], n - j);
                       return s;
                     },
                     rhs},
                    {"corrected",
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j) s += binom_ext(p[0], j) * binom_ext(p[1], n - j);
                       return s;
                     },
                     rhs}}});
  }

  {
    auto rhs = [](const Params& p, unsigned n) { return R(p[1] - p[0], n) / R(p[1], n); };
    out.push_back({"ID-HYP2", "pochhammer", "terminating Gauss sum with alternating binomial weights", {"b", "c"}, 0,
                   15, true, [](const Params& p, unsigned n) { return nz(p[1], n); },
                   {{"printed",
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j) s += sg(n) * C(n, j) * R(p[0], j) / R(p[1], j);
                       return s;
                     },
                     rhs},
                    {"corrected",
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j) s += sg(j) * C(n, j) * R(p[0], j) / R(p[1], j);
                       return s;
                     },
                     rhs}}});
  }

  out.push_back({"ID-20", "pochhammer", "reciprocal rising factorial as an alternating partial-fraction sum", {"x"}, 1,
                 15, false, [](const Params& p, unsigned n) { return nz(p[0], n); },
                 {stated([](const Params& p, unsigned n) { return Q(1L) / R(p[0], n); },
                         [](const Params& p, unsigned n) {
                           Rational s;
                           for (unsigned j = 0; j < n; ++j) s += C(n - 1, j) * sg(j) / (p[0] + Q(j));
                           return s / factorial(n - 1);
                         })}});

  out.push_back({"ID-21", "pochhammer", "alternating sum with (n+1)-order denominators equals delta_{n,0}", {"x"}, 0,
                 12, false,
                 [](const Params& p, unsigned n) {
                   return all_j(n, [&](unsigned j) { return nz(p[0] + Q(j) - Q(1L), n + 1); });
                 },
                 {stated(
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j)
                         s += sg(j) * C(n, j) * (p[0] + Q(2 * j) - Q(1L)) / R(p[0] + Q(j) - Q(1L), n + 1);
                       return s;
                     },
                     [](const Params&, unsigned n) { return delta0(n); })}});

  out.push_back({"ID-22", "pochhammer", "alternating sum over split Pochhammer products equals delta_{n,0}", {"x"}, 0,
                 15, false,
                 [](const Params& p, unsigned n) {
                   return all_j(n, [&](unsigned j) { return nz(p[0] + Q(j) - Q(1L), j) && nz(p[0] + Q(2 * j), n - j); });
                 },
                 {stated(
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j)
                         s += sg(j) * C(n, j) / (R(p[0] + Q(j) - Q(1L), j) * R(p[0] + Q(2 * j), n - j));
                       return s;
                     },
                     [](const Params&, unsigned n) { return delta0(n); })}});

  out.push_back({"ID-23", "pochhammer", "two-parameter binomial sum of Pochhammer ratios equals one", {"x", "y"}, 0,
                 15, false,
                 [](const Params& p, unsigned n) {
                   const Rational s = p[0] + p[1];
                   return all_j(n, [&](unsigned j) { return nz(s + Q(j) - Q(1L), j) && nz(s + Q(2 * j), n - j); });
                 },
                 {stated([](const Params&, unsigned) { return Q(1L); },
                         [](const Params& p, unsigned n) {
                           const Rational& x = p[0];
                           const Rational& y = p[1];
                           Rational s;
                           for (unsigned j = 0; j <= n; ++j)
                             s += C(n, j) * R(x + Q(j), n - j) * R(y, j) /
                                  (R(y + x + Q(j) - Q(1L), j) * R(y + x + Q(2 * j), n - j));
                           return s;
                         })}});

  // t marks the summation index: both sides are polynomials in t whose j-th
  // coefficients are the two sides of the splitting for that j.
  out.push_back({"ID-SPLIT", "pochhammer", "splitting of (x+j-1)^(n+1) around the factor x+2j-1", {"x", "t"}, 0, 12,
                 false,
                 [](const Params& p, unsigned n) {
                   return all_j(n, [&](unsigned j) { return nz(p[0] + Q(j) - Q(1L), n + 1); });
                 },
                 {stated(
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j)
                         s += p[1].pow(j) / (R(p[0] + Q(j) - Q(1L), j) * R(p[0] + Q(2 * j), n - j));
                       return s;
                     },
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j)
                         s += p[1].pow(j) * (p[0] + Q(2 * j) - Q(1L)) / R(p[0] + Q(j) - Q(1L), n + 1);
                       return s;
                     })}});

  out.push_back({"ID-11", "pochhammer", "connection coefficients, ratio over (a+b)^(n)", {"a", "b", "c"}, 0,
                 15, false, [](const Params& p, unsigned n) { return nz(p[0] + p[1], n); },
                 {stated([](const Params& p, unsigned n) { return R(p[0], n) * R(p[2] - p[1], n) / R(p[0] + p[1], n); },
                         [](const Params& p, unsigned n) {
                           const Rational &a = p[0], &b = p[1], &c = p[2];
                           Rational s;
                           for (unsigned k = 0; k <= n; ++k)
                             s += sg(k) * C(n, k) * R(a + c + Q(n) - Q(1L), k) * R(c + Q(k), n - k) * R(b, k) /
                                  R(a + b, k);
                           return s;
                         })}});

  out.push_back({"ID-12", "pochhammer", "connection coefficients, ratio over (c)^(n)", {"a", "b", "c"}, 0, 15,
                 false, [](const Params& p, unsigned n) { return nz(p[2], n); },
                 {stated([](const Params& p, unsigned n) { return R(p[0], n) * R(p[1], n) / R(p[2], n); },
                         [](const Params& p, unsigned n) {
                           const Rational &a = p[0], &b = p[1], &c = p[2];
                           Rational s;
                           for (unsigned k = 0; k <= n; ++k)
                             s += sg(k) * C(n, k) * R(b + c + Q(n) - Q(1L), k) * R(b + c - a + Q(k), n - k) *
                                  R(c - a, k) / R(c, k);
                           return s;
                         })}});

  out.push_back({"ID-13", "pochhammer", "connection coefficients, polynomial form", {"a", "b", "c"}, 0, 15,
                 false, always,
                 {stated([](const Params& p, unsigned n) { return R(p[0], n) * R(p[2] - p[1], n); },
                         [](const Params& p, unsigned n) {
                           const Rational &a = p[0], &b = p[1], &c = p[2];
                           Rational s;
                           for (unsigned k = 0; k <= n; ++k)
                             s += sg(k) * C(n, k) * R(a + c + Q(n) - Q(1L), k) * R(c + Q(k), n - k) * R(b, k) *
                                  R(a + b + Q(k), n - k);
                           return s;
                         })}});

  out.push_back({"ID-I4", "pochhammer", "product of two rising factorials through a third parameter", {"a", "b", "c"},
                 0, 15, false, always,
                 {stated([](const Params& p, unsigned n) { return R(p[0], n) * R(p[1], n); },
                         [](const Params& p, unsigned n) {
                           const Rational &a = p[0], &b = p[1], &c = p[2];
                           Rational s;
                           for (unsigned k = 0; k <= n; ++k)
                             s += sg(k) * C(n, k) * R(a + b + c + Q(n) - Q(1L), k) * R(c + b + Q(k), n - k) * R(c, k) *
                                  R(a + c + Q(k), n - k);
                           return s;
                         })}});

  // (x)^(-1) = 1/(x-1), which is what the n = 0 term needs.
  out.push_back({"ID-001", "pochhammer", "alternating sum of (a+b+j)^(n-1) equals delta_{n,0}", {"a", "b"}, 0, 15,
                 false, [](const Params& p, unsigned n) { return n > 0 || p[0] + p[1] != Q(1L); },
                 {stated(
                     [](const Params& p, unsigned n) {
                       const Rational ab = p[0] + p[1];
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j) {
                         Rational r = n == 0 ? Q(1L) / (ab + Q(j) - Q(1L)) : R(ab + Q(j), n - 1);
                         s += sg(j) * C(n, j) * r;
                       }
                       return (ab - Q(1L)) * s;
                     },
                     [](const Params&, unsigned n) { return delta0(n); })}});

  out.push_back({"ID-002", "pochhammer", "alternating sum of (a+b+j)^(n-j)(a+b+n-1)^(j) equals delta_{n,0}",
                 {"a", "b"}, 0, 15, false, always,
                 {stated(
                     [](const Params& p, unsigned n) {
                       const Rational ab = p[0] + p[1];
                       Rational s;
                       for (unsigned j = 0; j <= n; ++j)
                         s += sg(j) * C(n, j) * R(ab + Q(j), n - j) * R(ab + Q(n) - Q(1L), j);
                       return s;
                     },
                     [](const Params&, unsigned n) { return delta0(n); })}});

  auto pss_guard = [](const Params& p, unsigned n) {
    const Rational s = p[1] - p[0] - p[2];
    return all_j(n, [&](unsigned j) { return nz(s - Q(j), n + 1); });
  };
  out.push_back({"ID-PSS1", "pochhammer", "terminating special value with four Pochhammer factors", {"b", "c", "f"}, 0,
                 12, false, pss_guard,
                 {stated([](const Params& p, unsigned n) { return R(p[1], n); },
                         [](const Params& p, unsigned n) {
                           const Rational &b = p[0], &c = p[1], &f = p[2];
                           Rational s;
                           for (unsigned j = 0; j <= n; ++j)
                             s += sg(j) * C(n, j) * R(b, j) * R(f, j) * R(c - b, n - j) * R(c - f, n - j) *
                                  (c - b - f + Q(n) - Q(2 * j)) / R(c - b - f - Q(j), n + 1);
                           return s;
                         })}});
  out.push_back({"ID-PSS2", "pochhammer", "terminating special value with two Pochhammer factors", {"b", "c", "f"}, 0,
                 12, false, pss_guard,
                 {stated([](const Params&, unsigned) { return Q(1L); },
                         [](const Params& p, unsigned n) {
                           const Rational &b = p[0], &c = p[1], &f = p[2];
                           Rational s;
                           for (unsigned j = 0; j <= n; ++j)
                             s += sg(j) * C(n, j) * R(b, j) * R(c - f, n - j) * (c - b - f + Q(n) - Q(2 * j)) /
                                  R(c - b - f - Q(j), n + 1);
                           return s;
                         })}});

  // Generating polynomial in t of the two coefficient formulas.
  out.push_back({"ID-DNJ", "pochhammer", "two product forms of the inverse connection coefficients", {"a", "b", "t"},
                 0, 12, false,
                 [](const Params& p, unsigned n) {
                   const Rational ab = p[0] + p[1];
                   return all_j(n, [&](unsigned m) {
                     return nz(ab + Q(m) - Q(1L), m) && nz(ab + Q(2 * m), n - m) && nz(ab + Q(m) - Q(1L), n + 1);
                   });
                 },
                 {stated(
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned m = 0; m <= n; ++m) s += etilde_coeff(n, m, p[0], p[1]) * p[2].pow(m);
                       return s;
                     },
                     [](const Params& p, unsigned n) {
                       Rational s;
                       for (unsigned m = 0; m <= n; ++m) s += etilde_coeff_alt(n, m, p[0], p[1]) * p[2].pow(m);
                       return s;
                     })}});

  {
    // The printed right side carries a free symbol a where alpha is meant.
    auto lhs = [](const Params& p, unsigned n) { return Q(1L) / R(p[0] - p[1], n); };
    auto rhs_with = [](const Rational& alpha, const Rational& beta, const Rational& a, unsigned n) {
      Rational s;
      for (unsigned j = 0; j <= n; ++j)
        s += C(n, j) * (Q(1L) + Q(j) / (alpha + Q(j) - Q(1L))) * R(beta, j) * R(alpha, j) /
             (R(a, n + j) * R(a - beta, j));
      return s;
    };
    out.push_back(
        {"ID-R1", "pochhammer", "terminating reading of the f = c special value at a = -n", {"alpha", "beta", "a"}, 0,
         12, true,
         [](const Params& p, unsigned n) {
           const Rational &al = p[0], &be = p[1], &a = p[2];
           return nz(al - be, n) && all_j(n, [&](unsigned j) {
                    return al + Q(j) - Q(1L) != Q(0L) && nz(al, n + j) && nz(al - be, j) && nz(a, n + j) &&
                           nz(a - be, j);
                  });
         },
         {{"printed", lhs, [rhs_with](const Params& p, unsigned n) { return rhs_with(p[0], p[1], p[2], n); }},
          {"corrected", lhs, [rhs_with](const Params& p, unsigned n) { return rhs_with(p[0], p[1], p[0], n); }}}});
  }

  {
    auto lhs = [](const Params& p, unsigned n) { return R(p[0], n) / (R(p[1], n) * R(p[2], n)); };
    out.push_back(
        {"ID-R2", "pochhammer", "terminating reading of the x = 1 special value at a = -n", {"alpha", "beta", "gamma"},
         0, 12, true,
         [](const Params& p, unsigned n) {
           const Rational &al = p[0], &be = p[1], &ga = p[2];
           const Rational S = be + ga - al;
           return nz(be, n) && nz(ga, n) && all_j(n, [&](unsigned j) {
                    return S + Q(j) - Q(1L) != Q(0L) && nz(S, n + j) && nz(S + Q(j) - Q(1L), n + 1);
                  });
         },
         {{"printed", lhs,
           [](const Params& p, unsigned n) {
             // "alpha++j-1" read as beta+gamma-alpha+j-1
             const Rational &al = p[0], &be = p[1], &ga = p[2];
             const Rational S = be + ga - al;
             Rational s;
             for (unsigned j = 0; j <= n; ++j)
               s += sg(j) * C(n, j) * (Q(1L) + Q(j) / (S + Q(j) - Q(1L))) * R(be - al, j) * R(ga - al, j) * R(S, j) /
                    (R(ga, j) * R(be, j) * R(S, n + j));
             return s;
           }},
          {"derived", lhs, [](const Params& p, unsigned n) {
             const Rational &al = p[0], &be = p[1], &ga = p[2];
             const Rational S = be + ga - al;
             Rational s;
             for (unsigned j = 0; j <= n; ++j)
               s += sg(j) * C(n, j) * R(be - al, j) * R(ga - al, j) * (S + Q(2 * j) - Q(1L)) /
                    (R(ga, j) * R(be, j) * R(S + Q(j) - Q(1L), n + 1));
             return s;
           }}}});
  }
  return out;
}

std::vector<IdentityEntry> build_jacobi() {
  std::vector<IdentityEntry> out;
  out.push_back({"ID-O1", "jacobi", "reflection of J under x -> -x with a and b swapped", {"a", "b", "x"}, 0, 15, false,
                 always,
                 {stated([](const Params& p, unsigned n) { return sg(n) * eval_j(n, p[0], p[1], -p[2]); },
                         [](const Params& p, unsigned n) { return eval_j(n, p[1], p[0], p[2]); })}});
  out.push_back({"ID-O1P", "jacobi", "J at 2x-1 equals K at x", {"a", "b", "x"}, 0, 15, false, always,
                 {stated([](const Params& p, unsigned n) { return eval_j(n, p[0], p[1], Q(2L) * p[2] - Q(1L)); },
                         [](const Params& p, unsigned n) { return eval_k(n, p[0], p[1], p[2]); })}});
  out.push_back({"ID-O2", "jacobi", "reflection of K under x -> 1-x with a and b swapped", {"a", "b", "x"}, 0, 15,
                 false, always,
                 {stated([](const Params& p, unsigned n) { return sg(n) * eval_k(n, p[0], p[1], p[2]); },
                         [](const Params& p, unsigned n) { return eval_k(n, p[1], p[0], Q(1L) - p[2]); })}});
  out.push_back({"ID-K01-0", "jacobi", "value of K at 0", {"a", "b"}, 0, 15, false, always,
                 {stated([](const Params& p, unsigned n) { return eval_k(n, p[0], p[1], Q(0L)); },
                         [](const Params& p, unsigned n) { return sg(n) * R(p[0], n) / factorial(n); })}});
  out.push_back({"ID-K01-1", "jacobi", "value of K at 1", {"a", "b"}, 0, 15, false, always,
                 {stated([](const Params& p, unsigned n) { return eval_k(n, p[0], p[1], Q(1L)); },
                         [](const Params& p, unsigned n) { return R(p[1], n) / factorial(n); })}});
  out.push_back({"ID-FK2", "jacobi", "K as a terminating 2F1 in x", {"a", "b", "x"}, 0, 15, false,
                 [](const Params& p, unsigned n) { return nz(p[0], n); },
                 {stated([](const Params& p, unsigned n) { return eval_k(n, p[0], p[1], p[2]); },
                         [](const Params& p, unsigned n) { return k_via_2f1(n, p[0], p[1], p[2]); })}});
  out.push_back({"ID-FK1", "jacobi", "K as a terminating 2F1 in 1-x", {"a", "b", "x"}, 0, 15, false,
                 [](const Params& p, unsigned n) { return nz(p[1], n); },
                 {stated([](const Params& p, unsigned n) { return eval_k(n, p[0], p[1], p[2]); },
                         [](const Params& p, unsigned n) { return k_via_2f1_reflected(n, p[0], p[1], p[2]); })}});
  out.push_back({"ID-FJ", "jacobi", "J as a terminating 2F1 in (1-x)/2", {"a", "b", "x"}, 0, 15, false,
                 [](const Params& p, unsigned n) { return nz(p[1], n); },
                 {stated([](const Params& p, unsigned n) { return eval_j(n, p[0], p[1], p[2]); },
                         [](const Params& p, unsigned n) { return j_via_2f1(n, p[0], p[1], p[2]); })}});
  {
    auto lhs = [](const Params& p, unsigned n) { return leading_coeff_k(n, p[0], p[1]); };
    out.push_back(
        {"ID-LEAD", "jacobi", "coefficient of x^n in K", {"a", "b"}, 0, 15, true, always,
         {{"printed", lhs,
           [](const Params& p, unsigned n) {
             return R(p[0] + p[1] + Q(n) - Q(1L), n) / (factorial(n) * Q(2L).pow(n));
           }},
          {"corrected", lhs,
           [](const Params& p, unsigned n) { return R(p[0] + p[1] + Q(n) - Q(1L), n) / factorial(n); }}}});
  }
  out.push_back({"ID-ROUNDTRIP", "jacobi", "(x-1)^n re-expanded in K through the inverse coefficients",
                 {"a", "b", "x"}, 0, 10, false,
                 [](const Params& p, unsigned n) {
                   const Rational ab = p[0] + p[1];
                   return all_j(n, [&](unsigned m) { return nz(ab + Q(m) - Q(1L), m) && nz(ab + Q(2 * m), n - m); });
                 },
                 {stated([](const Params& p, unsigned n) { return (p[2] - Q(1L)).pow(n); },
                         [](const Params& p, unsigned n) {
                           Rational s;
                           for (unsigned m = 0; m <= n; ++m)
                             s += etilde_coeff(n, m, p[0], p[1]) * eval_k(m, p[0], p[1], p[2]);
                           return s;
                         })}});
  return out;
}

std::vector<IdentityEntry> build_expansions() {
  std::vector<IdentityEntry> out;
  // Monomial coefficients of both sides folded into one value at a sampled x.
  auto fold = [](const std::vector<Rational>& c, const Rational& x) {
    Rational s;
    for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
    return s;
  };
  out.push_back({"ID-PARTD", "expansions", "terminating 2F1(-n,b;c;x) expanded in K(x|f, b-c+1-n)",
                 {"b", "c", "f", "x"}, 0, 12, false,
                 [](const Params& p, unsigned n) {
                   const Rational df = p[0] - p[1] + Q(1L) - Q(n) + p[2];
                   return all_j(n, [&](unsigned j) { return nz(df + Q(j) - Q(1L), n + 1); });
                 },
                 {stated(
                     [fold](const Params& p, unsigned n) {
                       std::vector<Rational> c(n + 1);
                       for (unsigned k = 0; k <= n; ++k)
                         c[k] = R(-Q(n), k) * R(p[0], k) * R(p[1] + Q(k), n - k) / factorial(k);
                       return fold(c, p[3]);
                     },
                     [fold](const Params& p, unsigned n) {
                       return fold(expand_2f1_terminating(n, p[0], p[1], p[2]).rhs, p[3]);
                     })}});
  return out;
}

}  // namespace

const IdentityForm& IdentityEntry::form(const std::string& name) const {
  for (const auto& f : forms)
    if (f.name == name) return f;
  throw UnknownIdentity(id + " has no form '" + name + "'");
}

const std::vector<IdentityEntry>& registry_catalog() {
  static const std::vector<IdentityEntry> catalog = [] {
    std::vector<IdentityEntry> all = build_pochhammer();
    for (auto& e : build_jacobi()) all.push_back(std::move(e));
    for (auto& e : build_expansions()) all.push_back(std::move(e));
    return all;
  }();
  return catalog;
}

const IdentityEntry& find_identity(const std::string& id) {
  for (const auto& e : registry_catalog())
    if (e.id == id) return e;
  throw UnknownIdentity("unknown identity '" + id + "'");
}

namespace {

IdentityCase evaluate(const IdentityEntry& e, const IdentityForm& f, const Params& params, unsigned n) {
  IdentityCase c;
  c.id = e.id;
  c.form = f.name;
  c.params = params;
  c.n = n;
  c.lhs = f.lhs(params, n);
  c.rhs = f.rhs(params, n);
  c.pass = c.lhs == c.rhs;
  return c;
}

void require_valid(const IdentityEntry& e, const Params& params, unsigned n) {
  if (params.size() != e.arity())
    throw DomainViolation(e.id + " takes " + std::to_string(e.arity()) + " parameters, got " +
                          std::to_string(params.size()));
  if (n < e.min_n || n > e.max_n)
    throw OrderOutOfRange(e.id + ": n=" + std::to_string(n) + " outside [" + std::to_string(e.min_n) + ", " +
                          std::to_string(e.max_n) + "]");
  if (!e.domain_guard(params, n)) {
    std::string msg = e.id + ": a Pochhammer denominator vanishes at";
    for (std::size_t i = 0; i < params.size(); ++i) msg += " " + e.param_names[i] + "=" + params[i].to_string();
    msg += " n=" + std::to_string(n);
    throw DomainViolation(msg);
  }
}

const IdentityForm& default_form(const IdentityEntry& e) {
  if (!e.suspect) return e.forms.front();
  const std::string& v = validated_form(e.id);
  return v.empty() ? e.forms.back() : e.form(v);
}

}  // namespace

IdentityCase check_identity(const std::string& id, const Params& params, unsigned n, const std::string& form) {
  const IdentityEntry& e = find_identity(id);
  require_valid(e, params, n);
  return evaluate(e, form.empty() ? default_form(e) : e.form(form), params, n);
}

BruteForceVerdict brute_force_verdict(const std::string& id) {
  const IdentityEntry& e = find_identity(id);
  static const Rational grid[] = {Rational(1, 2), Rational(2, 3), Rational(3), Rational(-5, 2),
                                  Rational(7, 3), Rational(4, 5), Rational(-1, 3)};
  constexpr std::size_t G = std::size(grid);
  BruteForceVerdict v;
  v.id = id;
  for (const auto& f : e.forms) v.holds.emplace_back(f.name, true);
  for (unsigned n = std::max(1u, e.min_n); n <= std::min(2u, e.max_n); ++n) {
    for (std::size_t i = 0; i < 6; ++i) {
      Params p;
      for (std::size_t k = 0; k < e.arity(); ++k) p.push_back(grid[(3 * i + 2 * k + k * k) % G]);
      if (!e.domain_guard(p, n)) continue;
      for (std::size_t fi = 0; fi < e.forms.size(); ++fi) {
        IdentityCase c = evaluate(e, e.forms[fi], p, n);
        if (!c.pass) v.holds[fi].second = false;
        v.cases.push_back(std::move(c));
      }
    }
  }
  // The printed reading wins when it holds; otherwise the first candidate that does.
  for (const auto& [name, ok] : v.holds)
    if (ok) {
      v.validated_form = name;
      break;
    }
  return v;
}

const std::string& validated_form(const std::string& id) {
  static std::mutex m;
  static std::map<std::string, std::string> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
  }
  std::string v = brute_force_verdict(id).validated_form;
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(id, std::move(v)).first->second;
}

Rational RationalSampler::operator()(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  long p = num(rng);
  return Rational(p, den(rng));
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return std::mt19937_64(mix(mix(seed) ^ trial));
}

CampaignSummary campaign(const std::string& id, std::size_t trials, std::uint64_t seed,
                         std::pair<unsigned, unsigned> n_range, unsigned threads, bool keep_cases) {
  const IdentityEntry& e = find_identity(id);
  CampaignSummary s;
  s.id = id;
  s.trials = trials;
  s.seed = seed;
  s.n_lo = std::max(n_range.first, e.min_n);
  s.n_hi = std::min(n_range.second, e.max_n);
  s.suspect = e.suspect;
  if (s.n_lo > s.n_hi)
    throw OrderOutOfRange(id + ": requested n range [" + std::to_string(n_range.first) + ", " +
                          std::to_string(n_range.second) + "] misses [" + std::to_string(e.min_n) + ", " +
                          std::to_string(e.max_n) + "]");
  const IdentityForm& main = default_form(e);
  s.validated_form = e.suspect ? main.name : "";

  struct TrialResult {
    std::vector<IdentityCase> cases;  // main form first
    std::size_t rejections = 0;
  };
  std::vector<TrialResult> results(trials);
  const std::size_t cap = 10 * std::max<std::size_t>(trials, 1);
  std::atomic<std::size_t> rejected{0};
  std::atomic<bool> gave_up{false};

  auto run_trial = [&](std::size_t t) {
    std::mt19937_64 rng = trial_rng(seed, t);
    std::uniform_int_distribution<unsigned> pick_n(s.n_lo, s.n_hi);
    RationalSampler sample;
    TrialResult& r = results[t];
    for (;;) {
      unsigned n = pick_n(rng);
      Params p;
      for (std::size_t k = 0; k < e.arity(); ++k) p.push_back(sample(rng));
      if (e.domain_guard(p, n)) {
        r.cases.push_back(evaluate(e, main, p, n));
        if (e.suspect)
          for (const auto& f : e.forms)
            if (f.name != main.name) r.cases.push_back(evaluate(e, f, p, n));
        for (auto& c : r.cases) c.trial = t;
        return;
      }
      ++r.rejections;
      if (rejected.fetch_add(1) + 1 > cap) {
        gave_up = true;
        return;
      }
    }
  };

  unsigned T = threads ? threads : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  T = static_cast<unsigned>(std::min<std::size_t>(T, std::max<std::size_t>(trials, 1)));
  std::exception_ptr err;
  std::mutex err_m;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < T; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < trials && !gave_up; t += T) run_trial(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_m);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  if (gave_up)
    throw UnsatisfiableDomain(id + ": more than " + std::to_string(cap) + " guard rejections while sampling");

  std::map<std::string, std::size_t> per_form;
  for (auto& r : results) {
    s.rejections += r.rejections;
    for (std::size_t i = 0; i < r.cases.size(); ++i) {
      const IdentityCase& c = r.cases[i];
      if (c.pass) ++per_form[c.form];
      if (i == 0) {
        if (c.pass)
          ++s.pass_count;
        else
          s.fail_cases.push_back(c);
      }
      if (keep_cases) s.cases.push_back(c);
    }
  }
  if (e.suspect)
    for (const auto& f : e.forms) s.form_pass_counts.emplace_back(f.name, per_form[f.name]);
  return s;
}

}  // namespace hyperjacobi
