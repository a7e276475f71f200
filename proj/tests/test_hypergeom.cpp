#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/hypergeom.hpp"
#include "hyperjacobi/log_gamma.hpp"
#include "hyperjacobi/pochhammer.hpp"

using namespace hyperjacobi;

namespace {
Rational q(long p, long d = 1) { return Rational(p, d); }
}  // namespace

TEST_CASE("classification rules") {
  CHECK(classify(PfqSpec{{q(-3), q(5)}, {q(2)}}, q(7)) == Classification::terminating);
  CHECK(classify(PfqSpec{{q(1, 2), q(1, 2)}, {q(2)}}, q(1)) == Classification::convergent_closed_disc);
  CHECK(classify(PfqSpec{{q(1), q(1), q(1)}, {q(1)}}, q(1, 2)) == Classification::divergent);
  CHECK(classify(PfqSpec{{q(1), q(1)}, {q(2)}}, q(1, 2)) == Classification::convergent_open_disc);
  CHECK(classify(PfqSpec{{q(1), q(1)}, {q(2)}}, q(1)) == Classification::divergent);
  CHECK(classify(PfqSpec{{q(1)}, {q(2)}}, q(5)) == Classification::convergent_closed_disc);
  CHECK(classify(PfqSpecReal{{1.0, 1.0}, {3.0}}, -1.0) == Classification::convergent_closed_disc);
}

TEST_CASE("exact partial sums") {
  PfqSpec any{{q(2, 3), q(5)}, {q(7, 2)}};
  CHECK(pfq_exact_partial(any, q(1, 3), 0) == q(1));

  const Rational b(3, 4), c(5, 2), x(2, 7);
  CHECK(pfq_exact_partial(PfqSpec{{q(-1), b}, {c}}, x, 5) == q(1) - b * x / c);

  // 2F1(1, b; b; 1/2) partial sums are geometric
  Rational s = pfq_exact_partial(PfqSpec{{q(1), q(3)}, {q(3)}}, q(1, 2), 30);
  CHECK(s == q(2) * (q(1) - q(1, 2).pow(31)));

  CHECK_THROWS_AS(pfq_exact_partial(PfqSpec{{q(1)}, {q(-2)}}, q(1, 2), 5), PoleError);
  // terminates before the pole
  CHECK_NOTHROW(pfq_exact_partial(PfqSpec{{q(-1)}, {q(-2)}}, q(1, 2), 5));
}

TEST_CASE("reference values") {
  SeriesValue v = pfq_eval(PfqSpecReal{{1, 1}, {2}}, 0.5, 1e-12);
  CHECK(std::fabs(v.value - 2 * std::numbers::ln2) < 1e-12);
  CHECK(v.abs_error_bound <= 1e-12);
  CHECK(v.bound_kind == BoundKind::geometric);

  SeriesValue w = pfq_eval(PfqSpecReal{{1, 1}, {3}}, 1.0, 1e-12);
  CHECK(std::fabs(w.value - 2) < 1e-10);
  CHECK(std::fabs(w.value - 2) <= w.abs_error_bound + 1e-15);

  SeriesValue z = pfq_eval(PfqSpecReal{{0, 3.5}, {2}}, 0.9, 1e-12);
  CHECK(z.value == 1);
  CHECK(z.terms_used == 1);

  // 2F1(1,1;3;-1) = 4 ln 2 - 2
  SeriesValue alt = pfq_eval(PfqSpecReal{{1, 1}, {3}}, -1.0, 1e-10);
  CHECK(std::fabs(alt.value - (4 * std::numbers::ln2 - 2)) < 1e-10);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(pfq_eval(PfqSpecReal{{1, 1}, {2}}, 1.0, 1e-12), Divergent);
  CHECK_THROWS_AS(pfq_eval(PfqSpecReal{{1, 1}, {2}}, -1.0, 1e-12), Divergent);
  CHECK_THROWS_AS(pfq_eval(PfqSpecReal{{1, 1, 1}, {1}}, 0.5, 1e-12), Divergent);
  CHECK_THROWS_AS(pfq_eval(PfqSpecReal{{1, 1}, {-2.0 + 1e-12}}, 0.5, 1e-12), PoleError);
  SeriesOptions o;
  o.max_terms = 10;
  CHECK_THROWS_AS(pfq_eval(PfqSpecReal{{1, 1}, {2}}, 0.99, o), NoConvergence);
}

TEST_CASE("gauss sum") {
  CHECK(gauss_sum(1, 1, 3) == doctest::Approx(2).epsilon(1e-13));
  CHECK(gauss_sum(0.7, 0, 2.5) == doctest::Approx(1).epsilon(1e-13));
  CHECK(gauss_sum(0.5, 0.5, 2) == doctest::Approx(4 / std::numbers::pi).epsilon(1e-13));
  CHECK_THROWS_AS(gauss_sum(1, 1, 2), DomainViolation);
  CHECK_THROWS_AS(gauss_sum(1, 1, -2), PoleError);
}

TEST_CASE("gauss consistency at x = 1 with small c-a-b") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.9, 0.9), gap(0.25, 3.0);
  for (int t = 0; t < 50; ++t) {
    double a = u(rng), b = u(rng), c = a + b + gap(rng);
    if (is_gamma_pole(c) || std::fabs(c - std::round(c)) < 1e-3) continue;
    SeriesValue v = pfq_eval(PfqSpecReal{{a, b}, {c}}, 1.0, 1e-10);
    double g = gauss_sum(a, b, c);
    INFO("a=" << a << " b=" << b << " c=" << c);
    CHECK(std::fabs(v.value - g) <= v.abs_error_bound + 1e-13);
  }
}

TEST_CASE("matched parameters give (1-x)^-b") {
  for (double x : {-0.8, -0.3, 0.1, 0.5, 0.9}) {
    SeriesValue v = pfq_eval(PfqSpecReal{{0.75, 2.5, -1.5}, {2.5, -1.5}}, x, 1e-12);
    CHECK(std::fabs(v.value - std::pow(1 - x, -0.75)) <= 1e-10);
  }
}

TEST_CASE("tail bound honesty") {
  const std::vector<std::pair<PfqSpecReal, double>> cases = {
      {{{1, 1}, {2}}, 0.5},       {{{0.5, 0.5}, {2}}, 1.0},   {{{1, 1}, {3}}, 1.0},
      {{{0.3, -0.4}, {1.2}}, 1.0}, {{{1, 1}, {3}}, -1.0},     {{{0.5, 1.5, 2}, {3, 2.5}}, 1.0},
      {{{2, 3}, {0.5}}, -0.3}};
  for (const auto& [spec, x] : cases) {
    SeriesOptions o;
    o.tol = 1e-10;
    SeriesValue v = pfq_eval(spec, x, o);
    SeriesOptions finer;
    finer.tol = 1e-13;
    finer.max_terms = 2 * SeriesOptions::default_max_terms();
    SeriesValue w = pfq_eval(spec, x, finer);
    INFO("x=" << x << " kind=" << to_string(v.bound_kind));
    CHECK(std::fabs(v.value - w.value) <= v.abs_error_bound + w.abs_error_bound);
  }
}

TEST_CASE("euler transformation") {
  SeriesPair p = euler_transform_check(1, 1, 3, 0.0);
  CHECK(p.direct.value == 1);
  CHECK(p.transformed.value == 1);
  p = euler_transform_check(1, 1, 3, 0.5);
  CHECK(std::fabs(p.direct.value - p.transformed.value) <= 1e-10);
  p = euler_transform_check(0.5, 0.5, 2, 0.25);
  CHECK(std::fabs(p.direct.value - p.transformed.value) <= p.combined_bound() + 1e-14);
}

TEST_CASE("pfaff-saalschutz") {
  CHECK(pfaff_saalschutz(0, q(1, 3), q(2), q(7, 5)) == q(1));
  CHECK(pfaff_saalschutz(1, q(1), q(1), q(3)) == q(4, 3));
  CHECK(pfq_exact_partial(balanced_3f2(1, q(1), q(1), q(3)), q(1), 1) == q(4, 3));
  const Rational a(2, 7), b(-5, 3), c(9, 4);
  for (unsigned n = 0; n <= 5; ++n)
    CHECK(pfaff_saalschutz(n, a, b, c) == pfq_exact_partial(balanced_3f2(n, a, b, c), q(1), n));
}

TEST_CASE("watson sum") {
  const double a = 1.0 / 3, b = 0.5, f = 2;
  double direct = pfq_eval(PfqSpecReal{{a, b, f}, {(a + b + 1) / 2, 2 * f}}, 1.0, 1e-11).value;
  CHECK(std::fabs(watson_sum(a, b, f) - direct) < 1e-8);
  CHECK(watson_sum(0, b, f) == doctest::Approx(1).epsilon(1e-13));
  double shifted = pfq_eval(PfqSpecReal{{a + 1, b + 1, f + 1}, {(a + b + 3) / 2, 2 * f + 2}}, 1.0, 1e-11).value;
  CHECK(std::fabs(watson_sum_shifted(a, b, f, 1) - shifted) < 1e-8);
  CHECK(std::fabs(watson_sum_shifted_doubled(a, b, f, 1) - shifted) > 0.5);
  CHECK_THROWS_AS(watson_sum(3, 3, 2), DomainViolation);
}

TEST_CASE("thomae forms agree") {
  for (unsigned j : {0u, 2u}) {
    auto v = thomae_3f2_forms(0.5, 1.0 / 3, 1.5, 3, 2, j);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(std::fabs(v[i] - v[0]) < 1e-8);
  }
  auto one = thomae_3f2_forms(0.5, 0, 1.5, 3, 2, 0);
  for (double v : one) CHECK(v == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("pochhammer ratio") {
  CHECK(pochhammer_ratio({{1, 4}}, {{2, 2}}) == doctest::Approx(24.0 / 6));
  CHECK(rising_real(3, 2) == 12);
  CHECK(pochhammer_ratio({{0.5, 300}}, {{1.5, 300}}) == doctest::Approx(0.5 / 300.5));
  CHECK_THROWS_AS(pochhammer_ratio({{1, 2}}, {{-1, 3}}), PoleError);
}
