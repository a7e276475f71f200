#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/expansions.hpp"

using namespace hyperjacobi;

namespace {

// a, b in [-1/2, 1/4] away from 0; c-a-b in [3,4]; d in [3/2, 5/2].
struct Guarded {
  double a, b, c, d;
};

std::vector<Guarded> guarded_sets(unsigned count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ab(-0.5, 0.25), gap(3, 4), dd(1.5, 2.5);
  std::vector<Guarded> out;
  while (out.size() < count) {
    double a = ab(rng), b = ab(rng);
    if (std::fabs(a) < 0.05 || std::fabs(b) < 0.05) continue;
    out.push_back({a, b, a + b + gap(rng), dd(rng)});
  }
  return out;
}

}  // namespace

TEST_CASE("f = c expansion at J = 40") {
  for (const Guarded& g : guarded_sets(10, 7)) {
    auto e = expand_2f1_f_eq_c(g.a, g.b, g.c, g.d);
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      INFO("a=" << g.a << " b=" << g.b << " c=" << g.c << " d=" << g.d << " x=" << x);
      CHECK(std::fabs(e.partial_eval(x, 40) - e.direct(x)) < 1e-7);
    }
    CHECK(std::fabs(e.partial_eval(0, 40) - 1) < 1e-7);
    CHECK(std::fabs(e.partial_eval(1, 40) - gauss_sum(g.a, g.b, g.c)) < 1e-7);
  }
}

TEST_CASE("coefficient forms agree") {
  const std::vector<std::array<double, 5>> sets = {{0.5, 1.0 / 3, 3, 1, 2},
                                                   {-0.5, 0.25, 2.5, 1.5, 2},
                                                   {0.25, -1.0 / 3, 3, 2, 1.5},
                                                   {0.3, 0.2, 3.5, 1, 3},
                                                   {-0.25, -0.5, 2, 1, 2.5}};
  for (const auto& p : sets) {
    std::vector<ExpansionSeries> forms;
    for (const char* tag : {"2F1-2", "2F1-2a", "2F1-2b", "2F1-2d"})
      forms.push_back(expand_2f1(tag, p[0], p[1], p[2], p[3], p[4]));
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      std::vector<TruncatedValue> v;
      for (const auto& e : forms) v.push_back(e.truncate(x, 1e-10));
      for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::fabs(v[i].value - forms[i].direct(x)) < std::max(1e-7, 10 * v[i].tail_estimate));
        for (std::size_t k = i + 1; k < v.size(); ++k) {
          INFO(forms[i].form_tag() << " vs " << forms[k].form_tag() << " x=" << x);
          CHECK(std::fabs(v[i].value - v[k].value) <= std::max(1e-7, 10 * (v[i].tail_estimate + v[k].tail_estimate)));
        }
      }
    }
  }
}

TEST_CASE("J forms use the mapped argument") {
  auto k = expand_2f1("2F1-2", 0.5, 1.0 / 3, 3, 1.5, 2);
  auto j = expand_2f1("2F1-1", 0.5, 1.0 / 3, 3, 1.5, 2);
  for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    CHECK(j.partial_eval(x, 30) == doctest::Approx(k.partial_eval((1 + x) / 2, 30)).epsilon(1e-12));
    CHECK(std::fabs(j.partial_eval(x, 60) - j.direct(x)) < 1e-7);
  }
  for (const char* tag : {"2F1-1a", "2F1-1b", "2F1-1d", "2F1-1alt", "2F1-2alt"}) {
    auto e = expand_2f1(tag, 0.5, 1.0 / 3, 3, 1.5, 2);
    INFO(tag);
    CHECK(std::fabs(e.truncate(0.5, 1e-10).value - e.direct(0.5)) < 1e-7);
  }
}

TEST_CASE("power-kind forms") {
  for (const char* tag : {"2F1-3", "2F1-3-euler"}) {
    auto e = expand_2f1(tag, 0.5, 1.0 / 3, 3, 0, 0);
    for (double x : {0.0, 0.1, 0.25}) {
      TruncatedValue tv = e.truncate(x, 1e-12);
      CHECK(tv.certified);
      CHECK(std::fabs(tv.value - e.direct(x)) < 1e-10);
    }
    CHECK_THROWS_AS(e.term(1, 1.0), DomainViolation);
  }
  // 2F1(1,1;3;x) singling out the lower 3
  auto g = expand_pfq_power(PfqSpecReal{{1, 1}, {3}}, 0);
  CHECK(std::fabs(g.truncate(0.2, 1e-12).value - g.direct(0.2)) < 1e-10);
  CHECK(g.direct(0.5) == doctest::Approx(4 * (1 - std::log(2.0))).epsilon(1e-12));
  CHECK_THROWS_AS(expand_pfq_power(PfqSpecReal{{1, 1}, {1}}, 0), DomainViolation);
}

TEST_CASE("general pFq expansion") {
  PfqSpecReal spec{{0.5, 0.25, 1}, {2, 2.5}};
  auto k = expand_pfq_K(spec, 1, 2);
  for (double x : {0.0, 0.5, 1.0}) CHECK(std::fabs(k.truncate(x, 1e-10).value - k.direct(x)) < 1e-7);
  CHECK_THROWS_AS(expand_pfq_K(PfqSpecReal{{2, 2}, {3}}, 1, 1), DomainViolation);
  CHECK_THROWS_AS(expand_pfq_K(spec, -1, 1), DomainViolation);
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(expand_2f1("2F1-2", 1, 1, 1.5, 1, 1), DomainViolation);
  CHECK_THROWS_AS(expand_2f1("2F1-2b", 0.5, 0.25, 3, 4, 1), DomainViolation);
  CHECK_THROWS_AS(expand_2f1_f_eq_c(0.5, 0.25, 3, -1), DomainViolation);
  CHECK_THROWS_AS(expand_2f1("nope", 0.5, 0.25, 3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(expand_2f1_watson(2, 2, 0.5), DomainViolation);
  CHECK_THROWS_AS(expand_2f1_watson2(1, 0.5, 1.25), DomainViolation);
}

TEST_CASE("Watson-based expansions: corrected coefficients reproduce the function") {
  auto b = expand_2f1_watson(-0.5, -1.0 / 3, 1.5);
  auto bp = expand_2f1_watson(-0.5, -1.0 / 3, 1.5, true);
  auto c = expand_2f1_watson2(2, -2.5, 1);
  auto cp = expand_2f1_watson2(2, -2.5, 1, true);
  for (double x : {0.25, 0.5, 0.75}) {
    CHECK(std::fabs(b.partial_eval(x, 160) - b.direct(x)) < 1e-7);
    CHECK(std::fabs(c.partial_eval(x, 160) - c.direct(x)) < 1e-7);
    CHECK_FALSE(std::fabs(bp.partial_eval(x, 160) - bp.direct(x)) < 1e-3);
    CHECK_FALSE(std::fabs(cp.partial_eval(x, 160) - cp.direct(x)) < 1e-3);
  }
}

TEST_CASE("terminating expansion is an exact polynomial identity") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  std::uniform_int_distribution<unsigned> deg(0, 6);
  int checked = 0;
  while (checked < 100) {
    unsigned n = deg(rng);
    Rational b(num(rng), den(rng)), c(num(rng), den(rng)), f(num(rng), den(rng));
    try {
      TerminatingReport r = expand_2f1_terminating(n, b, c, f);
      INFO("n=" << n << " b=" << b << " c=" << c << " f=" << f);
      CHECK(r.pass);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  TerminatingReport r = expand_2f1_terminating(4, Rational(1, 3), Rational(5, 2), Rational(3, 2));
  CHECK(r.nonzero_terms == 5);
  CHECK(r.lhs.size() == 5);
}

TEST_CASE("special values") {
  for (const auto& id : special_value_identities()) {
    for (const auto& p : id.points) {
      INFO(id.id);
      if (id.suspect) {
        CHECK(numeric_pass(id.forms[1].eval(p), id.tolerance));
        CHECK_FALSE(numeric_pass(id.forms[0].eval(p), id.tolerance));
      } else {
        CHECK(numeric_pass(id.forms[0].eval(p), id.tolerance));
      }
    }
  }
}

TEST_CASE("coefficient cache is shared across threads") {
  auto e = expand_2f1_f_eq_c(0.5, 1.0 / 3, 3, 2);
  std::vector<double> out(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { out[t] = e.partial_eval(0.5, 30); });
  for (auto& th : pool) th.join();
  for (double v : out) CHECK(v == out[0]);
}

TEST_CASE("f = c expansion with c-a-b = 1 converges algebraically") {
  // 2F1(1/2,1/2;2;x) has a (1-x)log(1-x) term at x = 1; the error at the endpoint
  // falls like J^-2 and at x = 0 like J^-3, shrinking monotonically along the way.
  auto e = expand_2f1_f_eq_c(0.5, 0.5, 2, 2);
  for (double x : {0.0, 1.0}) {
    double direct = e.direct(x), prev = 1;
    for (unsigned J = 20; J <= 160; J *= 2) {
      double err = std::fabs(e.partial_eval(x, J) - direct);
      CHECK(err < prev);
      if (J > 20) CHECK(prev / err == doctest::Approx(x == 0 ? 8.0 : 4.0).epsilon(0.15));
      prev = err;
    }
  }
  CHECK(std::fabs(e.partial_eval(1, 40) - e.direct(1)) > 1e-7);
}
