// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is 0 only when every line reads PASS.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hyperjacobi/beta_integrals.hpp"
#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/expansions.hpp"
#include "hyperjacobi/hypergeom.hpp"
#include "hyperjacobi/jacobi.hpp"
#include "hyperjacobi/pochhammer.hpp"
#include "hyperjacobi/registry.hpp"

#ifndef HJ_CLI_PATH
#define HJ_CLI_PATH "hyperjacobi"
#endif

using namespace hyperjacobi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure notes; the detail line keeps the first few.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    std::string d = summary + "; " + std::to_string(checks_ - failures_) + "/" + std::to_string(checks_) + " checks";
    for (const auto& n : notes_) d += "; " + n;
    return {failures_ == 0, d};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Rational positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 9);
  long p = num(rng);
  return Rational(p, den(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

void run_campaign(Tally& t, const std::string& id, std::size_t trials, std::uint64_t seed, unsigned lo, unsigned hi) {
  const IdentityEntry& e = find_identity(id);
  CampaignSummary s = campaign(id, trials, seed, {lo, std::min(hi, e.max_n)});
  t.expect(s.pass_count == trials && s.fail_cases.empty(),
           id + " " + std::to_string(s.pass_count) + "/" + std::to_string(trials));
}

Outcome c1() {
  Tally t;
  const std::vector<std::string> ids = {"ID-REFL", "ID-20", "ID-21", "ID-22",  "ID-23",  "ID-SPLIT", "ID-11",  "ID-12",
                                        "ID-13",   "ID-I4", "ID-001", "ID-002", "ID-PSS1", "ID-PSS2", "ID-DNJ"};
  for (const auto& id : ids) {
    const IdentityEntry& e = find_identity(id);
    run_campaign(t, id, 200, 2024, e.min_n, e.max_n);
  }
  return t.outcome("15 registry entries x 200 trials, exact equality");
}

Outcome c2() {
  Tally t;
  std::string verdicts;
  for (const char* id : {"ID-CV", "ID-HYP2", "ID-R1", "ID-R2"}) {
    BruteForceVerdict v = brute_force_verdict(id);
    t.expect(!v.validated_form.empty(), std::string(id) + " no form holds at n=1,2");
    verdicts += std::string(verdicts.empty() ? "" : ", ") + id + "=" + (v.validated_form.empty() ? "none" : v.validated_form);
    if (v.validated_form.empty()) continue;
    CampaignSummary s = campaign(id, 100, 99, {1, find_identity(id).max_n});
    t.expect(s.validated_form == v.validated_form && s.pass_count == 100,
             std::string(id) + " campaign " + std::to_string(s.pass_count) + "/100");
  }
  // The Gamma/3F2(-1) integral identity has no n; its hand cases are the fixed points.
  for (const auto& id : integrals_identity_suite()) {
    if (id.id != "INT-GAMMA-3F2M1") continue;
    std::string validated;
    for (const auto& form : id.forms) {
      bool holds = true;
      for (const auto& p : id.points) holds = holds && numeric_pass(form.eval(p), id.tolerance);
      if (holds) {
        validated = form.name;
        break;
      }
    }
    t.expect(!validated.empty(), id.id + " no form holds at the hand points");
    verdicts += ", " + id.id + "=" + (validated.empty() ? "none" : validated);
    if (validated.empty()) continue;
    const NumericForm* f = nullptr;
    for (const auto& form : id.forms)
      if (form.name == validated) f = &form;
    std::size_t pass = 0;
    for (std::size_t trial = 0; trial < 100; ++trial) {
      std::mt19937_64 rng = trial_rng(99, trial);
      pass += numeric_pass(f->eval(id.sample(rng)), id.tolerance);
    }
    t.expect(pass == 100, id.id + " campaign " + std::to_string(pass) + "/100");
  }
  return t.outcome("validated " + verdicts + "; 100-trial campaigns");
}

Outcome c3() {
  Tally t;
  run_campaign(t, "ID-ROUNDTRIP", 100, 3, 0, 10);
  for (const char* id : {"ID-O1", "ID-O1P", "ID-O2"}) run_campaign(t, id, 100, 3, 0, 8);
  for (const char* id : {"ID-K01-0", "ID-K01-1"}) run_campaign(t, id, 100, 3, 0, 12);
  run_campaign(t, "ID-DNJ", 100, 3, 0, 12);
  // Round trip at every order up to 10 for one fixed basis, not only sampled orders.
  for (unsigned n = 0; n <= 10; ++n) {
    auto c = check_identity("ID-ROUNDTRIP", {Rational(3, 2), Rational(-1, 3), Rational(5, 7)}, n);
    t.expect(c.pass, "round trip n=" + std::to_string(n));
  }
  return t.outcome("round trip n<=10, O1/O1+/O2 n<=8, K01 n<=12, dnj=dnj2; 100 trials each");
}

Outcome c4() {
  Tally t;
  std::mt19937_64 rng(4);
  for (int s = 0; s < 20; ++s) {
    Rational a = positive_rational(rng), b = positive_rational(rng);
    std::vector<PolyInPowersOfXMinus1> k;
    for (unsigned n = 0; n <= 6; ++n) k.push_back(k_poly(n, a, b));
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned n = 0; n <= 6; ++n) {
        Rational v = integrate_poly_exact(k[m] * k[n], a, b);
        std::string where = "a=" + a.to_string() + " b=" + b.to_string() + " m=" + std::to_string(m) +
                            " n=" + std::to_string(n);
        if (m == n)
          t.expect(v == (n == 0 ? Rational(1) : norm_sq_k(n, a, b)), "norm " + where);  // K_0 = 1, a density
        else
          t.expect(v.is_zero(), "ortho " + where);
      }
  }
  return t.outcome("20 rational (a,b) > 0, m,n <= 6");
}

Outcome c5() {
  Tally t;
  std::mt19937_64 rng(5);
  for (int s = 0; s < 50; ++s) {
    Rational a = positive_rational(rng), b = positive_rational(rng), c = positive_rational(rng);
    for (unsigned n = 0; n <= 6; ++n)
      for (CrossForm w : {CrossForm::first, CrossForm::second})
        t.expect(cross_integral_closed(n, a, b, c, w) == cross_integral_moments(n, a, b, c, w),
                 "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " n=" + std::to_string(n));
  }
  return t.outcome("50 rational (a,b,c), n <= 6, both cross forms");
}

Outcome c6() {
  Tally t;
  double v1 = pfq_eval(PfqSpec{{1, 1}, {2}}, 0.5).value;
  t.expect(std::fabs(v1 - 2 * std::numbers::ln2) <= 1e-10, "2F1(1,1;2;1/2) off by " + fmt(v1 - 2 * std::numbers::ln2));
  double v2 = pfq_eval(PfqSpec{{1, 1}, {3}}, 1.0).value;
  t.expect(std::fabs(v2 - 2) <= 1e-10, "2F1(1,1;3;1) off by " + fmt(v2 - 2));
  std::mt19937_64 rng(6);
  for (int s = 0; s < 10; ++s) {
    double a = uniform(rng, -2, 2), b = uniform(rng, 0.5, 3), x = uniform(rng, -0.9, 0.9);
    double v = pfq_eval(PfqSpecReal{{a, b}, {b}}, x, 1e-13).value;
    t.expect(std::fabs(v - std::pow(1 - x, -a)) <= 1e-10, "reduction at x=" + fmt(x));
  }
  RationalSampler sample;
  std::uniform_int_distribution<unsigned> order(0, 5);
  int done = 0;
  while (done < 50) {
    unsigned n = order(rng);
    Rational a = sample(rng), b = sample(rng), c = sample(rng);
    PfqSpec spec = balanced_3f2(n, a, b, c);
    if (rising(c, n).is_zero() || rising(c - a - b, n).is_zero() || rising(spec.lower[1], n).is_zero()) continue;
    t.expect(pfq_exact_partial(spec, Rational(1), n) == pfaff_saalschutz(n, a, b, c),
             "Pfaff-Saalschutz n=" + std::to_string(n));
    ++done;
  }
  return t.outcome("2 ln 2, 2F1(1,1;3;1)=2, 10 reduction points, 50 balanced sums");
}

// a, b in [-1/2, 1/4] away from 0; c-a-b in [3,4]; d in [3/2, 5/2].
std::vector<std::array<double, 4>> guarded_sets(unsigned count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<double, 4>> out;
  while (out.size() < count) {
    double a = uniform(rng, -0.5, 0.25), b = uniform(rng, -0.5, 0.25);
    if (std::fabs(a) < 0.05 || std::fabs(b) < 0.05) continue;
    double c = a + b + uniform(rng, 3, 4);
    out.push_back({a, b, c, uniform(rng, 1.5, 2.5)});
  }
  return out;
}

Outcome c7() {
  Tally t;
  double worst = 0;
  for (const auto& [a, b, c, d] : guarded_sets(10, 7)) {
    auto e = expand_2f1_f_eq_c(a, b, c, d);
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      double diff = std::fabs(e.partial_eval(x, 40) - e.direct(x));
      worst = std::max(worst, diff);
      t.expect(diff <= 1e-7, "x=" + fmt(x) + " diff " + fmt(diff));
    }
    t.expect(std::fabs(e.partial_eval(0, 40) - 1) <= 1e-7, "x=0 endpoint");
    t.expect(std::fabs(e.partial_eval(1, 40) - gauss_sum(a, b, c)) <= 1e-7, "x=1 endpoint");
  }
  return t.outcome("10 guarded sets x 5 points at J=40, worst diff " + fmt(worst));
}

Outcome c8() {
  Tally t;
  std::mt19937_64 rng(8);
  const std::vector<std::string> forms = {"2F1-2", "2F1-2a", "2F1-2b", "2F1-2d"};
  std::map<std::string, std::size_t> direct_fail;
  double worst = 0;
  for (int s = 0; s < 5; ++s) {
    double a = uniform(rng, -0.5, 0.5), b = uniform(rng, -0.5, 0.5), c = a + b + uniform(rng, 2, 3);
    double f = uniform(rng, 0.5, std::min(2.0, c - 0.25)), d = uniform(rng, 1.5, 3);
    std::vector<ExpansionSeries> ex;
    for (const auto& tag : forms) ex.push_back(expand_2f1(tag, a, b, c, f, d));
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      std::vector<TruncatedValue> v;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        v.push_back(ex[i].truncate(x, 1e-10));
        double direct = ex[i].direct(x);
        if (std::fabs(v[i].value - direct) > std::max(1e-7, 10 * v[i].tail_estimate)) ++direct_fail[forms[i]];
      }
      for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t k = i + 1; k < forms.size(); ++k) {
          double diff = std::fabs(v[i].value - v[k].value);
          worst = std::max(worst, diff);
          t.expect(diff <= std::max(1e-7, 10 * (v[i].tail_estimate + v[k].tail_estimate)),
                   forms[i] + " vs " + forms[k] + " at x=" + fmt(x) + " diff " + fmt(diff));
        }
    }
  }
  t.expect(direct_fail["2F1-2"] == 0, "base form 2F1-2 misses direct evaluation");
  std::string flagged;
  for (const auto& [form, n] : direct_fail)
    if (n) flagged += " " + form;
  return t.outcome("5 sets x 5 points, worst pairwise diff " + fmt(worst) +
                   (flagged.empty() ? ", no variant flagged" : ", flagged:" + flagged));
}

Outcome c9() {
  Tally t;
  std::mt19937_64 rng(9);
  RationalSampler sample;
  std::uniform_int_distribution<unsigned> order(0, 6);
  int done = 0, rejected = 0;
  while (done < 100) {
    unsigned n = order(rng);
    Rational b = sample(rng), c = sample(rng), f = sample(rng);
    TerminatingReport r;
    try {
      r = expand_2f1_terminating(n, b, c, f);
    } catch (const DomainViolation&) {
      if (++rejected > 10000) break;
      continue;
    }
    t.expect(r.pass && r.lhs == r.rhs, "n=" + std::to_string(n) + " b=" + b.to_string() + " c=" + c.to_string() +
                                            " f=" + f.to_string());
    ++done;
  }
  t.expect(done == 100, "sampler gave up");
  return t.outcome("100 valid (n<=6, b, c, f), " + std::to_string(rejected) + " rejected draws");
}

Outcome c10() {
  Tally t;
  for (const auto& id : integrals_identity_suite()) {
    const NumericForm& f = id.forms.back();
    if (id.id == "INT-2F1-K-ORACLE") {
      for (std::size_t trial = 0; trial < 20; ++trial) {
        std::mt19937_64 rng = trial_rng(10, trial);
        NumericOutcome o = f.eval(id.sample(rng));
        t.expect(std::fabs(o.lhs - o.rhs) <= 1e-7, "oracle trial " + std::to_string(trial) + " diff " +
                                                         fmt(o.lhs - o.rhs));
      }
    } else if (id.id == "INT-2F1-K-F-EQ-C") {
      for (std::size_t trial = 0; trial < 20; ++trial) {
        std::mt19937_64 rng = trial_rng(10, trial);
        NumericOutcome o = f.eval(id.sample(rng));
        t.expect(std::fabs(o.lhs - o.rhs) <= 1e-8, "f=c trial " + std::to_string(trial) + " diff " +
                                                        fmt(o.lhs - o.rhs));
      }
    } else if (id.id == "INT-3F2-FINITE") {
      // every (n, m) with n, m <= 3 at the fixed points, strict tolerance
      for (const auto& p : id.points) {
        NumericOutcome o = f.eval(p);
        t.expect(std::fabs(o.lhs - o.rhs) <= 1e-6, "finite sum n=" + fmt(p[0]) + " m=" + fmt(p[1]) + " diff " +
                                                        fmt(o.lhs - o.rhs));
      }
    }
  }
  return t.outcome("closed form vs series oracle (20), f=c Gamma product (20), finite sum n,m<=3");
}

Outcome c11() {
  Tally t;
  for (const auto& id : special_value_identities()) {
    if (id.id != "SV-SC1" && id.id != "SV-SC2") continue;
    for (std::size_t trial = 0; trial < 10; ++trial) {
      std::mt19937_64 rng = trial_rng(11, trial);
      auto p = id.sample(rng);
      NumericOutcome o = id.id == "SV-SC1" ? special_value_sc1(p[0], p[1], p[2], p[3])
                                           : special_value_sc2(p[0], p[1], p[2], p[3]);
      t.expect(std::fabs(o.lhs - o.rhs) <= 1e-7, id.id + " diff " + fmt(o.lhs - o.rhs));
    }
  }
  return t.outcome("SC1 -> 1 and SC2 -> Gamma ratio at 10 parameter sets each");
}

int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string without_timestamp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  for (std::string line; std::getline(in, line);)
    if (line.find("\"generated_at\"") == std::string::npos) out << line << '\n';
  return out.str();
}

Outcome c12(const std::string& cli) {
  Tally t;
  const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  const std::string r1 = dir + "/hj_accept_1.json", r2 = dir + "/hj_accept_2.json";
  int e1 = run(cli + " verify all --seed 1 --output " + r1 + " >/dev/null 2>&1");
  int e2 = run(cli + " verify all --seed 1 --output " + r2 + " >/dev/null 2>&1");
  t.expect(e1 == 0 && e2 == 0, "verify all exit codes " + std::to_string(e1) + "," + std::to_string(e2));
  std::string a = without_timestamp(r1), b = without_timestamp(r2);
  t.expect(!a.empty() && a == b, "reports differ");
  t.expect(run(cli + " eval pfq --upper 1,x --x 1/2 >/dev/null 2>&1") == 2, "parse error is not exit 2");
  t.expect(run(cli + " eval beta-moment --k 1 --a -1 --b 2 >/dev/null 2>&1") == 3, "domain error is not exit 3");
  t.expect(run(cli + " eval pfq --upper 1,1 --lower 1 --x 2 >/dev/null 2>&1") == 3, "divergent series is not exit 3");
  // A tiny series cap makes numeric checks fail; they must be reported, not dropped.
  t.expect(run("HYPERJACOBI_MAX_TERMS=5 " + cli + " verify integrals --trials 2 --output /dev/null >/dev/null 2>&1") ==
               4,
           "failing checks are not exit 4");
  t.expect(run(cli + " verify expansions --trials 0 --output /dev/null >/dev/null 2>&1") == 0, "vacuous run");
  std::remove(r1.c_str());
  std::remove(r2.c_str());
  return t.outcome("two runs of verify all --seed 1 identical without timestamp; exit codes 0/2/3/4");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : HJ_CLI_PATH;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 exact Pochhammer suite", c1},
      {"C2 suspect-entry protocol", c2},
      {"C3 Jacobi structure", c3},
      {"C4 orthogonality and norms", c4},
      {"C5 cross-integrals", c5},
      {"C6 hypergeometric sanity", c6},
      {"C7 f = c expansion fidelity", c7},
      {"C8 cross-form agreement", c8},
      {"C9 terminating expansion", c9},
      {"C10 Beta-weighted integrals", c10},
      {"C11 special values", c11},
      {"C12 CLI determinism and exit codes", [&] { return c12(cli); }},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << std::endl;
  }
  std::cout << (failed ? "FAIL " : "PASS ") << (12 - failed) << "/12 criteria" << std::endl;
  return failed ? 1 : 0;
}
