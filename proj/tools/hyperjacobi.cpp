#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperjacobi/beta_integrals.hpp"
#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/expansions.hpp"
#include "hyperjacobi/hypergeom.hpp"
#include "hyperjacobi/jacobi.hpp"
#include "hyperjacobi/verify.hpp"

using namespace hyperjacobi;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCheckFailed = 4;

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q" and integers take the exact path, anything with a '.' or exponent the float path.
struct Number {
  std::optional<Rational> exact;
  Real value = 0;
};

Number parse_number(const std::string& text, const std::string& flag) {
  Number n;
  if (text.find_first_of(".eEnN") == std::string::npos) {
    try {
      n.exact = Rational::parse(text);
      n.value = n.exact->to_double();
      return n;
    } catch (const std::invalid_argument&) {
      throw ParseFailure(flag + ": cannot read '" + text + "' as p/q or integer");
    }
  }
  std::size_t used = 0;
  try {
    n.value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ParseFailure(flag + ": cannot read '" + text + "' as a number");
  return n;
}

std::vector<Number> parse_list(const std::string& text, const std::string& flag) {
  std::vector<Number> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, flag));
  return out;
}

bool all_exact(const std::vector<Number>& v) {
  for (const auto& n : v)
    if (!n.exact) return false;
  return true;
}

unsigned parse_order(const std::string& text, const std::string& flag) {
  Number n = parse_number(text, flag);
  if (!n.exact || !n.exact->is_integer() || n.exact->sign() < 0 || n.value > 1e6)
    throw ParseFailure(flag + " must be a non-negative integer");
  return static_cast<unsigned>(n.value);
}

std::string fmt(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_float(Real value, Real bound, const std::string& how) {
  std::cout << "value " << fmt(value) << "\n";
  std::cout << "bound " << fmt(bound) << (how.empty() ? "" : " (" + how + ")") << "\n";
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << body;
}

// ---- eval ------------------------------------------------------------------

struct PfqArgs {
  std::string upper, lower, x;
};

int eval_pfq(const PfqArgs& a) {
  auto up = parse_list(a.upper, "--upper"), lo = parse_list(a.lower, "--lower");
  Number x = parse_number(a.x, "--x");
  if (all_exact(up) && all_exact(lo) && x.exact) {
    PfqSpec spec;
    for (const auto& n : up) spec.upper.push_back(*n.exact);
    for (const auto& n : lo) spec.lower.push_back(*n.exact);
    if (classify(spec, *x.exact) == Classification::terminating) {
      long order = -1;
      for (const auto& u : spec.upper)
        if (u.is_nonpositive_integer()) {
          long k = -u.numerator().get_si();
          if (order < 0 || k < order) order = k;
        }
      if (order >= 0) {
        std::cout << "value " << pfq_exact_partial(spec, *x.exact, static_cast<unsigned>(order)) << "\n";
        std::cout << "exact\n";
        return 0;
      }
    }
    SeriesValue v = pfq_eval(spec, x.value);
    print_float(v.value, v.abs_error_bound, to_string(v.bound_kind));
    return 0;
  }
  PfqSpecReal spec;
  for (const auto& n : up) spec.upper.push_back(n.value);
  for (const auto& n : lo) spec.lower.push_back(n.value);
  SeriesValue v = pfq_eval(spec, x.value);
  print_float(v.value, v.abs_error_bound, to_string(v.bound_kind));
  return 0;
}

struct JacobiArgs {
  std::string variant = "K", n, a, b, x;
};

int eval_jacobi(const JacobiArgs& j) {
  if (j.variant != "K" && j.variant != "J") throw ParseFailure("--variant must be K or J");
  unsigned n = parse_order(j.n, "--n");
  Number a = parse_number(j.a, "--a"), b = parse_number(j.b, "--b"), x = parse_number(j.x, "--x");
  auto ev = [&](const Rational& ra, const Rational& rb, const Rational& rx) {
    return j.variant == "K" ? eval_k(n, ra, rb, rx) : eval_j(n, ra, rb, rx);
  };
  if (a.exact && b.exact && x.exact) {
    std::cout << "value " << ev(*a.exact, *b.exact, *x.exact) << "\nexact\n";
    return 0;
  }
  // Float inputs are taken at their binary values and the polynomial is summed
  // exactly, so only the final rounding is lost.
  Real v = ev(Rational::from_double(a.value), Rational::from_double(b.value), Rational::from_double(x.value))
               .to_double();
  print_float(v, std::abs(v) * 1.2e-16, "final rounding");
  return 0;
}

struct MomentArgs {
  std::string k, a, b;
};

int eval_moment(const MomentArgs& m) {
  unsigned k = parse_order(m.k, "--k");
  Number a = parse_number(m.a, "--a"), b = parse_number(m.b, "--b");
  Rational ra = a.exact ? *a.exact : Rational::from_double(a.value);
  Rational rb = b.exact ? *b.exact : Rational::from_double(b.value);
  BetaParams{ra, rb}.require_density("beta-moment");
  Rational v = moment_power(k, ra, rb);
  if (a.exact && b.exact) {
    std::cout << "value " << v << "\nexact\n";
  } else {
    Real d = v.to_double();
    print_float(d, std::abs(d) * 1.2e-16, "final rounding");
  }
  return 0;
}

struct IntegralArgs {
  std::string j, a, b, c, f, d;
};

// int 2F1(a,b;c;x) K_j(x|f,d) f(x|f,d) dx: the closed form, with the
// independent series oracle alongside.
int eval_integral(const IntegralArgs& g) {
  unsigned j = parse_order(g.j, "--j");
  Number a = parse_number(g.a, "--a"), b = parse_number(g.b, "--b"), c = parse_number(g.c, "--c");
  Number f = parse_number(g.f, "--f"), d = parse_number(g.d, "--d");
  Real closed = integral_2f1_K_closed(j, a.value, b.value, c.value, f.value, d.value);
  Rational rf = f.exact ? *f.exact : Rational::from_double(f.value);
  Rational rd = d.exact ? *d.exact : Rational::from_double(d.value);
  OracleValue o = integrate_series_oracle(j, a.value, b.value, c.value, rf, rd, 1e-10);
  Real diff = std::abs(closed - o.value);
  print_float(closed, std::max(diff, o.abs_error_bound), "agreement with series oracle");
  std::cout << "oracle " << fmt(o.value) << " (" << o.terms_used << " terms, bound " << fmt(o.abs_error_bound)
            << ")\n";
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::string output, format = "json";
  unsigned threads = 0;
};

int run_verify_cmd(const VerifyArgs& v) {
  VerifyOptions o;
  o.suite = v.suite;
  o.trials = v.trials;
  o.seed = v.seed;
  o.tol = v.tol;
  o.threads = v.threads;
  VerifyReport r = run_verify(o);
  std::string body = render_report(r, v.format, utc_now());
  write_output(v.output, body);
  // With the report on stdout the summary goes to stderr, keeping stdout parseable.
  (v.output.empty() ? std::cerr : std::cout) << summary_line(r) << "\n";
  for (const auto& s : r.suspects)
    if (s.validated_form == "none")
      std::cerr << "suspect " << s.check_id << ": no form held on every trial\n";
  return r.ok() ? 0 : kExitCheckFailed;
}

// ---- table -----------------------------------------------------------------

struct TableArgs {
  std::string form, params, x = "0,0.5,1", output;
  unsigned jmax = 40;
};

int run_table(const TableArgs& t) {
  auto p = parse_list(t.params, "--params");
  auto xs = parse_list(t.x, "--x");
  std::vector<Real> v;
  for (const auto& n : p) v.push_back(n.value);
  ExpansionSeries e = [&] {
    if (t.form == "2F1-2star") {
      if (v.size() != 4) throw ParseFailure("--params for 2F1-2star is a,b,c,d");
      return expand_2f1(t.form, v[0], v[1], v[2], v[2], v[3]);
    }
    if (t.form == "2F1-3" || t.form == "2F1-3-euler") {
      if (v.size() != 3) throw ParseFailure("--params for " + t.form + " is a,b,c");
      return expand_2f1(t.form, v[0], v[1], v[2], 1, 1);
    }
    if (v.size() != 5) throw ParseFailure("--params for " + t.form + " is a,b,c,f,d");
    return expand_2f1(t.form, v[0], v[1], v[2], v[3], v[4]);
  }();
  std::ostringstream os;
  os << "x,J,partial_sum,direct_value,abs_diff\n";
  for (const auto& xn : xs) {
    Real x = xn.value, direct = e.direct(x);
    for (unsigned J = 0; J <= t.jmax; ++J) {
      Real s = e.partial_eval(x, J);
      os << fmt(x) << ',' << J << ',' << fmt(s) << ',' << fmt(direct) << ',' << fmt(std::abs(s - direct)) << '\n';
    }
  }
  write_output(t.output, os.str());
  return 0;
}

void apply_env() {
  if (const char* s = std::getenv("HYPERJACOBI_MAX_TERMS")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || n == 0) throw ParseFailure("HYPERJACOBI_MAX_TERMS must be a positive integer");
    SeriesOptions::set_default_max_terms(static_cast<std::size_t>(n));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperjacobi: Jacobi expansions of hypergeometric functions, exact and numeric checks"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate a function");
  eval->require_subcommand(1);
  PfqArgs pfq;
  auto* e_pfq = eval->add_subcommand("pfq", "generalized hypergeometric series");
  e_pfq->add_option("--upper", pfq.upper, "comma-separated upper parameters")->required();
  e_pfq->add_option("--lower", pfq.lower, "comma-separated lower parameters");
  e_pfq->add_option("--x", pfq.x, "argument")->required();
  JacobiArgs jac;
  auto* e_jac = eval->add_subcommand("jacobi", "K_n(x|a,b) on [0,1] or J_n(x|a,b) on [-1,1]");
  e_jac->add_option("--variant", jac.variant, "K or J");
  e_jac->add_option("--n", jac.n)->required();
  e_jac->add_option("--a", jac.a)->required();
  e_jac->add_option("--b", jac.b)->required();
  e_jac->add_option("--x", jac.x)->required();
  MomentArgs mom;
  auto* e_mom = eval->add_subcommand("beta-moment", "int x^k f(x|a,b) dx");
  e_mom->add_option("--k", mom.k)->required();
  e_mom->add_option("--a", mom.a)->required();
  e_mom->add_option("--b", mom.b)->required();
  IntegralArgs itg;
  auto* e_int = eval->add_subcommand("integral", "int 2F1(a,b;c;x) K_j(x|f,d) f(x|f,d) dx");
  e_int->add_option("--j", itg.j)->required();
  e_int->add_option("--a", itg.a)->required();
  e_int->add_option("--b", itg.b)->required();
  e_int->add_option("--c", itg.c)->required();
  e_int->add_option("--f", itg.f)->required();
  e_int->add_option("--d", itg.d)->required();

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", ver.suite, "pochhammer | jacobi | expansions | integrals | all")
      ->required()
      ->check(CLI::IsMember(verify_suites()));
  verify->add_option("--trials", ver.trials);
  verify->add_option("--seed", ver.seed);
  verify->add_option("--tol", ver.tol, "override numeric tolerances")->check(CLI::PositiveNumber);
  verify->add_option("--output", ver.output, "report path (default stdout)");
  verify->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--threads", ver.threads, "0 = hardware concurrency");

  TableArgs tab;
  auto* table = app.add_subcommand("table", "partial sums of an expansion against direct evaluation (CSV)");
  table->add_option("--form", tab.form)->required()->check(CLI::IsMember(expand_2f1_tags()));
  table->add_option("--params", tab.params, "a,b,c,f,d (a,b,c,d for 2F1-2star; a,b,c for 2F1-3)")->required();
  table->add_option("--jmax", tab.jmax);
  table->add_option("--x", tab.x, "comma-separated grid");
  table->add_option("--output", tab.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    apply_env();
    if (*e_pfq) return eval_pfq(pfq);
    if (*e_jac) return eval_jacobi(jac);
    if (*e_mom) return eval_moment(mom);
    if (*e_int) return eval_integral(itg);
    if (*verify) return run_verify_cmd(ver);
    if (*table) return run_table(tab);
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainViolation& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NoConvergence& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UnsatisfiableDomain& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
