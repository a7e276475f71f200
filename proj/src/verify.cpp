#include "hyperjacobi/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hyperjacobi/beta_integrals.hpp"
#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/expansions.hpp"
#include "hyperjacobi/hypergeom.hpp"
#include "hyperjacobi/pochhammer.hpp"
#include "hyperjacobi/registry.hpp"

namespace hyperjacobi {

namespace {

std::string fmt(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Real uniform(std::mt19937_64& rng, Real lo, Real hi) { return std::uniform_real_distribution<Real>(lo, hi)(rng); }

// Each check draws from its own stream, so adding a check never shifts another's samples.
std::uint64_t check_seed(const std::string& id, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ULL;
  return h ^ seed;
}

std::mt19937_64 rng_for(const std::string& id, const VerifyOptions& o, std::size_t trial) {
  return trial_rng(check_seed(id, o.seed), trial);
}

Rational positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 9);
  long p = num(rng);
  return Rational(p, den(rng));
}

class Collector {
 public:
  explicit Collector(const VerifyOptions& o) : opts(o) {}

  void add(CheckRecord r) { records.push_back(std::move(r)); }

  void suspect(SuspectSummary s) { suspects.push_back(std::move(s)); }

  const VerifyOptions& opts;
  std::vector<CheckRecord> records;
  std::vector<SuspectSummary> suspects;
};

CheckRecord numeric_record(const std::string& id, const std::string& anchor, const std::string& form,
                           std::size_t trial, const std::vector<std::string>& names, const std::vector<Real>& p) {
  CheckRecord r;
  r.check_id = id;
  r.paper_anchor = anchor;
  r.form = form;
  r.trial = trial;
  for (std::size_t i = 0; i < p.size(); ++i) r.params.emplace_back(names[i], fmt(p[i]));
  return r;
}

void fill(CheckRecord& r, const NumericOutcome& o, Real tol) {
  r.lhs = fmt(o.lhs);
  r.rhs = fmt(o.rhs);
  r.bound = fmt(o.bound);
  r.pass = numeric_pass(o, tol);
}

void fill_error(CheckRecord& r, const std::exception& e) {
  r.lhs = std::string("error: ") + e.what();
  r.rhs = "";
  r.pass = false;
}

// ---- exact registry entries -------------------------------------------------

void registry_suite(Collector& c, const std::string& suite) {
  for (const auto& e : registry_catalog()) {
    if (e.suite != suite) continue;
    unsigned hi = e.max_n;
    if (e.id == "ID-PARTD") hi = std::min(hi, 6u);
    CampaignSummary s = campaign(e.id, c.opts.trials, c.opts.seed, {e.min_n, hi}, c.opts.threads, true);
    for (const auto& ic : s.cases) {
      CheckRecord r;
      r.check_id = e.id;
      r.paper_anchor = e.paper_anchor;
      r.form = ic.form;
      r.trial = ic.trial;
      for (std::size_t i = 0; i < ic.params.size(); ++i) r.params.emplace_back(e.param_names[i], ic.params[i].to_string());
      r.n = ic.n;
      r.lhs = ic.lhs.to_string();
      r.rhs = ic.rhs.to_string();
      r.pass = ic.pass;
      r.suspect = e.suspect;
      if (e.suspect) r.validated_form = s.validated_form;
      c.add(std::move(r));
    }
    if (e.suspect) c.suspect({e.id, s.validated_form, s.form_pass_counts, s.trials});
  }
}

// ---- numeric identities with samplers ---------------------------------------

void numeric_identity(Collector& c, const NumericIdentity& id) {
  const Real tol = c.opts.tol.value_or(id.tolerance);
  std::vector<CheckRecord> recs;
  std::vector<std::size_t> passes(id.forms.size(), 0);
  for (std::size_t t = 0; t < c.opts.trials; ++t) {
    std::mt19937_64 rng = rng_for(id.id, c.opts, t);
    std::vector<Real> p = id.sample(rng);
    for (std::size_t f = 0; f < id.forms.size(); ++f) {
      CheckRecord r = numeric_record(id.id, id.anchor, id.forms[f].name, t, id.param_names, p);
      r.suspect = id.suspect;
      try {
        fill(r, id.forms[f].eval(p), tol);
      } catch (const std::exception& e) {
        fill_error(r, e);
      }
      if (r.pass) ++passes[f];
      recs.push_back(std::move(r));
    }
  }
  if (id.suspect) {
    // printed first: it wins whenever it holds on every trial
    std::string validated = "none";
    for (std::size_t f = 0; f < id.forms.size(); ++f)
      if (passes[f] == c.opts.trials) {
        validated = id.forms[f].name;
        break;
      }
    SuspectSummary s{id.id, validated, {}, c.opts.trials};
    for (std::size_t f = 0; f < id.forms.size(); ++f) s.form_pass_counts.emplace_back(id.forms[f].name, passes[f]);
    for (auto& r : recs) r.validated_form = validated;
    c.suspect(std::move(s));
  }
  for (auto& r : recs) c.add(std::move(r));
}

// ---- expansions ------------------------------------------------------------

// Endpoints and quarter points, then five seeded interior points.
std::vector<Real> x_points(std::mt19937_64& rng) {
  std::vector<Real> xs = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 5; ++i) xs.push_back(uniform(rng, 0, 1));
  return xs;
}

void expansion_star(Collector& c) {
  const std::string id = "EXP-2F1-2STAR";
  const std::string anchor = "f = c expansion of 2F1 in K(x|c,d), partial sum at J = 40 against direct 2F1";
  const Real tol = c.opts.tol.value_or(1e-7);
  for (std::size_t t = 0; t < c.opts.trials; ++t) {
    std::mt19937_64 rng = rng_for(id, c.opts, t);
    Real a, b;
    do {
      a = uniform(rng, -0.5, 0.25);
      b = uniform(rng, -0.5, 0.25);
    } while (std::fabs(a) < 0.05 || std::fabs(b) < 0.05);
    const Real cc = a + b + uniform(rng, 3, 4), d = uniform(rng, 1.5, 2.5);
    auto e = expand_2f1_f_eq_c(a, b, cc, d);
    for (Real x : x_points(rng)) {
      CheckRecord r = numeric_record(id, anchor, "J=40", t, {"a", "b", "c", "d", "x"}, {a, b, cc, d, x});
      try {
        Real s = e.partial_eval(x, 40), direct = e.direct(x);
        r.lhs = fmt(s);
        r.rhs = fmt(direct);
        r.bound = fmt(e.tail_estimate(x, 40));
        r.pass = std::fabs(s - direct) <= tol;
      } catch (const std::exception& ex) {
        fill_error(r, ex);
      }
      c.add(std::move(r));
    }
    // endpoint readings against their known values rather than the direct series
    for (Real x : {0.0, 1.0}) {
      CheckRecord r = numeric_record(id + "-ENDPOINT", "f = c expansion at x = 0 gives 1 and at x = 1 the Gauss sum",
                                     x == 0 ? "x=0" : "x=1", t, {"a", "b", "c", "d"}, {a, b, cc, d});
      try {
        Real s = e.partial_eval(x, 40), known = x == 0 ? 1.0 : gauss_sum(a, b, cc);
        r.lhs = fmt(s);
        r.rhs = fmt(known);
        r.pass = std::fabs(s - known) <= tol;
      } catch (const std::exception& ex) {
        fill_error(r, ex);
      }
      c.add(std::move(r));
    }
  }
}

void expansion_forms(Collector& c) {
  const std::string id = "EXP-CROSS";
  const std::string anchor = "K-basis coefficient forms 2F1-2, 2a, 2b, 2d agree pairwise";
  const std::string fid = "EXP-FORM";
  const std::string fanchor = "each expansion form of 2F1 against direct evaluation";
  const Real tol = c.opts.tol.value_or(1e-7);
  const std::vector<std::string> cross = {"2F1-2", "2F1-2a", "2F1-2b", "2F1-2d"};
  for (std::size_t t = 0; t < c.opts.trials; ++t) {
    std::mt19937_64 rng = rng_for(id, c.opts, t);
    const Real a = uniform(rng, -0.5, 0.5), b = uniform(rng, -0.5, 0.5);
    const Real cc = a + b + uniform(rng, 2, 3);
    const Real f = uniform(rng, 0.5, std::min(2.0, cc - 0.25)), d = uniform(rng, 1.5, 3);
    const std::vector<std::string> names = {"a", "b", "c", "f", "d", "x"};

    std::map<std::string, ExpansionSeries> forms;
    for (const auto& tag : expand_2f1_tags()) forms.emplace(tag, expand_2f1(tag, a, b, cc, f, d));

    for (Real x : x_points(rng)) {
      std::map<std::string, TruncatedValue> v;
      for (const auto& tag : expand_2f1_tags()) {
        const ExpansionSeries& e = forms.at(tag);
        // power-kind forms converge only inside the disc; J forms take the mapped argument
        Real arg = tag.rfind("2F1-1", 0) == 0 ? 2 * x - 1 : x;
        if (e.kind() == ExpansionKind::power && x > 0.25) continue;
        CheckRecord r = numeric_record(fid, fanchor, tag, t, names, {a, b, cc, f, d, arg});
        try {
          TruncatedValue tv = e.truncate(arg, 1e-10, e.kind() == ExpansionKind::power ? 400 : 160);
          Real direct = e.direct(arg);
          v[tag] = tv;
          r.lhs = fmt(tv.value);
          r.rhs = fmt(direct);
          r.bound = fmt(10 * tv.tail_estimate);
          r.pass = std::fabs(tv.value - direct) <= std::max(tol, 10 * tv.tail_estimate);
        } catch (const std::exception& ex) {
          fill_error(r, ex);
        }
        c.add(std::move(r));
      }
      for (std::size_t i = 0; i < cross.size(); ++i)
        for (std::size_t k = i + 1; k < cross.size(); ++k) {
          CheckRecord r = numeric_record(id, anchor, cross[i] + " vs " + cross[k], t, names, {a, b, cc, f, d, x});
          if (!v.count(cross[i]) || !v.count(cross[k])) {
            r.lhs = "error: a form failed to evaluate";
            r.pass = false;
          } else {
            const TruncatedValue &p = v[cross[i]], &q = v[cross[k]];
            Real allowance = std::max(tol, 10 * (p.tail_estimate + q.tail_estimate));
            r.lhs = fmt(p.value);
            r.rhs = fmt(q.value);
            r.bound = fmt(10 * (p.tail_estimate + q.tail_estimate));
            r.pass = std::fabs(p.value - q.value) <= allowance;
          }
          c.add(std::move(r));
        }
    }
  }
}

NumericIdentity watson_identity(bool second) {
  NumericIdentity id;
  id.suspect = true;
  id.tolerance = 1e-7;
  if (!second) {
    id.id = "EXP-WATSON-B";
    id.anchor = "2F1(a,b;(a+b+1)/2;x) in K(x|f,f) with Watson-summed coefficients";
    id.param_names = {"a", "b", "f", "x"};
    id.sample = [](std::mt19937_64& rng) {
      return std::vector<Real>{uniform(rng, -0.5, 0), uniform(rng, -0.5, 0), uniform(rng, 1, 2),
                               uniform(rng, 0.2, 0.8)};
    };
    auto make = [](bool printed) {
      return [printed](const std::vector<Real>& p) {
        auto e = expand_2f1_watson(p[0], p[1], p[2], printed);
        return NumericOutcome{e.partial_eval(p[3], 160), e.direct(p[3]), 0};
      };
    };
    id.forms = {{"printed", make(true)}, {"corrected", make(false)}};
  } else {
    id.id = "EXP-WATSON-C";
    id.anchor = "2F1(a,b;c;x) in K(x|2c-b-1, 1+b+2a-2c) with Watson-summed coefficients";
    id.param_names = {"a", "b", "c", "x"};
    id.sample = [](std::mt19937_64& rng) {
      for (;;) {
        Real a = uniform(rng, 1.5, 2.5), b = uniform(rng, -3, -2);
        Real lo = std::max({(b + 1) / 2, a + b, 0.0}) + 0.25, hi = (1 + b + 2 * a) / 2 - 0.25;
        if (hi > lo) return std::vector<Real>{a, b, uniform(rng, lo, hi), uniform(rng, 0.2, 0.8)};
      }
    };
    auto make = [](bool printed) {
      return [printed](const std::vector<Real>& p) {
        auto e = expand_2f1_watson2(p[0], p[1], p[2], printed);
        return NumericOutcome{e.partial_eval(p[3], 160), e.direct(p[3]), 0};
      };
    };
    id.forms = {{"printed", make(true)}, {"corrected", make(false)}};
  }
  return id;
}

// ---- hypergeometric sanity -------------------------------------------------

void hypergeom_checks(Collector& c) {
  const Real tol = c.opts.tol.value_or(1e-10);
  for (std::size_t t = 0; t < c.opts.trials; ++t) {
    {
      std::mt19937_64 rng = rng_for("HYP-PFAFF-SAALSCHUTZ", c.opts, t);
      RationalSampler sample;
      std::uniform_int_distribution<unsigned> pick(0, 5);
      for (;;) {
        unsigned n = pick(rng);
        Rational a = sample(rng), b = sample(rng), cc = sample(rng);
        PfqSpec spec = balanced_3f2(n, a, b, cc);
        if (rising(cc, n).is_zero() || rising(cc - a - b, n).is_zero() || rising(spec.lower[1], n).is_zero()) continue;
        CheckRecord r;
        r.check_id = "HYP-PFAFF-SAALSCHUTZ";
        r.paper_anchor = "balanced terminating 3F2 at 1 in closed form";
        r.form = "stated";
        r.trial = t;
        r.params = {{"a", a.to_string()}, {"b", b.to_string()}, {"c", cc.to_string()}};
        r.n = n;
        r.lhs = pfq_exact_partial(spec, Rational(1), n).to_string();
        r.rhs = pfaff_saalschutz(n, a, b, cc).to_string();
        r.pass = r.lhs == r.rhs;
        c.add(std::move(r));
        break;
      }
    }
    {
      std::mt19937_64 rng = rng_for("HYP-GAUSS", c.opts, t);
      Real a = uniform(rng, -0.5, 1), b = uniform(rng, -0.5, 1), cc = a + b + uniform(rng, 0.5, 3);
      CheckRecord r = numeric_record("HYP-GAUSS", "2F1 at 1 against the Gauss Gamma ratio", "stated", t,
                                     {"a", "b", "c"}, {a, b, cc});
      try {
        SeriesOptions o;
        o.tol = 1e-12;
        SeriesValue v = pfq_eval(PfqSpecReal{{a, b}, {cc}}, 1.0, o);
        fill(r, {v.value, gauss_sum(a, b, cc), v.abs_error_bound}, tol);
      } catch (const std::exception& e) {
        fill_error(r, e);
      }
      c.add(std::move(r));
    }
    {
      std::mt19937_64 rng = rng_for("HYP-REDUCE", c.opts, t);
      Real a = uniform(rng, -2, 2), b = uniform(rng, 0.5, 3), x = uniform(rng, -0.9, 0.9);
      CheckRecord r = numeric_record("HYP-REDUCE", "2F1(a,b;b;x) = (1-x)^(-a)", "stated", t, {"a", "b", "x"},
                                     {a, b, x});
      try {
        SeriesValue v = pfq_eval(PfqSpecReal{{a, b}, {b}}, x, 1e-13);
        fill(r, {v.value, std::pow(1 - x, -a), v.abs_error_bound}, tol);
      } catch (const std::exception& e) {
        fill_error(r, e);
      }
      c.add(std::move(r));
    }
    {
      std::mt19937_64 rng = rng_for("HYP-EULER", c.opts, t);
      Real a = uniform(rng, -1, 2), b = uniform(rng, -1, 2), cc = uniform(rng, 0.5, 3), x = uniform(rng, -0.6, 0.6);
      CheckRecord r = numeric_record("HYP-EULER", "Euler transformation of 2F1", "stated", t, {"a", "b", "c", "x"},
                                     {a, b, cc, x});
      try {
        SeriesPair sp = euler_transform_check(a, b, cc, x);
        fill(r, {sp.direct.value, sp.transformed.value, sp.combined_bound()}, tol);
      } catch (const std::exception& e) {
        fill_error(r, e);
      }
      c.add(std::move(r));
    }
  }
}

// ---- exact integrals -------------------------------------------------------

void exact_integrals(Collector& c) {
  for (std::size_t t = 0; t < c.opts.trials; ++t) {
    auto exact = [&](const std::string& id, const std::string& anchor, const std::string& form,
                     std::vector<std::pair<std::string, std::string>> params, unsigned n, const Rational& lhs,
                     const Rational& rhs) {
      CheckRecord r;
      r.check_id = id;
      r.paper_anchor = anchor;
      r.form = form;
      r.trial = t;
      r.params = std::move(params);
      r.n = n;
      r.lhs = lhs.to_string();
      r.rhs = rhs.to_string();
      r.pass = lhs == rhs;
      c.add(std::move(r));
    };
    {
      std::mt19937_64 rng = rng_for("INT-NORM", c.opts, t);
      Rational a = positive_rational(rng), b = positive_rational(rng);
      unsigned n = std::uniform_int_distribution<unsigned>(1, 6)(rng);
      auto kn = k_poly(n, a, b);
      exact("INT-NORM", "squared norm of K_n against f(x|a,b) from exact moments", "stated",
            {{"a", a.to_string()}, {"b", b.to_string()}}, n, integrate_poly_exact(kn * kn, a, b), norm_sq_k(n, a, b));
      unsigned m = std::uniform_int_distribution<unsigned>(0, n - 1)(rng);
      exact("INT-ORTHO", "K_m and K_n orthogonal against f(x|a,b) from exact moments", "stated",
            {{"a", a.to_string()}, {"b", b.to_string()}, {"m", std::to_string(m)}}, n,
            integrate_poly_exact(kn * k_poly(m, a, b), a, b), Rational(0));
    }
    {
      std::mt19937_64 rng = rng_for("INT-CROSS", c.opts, t);
      Rational a = positive_rational(rng), b = positive_rational(rng), cc = positive_rational(rng);
      unsigned n = std::uniform_int_distribution<unsigned>(0, 6)(rng);
      for (CrossForm w : {CrossForm::first, CrossForm::second})
        exact("INT-CROSS", "K with one shared Beta parameter integrated against f(x|a,b)",
              w == CrossForm::first ? "first" : "second",
              {{"a", a.to_string()}, {"b", b.to_string()}, {"c", cc.to_string()}}, n,
              cross_integral_moments(n, a, b, cc, w), cross_integral_closed(n, a, b, cc, w));
    }
    {
      std::mt19937_64 rng = rng_for("INT-MOMENT", c.opts, t);
      Rational a = positive_rational(rng), b = positive_rational(rng);
      unsigned n = std::uniform_int_distribution<unsigned>(0, 10)(rng);
      exact("INT-MOMENT", "power moment from shifted moments against the Pochhammer ratio", "stated",
            {{"a", a.to_string()}, {"b", b.to_string()}}, n, moment_power(n, a, b), moment_power_closed(n, a, b));
    }
  }
}

void sort_records(std::vector<CheckRecord>& v) {
  std::stable_sort(v.begin(), v.end(), [](const CheckRecord& x, const CheckRecord& y) {
    if (x.check_id != y.check_id) return x.check_id < y.check_id;
    return x.trial < y.trial;
  });
}

}  // namespace

std::vector<std::string> verify_suites() { return {"pochhammer", "jacobi", "expansions", "integrals", "all"}; }

VerifyReport run_verify(const VerifyOptions& opts) {
  const auto suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), opts.suite) == suites.end())
    throw std::invalid_argument("unknown suite '" + opts.suite + "'");
  auto want = [&](const char* s) { return opts.suite == "all" || opts.suite == s; };

  Collector c(opts);
  if (want("pochhammer")) registry_suite(c, "pochhammer");
  if (want("jacobi")) registry_suite(c, "jacobi");
  if (want("expansions")) {
    registry_suite(c, "expansions");
    hypergeom_checks(c);
    expansion_star(c);
    expansion_forms(c);
    numeric_identity(c, watson_identity(false));
    numeric_identity(c, watson_identity(true));
    for (const auto& id : special_value_identities()) numeric_identity(c, id);
  }
  if (want("integrals")) {
    exact_integrals(c);
    for (const auto& id : integrals_identity_suite()) numeric_identity(c, id);
  }

  VerifyReport r;
  r.options = opts;
  r.records = std::move(c.records);
  r.suspects = std::move(c.suspects);
  sort_records(r.records);
  std::sort(r.suspects.begin(), r.suspects.end(),
            [](const SuspectSummary& x, const SuspectSummary& y) { return x.check_id < y.check_id; });
  for (const auto& rec : r.records) {
    if (rec.suspect) continue;
    ++r.counted;
    if (!rec.pass) ++r.failed;
  }
  return r;
}

std::string summary_line(const VerifyReport& r) {
  if (r.failed == 0) return "PASS " + std::to_string(r.counted) + "/" + std::to_string(r.counted);
  return "FAIL " + std::to_string(r.failed) + "/" + std::to_string(r.counted);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string joined_params(const CheckRecord& rec) {
  std::string s;
  for (const auto& [k, v] : rec.params) s += (s.empty() ? "" : ";") + k + "=" + v;
  return s;
}

}  // namespace

std::string render_report(const VerifyReport& r, const std::string& format, const std::string& timestamp) {
  using nlohmann::ordered_json;
  if (format == "json") {
    ordered_json doc;
    doc["schema"] = 1;
    doc["generated_at"] = timestamp;
    doc["suite"] = r.options.suite;
    doc["trials"] = r.options.trials;
    doc["seed"] = r.options.seed;
    doc["tol"] = r.options.tol ? ordered_json(*r.options.tol) : ordered_json(nullptr);
    doc["summary"] = {{"line", summary_line(r)}, {"counted", r.counted}, {"failed", r.failed}};
    ordered_json sus = ordered_json::array();
    for (const auto& s : r.suspects) {
      ordered_json counts = ordered_json::object();
      for (const auto& [name, k] : s.form_pass_counts) counts[name] = k;
      sus.push_back({{"check_id", s.check_id},
                     {"validated_form", s.validated_form},
                     {"trials", s.trials},
                     {"form_pass_counts", counts}});
    }
    doc["suspects"] = sus;
    ordered_json recs = ordered_json::array();
    for (const auto& rec : r.records) {
      ordered_json j;
      j["schema"] = 1;
      j["check_id"] = rec.check_id;
      j["paper_anchor"] = rec.paper_anchor;
      j["form"] = rec.form;
      j["trial"] = rec.trial;
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : rec.params) params[k] = v;
      j["params"] = params;
      j["n"] = rec.n ? ordered_json(*rec.n) : ordered_json(nullptr);
      j["lhs"] = rec.lhs;
      j["rhs"] = rec.rhs;
      if (rec.bound) j["bound"] = *rec.bound;
      j["verdict"] = rec.pass ? "pass" : "fail";
      j["suspect"] = rec.suspect;
      if (rec.suspect) j["validated_form"] = rec.validated_form;
      recs.push_back(std::move(j));
    }
    doc["records"] = recs;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "# generated_at=" << timestamp << "\n";
    os << "check_id,form,trial,n,params,lhs,rhs,bound,verdict,suspect,validated_form\n";
    for (const auto& rec : r.records) {
      os << csv_field(rec.check_id) << ',' << csv_field(rec.form) << ',' << rec.trial << ','
         << (rec.n ? std::to_string(*rec.n) : "") << ',' << csv_field(joined_params(rec)) << ','
         << csv_field(rec.lhs) << ',' << csv_field(rec.rhs) << ',' << (rec.bound ? *rec.bound : "") << ','
         << (rec.pass ? "pass" : "fail") << ',' << (rec.suspect ? "true" : "false") << ','
         << csv_field(rec.validated_form) << '\n';
    }
    return os.str();
  }
  if (format == "text") {
    os << "generated_at " << timestamp << "\n";
    os << "suite " << r.options.suite << " trials " << r.options.trials << " seed " << r.options.seed << "\n";
    for (const auto& rec : r.records) {
      os << (rec.pass ? "pass " : "FAIL ") << rec.check_id;
      if (!rec.form.empty() && rec.form != "stated") os << " [" << rec.form << "]";
      os << " trial=" << rec.trial;
      if (rec.n) os << " n=" << *rec.n;
      os << " " << joined_params(rec) << " lhs=" << rec.lhs << " rhs=" << rec.rhs;
      if (rec.bound) os << " bound=" << *rec.bound;
      if (rec.suspect) os << " (suspect)";
      os << "\n";
    }
    for (const auto& s : r.suspects) {
      os << "suspect " << s.check_id << ": validated " << s.validated_form << " (";
      for (std::size_t i = 0; i < s.form_pass_counts.size(); ++i)
        os << (i ? ", " : "") << s.form_pass_counts[i].first << " " << s.form_pass_counts[i].second << "/" << s.trials;
      os << ")\n";
    }
    os << summary_line(r) << "\n";
    return os.str();
  }
  throw std::invalid_argument("unknown format '" + format + "' (json, csv or text)");
}

}  // namespace hyperjacobi
