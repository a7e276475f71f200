#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

#include "hyperjacobi/verify.hpp"

using namespace hyperjacobi;

namespace {

VerifyReport run(const std::string& suite, std::size_t trials, std::uint64_t seed = 1) {
  VerifyOptions o;
  o.suite = suite;
  o.trials = trials;
  o.seed = seed;
  return run_verify(o);
}

}  // namespace

TEST_CASE("exact suites pass and records are sorted") {
  for (const char* s : {"pochhammer", "jacobi", "integrals"}) {
    CAPTURE(s);
    VerifyReport r = run(s, 10, 7);
    CHECK(r.ok());
    CHECK(r.counted > 0);
    CHECK(summary_line(r) == "PASS " + std::to_string(r.counted) + "/" + std::to_string(r.counted));
    for (std::size_t i = 1; i < r.records.size(); ++i) {
      const auto &p = r.records[i - 1], &q = r.records[i];
      CHECK((p.check_id < q.check_id || (p.check_id == q.check_id && p.trial <= q.trial)));
    }
  }
}

TEST_CASE("zero trials is a vacuous pass") {
  VerifyReport r = run("expansions", 0);
  CHECK(r.records.empty());
  CHECK(summary_line(r) == "PASS 0/0");
  CHECK(r.ok());
}

TEST_CASE("unknown suite is rejected") {
  VerifyOptions o;
  o.suite = "nope";
  CHECK_THROWS_AS(run_verify(o), std::invalid_argument);
}

TEST_CASE("suspect entries carry a validated form and do not count") {
  VerifyReport r = run("pochhammer", 10);
  std::set<std::string> ids;
  for (const auto& s : r.suspects) ids.insert(s.check_id);
  CHECK(ids.count("ID-R1"));
  CHECK(ids.count("ID-R2"));
  CHECK(ids.count("ID-CV"));
  CHECK(ids.count("ID-HYP2"));
  std::size_t suspect_records = 0;
  for (const auto& rec : r.records)
    if (rec.suspect) {
      ++suspect_records;
      CHECK_FALSE(rec.validated_form.empty());
    }
  CHECK(r.counted + suspect_records == r.records.size());

  VerifyReport g = run("integrals", 5);
  bool second_form_seen = false;
  for (const auto& s : g.suspects)
    if (s.check_id == "INT-GAMMA-3F2M1") {
      second_form_seen = true;
      CHECK(s.validated_form == "corrected");
    }
  CHECK(second_form_seen);
}

TEST_CASE("expansions suite at a single trial") {
  VerifyReport r = run("expansions", 1, 3);
  CHECK(r.ok());
  std::set<std::string> ids;
  for (const auto& rec : r.records) ids.insert(rec.check_id);
  for (const char* id : {"EXP-2F1-2STAR", "EXP-2F1-2STAR-ENDPOINT", "EXP-CROSS", "EXP-FORM", "EXP-WATSON-B",
                         "EXP-WATSON-C", "ID-PARTD", "HYP-GAUSS", "HYP-PFAFF-SAALSCHUTZ", "SV-SC1", "SV-SC2"})
    CHECK(ids.count(id));
}

TEST_CASE("reports are reproducible apart from the timestamp") {
  VerifyReport a = run("pochhammer", 5, 11), b = run("pochhammer", 5, 11);
  for (const char* fmt : {"json", "csv", "text"}) {
    CAPTURE(fmt);
    CHECK(render_report(a, fmt, "T") == render_report(b, fmt, "T"));
    std::string ta = render_report(a, fmt, "2026-01-01T00:00:00Z");
    std::string tb = render_report(a, fmt, "2026-01-02T00:00:00Z");
    std::size_t differing_lines = 0;
    std::istringstream sa(ta), sb(tb);
    for (std::string la, lb; std::getline(sa, la) && std::getline(sb, lb);) differing_lines += la != lb;
    CHECK(differing_lines == 1);
  }
  VerifyReport c = run("pochhammer", 5, 12);
  CHECK(render_report(a, "json", "T") != render_report(c, "json", "T"));
}

TEST_CASE("json layout") {
  VerifyReport r = run("jacobi", 2);
  auto doc = nlohmann::json::parse(render_report(r, "json", "T"));
  CHECK(doc["schema"] == 1);
  CHECK(doc["generated_at"] == "T");
  CHECK(doc["records"].size() == r.records.size());
  const auto& rec = doc["records"][0];
  for (const char* key : {"schema", "check_id", "paper_anchor", "params", "n", "lhs", "rhs", "verdict", "suspect"})
    CHECK(rec.contains(key));
  CHECK_THROWS_AS(render_report(r, "xml", "T"), std::invalid_argument);
}
