#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hyperjacobi/rational.hpp"

namespace hyperjacobi {

using Params = std::vector<Rational>;

struct IdentityForm {
  std::string name;  // "stated", or "printed" / "corrected" / "derived" for suspect entries
  std::function<Rational(const Params&, unsigned)> lhs;
  std::function<Rational(const Params&, unsigned)> rhs;
};

// A finite identity checked by exact rational equality. lhs and rhs are
// written independently of each other.
struct IdentityEntry {
  std::string id;
  std::string suite;  // "pochhammer" or "jacobi"
  std::string paper_anchor;
  std::vector<std::string> param_names;
  unsigned min_n = 0;
  unsigned max_n = 15;
  bool suspect = false;
  // false exactly when some Pochhammer denominator on either side vanishes.
  std::function<bool(const Params&, unsigned)> domain_guard;
  // Suspect entries list the printed reading first.
  std::vector<IdentityForm> forms;

  std::size_t arity() const { return param_names.size(); }
  const IdentityForm& form(const std::string& name) const;
};

struct IdentityCase {
  std::string id;
  std::string form;
  Params params;
  unsigned n = 0;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::size_t trial = 0;
};

const std::vector<IdentityEntry>& registry_catalog();
const IdentityEntry& find_identity(const std::string& id);

// form empty: the validated form (the only form for non-suspect entries).
IdentityCase check_identity(const std::string& id, const Params& params, unsigned n, const std::string& form = "");

// Small hand-expandable cases at n = 1, 2 for every form of an entry.
struct BruteForceVerdict {
  std::string id;
  std::vector<std::pair<std::string, bool>> holds;  // per form
  std::string validated_form;                        // empty if no form holds
  std::vector<IdentityCase> cases;
};
BruteForceVerdict brute_force_verdict(const std::string& id);
// Cached brute_force_verdict(id).validated_form.
const std::string& validated_form(const std::string& id);

// Numerators uniform in [-9,9], denominators in [1,9].
class RationalSampler {
 public:
  Rational operator()(std::mt19937_64& rng) const;
};

// Per-trial generator: splitmix64 of (seed, trial) seeds an mt19937_64, so a
// trial's draws do not depend on how trials are spread over threads.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct CampaignSummary {
  std::string id;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  unsigned n_lo = 0, n_hi = 0;
  std::size_t pass_count = 0;
  std::vector<IdentityCase> fail_cases;  // validated form, by trial index
  std::size_t rejections = 0;
  bool suspect = false;
  std::string validated_form;
  std::vector<std::pair<std::string, std::size_t>> form_pass_counts;  // suspect entries only
  std::vector<IdentityCase> cases;  // every evaluated case when requested, by trial
};

// n_range is clipped to [min_n, max_n]. threads = 0 picks the hardware count.
CampaignSummary campaign(const std::string& id, std::size_t trials, std::uint64_t seed,
                         std::pair<unsigned, unsigned> n_range, unsigned threads = 0, bool keep_cases = false);

}  // namespace hyperjacobi
