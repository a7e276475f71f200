#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyperjacobi/real.hpp"

namespace hyperjacobi {

// One side-by-side floating evaluation of an identity.
struct NumericOutcome {
  Real lhs = 0;
  Real rhs = 0;
  // Truncation/rounding allowance reported by the evaluators.
  Real bound = 0;
};

struct NumericForm {
  std::string name;  // "printed", "corrected", or "stated"
  std::function<NumericOutcome(const std::vector<Real>&)> eval;
};

// An identity between infinite series / Gamma products, checked to a tolerance.
// When suspect, forms holds the printed reading first and the corrected one
// second, and the report says which one validates.
struct NumericIdentity {
  std::string id;
  std::string anchor;
  std::vector<std::string> param_names;
  bool suspect = false;
  Real tolerance = 1e-7;
  std::vector<std::vector<Real>> points;
  // Draws a point from the region where the identity is claimed (used by campaigns).
  std::function<std::vector<Real>(std::mt19937_64&)> sample;
  std::vector<NumericForm> forms;
};

inline bool numeric_pass(const NumericOutcome& o, Real tol) {
  Real diff = o.lhs - o.rhs;
  if (diff < 0) diff = -diff;
  return diff <= (tol > o.bound ? tol : o.bound) && diff == diff;
}

}  // namespace hyperjacobi
