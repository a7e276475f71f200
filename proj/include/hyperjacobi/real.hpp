#pragma once

namespace hyperjacobi {

// Floating scalar for all series work.
using Real = double;

}  // namespace hyperjacobi
