#pragma once

#include <cstddef>

#include "mmds/cost.hpp"
#include "mmds/solve_result.hpp"

namespace mmds {

struct ExtendedOptions {
  PhiMode phi = PhiMode::kExact;
  // Upper bound on live DP states per column.
  std::size_t max_states = 1'000'000;
};

// Solver for the relaxed problem in which synthesis intervals may cross.
// Throws GuardExceeded when the state space outgrows max_states.
SolveResult solve_extended(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                           ExtendedOptions options = {});

}  // namespace mmds
