#pragma once

#include <cstdint>

#include "mmds/cost.hpp"
#include "mmds/solve_result.hpp"

namespace mmds {

// Largest segment span M - m the MMDS enumeration accepts.
inline constexpr int kMaxOracleSpan = 22;
// Largest product of per-view choice counts the E-MMDS enumeration accepts.
inline constexpr std::uint64_t kMaxExtendedAssignments = 10'000'000;

// Direct delivery of every desired view (no synthesis).
SolveResult omds(const ShortestPathTree& tree, const DemandMap& demand);

// Exhaustive MMDS minimum over transmitted sets F (boundaries included,
// consecutive gaps <= D). Throws GuardExceeded above kMaxOracleSpan.
SolveResult brute_force_mmds(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d);

// Exhaustive E-MMDS minimum over per-view source pairs. Throws GuardExceeded
// when the assignment count exceeds `guard`.
SolveResult brute_force_emmds(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                              std::uint64_t guard = kMaxExtendedAssignments);

}  // namespace mmds
