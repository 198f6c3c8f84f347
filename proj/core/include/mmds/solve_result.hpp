#pragma once

#include <string>
#include <vector>

#include "mmds/bandwidth.hpp"
#include "mmds/demand.hpp"
#include "mmds/selection.hpp"

namespace mmds {

struct SegmentCost {
  Segment segment;
  Bandwidth cost;
};

struct SolveResult {
  std::string solver;
  // Objective value reported by the solver (the DP value for the DP solvers).
  Bandwidth total;
  ViewSelection selection;
  std::vector<ViewId> transmitted;
  std::vector<SegmentCost> per_segment;
  // Bandwidth of `selection` re-evaluated from scratch; equals `total` for exact solvers.
  Bandwidth evaluated;
};

// Fraction of terminals whose selection uses two distinct sources.
double two_view_fraction(const DemandMap& demand, const ViewSelection& theta);

}  // namespace mmds
