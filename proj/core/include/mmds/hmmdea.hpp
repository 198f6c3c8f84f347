#pragma once

#include <vector>

#include "mmds/cost.hpp"
#include "mmds/solve_result.hpp"

namespace mmds {

struct HeuristicRound {
  ViewId replaced;
  SourcePair pair;
  Bandwidth sweep_cost;      // u(M_s) from the postorder sweep
  Bandwidth evaluated_cost;  // evaluate_cost of the committed selection
};

struct HeuristicResult {
  SolveResult result;
  Bandwidth initial;
  std::vector<HeuristicRound> rounds;
  // x_{ijk}: views delivered on the arc into each tree node (index = child).
  EdgeViewLoad delivery;
};

// Local improvement from direct delivery: each round commits the single best
// strictly improving replacement of a directly delivered view by a pair of
// already transmitted views.
HeuristicResult h_solve(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d);

}  // namespace mmds
