#pragma once

#include <vector>

#include "mmds/cost.hpp"
#include "mmds/solve_result.hpp"

namespace mmds {

// Reference to a DP state: column (view index) and variant d.
struct VariantRef {
  int column = 0;
  int variant = 0;
  friend bool operator==(const VariantRef&, const VariantRef&) = default;
};

// One DP state c^d_{m,k}. Variant 0: v_k serves only its own subscribers and
// the previous transmitted view is any of v_{k-1}..v_{k-D} with no desired
// view in between. Variant d >= 2: v_{k-d} is the previous transmitted view
// and every desired view strictly between them is synthesized from
// (v_{k-d}, v_k).
struct Variant {
  int d = 0;
  Bandwidth cost = Bandwidth::infeasible();
  VariantRef choice{};  // argmin predecessor; meaningless when cost is infeasible
  ViewSelection theta;  // partial selection for views m..k
};

// DP lattice for one segment, columns lo..hi.
class CostTable {
 public:
  CostTable(Segment segment, int d, PhiMode mode);

  const Segment& segment() const { return segment_; }
  int quality() const { return d_; }
  PhiMode mode() const { return mode_; }

  std::vector<Variant>& column(int k) { return columns_[k - segment_.lo.index()]; }
  const std::vector<Variant>& column(int k) const { return columns_[k - segment_.lo.index()]; }
  const Variant& at(VariantRef ref) const;
  // Variant with d == `d`, or nullptr if column k has no such variant.
  const Variant* find(int k, int d) const;

  // c_{m,k}: minimum over the stored variants of column k.
  Bandwidth best(int k) const;
  // Argmin of column k; ties go to the smaller d.
  VariantRef best_ref(int k) const;

 private:
  Segment segment_;
  int d_;
  PhiMode mode_;
  std::vector<std::vector<Variant>> columns_;
};

struct SolveOptions {
  PhiMode phi = PhiMode::kExact;
  bool parallel_segments = false;
};

// Fills the DP table of one segment.
CostTable build_cost_table(const SubscriberIndex& index, const Segment& segment, QualityConstraint d, PhiMode mode);

// Reconstructs theta for the segment by following choice pointers from the
// best variant of the last column. Throws InternalError on a dangling pointer.
ViewSelection backtrack(const CostTable& table);

// Exact MMDS solver (every segment solved independently, results summed).
// Throws InternalError if the backtracked selection fails validation or, in
// exact mode, its re-evaluated cost disagrees with the DP value.
SolveResult solve_general(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                          SolveOptions options = {});

struct SegmentSolution {
  Bandwidth cost;
  ViewSelection theta;
};

// Closed-form recurrences for D = 2 (variants c^0, c^1) and D = 3 (c^0, c^1, c^2).
SegmentSolution solve_d2(const Segment& segment, const SubscriberIndex& index, PhiMode mode = PhiMode::kExact);
SegmentSolution solve_d3(const Segment& segment, const SubscriberIndex& index, PhiMode mode = PhiMode::kExact);

}  // namespace mmds
