#pragma once

#include <span>
#include <vector>

#include "mmds/bandwidth.hpp"
#include "mmds/bitset.hpp"
#include "mmds/demand.hpp"
#include "mmds/selection.hpp"
#include "mmds/tree.hpp"

namespace mmds {

// How the DP prices extending the boundary views' trees to synthesizing clients.
enum class PhiMode {
  kLiteral,  // |T(V')\T(l)| + |T(V')\T(r)| over the joint set V'
  kExact,    // re-evaluate total bandwidth of the partial selection
  kPerView,  // sum of the literal form over singletons {v}, v in V'
};

const char* to_string(PhiMode mode);
PhiMode parse_phi_mode(const std::string& name);

// Set of arcs, indexed by child tree node.
using ArcSet = BitSet;

// Views carried on each arc; index = child tree node, entry 0 (root) unused.
struct EdgeViewLoad {
  std::vector<BitSet> per_arc;

  Bandwidth total() const;
};

// Per-view subscriber trees of one (tree, demand) instance. Immutable after
// construction and safe to share between threads.
class SubscriberIndex {
 public:
  SubscriberIndex(const ShortestPathTree& tree, const DemandMap& demand);

  const ShortestPathTree& tree() const { return *tree_; }
  const DemandMap& demand() const { return *demand_; }
  int universe_size() const { return demand_->universe_size(); }

  // T(v): union of root paths of v's subscribers; empty for non-desired v.
  const ArcSet& tree_of(ViewId v) const;
  ArcSet tree_of(std::span<const ViewId> views) const;
  ArcSet empty_arcs() const { return ArcSet(tree_->size()); }

  // View requested at tree node i, or ViewId{} if i is not a terminal.
  ViewId view_at(int i) const { return view_at_[i]; }

  // Total bandwidth restricted to the assigned views: for every transmitted view, the
  // size of the union of subscriber trees of the desired views that use it.
  Bandwidth selection_cost(const ViewSelection& theta) const;

 private:
  const ShortestPathTree* tree_;
  const DemandMap* demand_;
  std::vector<ArcSet> per_view_;  // index = view, 0 unused
  std::vector<ViewId> view_at_;
};

// Per-arc union of the sources received by the terminals below each arc.
EdgeViewLoad edge_view_load(const ShortestPathTree& tree, const DemandMap& demand, const ViewSelection& theta);

// Total bandwidth consumption of a valid theta. Throws ValidationError with the
// validator's report when theta is invalid for D.
Bandwidth evaluate_cost(const ShortestPathTree& tree, const DemandMap& demand, const ViewSelection& theta,
                        QualityConstraint d);

ArcSet subscriber_tree(const ShortestPathTree& tree, const DemandMap& demand, std::span<const ViewId> views);

// c_{k,k}: arcs of the multicast tree spanning v's subscribers.
Bandwidth direct_cost(const ShortestPathTree& tree, const DemandMap& demand, ViewId v);

// Expansion cost of serving the subscribers of `inner` from (left, right).
// Requires right - left <= D and left < v < right for v in inner; throws
// std::invalid_argument otherwise. kExact is not a closed form and is rejected.
Bandwidth expansion_cost(const SubscriberIndex& index, std::span<const ViewId> inner, ViewId left, ViewId right,
                         QualityConstraint d, PhiMode mode = PhiMode::kLiteral);
Bandwidth expansion_cost(const ShortestPathTree& tree, const DemandMap& demand, std::span<const ViewId> inner,
                         ViewId left, ViewId right, QualityConstraint d, PhiMode mode = PhiMode::kLiteral);

}  // namespace mmds
