#pragma once

#include <map>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/view.hpp"

namespace mmds {

class ShortestPathTree;

// Preferred-view function: terminal (graph node) -> desired view in 1..K.
class DemandMap {
 public:
  DemandMap(int universe_size, std::map<NodeId, ViewId> demand);

  int universe_size() const { return universe_size_; }
  const std::map<NodeId, ViewId>& demand() const { return demand_; }
  // Distinct desired views, ascending.
  const std::vector<ViewId>& desired_views() const { return desired_; }
  bool is_desired(ViewId v) const;
  std::size_t terminal_count() const { return demand_.size(); }

  std::vector<NodeId> terminals() const;

 private:
  int universe_size_;
  std::map<NodeId, ViewId> demand_;
  std::vector<ViewId> desired_;
};

// Throws ValidationError unless the demand keys are exactly the tree's terminals.
void check_consistent(const ShortestPathTree& tree, const DemandMap& demand);

// Maximal run of desired views whose consecutive gaps are at most D.
struct Segment {
  ViewId lo;
  ViewId hi;
  std::vector<ViewId> members;

  int span() const { return hi - lo; }
  bool contains(ViewId v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

std::vector<Segment> segment_views(const DemandMap& demand, QualityConstraint d);

}  // namespace mmds
