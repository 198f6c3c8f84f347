#include "mmds/demand.hpp"

#include <algorithm>

#include "mmds/errors.hpp"
#include "mmds/tree.hpp"

namespace mmds {

DemandMap::DemandMap(int universe_size, std::map<NodeId, ViewId> demand)
    : universe_size_(universe_size), demand_(std::move(demand)) {
  if (universe_size < 1) throw ValidationError("view universe must contain at least one view");
  for (auto [t, v] : demand_) {
    if (v.index() < 1 || v.index() > universe_size_)
      throw ValidationError("terminal " + std::to_string(t) + " desires view " + std::to_string(v.index()) +
                            " outside 1.." + std::to_string(universe_size_));
    desired_.push_back(v);
  }
  std::sort(desired_.begin(), desired_.end());
  desired_.erase(std::unique(desired_.begin(), desired_.end()), desired_.end());
}

bool DemandMap::is_desired(ViewId v) const { return std::binary_search(desired_.begin(), desired_.end(), v); }

std::vector<NodeId> DemandMap::terminals() const {
  std::vector<NodeId> out;
  out.reserve(demand_.size());
  for (auto& [t, v] : demand_) out.push_back(t);
  return out;
}

void check_consistent(const ShortestPathTree& tree, const DemandMap& demand) {
  std::vector<NodeId> tree_terms;
  for (int i : tree.terminals()) tree_terms.push_back(tree.graph_node(i));
  if (tree_terms != demand.terminals())
    throw ValidationError("demand terminals do not match the tree's terminals");
}

std::vector<Segment> segment_views(const DemandMap& demand, QualityConstraint d) {
  std::vector<Segment> out;
  for (auto v : demand.desired_views()) {
    if (out.empty() || v - out.back().hi > d.value()) out.push_back(Segment{v, v, {}});
    out.back().hi = v;
    out.back().members.push_back(v);
  }
  return out;
}

}  // namespace mmds
