#include "mmds/cost.hpp"

#include <stdexcept>

#include "mmds/errors.hpp"

namespace mmds {

const char* to_string(PhiMode mode) {
  switch (mode) {
    case PhiMode::kLiteral: return "literal";
    case PhiMode::kExact: return "exact";
    case PhiMode::kPerView: return "per-view";
  }
  return "unknown";
}

PhiMode parse_phi_mode(const std::string& name) {
  if (name == "literal") return PhiMode::kLiteral;
  if (name == "exact") return PhiMode::kExact;
  if (name == "per-view" || name == "perview") return PhiMode::kPerView;
  throw std::invalid_argument("unknown phi mode '" + name + "' (expected literal, exact or per-view)");
}

Bandwidth EdgeViewLoad::total() const {
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < per_arc.size(); ++i) n += per_arc[i].count();
  return Bandwidth(n);
}

SubscriberIndex::SubscriberIndex(const ShortestPathTree& tree, const DemandMap& demand)
    : tree_(&tree), demand_(&demand) {
  check_consistent(tree, demand);
  const int K = demand.universe_size();
  per_view_.assign(static_cast<std::size_t>(K) + 1, ArcSet(tree.size()));
  view_at_.assign(tree.size(), ViewId{});
  for (int t : tree.terminals()) {
    auto v = demand.demand().at(tree.graph_node(t));
    view_at_[t] = v;
    auto& arcs = per_view_[v.index()];
    for (int x = t; x > 0 && !arcs.test(x); x = tree.parent(x)) arcs.set(x);
  }
}

const ArcSet& SubscriberIndex::tree_of(ViewId v) const {
  if (v.index() < 1 || v.index() > universe_size()) return per_view_[0];
  return per_view_[v.index()];
}

ArcSet SubscriberIndex::tree_of(std::span<const ViewId> views) const {
  ArcSet out = empty_arcs();
  for (auto v : views) out |= tree_of(v);
  return out;
}

Bandwidth SubscriberIndex::selection_cost(const ViewSelection& theta) const {
  std::map<ViewId, ArcSet> served;
  for (auto& [v, p] : theta.assignments()) {
    for (auto src : {p.left, p.right}) {
      auto it = served.try_emplace(src, empty_arcs()).first;
      it->second |= tree_of(v);
    }
  }
  std::uint64_t total = 0;
  for (auto& [f, arcs] : served) total += arcs.count();
  return Bandwidth(total);
}

EdgeViewLoad edge_view_load(const ShortestPathTree& tree, const DemandMap& demand, const ViewSelection& theta) {
  check_consistent(tree, demand);
  const auto width = static_cast<std::size_t>(demand.universe_size()) + 1;
  EdgeViewLoad load;
  load.per_arc.assign(tree.size(), BitSet(width));
  for (int t : tree.terminals()) {
    auto v = demand.demand().at(tree.graph_node(t));
    auto p = theta.find(v);
    if (!p) continue;
    for (auto src : {p->left, p->right})
      if (src.index() >= 1 && static_cast<std::size_t>(src.index()) < width) load.per_arc[t].set(src.index());
  }
  for (int i : tree.postorder())
    if (i > 0) load.per_arc[tree.parent(i)] |= load.per_arc[i];
  load.per_arc[0] = BitSet(width);
  return load;
}

Bandwidth evaluate_cost(const ShortestPathTree& tree, const DemandMap& demand, const ViewSelection& theta,
                        QualityConstraint d) {
  auto violations = validate_selection(theta, demand, d);
  if (!violations.empty()) throw ValidationError("invalid view selection: " + describe(violations));
  return edge_view_load(tree, demand, theta).total();
}

ArcSet subscriber_tree(const ShortestPathTree& tree, const DemandMap& demand, std::span<const ViewId> views) {
  SubscriberIndex index(tree, demand);
  return index.tree_of(views);
}

Bandwidth direct_cost(const ShortestPathTree& tree, const DemandMap& demand, ViewId v) {
  SubscriberIndex index(tree, demand);
  return Bandwidth(index.tree_of(v).count());
}

Bandwidth expansion_cost(const SubscriberIndex& index, std::span<const ViewId> inner, ViewId left, ViewId right,
                         QualityConstraint d, PhiMode mode) {
  if (mode == PhiMode::kExact) throw std::invalid_argument("exact mode has no closed-form expansion cost");
  if (right - left > d.value() || right < left) throw std::invalid_argument("source pair wider than D");
  for (auto v : inner)
    if (!(left < v && v < right)) throw std::invalid_argument("inner view outside the source pair");

  const auto& tl = index.tree_of(left);
  const auto& tr = index.tree_of(right);
  if (mode == PhiMode::kPerView) {
    std::uint64_t sum = 0;
    for (auto v : inner) {
      const auto& tv = index.tree_of(v);
      sum += tv.count_minus(tl) + tv.count_minus(tr);
    }
    return Bandwidth(sum);
  }
  auto te = index.tree_of(inner);
  return Bandwidth(te.count_minus(tl) + te.count_minus(tr));
}

Bandwidth expansion_cost(const ShortestPathTree& tree, const DemandMap& demand, std::span<const ViewId> inner,
                         ViewId left, ViewId right, QualityConstraint d, PhiMode mode) {
  SubscriberIndex index(tree, demand);
  return expansion_cost(index, inner, left, right, d, mode);
}

}  // namespace mmds
