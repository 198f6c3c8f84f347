#include "mmds/oracle.hpp"

#include <functional>
#include <limits>

#include "mmds/errors.hpp"
#include "mmds/tree.hpp"

namespace mmds {

namespace {

// Total bandwidth by direct per-arc union, restricted to terminals whose desired view
// is in `views`. Deliberately shares nothing with SubscriberIndex.
class ArcUnion {
 public:
  ArcUnion(const ShortestPathTree& tree, const DemandMap& demand) : tree_(tree), demand_(demand) {
    below_.resize(tree.size());
    for (int t : tree.terminals()) {
      auto v = demand.demand().at(tree.graph_node(t));
      for (int x = t; x > 0; x = tree.parent(x)) below_[x].push_back(v);
    }
  }

  std::uint64_t cost(const std::map<ViewId, SourcePair>& theta) const {
    std::uint64_t total = 0;
    BitSet seen(static_cast<std::size_t>(demand_.universe_size()) + 1);
    for (std::size_t x = 1; x < tree_.size(); ++x) {
      seen = BitSet(seen.width());
      for (auto v : below_[x]) {
        auto it = theta.find(v);
        if (it == theta.end()) continue;
        seen.set(it->second.left.index());
        seen.set(it->second.right.index());
      }
      total += seen.count();
    }
    return total;
  }

 private:
  const ShortestPathTree& tree_;
  const DemandMap& demand_;
  std::vector<std::vector<ViewId>> below_;  // desired views of terminals under each arc
};

SolveResult finish(const char* name, const ShortestPathTree& tree, const DemandMap& demand, ViewSelection theta,
                   Bandwidth total, std::vector<SegmentCost> per_segment, std::optional<QualityConstraint> d) {
  SolveResult r;
  r.solver = name;
  r.total = total;
  r.transmitted = theta.transmitted();
  r.per_segment = std::move(per_segment);
  r.evaluated = d ? evaluate_cost(tree, demand, theta, *d) : edge_view_load(tree, demand, theta).total();
  r.selection = std::move(theta);
  return r;
}

}  // namespace

SolveResult omds(const ShortestPathTree& tree, const DemandMap& demand) {
  check_consistent(tree, demand);
  ArcUnion arcs(tree, demand);
  auto theta = ViewSelection::identity(demand);
  return finish("omds", tree, demand, theta, Bandwidth(arcs.cost(theta.assignments())), {}, std::nullopt);
}

SolveResult brute_force_mmds(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d) {
  check_consistent(tree, demand);
  ArcUnion arcs(tree, demand);
  const int D = d.value();
  ViewSelection theta(SelectionMode::kNonCrossing);
  Bandwidth total{};
  std::vector<SegmentCost> per_segment;

  for (auto& seg : segment_views(demand, d)) {
    if (seg.span() > kMaxOracleSpan)
      throw GuardExceeded("segment " + std::to_string(seg.lo.index()) + ".." + std::to_string(seg.hi.index()) +
                          " spans more than " + std::to_string(kMaxOracleSpan) + " views");
    const int lo = seg.lo.index(), hi = seg.hi.index();
    const int inner = std::max(0, hi - lo - 1);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::map<ViewId, SourcePair> best_theta;

    for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
      std::vector<int> f{lo};
      for (int b = 0; b < inner; ++b)
        if (mask >> b & 1) f.push_back(lo + 1 + b);
      if (hi != lo) f.push_back(hi);
      bool ok = true;
      for (std::size_t i = 1; i < f.size() && ok; ++i) ok = f[i] - f[i - 1] <= D;
      if (!ok) continue;

      std::map<ViewId, SourcePair> t;
      std::size_t pos = 0;
      for (auto v : seg.members) {
        while (pos + 1 < f.size() && f[pos + 1] <= v.index()) ++pos;
        if (f[pos] == v.index())
          t[v] = SourcePair{v, v};
        else
          t[v] = SourcePair{ViewId(f[pos]), ViewId(f[pos + 1])};
      }
      auto c = arcs.cost(t);
      if (c < best) {
        best = c;
        best_theta = std::move(t);
      }
    }
    for (auto& [v, p] : best_theta) theta.assign(v, p);
    total += Bandwidth(best);
    per_segment.push_back({seg, Bandwidth(best)});
  }
  return finish("oracle", tree, demand, theta, total, std::move(per_segment), d);
}

SolveResult brute_force_emmds(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                              std::uint64_t guard) {
  check_consistent(tree, demand);
  ArcUnion arcs(tree, demand);
  const int D = d.value();
  ViewSelection theta(SelectionMode::kCrossingAllowed);
  Bandwidth total{};
  std::vector<SegmentCost> per_segment;

  for (auto& seg : segment_views(demand, d)) {
    const int lo = seg.lo.index(), hi = seg.hi.index();
    // Theta(v): direct, or any (l, r) inside the segment with l < v < r and r - l <= D.
    std::vector<std::vector<SourcePair>> options;
    long double product = 1;
    for (auto v : seg.members) {
      std::vector<SourcePair> opts{{v, v}};
      for (int l = std::max(lo, v.index() - D + 1); l < v.index(); ++l)
        for (int r = v.index() + 1; r <= std::min(hi, l + D); ++r) opts.push_back({ViewId(l), ViewId(r)});
      product *= static_cast<long double>(opts.size());
      options.push_back(std::move(opts));
    }
    if (product > static_cast<long double>(guard))
      throw GuardExceeded("extended enumeration needs " + std::to_string(static_cast<double>(product)) +
                          " assignments, above the guard of " + std::to_string(guard));

    const auto n = seg.members.size();
    std::map<ViewId, SourcePair> cur;
    std::map<ViewId, SourcePair> best_theta;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::map<ViewId, int> must_direct;  // desired views already used as a source

    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
      if (i == n) {
        auto c = arcs.cost(cur);
        if (c < best) {
          best = c;
          best_theta = cur;
        }
        return;
      }
      auto v = seg.members[i];
      for (auto& p : options[i]) {
        if (!p.direct()) {
          if (must_direct[v] > 0) continue;
          auto lp = cur.find(p.left);
          if (lp != cur.end() && !lp->second.direct()) continue;
        }
        cur[v] = p;
        if (!p.direct()) {
          ++must_direct[p.left];
          ++must_direct[p.right];
        }
        dfs(i + 1);
        if (!p.direct()) {
          --must_direct[p.left];
          --must_direct[p.right];
        }
        cur.erase(v);
      }
    };
    dfs(0);
    for (auto& [v, p] : best_theta) theta.assign(v, p);
    total += Bandwidth(best);
    per_segment.push_back({seg, Bandwidth(best)});
  }
  return finish("oracle-ext", tree, demand, theta, total, std::move(per_segment), d);
}

}  // namespace mmds
