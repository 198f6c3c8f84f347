#include "mmds/hmmdea.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "mmds/errors.hpp"
#include "mmds/tree.hpp"

namespace mmds {

namespace {

struct Sweep {
  std::vector<BitSet> label;  // M_i
  std::uint64_t u = 0;        // u(M_s)
};

// Postorder pass: M_i is the node's own sources joined with its children's
// labels, and u accumulates |M_j| over every arc into a child j.
Sweep sweep(const ShortestPathTree& tree, const SubscriberIndex& index, const ViewSelection& theta) {
  const auto width = static_cast<std::size_t>(index.universe_size()) + 1;
  Sweep s;
  s.label.assign(tree.size(), BitSet(width));
  std::vector<std::uint64_t> u(tree.size(), 0);
  for (int i : tree.postorder()) {
    if (tree.is_terminal(i)) {
      const auto& p = theta.at(index.view_at(i));
      s.label[i].set(p.left.index());
      s.label[i].set(p.right.index());
    }
    for (int j : tree.children(i)) {
      s.label[i] |= s.label[j];
      u[i] += u[j] + s.label[j].count();
    }
  }
  s.u = u[0];
  return s;
}

}  // namespace

HeuristicResult h_solve(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d) {
  SubscriberIndex index(tree, demand);
  const auto segments = segment_views(demand, d);
  auto segment_of = [&](ViewId v) -> const Segment& {
    for (auto& s : segments)
      if (s.contains(v)) return s;
    throw InternalError("view outside every segment");
  };

  ViewSelection theta = ViewSelection::identity(demand);
  std::set<ViewId> sent(demand.desired_views().begin(), demand.desired_views().end());  // M_s

  HeuristicResult out;
  auto current = sweep(tree, index, theta);
  out.initial = Bandwidth(current.u);

  while (true) {
    std::set<ViewId> sources;
    for (auto& [v, p] : theta.assignments())
      if (!p.direct()) {
        sources.insert(p.left);
        sources.insert(p.right);
      }

    struct Candidate {
      ViewId view;
      SourcePair pair;
      std::uint64_t u;
    };
    std::optional<Candidate> best;

    for (auto vk : sent) {
      const auto& seg = segment_of(vk);
      if (vk == seg.lo || vk == seg.hi || sources.count(vk)) continue;
      if (!theta.at(vk).direct()) continue;
      for (auto l : sent) {
        if (!(l < vk) || !seg.contains(l)) continue;
        for (auto r : sent) {
          if (!(vk < r) || !seg.contains(r) || r - l > d.value()) continue;
          // Non-crossing: nothing else may stay transmitted strictly inside (l, r).
          bool clear = std::none_of(sent.begin(), sent.end(), [&](ViewId w) { return l < w && w < r && w != vk; });
          if (!clear) continue;
          ViewSelection trial = theta;
          trial.assign(vk, SourcePair{l, r});
          auto s = sweep(tree, index, trial);
          Candidate c{vk, SourcePair{l, r}, s.u};
          if (s.u >= current.u) continue;
          if (!best || c.u < best->u ||
              (c.u == best->u && (c.view < best->view ||
                                  (c.view == best->view && c.pair.width() < best->pair.width()))))
            best = c;
        }
      }
    }
    if (!best) break;

    theta.assign(best->view, best->pair);
    sent.erase(best->view);
    current = sweep(tree, index, theta);
    if (current.u != best->u) throw InternalError("heuristic sweep is not reproducible");
    out.rounds.push_back({best->view, best->pair, Bandwidth(current.u), evaluate_cost(tree, demand, theta, d)});
  }

  auto& r = out.result;
  r.solver = "hmmdea";
  r.total = Bandwidth(current.u);
  r.selection = theta;
  r.transmitted = theta.transmitted();
  for (auto& seg : segments) {
    ViewSelection part;
    for (auto v : seg.members) part.assign(v, theta.at(v));
    r.per_segment.push_back({seg, index.selection_cost(part)});
  }
  r.evaluated = evaluate_cost(tree, demand, theta, d);
  out.delivery.per_arc = std::move(current.label);
  out.delivery.per_arc[0] = BitSet(static_cast<std::size_t>(demand.universe_size()) + 1);
  return out;
}

}  // namespace mmds
