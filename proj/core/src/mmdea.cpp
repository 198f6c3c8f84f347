#include "mmds/mmdea.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "mmds/errors.hpp"
#include "mmds/tree.hpp"

namespace mmds {

CostTable::CostTable(Segment segment, int d, PhiMode mode)
    : segment_(std::move(segment)), d_(d), mode_(mode), columns_(static_cast<std::size_t>(segment_.span()) + 1) {}

const Variant* CostTable::find(int k, int d) const {
  if (k < segment_.lo.index() || k > segment_.hi.index()) return nullptr;
  for (auto& v : column(k))
    if (v.d == d) return &v;
  return nullptr;
}

const Variant& CostTable::at(VariantRef ref) const {
  auto* v = find(ref.column, ref.variant);
  if (!v) throw InternalError("no DP state at column " + std::to_string(ref.column) + " variant " +
                              std::to_string(ref.variant));
  return *v;
}

Bandwidth CostTable::best(int k) const { return at(best_ref(k)).cost; }

VariantRef CostTable::best_ref(int k) const {
  const auto& col = column(k);
  VariantRef ref{k, col.front().d};
  Bandwidth c = col.front().cost;
  for (auto& v : col)
    if (v.cost < c) {
      c = v.cost;
      ref.variant = v.d;
    }
  return ref;
}

namespace {

Bandwidth units(std::size_t n) { return Bandwidth(static_cast<std::uint64_t>(n)); }

// Desired views strictly between p and k.
std::vector<ViewId> inner_views(const DemandMap& demand, int p, int k) {
  std::vector<ViewId> out;
  for (int x = p + 1; x < k; ++x)
    if (demand.is_desired(ViewId(x))) out.push_back(ViewId(x));
  return out;
}

}  // namespace

CostTable build_cost_table(const SubscriberIndex& index, const Segment& segment, QualityConstraint d, PhiMode mode) {
  const auto& demand = index.demand();
  const int lo = segment.lo.index();
  const int hi = segment.hi.index();
  const int D = d.value();
  CostTable table(segment, D, mode);

  {
    Variant first;
    first.d = 0;
    first.cost = units(index.tree_of(segment.lo).count());
    first.choice = {lo, 0};
    first.theta.assign_direct(segment.lo);
    table.column(lo).push_back(std::move(first));
  }

  for (int k = lo + 1; k <= hi; ++k) {
    const ViewId vk(k);
    const bool desired = demand.is_desired(vk);
    const auto ck = units(index.tree_of(vk).count());
    auto& col = table.column(k);

    Variant direct;
    direct.d = 0;
    if (desired) {
      for (int p = k - 1; p >= std::max(lo, k - D); --p) {
        for (auto& prev : table.column(p)) {
          auto c = prev.cost + ck;
          if (c < direct.cost) {
            direct.cost = c;
            direct.choice = {p, prev.d};
          }
        }
        if (demand.is_desired(ViewId(p))) break;  // cannot skip a desired view
      }
      if (direct.cost.feasible()) {
        direct.theta = table.at(direct.choice).theta;
        direct.theta.assign_direct(vk);
      }
    }
    col.push_back(std::move(direct));

    for (int dd = 2; dd <= std::min(D, k - lo); ++dd) {
      const int p = k - dd;
      Variant var;
      var.d = dd;
      auto inner = inner_views(demand, p, k);
      if (!inner.empty()) {
        Bandwidth phi{};
        if (mode != PhiMode::kExact) phi = expansion_cost(index, inner, ViewId(p), vk, d, mode);
        for (auto& prev : table.column(p)) {
          if (!prev.cost.feasible()) continue;
          Bandwidth c;
          ViewSelection theta;
          if (mode == PhiMode::kExact) {
            theta = prev.theta;
            for (auto v : inner) theta.assign(v, SourcePair{ViewId(p), vk});
            if (desired) theta.assign_direct(vk);
            c = index.selection_cost(theta);
          } else {
            c = prev.cost + ck + phi;
          }
          if (c < var.cost) {
            var.cost = c;
            var.choice = {p, prev.d};
            if (mode == PhiMode::kExact) var.theta = std::move(theta);
          }
        }
        if (mode != PhiMode::kExact && var.cost.feasible()) {
          var.theta = table.at(var.choice).theta;
          for (auto v : inner) var.theta.assign(v, SourcePair{ViewId(p), vk});
          if (desired) var.theta.assign_direct(vk);
        }
      }
      col.push_back(std::move(var));
    }
  }
  return table;
}

ViewSelection backtrack(const CostTable& table) {
  const auto& seg = table.segment();
  const int lo = seg.lo.index();
  ViewSelection theta;
  VariantRef ref = table.best_ref(seg.hi.index());
  std::set<int> desired;
  for (auto v : seg.members) desired.insert(v.index());

  while (true) {
    const auto& var = table.at(ref);
    if (!var.cost.feasible())
      throw InternalError("backtracking reached an infeasible state at column " + std::to_string(ref.column));
    const int k = ref.column;
    if (desired.count(k)) theta.assign_direct(ViewId(k));
    if (k == lo) break;
    if (ref.variant == 0) {
      if (var.choice.column >= k || var.choice.column < lo)
        throw InternalError("dangling choice pointer at column " + std::to_string(k));
    } else {
      const int p = k - ref.variant;
      if (var.choice.column != p) throw InternalError("dangling choice pointer at column " + std::to_string(k));
      for (int x = p + 1; x < k; ++x)
        if (desired.count(x)) theta.assign(ViewId(x), SourcePair{ViewId(p), ViewId(k)});
    }
    ref = var.choice;
  }
  return theta;
}

SolveResult solve_general(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                          SolveOptions options) {
  SubscriberIndex index(tree, demand);
  auto segments = segment_views(demand, d);

  auto solve_one = [&](const Segment& seg) {
    auto table = build_cost_table(index, seg, d, options.phi);
    auto best = table.best(seg.hi.index());
    if (!best.feasible()) throw InternalError("segment has no feasible selection");
    auto theta = backtrack(table);
    if (!(theta.assignments() == table.at(table.best_ref(seg.hi.index())).theta.assignments()))
      throw InternalError("backtracked selection disagrees with the stored partial selection");
    return std::pair{best, std::move(theta)};
  };

  std::vector<std::pair<Bandwidth, ViewSelection>> parts;
  if (options.parallel_segments && segments.size() > 1) {
    std::vector<std::future<std::pair<Bandwidth, ViewSelection>>> futures;
    for (auto& seg : segments) futures.push_back(std::async(std::launch::async, solve_one, std::cref(seg)));
    for (auto& f : futures) parts.push_back(f.get());
  } else {
    for (auto& seg : segments) parts.push_back(solve_one(seg));
  }

  SolveResult result;
  result.solver = "mmdea";
  result.selection = ViewSelection(SelectionMode::kNonCrossing);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    result.total += parts[i].first;
    result.selection.merge(parts[i].second);
    result.per_segment.push_back({segments[i], parts[i].first});
  }
  auto violations = validate_selection(result.selection, demand, d);
  if (!violations.empty()) throw InternalError("solver produced an invalid selection: " + describe(violations));
  result.transmitted = result.selection.transmitted();
  result.evaluated = evaluate_cost(tree, demand, result.selection, d);
  if (options.phi == PhiMode::kExact && result.evaluated != result.total)
    throw InternalError("DP value disagrees with the evaluated cost of its selection");
  return result;
}

}  // namespace mmds
