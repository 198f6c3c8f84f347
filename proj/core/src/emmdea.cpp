#include "mmds/emmdea.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

#include "mmds/errors.hpp"
#include "mmds/tree.hpp"

namespace mmds {

namespace {

// Window cell for one view. `users` holds, for a fixed view f, the desired
// views served by f as bits (v - f + D - 1); only kept in exact mode.
struct Cell {
  std::uint8_t fixed = 0;
  std::uint8_t pending = 0;
  std::uint16_t users = 0;
};

struct Assignment {
  int view;
  int left;
};

struct State {
  std::vector<Cell> window;  // offset o <-> view n - D + 1 + o after column n
  Bandwidth cost;
  int synthesized = 0;
  int parent = -1;
  bool fixed_here = false;
  std::vector<Assignment> assigned;  // right source is this column
};

std::string key_of(const std::vector<Cell>& w) {
  std::string key(w.size() * 4, '\0');
  for (std::size_t i = 0; i < w.size(); ++i) {
    key[4 * i] = static_cast<char>(w[i].fixed);
    key[4 * i + 1] = static_cast<char>(w[i].pending);
    key[4 * i + 2] = static_cast<char>(w[i].users & 0xff);
    key[4 * i + 3] = static_cast<char>(w[i].users >> 8);
  }
  return key;
}

class SegmentDp {
 public:
  SegmentDp(const SubscriberIndex& index, const Segment& seg, int d, const ExtendedOptions& options)
      : index_(index), seg_(seg), D_(d), options_(options), lo_(seg.lo.index()), hi_(seg.hi.index()) {
    width_ = 2 * D_ - 1;
    if (options_.phi == PhiMode::kExact) {
      if (width_ > 16) throw GuardExceeded("quality constraint too large for the extended solver; use a smaller D");
      cache_.assign(static_cast<std::size_t>(hi_ - lo_ + 1) << width_, -1);
    }
  }

  std::pair<Bandwidth, ViewSelection> run() {
    std::vector<std::vector<State>> layers(static_cast<std::size_t>(hi_ - lo_) + 1);
    State start;
    start.window.assign(D_, Cell{});
    std::vector<State> prev{start};

    for (int n = lo_; n <= hi_; ++n) {
      std::vector<State> next;
      std::unordered_map<std::string, int> seen;
      for (int si = 0; si < static_cast<int>(prev.size()); ++si) expand(n, prev[si], si, next, seen);
      if (next.empty()) throw InternalError("extended DP has no state at column " + std::to_string(n));
      layers[n - lo_] = next;
      prev = std::move(next);
    }

    int best = -1;
    for (int i = 0; i < static_cast<int>(prev.size()); ++i) {
      bool open = std::any_of(prev[i].window.begin(), prev[i].window.end(), [](const Cell& c) { return c.pending; });
      if (open) continue;
      if (best < 0 || better(prev[i], prev[best])) best = i;
    }
    if (best < 0) throw InternalError("extended DP ended with unresolved views");

    ViewSelection theta(SelectionMode::kCrossingAllowed);
    int idx = best;
    for (int n = hi_; n >= lo_; --n) {
      const auto& s = layers[n - lo_][idx];
      if (s.fixed_here && index_.demand().is_desired(ViewId(n))) theta.assign_direct(ViewId(n));
      for (auto a : s.assigned) theta.assign(ViewId(a.view), SourcePair{ViewId(a.left), ViewId(n)});
      idx = s.parent;
    }
    return {prev[best].cost, theta};
  }

 private:
  static bool better(const State& a, const State& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.synthesized < b.synthesized;
  }

  int view_at(int n, int o) const { return n - D_ + 1 + o; }

  bool desired(int v) const { return v >= lo_ && v <= hi_ && index_.demand().is_desired(ViewId(v)); }

  std::size_t tree_count(int f, std::uint16_t mask) {
    auto& slot = cache_[(static_cast<std::size_t>(f - lo_) << width_) | mask];
    if (slot < 0) {
      std::vector<ViewId> views;
      for (int b = 0; b < width_; ++b)
        if (mask >> b & 1) views.push_back(ViewId(f + b - D_ + 1));
      slot = static_cast<long long>(index_.tree_of(views).count());
    }
    return static_cast<std::size_t>(slot);
  }

  // Exact-mode increment of adding view v to f's users.
  std::size_t add_user(int f, Cell& cell, int v) {
    auto before = tree_count(f, cell.users);
    cell.users |= static_cast<std::uint16_t>(1u << (v - f + D_ - 1));
    return tree_count(f, cell.users) - before;
  }

  // A pending view v is still resolvable after column n if some r >= n+1 with
  // r <= v + D - 1 exists and a fixed left source lies in [n + 1 - D, v - 1].
  bool resolvable(const std::vector<Cell>& w, int n, int v) const {
    if (v + D_ - 1 < n + 1) return false;
    for (int o = 0; o < D_; ++o) {
      int l = view_at(n, o);
      if (l >= n + 1 - D_ && l < v && w[o].fixed) return true;
    }
    return false;
  }

  void push(State s, std::vector<State>& next, std::unordered_map<std::string, int>& seen, int n) {
    for (int o = 0; o < D_; ++o)
      if (s.window[o].pending && !resolvable(s.window, n, view_at(n, o))) return;
    auto key = key_of(s.window);
    auto it = seen.find(key);
    if (it == seen.end()) {
      if (next.size() >= options_.max_states)
        throw GuardExceeded("extended solver exceeded " + std::to_string(options_.max_states) +
                            " states per column; use a smaller D");
      seen.emplace(std::move(key), static_cast<int>(next.size()));
      next.push_back(std::move(s));
    } else if (better(s, next[it->second])) {
      next[it->second] = std::move(s);
    }
  }

  void expand(int n, const State& from, int from_index, std::vector<State>& next,
              std::unordered_map<std::string, int>& seen) {
    const bool exact = options_.phi == PhiMode::kExact;
    const bool want = desired(n);

    // Shifted window: old offset o+1 becomes new offset o; the new last cell is n.
    auto shifted = [&](const std::vector<Cell>& old) {
      std::vector<Cell> w(old.begin() + 1, old.end());
      w.push_back(Cell{});
      return w;
    };

    // Option A: n is not transmitted.
    {
      if (!from.window[0].pending) {
        State s;
        s.window = shifted(from.window);
        s.window.back().pending = want ? 1 : 0;
        s.cost = from.cost;
        s.synthesized = from.synthesized + (want ? 1 : 0);
        s.parent = from_index;
        push(std::move(s), next, seen, n);
      }
    }

    // Option B: n is transmitted; every pending view is assigned to (l, n) or left pending.
    std::vector<int> pend;
    for (int o = 0; o < D_; ++o)
      if (from.window[o].pending) pend.push_back(o);

    State base;
    base.window = from.window;  // still in the old frame during enumeration
    base.cost = from.cost + Bandwidth(index_.tree_of(ViewId(n)).count());
    base.synthesized = from.synthesized;
    base.parent = from_index;
    base.fixed_here = true;

    Cell self;
    self.fixed = 1;
    if (want && exact) self.users = static_cast<std::uint16_t>(1u << (D_ - 1));

    // Old frame: offset o <-> view n - D + o.
    auto old_view = [&](int o) { return n - D_ + o; };

    std::vector<std::pair<int, int>> chosen;  // (pending offset, left offset) or left offset -1
    auto finish = [&](State s, Cell me) {
      std::vector<std::pair<int, std::vector<ViewId>>> groups;
      for (auto [po, lo] : chosen) {
        if (lo < 0) continue;
        int v = old_view(po), l = old_view(lo);
        s.window[po].pending = 0;
        s.assigned.push_back({v, l});
        if (exact) {
          s.cost += Bandwidth(add_user(l, s.window[lo], v));
          auto before = tree_count(n, me.users);
          me.users |= static_cast<std::uint16_t>(1u << (v - n + D_ - 1));
          s.cost += Bandwidth(tree_count(n, me.users) - before);
        } else {
          auto g = std::find_if(groups.begin(), groups.end(), [&](auto& e) { return e.first == l; });
          if (g == groups.end()) {
            groups.push_back({l, {}});
            g = groups.end() - 1;
          }
          g->second.push_back(ViewId(v));
        }
      }
      for (auto& [l, views] : groups)
        s.cost += expansion_cost(index_, views, ViewId(l), ViewId(n), QualityConstraint(D_), options_.phi);
      if (s.window[0].pending) return;
      std::vector<Cell> w(s.window.begin() + 1, s.window.end());
      w.push_back(me);
      if (!exact)
        for (auto& c : w) c.users = 0;
      s.window = std::move(w);
      std::sort(s.assigned.begin(), s.assigned.end(), [](auto a, auto b) { return a.view < b.view; });
      push(std::move(s), next, seen, n);
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == pend.size()) {
        finish(base, self);
        return;
      }
      int po = pend[i];
      int v = old_view(po);
      // leave pending (checked for resolvability after the shift)
      chosen.push_back({po, -1});
      rec(i + 1);
      chosen.pop_back();
      for (int lo = 0; lo < po; ++lo) {
        int l = old_view(lo);
        if (!base.window[lo].fixed || n - l > D_ || l >= v) continue;
        chosen.push_back({po, lo});
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }

  const SubscriberIndex& index_;
  const Segment& seg_;
  int D_;
  ExtendedOptions options_;
  int lo_, hi_;
  int width_;
  std::vector<long long> cache_;
};

}  // namespace

SolveResult solve_extended(const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                           ExtendedOptions options) {
  SubscriberIndex index(tree, demand);
  SolveResult result;
  result.solver = "emmdea";
  result.selection = ViewSelection(SelectionMode::kCrossingAllowed);
  for (auto& seg : segment_views(demand, d)) {
    auto [cost, theta] = SegmentDp(index, seg, d.value(), options).run();
    result.total += cost;
    result.selection.merge(theta);
    result.per_segment.push_back({seg, cost});
  }
  auto violations = validate_selection(result.selection, demand, d);
  if (!violations.empty()) throw InternalError("extended solver produced an invalid selection: " + describe(violations));
  result.transmitted = result.selection.transmitted();
  result.evaluated = evaluate_cost(tree, demand, result.selection, d);
  if (options.phi == PhiMode::kExact && result.evaluated != result.total)
    throw InternalError("extended DP value disagrees with the evaluated cost of its selection");
  return result;
}

}  // namespace mmds
