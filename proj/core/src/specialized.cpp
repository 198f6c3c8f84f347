#include <array>

#include "mmds/errors.hpp"
#include "mmds/mmdea.hpp"

namespace mmds {

namespace {

// Fixed-shape lattice shared by the D = 2 and D = 3 recurrences. Variant a >= 1
// anchors at k - a - 1 and synthesizes the desired views in between; variant 0
// sends v_k for its own subscribers only.
template <int D>
class SmallLattice {
 public:
  static constexpr int kVariants = D;  // 0 .. D-1

  SmallLattice(const Segment& seg, const SubscriberIndex& index, PhiMode mode)
      : seg_(seg), index_(index), mode_(mode), lo_(seg.lo.index()), hi_(seg.hi.index()) {
    cells_.resize(static_cast<std::size_t>(hi_ - lo_) + 1);
  }

  SegmentSolution run() {
    cell(lo_)[0] = {size(index_.tree_of(seg_.lo)), {ViewId(lo_)}, -1, -1};
    for (int k = lo_ + 1; k <= hi_; ++k) {
      const ViewId vk(k);
      const bool desired = index_.demand().is_desired(vk);
      auto& here = cell(k);

      // c^0: min over c_{m,k-1} .. c_{m,k-D} without skipping a desired view.
      if (desired) {
        for (int p = k - 1; p >= std::max(lo_, k - D); --p) {
          for (int j = 0; j < kVariants; ++j) {
            auto c = cell(p)[j].cost + size(index_.tree_of(vk));
            if (c < here[0].cost) here[0] = {c, {vk}, p, j};
          }
          if (index_.demand().is_desired(ViewId(p))) break;
        }
      }

      for (int a = 1; a < kVariants; ++a) {
        const int p = k - a - 1;
        if (p < lo_) break;
        std::vector<ViewId> inner;
        for (int x = p + 1; x < k; ++x)
          if (index_.demand().is_desired(ViewId(x))) inner.push_back(ViewId(x));
        if (inner.empty()) continue;
        std::vector<ViewId> served = inner;
        if (desired) served.push_back(vk);
        for (int j = 0; j < kVariants; ++j) {
          const auto& prev = cell(p)[j];
          if (!prev.cost.feasible()) continue;
          Bandwidth c;
          if (mode_ == PhiMode::kExact) {
            // The anchor's multicast tree grows from its current users to also
            // reach `inner`; v_k starts a tree for its own users plus `inner`.
            auto grown = index_.tree_of(prev.users);
            auto before = grown.count();
            grown |= index_.tree_of(inner);
            c = prev.cost + Bandwidth(grown.count() - before) + size(index_.tree_of(served));
          } else {
            c = prev.cost + size(index_.tree_of(vk)) +
                expansion_cost(index_, inner, ViewId(p), vk, QualityConstraint(D), mode_);
          }
          if (c < here[a].cost) here[a] = {c, served, p, j};
        }
      }
    }

    int best = 0;
    for (int j = 1; j < kVariants; ++j)
      if (cell(hi_)[j].cost < cell(hi_)[best].cost) best = j;

    SegmentSolution out{cell(hi_)[best].cost, ViewSelection(SelectionMode::kNonCrossing)};
    int k = hi_, j = best;
    while (k >= lo_) {
      const auto& s = cell(k)[j];
      if (!s.cost.feasible()) throw InternalError("infeasible state on the backtracking path");
      if (index_.demand().is_desired(ViewId(k))) out.theta.assign_direct(ViewId(k));
      if (j > 0)
        for (int x = s.prev + 1; x < k; ++x)
          if (index_.demand().is_desired(ViewId(x))) out.theta.assign(ViewId(x), SourcePair{ViewId(s.prev), ViewId(k)});
      if (k == lo_) break;
      const int pk = s.prev, pj = s.prev_variant;
      k = pk;
      j = pj;
    }
    return out;
  }

 private:
  struct State {
    Bandwidth cost = Bandwidth::infeasible();
    std::vector<ViewId> users;  // desired views served by v_k in this state
    int prev = -1;
    int prev_variant = -1;
  };

  static Bandwidth size(const ArcSet& s) { return Bandwidth(s.count()); }
  std::array<State, kVariants>& cell(int k) { return cells_[k - lo_]; }

  const Segment& seg_;
  const SubscriberIndex& index_;
  PhiMode mode_;
  int lo_, hi_;
  std::vector<std::array<State, kVariants>> cells_;
};

}  // namespace

SegmentSolution solve_d2(const Segment& segment, const SubscriberIndex& index, PhiMode mode) {
  return SmallLattice<2>(segment, index, mode).run();
}

SegmentSolution solve_d3(const Segment& segment, const SubscriberIndex& index, PhiMode mode) {
  return SmallLattice<3>(segment, index, mode).run();
}

}  // namespace mmds
