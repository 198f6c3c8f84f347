#include <gtest/gtest.h>

#include <random>

#include "mmds/errors.hpp"
#include "mmds/mmdea.hpp"
#include "mmds/oracle.hpp"
#include "support/builders.hpp"
#include "support/fig1.hpp"
#include "support/random_instance.hpp"

using namespace mmds;

namespace {

// Random non-crossing selection: a transmitted set F per segment with gaps <= D,
// every other desired view served by its neighbours in F.
ViewSelection random_selection(const DemandMap& dm, int d, std::mt19937_64& rng) {
  ViewSelection th;
  for (const auto& seg : segment_views(dm, QualityConstraint(d))) {
    std::vector<int> f{seg.lo.index()};
    while (f.back() < seg.hi.index()) {
      int step = std::uniform_int_distribution<int>(1, d)(rng);
      int next = std::min(f.back() + step, seg.hi.index());
      f.push_back(next);
    }
    std::size_t j = 0;
    for (auto v : seg.members) {
      while (f[j + 1] < v.index()) ++j;
      if (f[j] == v.index() || f[j + 1] == v.index()) th.assign_direct(v);
      else th.assign(v, {ViewId(f[j]), ViewId(f[j + 1])});
    }
    for (int x : f)
      if (dm.is_desired(ViewId(x))) th.assign_direct(ViewId(x));
  }
  return th;
}

}  // namespace

TEST(Oracle, Fig1) {
  auto f = fixtures::fig1();
  QualityConstraint d(4);
  EXPECT_EQ(omds(f.tree, f.demand).total, Bandwidth(45));
  EXPECT_EQ(brute_force_mmds(f.tree, f.demand, d).total, Bandwidth(32));
  EXPECT_EQ(brute_force_emmds(f.tree, f.demand, d).total, Bandwidth(32));
}

TEST(Oracle, AgreesWithExactSolver) {
  for (std::uint64_t s = 0; s < 400; ++s) {
    auto in = fixtures::random_instance(s);
    QualityConstraint d(in.d);
    auto o = brute_force_mmds(in.tree, in.demand, d);
    EXPECT_EQ(o.total, o.evaluated);
    EXPECT_EQ(solve_general(in.tree, in.demand, d).total, o.total) << "seed " << s;
  }
}

TEST(Oracle, LowerBoundsRandomSelections) {
  std::mt19937_64 rng(11);
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto in = fixtures::random_instance(s);
    auto best = brute_force_mmds(in.tree, in.demand, QualityConstraint(in.d)).total;
    for (int rep = 0; rep < 20; ++rep) {
      auto th = random_selection(in.demand, in.d, rng);
      ASSERT_TRUE(validate_selection(th, in.demand, QualityConstraint(in.d)).empty()) << to_string(th);
      EXPECT_LE(best, evaluate_cost(in.tree, in.demand, th, QualityConstraint(in.d)));
    }
  }
}

TEST(Oracle, DirectDeliveryDominated) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto in = fixtures::random_instance(s);
    auto direct = omds(in.tree, in.demand);
    EXPECT_EQ(direct.selection, ViewSelection::identity(in.demand));
    EXPECT_LE(solve_general(in.tree, in.demand, QualityConstraint(in.d)).total, direct.total);
  }
}

TEST(Oracle, SpanGuard) {
  std::map<NodeId, int> want;
  std::vector<int> parent{0};
  for (int v = 1; v <= kMaxOracleSpan + 2; ++v) {
    parent.push_back(0);
    want[v] = v;
  }
  auto f = fixtures::make_fixture(parent, want, kMaxOracleSpan + 2);
  EXPECT_THROW(brute_force_mmds(f.tree, f.demand, QualityConstraint(2)), GuardExceeded);
  EXPECT_THROW(brute_force_emmds(f.tree, f.demand, QualityConstraint(2), 1000), GuardExceeded);
}
