#include <gtest/gtest.h>

#include "maxmin/oracle.hpp"
#include "maxmin/separation.hpp"
#include "support/random.hpp"
#include "support/reference.hpp"

namespace maxmin {
namespace {

Point P(const char* s) { return Point::parse(s); }
Box B(const char* lo, const char* hi) { return Box(P(lo), P(hi)); }
Scalar S(const char* s) { return Scalar::parse(s); }

const Box kStrip = B("0,0.3", "1,0.5");
const GeneratedConvexSet kStripSet{P("0.4,0.8")};

// Random disjoint (B, C) on the 1/d grid.
std::pair<Box, GeneratedConvexSet> disjoint_instance(testing::InstanceGen& gen, std::size_t n, std::size_t gens) {
  while (true) {
    Box b = gen.box(n);
    auto c = gen.set(n, gens);
    if (!box_intersects_hull(b, c)) return {std::move(b), std::move(c)};
  }
}

TEST(BoxProfile, Examples) {
  const auto a = box_profile(B("0.2,0.6,0.4", "1,0.7,0.5"));
  EXPECT_EQ(a.t, 2u);
  EXPECT_EQ(a.l, 1u);
  EXPECT_EQ(a.u, P("0.6,0.6,0.5"));

  // A point box: only the coordinates tied with the largest pass the prefix test.
  EXPECT_EQ(box_profile(Box::point(P("0.3,0.8,0.1"))).t, 1u);
  EXPECT_EQ(box_profile(Box::point(P("0.8,0.3,0.8"))).t, 2u);

  EXPECT_EQ(box_profile(B("0.1,0.2", "0.9,0.8")).t, 2u);
}

TEST(BoxProfileProperty, MatchesDefinitionScan) {
  testing::InstanceGen gen(41, 10);
  for (int it = 0; it < 500; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 5));
    const Box b = gen.box(n);
    const auto prof = box_profile(b);
    for (std::size_t p = 1; p < n; ++p) EXPECT_LE(prof.upper_at(p), prof.upper_at(p - 1));
    std::size_t t = 0;
    for (std::size_t cand = 1; cand <= n; ++cand) {
      bool ok = true;
      for (std::size_t i = 0; i < cand; ++i) ok = ok && prof.lower_at(i) <= prof.upper_at(cand - 1);
      if (ok) t = cand;
    }
    ASSERT_EQ(prof.t, t);
    ASSERT_GE(t, 1u);
    Scalar top = Scalar::zero();
    for (std::size_t i = 0; i < t; ++i) top = join(top, prof.lower_at(i));
    EXPECT_EQ(prof.lower_at(prof.l), top);
    for (std::size_t i = 0; i < prof.l; ++i) EXPECT_LT(prof.lower_at(i), top);
    for (std::size_t p = 0; p < n; ++p) {
      EXPECT_EQ(prof.u[prof.upper_perm[p]], p < t ? top : prof.upper_at(p));
    }
  }
}

TEST(LowerPartition, Examples) {
  const auto a = lower_partition(B("0.5,0.5", "0.6,0.6"));
  ASSERT_EQ(a.stages.size(), 1u);
  EXPECT_EQ(a.stages[0].start, 0u);
  EXPECT_EQ(a.stages[0].members, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.stages[0].level, S("0.6"));

  const auto b = lower_partition(B("0.8,0.3", "0.9,0.5"));
  ASSERT_EQ(b.stages.size(), 2u);
  EXPECT_EQ(b.stages[0].start, 1u);
  EXPECT_EQ(b.stages[0].members, (std::vector<std::size_t>{1}));
  EXPECT_EQ(b.stages[0].level, S("0.5"));
  EXPECT_EQ(b.stages[1].start, 0u);
  EXPECT_EQ(b.stages[1].members, (std::vector<std::size_t>{0}));
  EXPECT_EQ(b.stages[1].level, S("0.9"));

  const auto c = lower_partition(B("0.2", "0.7"));
  ASSERT_EQ(c.stages.size(), 1u);
  EXPECT_EQ(c.stages[0].level, S("0.7"));
}

TEST(LowerPartitionProperty, StagesPartitionAndLevelProperty) {
  testing::InstanceGen gen(42, 10);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 6));
    const Box b = gen.box(n);
    const auto part = lower_partition(b);
    std::vector<int> seen(n, 0);
    std::vector<char> prior(n, 0);
    for (std::size_t k = 0; k < part.stages.size(); ++k) {
      const auto& st = part.stages[k];
      if (k > 0) {
        EXPECT_LT(st.start, part.stages[k - 1].start);
      }
      Scalar level = Scalar::one();
      for (auto c : st.members) {
        ++seen[c];
        level = meet(level, b.upper()[c]);
      }
      EXPECT_EQ(st.level, level);
      for (std::size_t p = st.start; p < n; ++p) {
        const auto c = part.lower_perm[p];
        if (prior[c]) continue;
        EXPECT_LE(b.lower()[c], st.level) << b.lower() << " " << b.upper();
        EXPECT_LE(st.level, b.upper()[c]) << b.lower() << " " << b.upper();
      }
      for (auto c : st.members) prior[c] = 1;
    }
    EXPECT_EQ(part.stages.back().start, 0u);
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(SeparateBox, PointLikeBoxNeedsTwoCalls) {
  const Box b = B("0.5,0.5", "0.6,0.6");
  const GeneratedConvexSet c{P("0.1,0.1")};
  const auto cert = separate_box(b, c);
  ASSERT_NE(cert.semispace(), nullptr);
  EXPECT_EQ(*cert.semispace(), SemispaceDescriptor::at(P("0.5,0.5"), 2));
  EXPECT_EQ(cert.oracle_calls, 2u);
  ASSERT_EQ(cert.trace.size(), 2u);
  EXPECT_EQ(cert.trace[0].stage, "S0(upper)");
  EXPECT_EQ(cert.trace[0].witness, P("0.1,0.1"));
  EXPECT_TRUE(certificate_is_valid(cert, b, c));
  // Grid check of both certificate conditions.
  const Grid grid(10, 2);
  for (const auto& p : oracle::grid_points_in_box(b, grid)) EXPECT_FALSE(cert.semispace()->contains(p));
  for (const auto& p : oracle::grid_hull(c.generators(), grid)) EXPECT_TRUE(cert.semispace()->contains(p));
}

TEST(SeparateBox, StripBoxNeedsHemispace) {
  const auto bare = separate_box(kStrip, kStripSet, SeparationOptions{false});
  ASSERT_FALSE(bare.separated());
  EXPECT_EQ(*bare.witness(), P("0.4,0.8"));
  EXPECT_TRUE(certificate_is_valid(bare, kStrip, kStripSet));

  const auto full = separate_box(kStrip, kStripSet);
  ASSERT_NE(full.hemispace(), nullptr);
  EXPECT_EQ(*full.hemispace(), HemispaceDescriptor(P("1,0.5"), {1}));
  EXPECT_TRUE(certificate_is_valid(full, kStrip, kStripSet));
}

TEST(SeparateBox, Errors) {
  EXPECT_THROW(separate_box(B("0,0", "1,1"), GeneratedConvexSet{P("0.5,0.5")}), IntersectionError);
  EXPECT_THROW(separate_box(B("0,0", "0.1,0.1"), GeneratedConvexSet{P("0.5,0.5,0.5")}), DimensionError);
  EXPECT_THROW(check_sep_cond(B("0,0", "1,1"), GeneratedConvexSet{P("0.5,0.5")}), IntersectionError);
  EXPECT_THROW(assert_nonseparable(B("0,0", "1,1"), GeneratedConvexSet{P("0.5,0.5")}, Grid(4, 2)), IntersectionError);
}

TEST(CheckSepCond, Examples) {
  const auto fig = check_sep_cond(kStrip, kStripSet);
  ASSERT_FALSE(fig.holds());
  EXPECT_EQ(*fig.violation, P("0.4,0.8"));
  EXPECT_TRUE(check_sep_cond(B("0.2,0.3", "0.9,0.5"), GeneratedConvexSet{P("0.4,0.8"), P("0.95,0.1")}).holds());
  EXPECT_TRUE(check_sep_cond(Box::point(P("1,0.4")), GeneratedConvexSet{P("1,0.8"), P("0.2,0.2")}).holds());
}

TEST(AssertNonseparable, Examples) {
  EXPECT_TRUE(assert_nonseparable(kStrip, kStripSet, Grid(10, 2)));
  EXPECT_FALSE(assert_nonseparable(B("0.5,0.5", "0.6,0.6"), GeneratedConvexSet{P("0.1,0.1")}, Grid(10, 2)));
}

TEST(SeparateBoxProperty, SoundnessAndCallBound) {
  testing::InstanceGen gen(43, 6);
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto [b, c] = disjoint_instance(gen, n, 4);
    const auto cert = separate_box(b, c, SeparationOptions{false});
    EXPECT_LE(cert.oracle_calls, n + 1);
    EXPECT_TRUE(certificate_is_valid(cert, b, c));
    if (const auto* s = cert.semispace()) {
      const Grid grid(6, n);
      for (const auto& p : oracle::grid_points_in_box(b, grid)) ASSERT_FALSE(s->contains(p));
      for (const auto& p : oracle::grid_hull(c.generators(), grid)) ASSERT_TRUE(s->contains(p));
    }
    const auto with_fallback = separate_box(b, c);
    EXPECT_TRUE(certificate_is_valid(with_fallback, b, c));
    EXPECT_LE(with_fallback.oracle_calls, n + 2);
  }
}

TEST(SeparateBoxProperty, CompleteUnderConditionAndConditionMatchesGrid) {
  testing::InstanceGen gen(44, 4);
  int literal_violations_separated = 0;
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto [b, c] = disjoint_instance(gen, n, 4);
    const auto cond = check_sep_cond(b, c);
    const Grid grid(8, n);
    const auto literal = testing::sep_cond_violation_by_grid(b, c, grid);
    const auto obstruction = testing::sep_cond_violation_by_grid(b, c, grid, true);
    ASSERT_EQ(cond.holds(), !obstruction.has_value()) << b.lower() << " " << b.upper();
    const auto cert = separate_box(b, c, SeparationOptions{false});
    EXPECT_EQ(cert.semispace() != nullptr, cond.holds());
    if (!literal) {
      EXPECT_NE(cert.semispace(), nullptr);
    }
    if (literal && cert.semispace()) ++literal_violations_separated;
  }
  // The plain condition is sufficient but not necessary.
  EXPECT_GT(literal_violations_separated, 0);
}

TEST(SeparateBox, LiteralConditionFailureWithSeparator) {
  const Box b = B("0,0.25,0", "1,0.75,0");
  const GeneratedConvexSet c{P("0,0.75,0.75"), P("0.75,1,0.5"), P("0.25,0.25,0.25")};
  EXPECT_TRUE(testing::sep_cond_violation_by_grid(b, c, Grid(8, 3)).has_value());
  EXPECT_FALSE(is_condition_violation(b, c, P("0.75,0.875,0.5")));
  const auto cert = separate_box(b, c, SeparationOptions{false});
  ASSERT_NE(cert.semispace(), nullptr);
  EXPECT_TRUE(cert.semispace()->contains(P("0.75,0.875,0.5")));
  EXPECT_TRUE(certificate_is_valid(cert, b, c));
}

TEST(SeparateBoxProperty, NotSeparableIsConfirmedByExhaustiveSearch) {
  testing::InstanceGen gen(45, 5);
  int negatives = 0;
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto [b, c] = disjoint_instance(gen, n, 3);
    const auto cert = separate_box(b, c, SeparationOptions{false});
    const Grid grid(5, n);
    EXPECT_EQ(assert_nonseparable(b, c, grid), !cert.separated());
    negatives += cert.separated() ? 0 : 1;
  }
  EXPECT_GT(negatives, 0);
}

TEST(SeparateBoxProperty, HigherDimensionsStayWithinBound) {
  testing::InstanceGen gen(46, 12);
  for (int it = 0; it < 2000; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(4, 8));
    const auto [b, c] = disjoint_instance(gen, n, 6);
    const auto cert = separate_box(b, c, SeparationOptions{false});
    EXPECT_LE(cert.oracle_calls, n + 1);
    EXPECT_TRUE(certificate_is_valid(cert, b, c));
  }
}

}  // namespace
}  // namespace maxmin
