#include <gtest/gtest.h>

#include <numeric>

#include "maxmin/grid.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/semispace.hpp"
#include "support/random.hpp"
#include "support/reference.hpp"

namespace maxmin {
namespace {

Point P(const char* s) { return Point::parse(s); }
Box B(const char* lo, const char* hi) { return Box(P(lo), P(hi)); }

TEST(Semispace, SortedProfileExamples) {
  const auto a = sorted_profile(P("0.6,0.3"));
  EXPECT_EQ(a.perm, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.equal_sizes, (std::vector<std::size_t>{1, 1}));
  EXPECT_FALSE(a.beta.has_value());
  EXPECT_FALSE(a.has_one);

  EXPECT_EQ(sorted_profile(P("0.5,0")).beta, std::optional<std::size_t>(2));

  const auto c = sorted_profile(P("1,0.5,0.5"));
  EXPECT_TRUE(c.has_one);
  EXPECT_EQ(c.equal_sizes, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(c.K, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(c.L, c.K);

  const auto d = sorted_profile(P("0.2,0.7,0.2"));
  EXPECT_EQ(d.perm, (std::vector<std::size_t>{1, 0, 2}));
}

TEST(Semispace, MembershipExamples) {
  const Point x0 = P("0.6,0.3");
  EXPECT_TRUE(SemispaceDescriptor::at(x0, 2).contains(P("0.9,0.1")));
  EXPECT_FALSE(SemispaceDescriptor::at(x0, 1).contains(P("0.7,0.2")));
  for (std::size_t i = 0; i <= 2; ++i) EXPECT_FALSE(SemispaceDescriptor::at(x0, i).contains(x0));
  EXPECT_THROW(SemispaceDescriptor::at(x0, 3), DimensionError);
  EXPECT_THROW(SemispaceDescriptor::at(x0, 1).contains(P("0.1")), DimensionError);
}

TEST(Semispace, FamilyExamples) {
  const auto fam = semispace_family(P("0.6,0.3"));
  ASSERT_EQ(fam.size(), 3u);
  const Grid grid(10, 2);
  grid.for_each_point([&](const Point& x) {
    EXPECT_EQ(fam[0].contains(x), x[0] > Scalar::parse("0.6") || x[1] > Scalar::parse("0.3"));
    EXPECT_EQ(fam[1].contains(x), x[0] < Scalar::parse("0.6") || x[1] > Scalar::parse("0.3"));
    EXPECT_EQ(fam[2].contains(x), x[1] < Scalar::parse("0.3"));
  });

  const auto b = semispace_family(P("1,0.5"));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].index(), 1u);
  EXPECT_EQ(b[1].index(), 2u);

  const auto c = semispace_family(P("0.5,0"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].index(), 0u);
  EXPECT_EQ(c[1].index(), 1u);

  EXPECT_EQ(semispace_family(P("1,0")).size(), 1u);
  EXPECT_EQ(semispace_family(P("0,0")).size(), 1u);
  EXPECT_EQ(semispace_family(P("1,1")).size(), 2u);
}

TEST(Semispace, HemispaceExamples) {
  const HemispaceDescriptor h(P("1,0.5"), {1});
  EXPECT_TRUE(h.contains(P("0.4,0.8")));
  EXPECT_FALSE(h.contains(P("0.4,0.5")));
  const HemispaceDescriptor none(P("0.5,0.5"), {});
  EXPECT_FALSE(none.contains(P("1,1")));
  EXPECT_THROW(HemispaceDescriptor(P("0.5,0.5"), {2}), DimensionError);
}

TEST(Semispace, AvoidsBoxExamples) {
  EXPECT_TRUE(SemispaceDescriptor::at(P("0.5,0.5"), 2).avoids(B("0.5,0.5", "0.6,0.6")));
  EXPECT_TRUE(SemispaceDescriptor::s0(P("0.6,0.6")).avoids(B("0.5,0.5", "0.6,0.6")));
  EXPECT_FALSE(SemispaceDescriptor::s0(P("0.6,0.6")).avoids(B("0.5,0.5", "0.7,0.7")));
}

TEST(Semispace, ContainmentOracleExamples) {
  const auto s = SemispaceDescriptor::at(P("0.5,0.5"), 2);
  EXPECT_TRUE(set_in_semispace(GeneratedConvexSet{P("0.1,0.1")}, s).contained());
  EXPECT_EQ(set_in_semispace(GeneratedConvexSet{P("0.1,0.1"), P("0.6,0.6")}, s).witness, P("0.6,0.6"));
  const Point x0 = P("0.3,0.8,0.1");
  for (const auto& m : semispace_family(x0)) EXPECT_EQ(set_in_semispace(GeneratedConvexSet{x0}, m).witness, x0);
}

TEST(SemispaceProperty, AvoidsBoxMatchesGridScan) {
  testing::InstanceGen gen(31, 6);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    const Point x0 = gen.point(n);
    const Box b = gen.box(n);
    const auto inside = oracle::grid_points_in_box(b, Grid(6, n));
    for (std::size_t i = 0; i <= n; ++i) {
      const auto s = SemispaceDescriptor::at(x0, i);
      const bool brute = std::none_of(inside.begin(), inside.end(), [&](const Point& p) { return s.contains(p); });
      EXPECT_EQ(s.avoids(b), brute);
    }
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < n; ++i) {
      if (gen.coin()) m.push_back(i);
    }
    const HemispaceDescriptor h(x0, m);
    const bool brute = std::none_of(inside.begin(), inside.end(), [&](const Point& p) { return h.contains(p); });
    EXPECT_EQ(h.avoids(b), brute);
  }
}

TEST(SemispaceProperty, FamilyMembersConvexAndAvoidPoint) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const Grid grid(n == 3 ? 4 : 6, n);
    grid.for_each_point([&](const Point& x0) {
      const auto fam = semispace_family(x0);
      if (x0.is_finite()) {
        EXPECT_EQ(fam.size(), n + 1) << x0;
      }
      for (const auto& s : fam) {
        EXPECT_FALSE(s.contains(x0));
        const auto members = oracle::grid_filter(grid, [&](const Point& p) { return s.contains(p); });
        EXPECT_TRUE(oracle::brute_is_convex(members, grid)) << x0 << " S_" << s.index();
      }
    });
  }
}

TEST(SemispaceProperty, UnifiedPredicateMatchesLiteralForms) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const Grid grid(n == 3 ? 5 : 6, n);
    grid.for_each_point([&](const Point& x0) {
      std::vector<Scalar> sorted(x0.begin(), x0.end());
      if (!std::is_sorted(sorted.rbegin(), sorted.rend())) return;
      const auto fam = semispace_family(x0);
      for (const auto& dec : {testing::blocks_only(sorted), testing::with_decreasing_runs(sorted)}) {
        const auto literal = testing::literal_family(sorted, dec);
        for (const auto& s : fam) {
          grid.for_each_point([&](const Point& x) {
            const std::vector<Scalar> xs(x.begin(), x.end());
            ASSERT_EQ(s.contains(x), literal[s.index()](xs)) << x0 << " S_" << s.index() << " at " << x;
          });
        }
      }
    });
  }
}

TEST(SemispaceProperty, MaximalityWitness) {
  const Grid grid(4, 2);
  const Grid fine(8, 2);
  grid.for_each_point([&](const Point& x0) {
    if (!x0.is_finite()) return;
    for (const auto& s : semispace_family(x0)) {
      const auto inside = oracle::grid_filter(fine, [&](const Point& p) { return s.contains(p); });
      grid.for_each_point([&](const Point& p) {
        if (p == x0 || s.contains(p)) return;
        const bool found = std::any_of(inside.begin(), inside.end(),
                                       [&](const Point& q) { return segment_contains(p, q, x0); });
        EXPECT_TRUE(found) << "S_" << s.index() << " at " << x0 << ", p=" << p;
      });
    }
  });
}

TEST(SemispaceProperty, PermutationEquivariance) {
  testing::InstanceGen gen(32, 6);
  const Grid grid(6, 3);
  for (int it = 0; it < 40; ++it) {
    const Point x0 = gen.point(3);
    std::vector<std::size_t> sigma{0, 1, 2};
    std::shuffle(sigma.begin(), sigma.end(), std::mt19937(static_cast<unsigned>(it)));
    auto relabel = [&](const Point& x) {
      std::vector<Scalar> y(3);
      for (std::size_t i = 0; i < 3; ++i) y[sigma[i]] = x[i];
      return Point(std::move(y));
    };
    const auto fam = semispace_family(x0);
    const auto moved = semispace_family(relabel(x0));
    ASSERT_EQ(fam.size(), moved.size());
    for (const auto& s : fam) {
      std::size_t matches = 0;
      for (const auto& t : moved) {
        bool same = true;
        grid.for_each_point([&](const Point& x) { same = same && s.contains(x) == t.contains(relabel(x)); });
        matches += same ? 1 : 0;
      }
      EXPECT_EQ(matches, 1u) << x0 << " S_" << s.index();
    }
  }
}

}  // namespace
}  // namespace maxmin
