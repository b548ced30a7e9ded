#ifndef MAXMIN_ORACLE_HPP
#define MAXMIN_ORACLE_HPP

// Brute-force referees on a finite grid. They are slow and exact, and share no
// code path with the residuation-based routines they are used to check.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "maxmin/convex.hpp"
#include "maxmin/grid.hpp"
#include "maxmin/semispace.hpp"

namespace maxmin::oracle {

using PointSet = std::set<Point>;

namespace detail {

inline std::vector<int> combine_ticks(const std::vector<int>& full, const std::vector<int>& partial, int beta) {
  std::vector<int> out(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) out[i] = std::max(full[i], std::min(beta, partial[i]));
  return out;
}

}  // namespace detail

/// Least superset of `points` on the grid closed under (α∧x)⊕(β∧y), max(α,β)=1,
/// for grid coefficients. Worklist fixpoint over pairs.
inline PointSet grid_hull(const std::vector<Point>& points, const Grid& grid) {
  std::vector<char> seen(grid.size(), 0);
  std::vector<std::vector<int>> members;
  auto add = [&](std::vector<int> t) {
    auto idx = grid.index(t);
    if (!seen[idx]) {
      seen[idx] = 1;
      members.push_back(std::move(t));
    }
  };
  for (const auto& p : points) add(grid.ticks(p));
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      // members may reallocate inside add(); take copies of the operands.
      const auto p = members[k];
      const auto q = members[j];
      for (int b = 0; b <= grid.denominator(); ++b) {
        add(detail::combine_ticks(p, q, b));
        add(detail::combine_ticks(q, p, b));
      }
    }
  }
  PointSet out;
  for (const auto& t : members) out.insert(grid.point(t));
  return out;
}

/// Closure check: every grid combination of two members is a member.
inline bool brute_is_convex(const PointSet& s, const Grid& grid) {
  std::vector<char> in(grid.size(), 0);
  std::vector<std::vector<int>> members;
  for (const auto& p : s) {
    members.push_back(grid.ticks(p));
    in[grid.index(members.back())] = 1;
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (a == b) continue;
      for (int beta = 0; beta <= grid.denominator(); ++beta) {
        if (!in[grid.index(detail::combine_ticks(members[a], members[b], beta))]) return false;
      }
    }
  }
  return true;
}

/// All grid points satisfying `pred`.
template <class Pred>
PointSet grid_filter(const Grid& grid, Pred&& pred) {
  PointSet out;
  grid.for_each_point([&](const Point& p) {
    if (pred(p)) out.insert(p);
  });
  return out;
}

inline PointSet grid_points_in_box(const Box& b, const Grid& grid) {
  return grid_filter(grid, [&b](const Point& p) { return b.contains(p); });
}

/// First semispace, over lexicographic grid points x0 and their families, that
/// contains C and avoids B.
inline std::optional<SemispaceDescriptor> brute_separation_search(const Box& b, const GeneratedConvexSet& c,
                                                                  const Grid& grid) {
  maxmin::detail::require_same_dimension(b.dimension(), c.dimension(), "brute_separation_search");
  maxmin::detail::require_same_dimension(b.dimension(), grid.dimension(), "brute_separation_search");
  for (std::uint64_t i = 0; i < grid.size(); ++i) {
    for (auto& s : semispace_family(grid.point_at(i))) {
      if (s.avoids(b) && set_in_semispace(c, s).contained()) return std::move(s);
    }
  }
  return std::nullopt;
}

}  // namespace maxmin::oracle

#endif  // MAXMIN_ORACLE_HPP
