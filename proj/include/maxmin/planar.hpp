#ifndef MAXMIN_PLANAR_HPP
#define MAXMIN_PLANAR_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "maxmin/convex.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/separation.hpp"

namespace maxmin {

/// Extremal data of a planar set. `a` is a generator with least x, `b` one with
/// least y, and c = (x_c, y_c) the join of all generators; `bounds` is the
/// smallest box around the hull, [x_a, x_c] × [y_b, y_c].
struct PlanarExtremes {
  Point a;
  Point b;
  Point c;
  Box bounds;

  const Scalar& x_a() const { return a[0]; }
  const Scalar& y_a() const { return a[1]; }
  const Scalar& x_b() const { return b[0]; }
  const Scalar& y_b() const { return b[1]; }
  const Scalar& x_c() const { return c[0]; }
  const Scalar& y_c() const { return c[1]; }

  /// hull{a, b, c}, which is the T0 region.
  GeneratedConvexSet core() const { return GeneratedConvexSet{a, b, c}; }
};

namespace detail {
inline void require_planar(std::size_t n, const char* what) {
  if (n != 2) throw DimensionError(std::string(what) + " is planar only, got dimension " + std::to_string(n));
}
}  // namespace detail

/// Ties for `a` break on smaller y, for `b` on smaller x, then on input order.
inline PlanarExtremes planar_extremes(const GeneratedConvexSet& c) {
  detail::require_planar(c.dimension(), "planar_extremes");
  const auto& gens = c.generators();
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t j = 1; j < gens.size(); ++j) {
    const auto& g = gens[j];
    if (g[0] < gens[ia][0] || (g[0] == gens[ia][0] && g[1] < gens[ia][1])) ia = j;
    if (g[1] < gens[ib][1] || (g[1] == gens[ib][1] && g[0] < gens[ib][0])) ib = j;
  }
  Box bounds = bounding_box(c);
  return PlanarExtremes{gens[ia], gens[ib], bounds.upper(), std::move(bounds)};
}

enum class Region { T0, T1, T2, T3, Outside };

inline const char* region_name(Region r) {
  switch (r) {
    case Region::T0: return "T0";
    case Region::T1: return "T1";
    case Region::T2: return "T2";
    case Region::T3: return "T3";
    case Region::Outside: return "Outside";
  }
  return "?";
}

/// Labels a point of the bounding box by the four-region split of B0.
inline Region region_classify(const PlanarExtremes& e, const Point& p) {
  detail::require_planar(p.dimension(), "region_classify");
  if (!e.bounds.contains(p)) return Region::Outside;
  const Scalar& x = p[0];
  const Scalar& y = p[1];
  if (x < e.x_b() && y < e.y_a()) return Region::T1;
  if (e.y_a() < y && x < e.x_c() && x < y) return Region::T2;
  if (e.x_b() < x && y < e.y_c() && y < x) return Region::T3;
  return Region::T0;
}

/// A box containing hull(C_{boxed_set}) and disjoint from the other hull.
struct PlanarBoxCertificate {
  int boxed_set = 1;
  Box box;
};

inline bool planar_box_is_valid(const PlanarBoxCertificate& cert, const GeneratedConvexSet& c1,
                                const GeneratedConvexSet& c2) {
  const auto& inside = cert.boxed_set == 1 ? c1 : c2;
  const auto& outside = cert.boxed_set == 1 ? c2 : c1;
  return cert.box.contains(bounding_box(inside)) && !box_intersects_hull(cert.box, outside);
}

/// Box separation of two disjoint planar hulls.
///
/// The candidates are the two bounding boxes, then, for X = C2 and X = C1,
/// the four boxes anchored at a corner of [0,1]^2 and spanning X's extremes.
/// Every disjoint planar pair is separated by one of them.
inline PlanarBoxCertificate separate_two_sets(const GeneratedConvexSet& c1, const GeneratedConvexSet& c2) {
  detail::require_planar(c1.dimension(), "separate_two_sets");
  detail::require_planar(c2.dimension(), "separate_two_sets");
  if (hulls_intersect(c1, c2)) throw IntersectionError("planar sets intersect");

  const Scalar zero = Scalar::zero();
  const Scalar one = Scalar::one();
  std::vector<PlanarBoxCertificate> candidates{{1, bounding_box(c1)}, {2, bounding_box(c2)}};
  for (int which : {2, 1}) {
    const Box bb = bounding_box(which == 1 ? c1 : c2);
    const Scalar& minx = bb.lower()[0];
    const Scalar& miny = bb.lower()[1];
    const Scalar& maxx = bb.upper()[0];
    const Scalar& maxy = bb.upper()[1];
    candidates.push_back({which, Box({zero, zero}, {maxx, maxy})});
    candidates.push_back({which, Box({zero, miny}, {maxx, one})});
    candidates.push_back({which, Box({minx, zero}, {one, maxy})});
    candidates.push_back({which, Box({minx, miny}, {one, one})});
  }
  for (auto& cand : candidates) {
    if (planar_box_is_valid(cand, c1, c2)) return std::move(cand);
  }
  throw ExhaustionError("no candidate box separates the planar sets");
}

/// A box around one set and a semispace around the other, disjoint from each other.
struct BoxSemispaceCertificate {
  PlanarBoxCertificate box;
  SemispaceDescriptor semispace;
  SeparationCertificate separation;
};

/// Box+semispace separation for planar sets whose generators avoid 0 and 1.
/// The box is shrunk to the boxed set's bounding box, whose upper corner is
/// then below 1, so the box separation always finds a semispace.
inline BoxSemispaceCertificate separate_box_semispace(const GeneratedConvexSet& c1, const GeneratedConvexSet& c2) {
  detail::require_planar(c1.dimension(), "separate_box_semispace");
  detail::require_planar(c2.dimension(), "separate_box_semispace");
  for (const auto* set : {&c1, &c2}) {
    for (const auto& g : set->generators()) {
      if (!g.is_finite()) throw BoundaryError("generator " + g.str() + " touches the boundary of [0,1]^2");
    }
  }
  auto boxed = separate_two_sets(c1, c2);
  const auto& inside = boxed.boxed_set == 1 ? c1 : c2;
  const auto& outside = boxed.boxed_set == 1 ? c2 : c1;
  boxed.box = bounding_box(inside);
  auto sep = separate_box(boxed.box, outside, SeparationOptions{false});
  const SemispaceDescriptor* s = sep.semispace();
  if (!s) throw ExhaustionError("minimal box of an interior set was not separated by a semispace");
  SemispaceDescriptor semispace = *s;
  return BoxSemispaceCertificate{std::move(boxed), std::move(semispace), std::move(sep)};
}

}  // namespace maxmin

#endif  // MAXMIN_PLANAR_HPP
