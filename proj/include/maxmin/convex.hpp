#ifndef MAXMIN_CONVEX_HPP
#define MAXMIN_CONVEX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "maxmin/errors.hpp"
#include "maxmin/point.hpp"

namespace maxmin {

/// The max-min convex hull of a nonempty finite list of generators:
/// all points ⊕_j (λ_j ∧ v^j) with max_j λ_j = 1.
class GeneratedConvexSet {
 public:
  explicit GeneratedConvexSet(std::vector<Point> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw Error("convex set needs at least one generator");
    for (const auto& g : generators_) {
      detail::require_same_dimension(g.dimension(), generators_.front().dimension(), "generator");
    }
    if (dimension() == 0) throw DimensionError("generators must have dimension >= 1");
  }
  GeneratedConvexSet(std::initializer_list<Point> generators)
      : GeneratedConvexSet(std::vector<Point>(generators)) {}

  std::size_t dimension() const { return generators_.front().dimension(); }
  const std::vector<Point>& generators() const { return generators_; }

 private:
  std::vector<Point> generators_;
};

/// A closed box [lower_1, upper_1] × … × [lower_n, upper_n]; point boxes are allowed.
class Box {
 public:
  Box(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    detail::require_same_dimension(lower_.dimension(), upper_.dimension(), "box corners");
    if (lower_.dimension() == 0) throw DimensionError("box must have dimension >= 1");
    if (!maxmin::leq(lower_, upper_)) {
      throw Error("box lower corner " + lower_.str() + " exceeds upper corner " + upper_.str());
    }
  }

  static Box point(const Point& p) { return Box(p, p); }

  const Point& lower() const { return lower_; }
  const Point& upper() const { return upper_; }
  std::size_t dimension() const { return lower_.dimension(); }

  bool contains(const Point& p) const { return maxmin::leq(lower_, p) && maxmin::leq(p, upper_); }
  bool contains(const Box& inner) const {
    return maxmin::leq(lower_, inner.lower_) && maxmin::leq(inner.upper_, upper_);
  }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Point lower_;
  Point upper_;
};

/// Principal coefficients for `cap`: λ*_j = residual(v^j, cap). These are the
/// greatest coefficients whose combination stays below cap, and the set of
/// feasible coefficient vectors is closed under componentwise max.
inline std::vector<Scalar> principal_coefficients(const GeneratedConvexSet& c, const Point& cap) {
  detail::require_same_dimension(c.dimension(), cap.dimension(), "principal_coefficients");
  std::vector<Scalar> lambda;
  lambda.reserve(c.generators().size());
  for (const auto& v : c.generators()) lambda.push_back(residual(v, cap));
  return lambda;
}

inline Point combine(const GeneratedConvexSet& c, const std::vector<Scalar>& lambda) {
  Point out = Point::constant(c.dimension(), Scalar::zero());
  for (std::size_t j = 0; j < lambda.size(); ++j) out = join(out, scale_meet(lambda[j], c.generators()[j]));
  return out;
}

/// The greatest hull point y* <= cap, or nullopt if no hull point lies below cap.
inline std::optional<Point> greatest_below(const GeneratedConvexSet& c, const Point& cap) {
  const auto lambda = principal_coefficients(c, cap);
  if (std::none_of(lambda.begin(), lambda.end(), [](const Scalar& s) { return s.is_one(); })) {
    return std::nullopt;
  }
  return combine(c, lambda);
}

/// Exact membership test for the max-min hull.
inline bool hull_contains(const GeneratedConvexSet& c, const Point& y) {
  auto below = greatest_below(c, y);
  return below && *below == y;
}

/// Whether hull(c) meets the box. The greatest hull point under the upper
/// corner exists whenever any hull point does, so it alone decides.
inline bool box_intersects_hull(const Box& b, const GeneratedConvexSet& c) {
  detail::require_same_dimension(b.dimension(), c.dimension(), "box_intersects_hull");
  auto below = greatest_below(c, b.upper());
  return below && leq(b.lower(), *below);
}

/// Componentwise min and max of the generators; the smallest box containing the hull.
inline Box bounding_box(const GeneratedConvexSet& c) {
  Point lo = c.generators().front();
  Point hi = lo;
  for (const auto& g : c.generators()) {
    lo = meet(lo, g);
    hi = join(hi, g);
  }
  return Box(std::move(lo), std::move(hi));
}

/// The greatest common point of two hulls, or nullopt if they are disjoint.
///
/// Both hulls are closed under ⊕, so a nonempty intersection has a greatest
/// element g. Alternately projecting a cap down onto each hull never drops below
/// g, strictly decreases until it stabilises, and takes values in the finite set
/// of generator coordinates, so it terminates at g.
inline std::optional<Point> greatest_common_point(const GeneratedConvexSet& a, const GeneratedConvexSet& b) {
  detail::require_same_dimension(a.dimension(), b.dimension(), "greatest_common_point");
  Point cap = Point::constant(a.dimension(), Scalar::one());
  while (true) {
    auto pa = greatest_below(a, cap);
    if (!pa) return std::nullopt;
    auto pb = greatest_below(b, *pa);
    if (!pb) return std::nullopt;
    if (*pb == cap) return pb;
    cap = std::move(*pb);
  }
}

inline bool hulls_intersect(const GeneratedConvexSet& a, const GeneratedConvexSet& b) {
  return greatest_common_point(a, b).has_value();
}

}  // namespace maxmin

#endif  // MAXMIN_CONVEX_HPP
