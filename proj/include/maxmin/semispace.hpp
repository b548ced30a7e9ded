#ifndef MAXMIN_SEMISPACE_HPP
#define MAXMIN_SEMISPACE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "maxmin/convex.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/point.hpp"

namespace maxmin {

/// Positions 0..n-1 ordered by descending value; ties keep ascending original index.
inline std::vector<std::size_t> descending_order(const Point& p) {
  std::vector<std::size_t> perm(p.dimension());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&p](std::size_t a, std::size_t b) { return p[b] < p[a]; });
  return perm;
}

/// A point together with its descending sort and block bookkeeping.
///
/// Blocks follow the scan x_1 = … = x_{k_1} > … > x_{k_1+l_1+1} = … of the sorted
/// coordinates. Every maximal run of equal values forms one equal block k_j, so
/// the strictly decreasing stretches between blocks have length l_j = 0. Counts
/// (K_j, L_j, beta) are 1-based, as in the usual bookkeeping.
struct SortedProfile {
  Point point;
  std::vector<std::size_t> perm;  ///< perm[p] = original coordinate at sorted position p
  std::vector<std::size_t> equal_sizes;   ///< k_j
  std::vector<std::size_t> run_sizes;     ///< l_j
  std::vector<std::size_t> K;             ///< K_j = L_{j-1} + k_j
  std::vector<std::size_t> L;             ///< L_j = K_j + l_j
  std::optional<std::size_t> beta;        ///< smallest 1-based sorted position holding 0
  bool has_one = false;

  std::size_t blocks() const { return equal_sizes.size(); }
  const Scalar& sorted(std::size_t position) const { return point[perm[position]]; }
};

inline SortedProfile sorted_profile(const Point& x0) {
  SortedProfile prof;
  prof.point = x0;
  prof.perm = descending_order(x0);
  const std::size_t n = x0.dimension();
  std::size_t pos = 0;
  std::size_t cumulative = 0;
  while (pos < n) {
    std::size_t end = pos + 1;
    while (end < n && prof.sorted(end) == prof.sorted(pos)) ++end;
    prof.equal_sizes.push_back(end - pos);
    prof.run_sizes.push_back(0);
    cumulative += end - pos;
    prof.K.push_back(cumulative);
    prof.L.push_back(cumulative);
    pos = end;
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (prof.sorted(p).is_zero()) {
      prof.beta = p + 1;
      break;
    }
  }
  prof.has_one = std::any_of(x0.begin(), x0.end(), [](const Scalar& s) { return s.is_one(); });
  return prof;
}

/// S_index(x0). Index 0 is the S_0 type {x : x_m > x0_m for some m}; index
/// i >= 1 is the sorted position whose coordinate c = perm[i-1] gives
/// {x : x_c < x0_c, or x_m > x0_m for some m with x0_m < x0_c}.
///
/// That single predicate covers both the equal-block and the strictly
/// decreasing forms once x0 is sorted.
class SemispaceDescriptor {
 public:
  static SemispaceDescriptor at(Point x0, std::size_t index) {
    if (index > x0.dimension()) {
      throw DimensionError("semispace index " + std::to_string(index) + " exceeds dimension " +
                           std::to_string(x0.dimension()));
    }
    auto perm = descending_order(x0);
    return SemispaceDescriptor(std::move(x0), index, std::move(perm));
  }

  static SemispaceDescriptor s0(Point x0) { return at(std::move(x0), 0); }

  /// The member S_i whose sorted position holds original coordinate `coordinate`.
  static SemispaceDescriptor for_coordinate(Point x0, std::size_t coordinate) {
    if (coordinate >= x0.dimension()) throw DimensionError("semispace coordinate out of range");
    auto perm = descending_order(x0);
    const auto pos = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), coordinate) - perm.begin());
    return SemispaceDescriptor(std::move(x0), pos + 1, std::move(perm));
  }

  const Point& x0() const { return x0_; }
  std::size_t index() const { return index_; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  std::size_t dimension() const { return x0_.dimension(); }
  bool is_s0() const { return index_ == 0; }

  /// Original (0-based) coordinate of an S_i with i >= 1.
  std::size_t coordinate() const {
    if (is_s0()) throw Error("S_0 has no distinguished coordinate");
    return perm_[index_ - 1];
  }

  bool contains(const Point& x) const {
    detail::require_same_dimension(x.dimension(), dimension(), "semispace_contains");
    if (is_s0()) {
      for (std::size_t m = 0; m < dimension(); ++m) {
        if (x0_[m] < x[m]) return true;
      }
      return false;
    }
    const std::size_t c = coordinate();
    if (x[c] < x0_[c]) return true;
    for (std::size_t m = 0; m < dimension(); ++m) {
      if (x0_[m] < x0_[c] && x0_[m] < x[m]) return true;
    }
    return false;
  }

  /// Closed form: no point of the box satisfies any defining inequality.
  bool avoids(const Box& b) const {
    detail::require_same_dimension(b.dimension(), dimension(), "semispace_avoids_box");
    if (is_s0()) return leq(b.upper(), x0_);
    const std::size_t c = coordinate();
    if (b.lower()[c] < x0_[c]) return false;
    for (std::size_t m = 0; m < dimension(); ++m) {
      if (x0_[m] < x0_[c] && x0_[m] < b.upper()[m]) return false;
    }
    return true;
  }

  friend bool operator==(const SemispaceDescriptor& a, const SemispaceDescriptor& b) {
    return a.x0_ == b.x0_ && a.index_ == b.index_;
  }

 private:
  SemispaceDescriptor(Point x0, std::size_t index, std::vector<std::size_t> perm)
      : x0_(std::move(x0)), index_(index), perm_(std::move(perm)) {}

  Point x0_;
  std::size_t index_;
  std::vector<std::size_t> perm_;
};

/// S_0^M(x0) = {x : x_i > x0_i for some i in M}; convex with convex complement.
class HemispaceDescriptor {
 public:
  HemispaceDescriptor(Point x0, std::vector<std::size_t> coordinates) : x0_(std::move(x0)), m_(std::move(coordinates)) {
    std::sort(m_.begin(), m_.end());
    m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
    for (auto i : m_) {
      if (i >= x0_.dimension()) throw DimensionError("hemispace coordinate out of range");
    }
  }

  const Point& x0() const { return x0_; }
  const std::vector<std::size_t>& coordinates() const { return m_; }
  std::size_t dimension() const { return x0_.dimension(); }

  bool contains(const Point& x) const {
    detail::require_same_dimension(x.dimension(), dimension(), "hemispace_contains");
    return std::any_of(m_.begin(), m_.end(), [&](std::size_t i) { return x0_[i] < x[i]; });
  }

  bool avoids(const Box& b) const {
    detail::require_same_dimension(b.dimension(), dimension(), "hemispace_avoids_box");
    return std::none_of(m_.begin(), m_.end(), [&](std::size_t i) { return x0_[i] < b.upper()[i]; });
  }

  friend bool operator==(const HemispaceDescriptor&, const HemispaceDescriptor&) = default;

 private:
  Point x0_;
  std::vector<std::size_t> m_;
};

inline bool semispace_contains(const SemispaceDescriptor& s, const Point& x) { return s.contains(x); }
inline bool hemispace_contains(const HemispaceDescriptor& h, const Point& x) { return h.contains(x); }
inline bool semispace_avoids_box(const SemispaceDescriptor& s, const Box& b) { return s.avoids(b); }
inline bool hemispace_avoids_box(const HemispaceDescriptor& h, const Box& b) { return h.avoids(b); }

/// The semispaces at x0, split by whether x0 has coordinates equal to 1 and/or 0.
inline std::vector<SemispaceDescriptor> semispace_family(const Point& x0) {
  const auto prof = sorted_profile(x0);
  const std::size_t n = x0.dimension();
  const std::size_t first = prof.has_one ? 1 : 0;
  const std::size_t last = prof.beta ? *prof.beta - 1 : n;
  std::vector<SemispaceDescriptor> family;
  for (std::size_t i = first; i <= last; ++i) family.push_back(SemispaceDescriptor::at(x0, i));
  return family;
}

/// Answer of the containment oracle: empty witness means contained.
struct Containment {
  std::optional<Point> witness;
  bool contained() const { return !witness.has_value(); }
};

/// The oracle: a semispace is convex, so hull(C) ⊆ S iff every generator is in S.
inline Containment set_in_semispace(const GeneratedConvexSet& c, const SemispaceDescriptor& s) {
  detail::require_same_dimension(c.dimension(), s.dimension(), "set_in_semispace");
  for (const auto& g : c.generators()) {
    if (!s.contains(g)) return {g};
  }
  return {};
}

inline Containment set_in_hemispace(const GeneratedConvexSet& c, const HemispaceDescriptor& h) {
  detail::require_same_dimension(c.dimension(), h.dimension(), "set_in_hemispace");
  for (const auto& g : c.generators()) {
    if (!h.contains(g)) return {g};
  }
  return {};
}

}  // namespace maxmin

#endif  // MAXMIN_SEMISPACE_HPP
