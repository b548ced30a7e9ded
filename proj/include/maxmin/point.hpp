#ifndef MAXMIN_POINT_HPP
#define MAXMIN_POINT_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxmin/errors.hpp"
#include "maxmin/scalar.hpp"

namespace maxmin {

/// An element of the semimodule [0,1]^n.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

  /// The point (value, ..., value) of dimension n.
  static Point constant(std::size_t n, Scalar value) { return Point(std::vector<Scalar>(n, value)); }

  /// Parses "0.6,0.3" or "(0.6, 0.3)".
  static Point parse(std::string_view text);

  std::size_t dimension() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  /// No coordinate equals 0 or 1.
  bool is_finite() const {
    return std::none_of(begin(), end(), [](const Scalar& s) { return s.is_zero() || s.is_one(); });
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += coords_[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic; only used for ordered containers.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

 private:
  std::vector<Scalar> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

inline Point Point::parse(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
  std::vector<Scalar> coords;
  while (true) {
    const auto comma = s.find(',');
    coords.push_back(Scalar::parse(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return Point(std::move(coords));
}

/// Componentwise max.
inline Point join(const Point& x, const Point& y) {
  detail::require_same_dimension(x.dimension(), y.dimension(), "join");
  Point out = x;
  for (std::size_t i = 0; i < out.dimension(); ++i) out[i] = join(x[i], y[i]);
  return out;
}

/// Componentwise min.
inline Point meet(const Point& x, const Point& y) {
  detail::require_same_dimension(x.dimension(), y.dimension(), "meet");
  Point out = x;
  for (std::size_t i = 0; i < out.dimension(); ++i) out[i] = meet(x[i], y[i]);
  return out;
}

/// Scalar multiplication of the semimodule: (a ∧ x)_i = min(a, x_i).
inline Point scale_meet(const Scalar& a, const Point& x) {
  Point out = x;
  for (std::size_t i = 0; i < out.dimension(); ++i) out[i] = meet(a, x[i]);
  return out;
}

/// x <= y componentwise.
inline bool leq(const Point& x, const Point& y) {
  detail::require_same_dimension(x.dimension(), y.dimension(), "leq");
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

/// Greatest coefficient b with (b ∧ v) <= cap, i.e. min { cap_i : v_i > cap_i }, or 1.
inline Scalar residual(const Point& v, const Point& cap) {
  detail::require_same_dimension(v.dimension(), cap.dimension(), "residual");
  Scalar best = Scalar::one();
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (cap[i] < v[i]) best = meet(best, cap[i]);
  }
  return best;
}

/// Whether z lies on the max-min segment [x, y], i.e. z = (α∧x) ⊕ (β∧y) with max(α,β) = 1.
///
/// One of the coefficients is 1; for the other, the residual is the largest
/// admissible value, and if any admissible value reproduces z the largest does too.
inline bool segment_contains(const Point& x, const Point& y, const Point& z) {
  detail::require_same_dimension(x.dimension(), y.dimension(), "segment_contains");
  detail::require_same_dimension(x.dimension(), z.dimension(), "segment_contains");
  auto one_side = [&z](const Point& full, const Point& partial) {
    return join(full, scale_meet(residual(partial, z), partial)) == z;
  };
  return one_side(x, y) || one_side(y, x);
}

}  // namespace maxmin

#endif  // MAXMIN_POINT_HPP
