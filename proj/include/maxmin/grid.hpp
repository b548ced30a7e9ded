#ifndef MAXMIN_GRID_HPP
#define MAXMIN_GRID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxmin/errors.hpp"
#include "maxmin/point.hpp"

namespace maxmin {

/// The finite grid {0, 1/d, …, 1}^n. It contains 0 and 1 and is closed under
/// min and max, so every max-min operation stays on it exactly.
class Grid {
 public:
  static constexpr std::uint64_t default_max_points = 4'000'000;

  Grid(int denominator, std::size_t dimension, std::uint64_t max_points = default_max_points)
      : d_(denominator), n_(dimension), max_points_(max_points) {
    if (d_ < 1) throw Error("grid denominator must be >= 1");
    if (n_ < 1) throw DimensionError("grid dimension must be >= 1");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      total *= static_cast<std::uint64_t>(d_ + 1);
      if (total > max_points_) {
        throw ResourceError("grid with denominator " + std::to_string(d_) + " in dimension " +
                            std::to_string(n_) + " exceeds " + std::to_string(max_points_) + " points");
      }
    }
    size_ = total;
  }

  int denominator() const { return d_; }
  std::size_t dimension() const { return n_; }
  std::uint64_t size() const { return size_; }
  int ticks_per_axis() const { return d_ + 1; }

  Scalar value(int tick) const { return Scalar::ratio(tick, d_); }

  /// k such that s = k/d, if s lies on the grid axis.
  std::optional<int> tick(const Scalar& s) const {
    const __int128 scaled = static_cast<__int128>(s.num()) * d_;
    if (scaled % s.den() != 0) return std::nullopt;
    return static_cast<int>(scaled / s.den());
  }

  bool on_grid(const Point& p) const {
    if (p.dimension() != n_) return false;
    for (const auto& s : p) {
      if (!tick(s)) return false;
    }
    return true;
  }

  /// Ticks of a grid point, coordinate by coordinate.
  std::vector<int> ticks(const Point& p) const {
    detail::require_same_dimension(p.dimension(), n_, "grid point");
    std::vector<int> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      auto t = tick(p[i]);
      if (!t) throw Error("point " + p.str() + " is not on the grid with denominator " + std::to_string(d_));
      out[i] = *t;
    }
    return out;
  }

  /// Row-major index, coordinate 0 most significant (lexicographic order).
  std::uint64_t index(const std::vector<int>& ticks) const {
    std::uint64_t idx = 0;
    for (int t : ticks) idx = idx * static_cast<std::uint64_t>(d_ + 1) + static_cast<std::uint64_t>(t);
    return idx;
  }

  std::vector<int> ticks_at(std::uint64_t index) const {
    std::vector<int> out(n_);
    for (std::size_t i = n_; i-- > 0;) {
      out[i] = static_cast<int>(index % static_cast<std::uint64_t>(d_ + 1));
      index /= static_cast<std::uint64_t>(d_ + 1);
    }
    return out;
  }

  Point point(const std::vector<int>& ticks) const {
    std::vector<Scalar> coords;
    coords.reserve(ticks.size());
    for (int t : ticks) coords.push_back(value(t));
    return Point(std::move(coords));
  }

  Point point_at(std::uint64_t index) const { return point(ticks_at(index)); }

  /// All grid points in lexicographic order.
  template <class F>
  void for_each_point(F&& f) const {
    for (std::uint64_t i = 0; i < size_; ++i) f(point_at(i));
  }

 private:
  int d_;
  std::size_t n_;
  std::uint64_t max_points_;
  std::uint64_t size_ = 0;
};

}  // namespace maxmin

#endif  // MAXMIN_GRID_HPP
