#ifndef MAXMIN_SCALAR_HPP
#define MAXMIN_SCALAR_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "maxmin/errors.hpp"

namespace maxmin {

/// An exact rational number in [0,1], the carrier of the max-min semiring.
///
/// Values are kept in lowest terms, so equality is structural. Every operation
/// the library performs on scalars is min, max, or comparison, which means no
/// new values are ever manufactured: outputs are always drawn from inputs.
class Scalar {
 public:
  using int_type = std::int64_t;

  constexpr Scalar() = default;

  /// The value num/den. Throws ParseError unless 0 <= num/den <= 1.
  static Scalar ratio(int_type num, int_type den) {
    if (den <= 0) {
      throw ParseError("scalar denominator must be positive");
    }
    if (num < 0 || num > den) {
      throw ParseError("scalar " + std::to_string(num) + "/" + std::to_string(den) +
                       " outside [0,1]");
    }
    const int_type g = std::gcd(num, den);
    Scalar s;
    s.num_ = num / g;
    s.den_ = den / g;
    return s;
  }

  static constexpr Scalar zero() { return Scalar(); }
  static Scalar one() { return ratio(1, 1); }

  /// Parses "0.35", "1", ".5" or "7/20". Anything outside [0,1] is rejected.
  static Scalar parse(std::string_view text);

  constexpr int_type num() const { return num_; }
  constexpr int_type den() const { return den_; }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_one() const { return num_ == den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Canonical text: a terminating decimal when one exists, else "p/q".
  std::string str() const;

  friend constexpr bool operator==(const Scalar&, const Scalar&) = default;
  friend constexpr std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  int_type num_ = 0;
  int_type den_ = 1;
};

inline Scalar meet(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline Scalar join(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Scalar::int_type parse_digits(std::string_view digits, std::string_view whole) {
  Scalar::int_type value = 0;
  if (digits.empty()) return 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  for (char c : s) {
    if (c == '-' || c == '+') throw ParseError("malformed scalar '" + std::string(s) + "'");
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = detail::trim(s.substr(0, slash));
    const auto den = detail::trim(s.substr(slash + 1));
    if (num.empty() || den.empty()) throw ParseError("malformed fraction '" + std::string(s) + "'");
    return ratio(detail::parse_digits(num, s), detail::parse_digits(den, s));
  }
  const auto dot = s.find('.');
  const auto whole = s.substr(0, dot);
  const auto frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw ParseError("malformed scalar '" + std::string(s) + "'");
  if (frac.size() > 18) throw ParseError("too many decimal digits in '" + std::string(s) + "'");
  const int_type w = detail::parse_digits(whole, s);
  if (w > 1) throw ParseError("scalar '" + std::string(s) + "' outside [0,1]");
  int_type den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const int_type f = detail::parse_digits(frac, s);
  // w <= 1 and f < den, so w*den + f cannot overflow.
  return ratio(w * den + f, den);
}

inline std::string Scalar::str() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  int_type rest = den_;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  const int digits = twos > fives ? twos : fives;
  if (rest != 1 || digits > 18) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  __int128 scaled = num_;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= den_;
  std::string frac = std::to_string(static_cast<int_type>(scaled));
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return "0." + frac;
}

}  // namespace maxmin

#endif  // MAXMIN_SCALAR_HPP
