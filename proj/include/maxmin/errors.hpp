#ifndef MAXMIN_ERRORS_HPP
#define MAXMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxmin {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar, point, or instance text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in spaces of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The box (or the other set) meets the convex set that should be separated from it.
class IntersectionError : public Error {
 public:
  using Error::Error;
};

/// Generators of a planar set touch 0 or 1.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// No candidate separator validated although the theory says one must.
class ExhaustionError : public Error {
 public:
  using Error::Error;
};

/// An iteration bound or internal consistency check was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A brute-force computation would exceed its configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace detail
}  // namespace maxmin

#endif  // MAXMIN_ERRORS_HPP
