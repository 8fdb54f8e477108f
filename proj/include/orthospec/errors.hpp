#pragma once

#include <stdexcept>
#include <string>

namespace orthospec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain. The CLI maps this to exit code 2.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Dimension or exponent of the wrong parity (e.g. q_n for even n).
class ParityError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A construction that should always succeed did not; indicates a bug.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Two geodesics that must be disjoint cross or share an endpoint.
class GeometryError : public Error {
 public:
  enum class Kind { kCrossing, kTangency, kNonHyperbolic };

  GeometryError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_bound)
      : Error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// A partial identity sum overshot its target: some orthogeodesic was
/// counted twice. The CLI maps this to exit code 4.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace orthospec
