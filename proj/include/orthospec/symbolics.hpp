#pragma once

// Exact rational-function algebra for the orthospectrum identities: the
// polynomial antiderivatives of odd sinh powers, the Gauss-Bonnet constants
// r_m, and the rational functions q_n with chi(S) = sum_i q_n(e^{l_i}).
// Nothing in this module touches floating point except explicit conversions.

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orthospec::symbolics {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

double to_double(const BigRational& q);
std::string to_string(const BigRational& q);

/// Dense univariate polynomial; coefficient k multiplies x^k. The leading
/// coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(const BigRational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<BigRational>& coefficients() const { return coefficients_; }
  BigRational coefficient(int k) const;
  const BigRational& leading() const;

  BigRational operator()(const BigRational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigRational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<BigRational> coefficients_;
};

/// Quotient and remainder over Q; throws ArgumentError on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor over Q (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// num/den in normal form: coprime over Q, integer coefficients with joint
/// content 1, positive leading denominator coefficient. Two rational
/// functions are equal iff their normal forms agree coefficientwise.
class RationalFunction {
 public:
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  /// max(deg num, deg den); 0 for the zero function.
  int degree() const;

  /// Exact evaluation at the binary value of x, rounded once at the end.
  double operator()(double x) const;
  BigRational operator()(const BigRational& x) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// p(c(x)) via Horner's rule over unreduced fractions, normalized once.
RationalFunction compose(const Polynomial& p, const RationalFunction& c);

/// q * pi^(twice_pi_exponent / 2). Half-integer powers of pi appear in
/// Gamma at half-integers and must cancel before a value leaves the module.
class PiScaledRational {
 public:
  PiScaledRational() = default;
  PiScaledRational(BigRational q, int twice_pi_exponent);

  static PiScaledRational pi_power(int k) { return {BigRational(1), 2 * k}; }

  const BigRational& rational() const { return q_; }
  int twice_pi_exponent() const { return twice_exponent_; }

  /// Integral exponent k of pi; ConstructionError if it is a half-integer.
  int pi_exponent() const;

  /// The rational part, asserting that pi cancelled completely.
  BigRational rational_value() const;

  double to_double() const;

  friend PiScaledRational operator*(const PiScaledRational& a, const PiScaledRational& b);
  friend PiScaledRational operator/(const PiScaledRational& a, const PiScaledRational& b);
  friend bool operator==(const PiScaledRational& a, const PiScaledRational& b) = default;

 private:
  void canonicalize();

  BigRational q_{0};
  int twice_exponent_ = 0;
};

/// Gamma(twice_arg / 2) for a positive integer twice_arg.
PiScaledRational gamma_half(int twice_arg);

/// Omega_k = 2 pi^{(k+1)/2} / Gamma((k+1)/2), exactly.
PiScaledRational sphere_area_exact(int k);

/// P_k(c) = int_1^c (u^2 - 1)^{(k-1)/2} du for odd k, so that
/// int_0^r sinh^k = P_k(cosh r).
Polynomial sinh_power_integral_poly(int k);

/// r_m with area(S) = (2 pi)^{m/2} chi(S) r_m for closed hyperbolic m-manifolds,
/// r_m = (-1)^{m/2} Omega_m / (2 (2 pi)^{m/2}).
BigRational gb_constant_exact(int m);

/// The rational function q_n, n odd >= 3: K_n P_{n-2}((x^2+1)/(x^2-1)) with
/// K_n = (-1)^{(n-1)/2} 4 Omega_{n-2} / Omega_{n-1}.
RationalFunction q_rational(int n);

/// scale * function(x).
struct ScaledRationalFunction {
  PiScaledRational scale;
  RationalFunction function;

  double operator()(double x) const { return scale.to_double() * function(x); }
};

/// V^H_n(iota(l)) = Omega_{n-1} P_{n-1}((x^2+1)/(x^2-1)) with x = e^l, for
/// even n >= 4. This is the ball whose radial integrand is sinh^{n-1}, the
/// power that is odd for even n; the (n-1)-ball V^H_{n-1} integrates an even
/// power and is not rational in x.
ScaledRationalFunction base_volume_rational(int n);

enum class Style { kPlain, kLatex };

/// Canonical text, descending powers with integer coefficients, e.g.
/// "(12x^2 - 4)/(x^6 - 3x^4 + 3x^2 - 1)" or "\frac{12x^{2} - 4}{...}".
std::string emit(const RationalFunction& rf, Style style = Style::kPlain);

}  // namespace orthospec::symbolics
