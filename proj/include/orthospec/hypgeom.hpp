#pragma once

// Hyperbolic trigonometry of chimneys: the quadrilateral involution, ball
// volumes in hyperbolic and spherical space, the harmonic measure of a
// half-space, and the Basmajian / Bridgeman summands built from them.

#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "orthospec/errors.hpp"

namespace orthospec::hypgeom {

/// Largest accepted length; cosh(l)^2 must stay finite in double precision.
inline constexpr double kMaxLength = 350.0;

template <typename Scalar>
void require_length(Scalar l) {
  if (!std::isfinite(static_cast<double>(l))) throw ArgumentError("l must be finite");
  if (!(l > Scalar(0))) throw ArgumentError("l must be positive");
  if (l > Scalar(kMaxLength)) throw ArgumentError("l must not exceed 350");
}

inline void require_dimension(int n) {
  if (n < 2) throw ArgumentError("n must be at least 2");
}

/// Omega_k, the k-dimensional measure of the unit k-sphere in R^{k+1}.
/// Uses Omega_k = 2 pi Omega_{k-2} / (k - 1) from Omega_0 = 2, Omega_1 = 2 pi.
template <typename Scalar = double>
Scalar sphere_area(int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  Scalar omega = (k % 2 == 0) ? Scalar(2) : two_pi;
  for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) omega *= two_pi / Scalar(j - 1);
  return omega;
}

/// The other finite side of a quadrilateral with three right angles and one
/// ideal vertex: sinh(iota(l)) * sinh(l) = 1. An involution on (0, inf).
template <typename Scalar>
Scalar iota(Scalar l) {
  require_length(l);
  using std::asinh;
  using std::sinh;
  return asinh(Scalar(1) / sinh(l));
}

/// Variant with fourth angle phi: sinh(iota_phi(l)) = cos(phi) / sinh(l).
template <typename Scalar>
Scalar iota_phi(Scalar l, Scalar phi) {
  require_length(l);
  if (!(phi >= Scalar(0) && phi <= std::numbers::pi_v<Scalar> / Scalar(2))) {
    throw ArgumentError("phi must lie in [0, pi/2]");
  }
  using std::asinh;
  using std::cos;
  using std::sinh;
  if (phi == std::numbers::pi_v<Scalar> / Scalar(2)) return Scalar(0);
  return asinh(cos(phi) / sinh(l));
}

namespace detail {

inline constexpr int kSeriesTerms = 24;
inline constexpr double kSeriesRadius = 0.5;

// S with  int_0^r f(t)^k dt = r^{k+1} S,  f = sinh (sign = +1) or sin
// (sign = -1); power series of (f(t)/t)^k in t^2, integrated termwise.
template <typename Scalar>
Scalar power_integral_series(int k, Scalar r, int sign) {
  std::array<Scalar, kSeriesTerms> base{};
  std::array<Scalar, kSeriesTerms> power{};
  Scalar factorial = Scalar(1);
  for (int m = 0; m < kSeriesTerms; ++m) {
    if (m > 0) factorial *= Scalar(2 * m) * Scalar(2 * m + 1);
    base[m] = ((sign < 0 && m % 2 == 1) ? Scalar(-1) : Scalar(1)) / factorial;
  }
  power[0] = Scalar(1);
  for (int p = 0; p < k; ++p) {
    std::array<Scalar, kSeriesTerms> next{};
    for (int i = 0; i < kSeriesTerms; ++i) {
      for (int j = 0; i + j < kSeriesTerms; ++j) next[i + j] += power[i] * base[j];
    }
    power = next;
  }
  const Scalar r2 = r * r;
  Scalar sum = Scalar(0);
  Scalar rp = Scalar(1);
  for (int m = 0; m < kSeriesTerms; ++m) {
    sum += power[m] * rp / Scalar(k + 2 * m + 1);
    rp *= r2;
  }
  return sum;
}

}  // namespace detail

/// int_0^r sinh^k(t) dt by the reduction formula
/// I_k = (sinh^{k-1} r cosh r - (k-1) I_{k-2}) / k, with I_0 = r and
/// I_1 = cosh r - 1; a power series replaces it for small r, where the
/// reduction cancels catastrophically.
template <typename Scalar>
Scalar sinh_power_integral(int k, Scalar r) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (!(r >= Scalar(0))) throw ArgumentError("r must be nonnegative");
  using std::cosh;
  using std::pow;
  using std::sinh;
  if (r == Scalar(0)) return Scalar(0);
  if (k == 0) return r;
  if (r < Scalar(detail::kSeriesRadius)) {
    return pow(r, Scalar(k + 1)) * detail::power_integral_series(k, r, +1);
  }
  const Scalar s = sinh(r);
  const Scalar c = cosh(r);
  const Scalar half_sinh = sinh(r / Scalar(2));
  Scalar lower = (k % 2 == 0) ? r : Scalar(2) * half_sinh * half_sinh;
  Scalar sinh_pow = (k % 2 == 0) ? s : s * s;  // sinh^{j-1} for the first step j
  for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) {
    lower = (sinh_pow * c - Scalar(j - 1) * lower) / Scalar(j);
    sinh_pow *= s * s;
  }
  return lower;
}

/// int_0^r sin^k(t) dt, the spherical analogue of sinh_power_integral.
template <typename Scalar>
Scalar sin_power_integral(int k, Scalar r) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (!(r >= Scalar(0))) throw ArgumentError("r must be nonnegative");
  using std::cos;
  using std::pow;
  using std::sin;
  if (r == Scalar(0)) return Scalar(0);
  if (k == 0) return r;
  if (r < Scalar(detail::kSeriesRadius)) {
    return pow(r, Scalar(k + 1)) * detail::power_integral_series(k, r, -1);
  }
  const Scalar s = sin(r);
  const Scalar c = cos(r);
  const Scalar half_sin = sin(r / Scalar(2));
  Scalar lower = (k % 2 == 0) ? r : Scalar(2) * half_sin * half_sin;
  Scalar sin_pow = (k % 2 == 0) ? s : s * s;
  for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) {
    lower = (Scalar(j - 1) * lower - sin_pow * c) / Scalar(j);
    sin_pow *= s * s;
  }
  return lower;
}

/// Volume of a ball of radius r in H^n: Omega_{n-1} int_0^r sinh^{n-1}.
template <typename Scalar>
Scalar hyp_ball_volume(int n, Scalar r) {
  if (n < 1) throw ArgumentError("n must be at least 1");
  if (!(r >= Scalar(0))) throw ArgumentError("r must be nonnegative");
  return sphere_area<Scalar>(n - 1) * sinh_power_integral(n - 1, r);
}

/// Volume of a ball of radius r in S^n, 0 <= r <= pi.
template <typename Scalar>
Scalar sph_ball_volume(int n, Scalar r) {
  if (n < 1) throw ArgumentError("n must be at least 1");
  if (!(r >= Scalar(0) && r <= std::numbers::pi_v<Scalar>)) {
    throw ArgumentError("r must lie in [0, pi]");
  }
  return sphere_area<Scalar>(n - 1) * sin_power_integral(n - 1, r);
}

/// Harmonic measure in H^n of a round disk at infinity, seen from a point on
/// the far side of its bounding plane at distance t: the normalized volume
/// of a spherical cap of angular radius theta with sin(theta) = 1/cosh(t).
template <typename Scalar>
Scalar harmonic_h(int n, Scalar t) {
  require_dimension(n);
  if (!(t >= Scalar(0))) throw ArgumentError("t must be nonnegative");
  using std::atan2;
  using std::sinh;
  const Scalar theta = atan2(Scalar(1), sinh(t));
  return sph_ball_volume(n - 1, theta) / sphere_area<Scalar>(n - 1);
}

namespace detail {

template <typename Scalar>
Scalar log_cosh(Scalar x) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::log1p;
  x = abs(x);
  return x + log1p(exp(Scalar(-2) * x)) - std::numbers::ln2_v<Scalar>;
}

template <typename Scalar>
Scalar log_sinh(Scalar x) {
  using std::exp;
  using std::log;
  using std::log1p;
  using std::sinh;
  if (x < Scalar(20)) return log(sinh(x));
  return x + log1p(-exp(Scalar(-2) * x)) - std::numbers::ln2_v<Scalar>;
}

// V^H_{n-1}(iota(l)) - V^H_{n-1}(iota_phi(l)) with sin(phi) = cosh(l)/cosh(t),
// t >= l. cos^2(phi) = sinh(t - l) sinh(t + l) / cosh^2(t), assembled in log
// space so neither the seam t = l nor large t loses accuracy or overflows.
// For large t the annulus is a thin shell whose width
//   asinh(1/s) - asinh(c/s) = asinh(sin^2(phi) / (hypot(s, c) + c hypot(s, 1)))
// is formed directly; subtracting the two ball volumes would cancel.
template <typename Scalar>
Scalar annulus_volume(int n, Scalar l, Scalar t) {
  using std::asinh;
  using std::exp;
  using std::hypot;
  using std::pow;
  using std::sinh;
  using std::sqrt;
  if (t < l) throw ArgumentError("annulus requires t >= l");
  const Scalar cos_phi =
      sqrt(sinh(t - l) * exp(log_sinh(t + l) - Scalar(2) * log_cosh(t)));
  const Scalar sin2_phi = exp(Scalar(2) * (log_cosh(l) - log_cosh(t)));
  const Scalar s = sinh(l);
  const Scalar outer = asinh(Scalar(1) / s);
  const Scalar width = asinh(sin2_phi / (hypot(s, cos_phi) + cos_phi * hypot(s, Scalar(1))));
  if (!(width > Scalar(0))) return Scalar(0);
  if (n == 2) return Scalar(2) * width;
  if (width > Scalar(0.25)) {
    const Scalar diff = hyp_ball_volume(n - 1, outer) - hyp_ball_volume(n - 1, outer - width);
    return diff > Scalar(0) ? diff : Scalar(0);
  }
  // Integrate over the offset from the outer radius; the width may be far
  // below the spacing of doubles near `outer`.
  const int k = n - 2;
  const Scalar shell = boost::math::quadrature::gauss<Scalar, 10>::integrate(
      [k, outer](Scalar u) { return pow(sinh(outer - u), Scalar(k)); }, Scalar(0), width);
  return sphere_area<Scalar>(k) * shell;
}

}  // namespace detail

/// Area of the level set at distance t from the base of a chimney of height
/// l in H^n. Below the top the level set projects onto the whole base; past
/// it, onto an annulus with inner radius iota_phi(l).
template <typename Scalar>
Scalar level_set_area(int n, Scalar l, Scalar t) {
  require_dimension(n);
  require_length(l);
  if (!(t >= Scalar(0))) throw ArgumentError("t must be nonnegative");
  using std::cosh;
  using std::pow;
  const Scalar stretch = pow(cosh(t), Scalar(n - 1));
  if (t <= l) return stretch * hyp_ball_volume(n - 1, iota(l));
  return stretch * detail::annulus_volume(n, l, t);
}

/// Boundary measure swept by the two chimney bases of one unoriented
/// orthogeodesic of length l: 2 V^H_{n-1}(iota(l)).
template <typename Scalar>
Scalar basmajian_summand(int n, Scalar l) {
  require_dimension(n);
  return Scalar(2) * hyp_ball_volume(n - 1, iota(l));
}

/// v_n(l): twice the integral of the harmonic measure over two chimneys of
/// height l, with absolute error at most `tol`.
double bridgeman_summand(int n, double l, double tol = 1e-10);

/// a_n(l) / ((2 pi)^{(n-1)/2} r_{n-1}) for odd n >= 3: the contribution of
/// one orthogeodesic to chi of the boundary, evaluated numerically.
double chi_summand_numeric(int n, double l);

}  // namespace orthospec::hypgeom
