#include "orthospec/hypgeom.hpp"

#include <cmath>
#include <numbers>

#include "orthospec/quadrature.hpp"
#include "orthospec/symbolics.hpp"

namespace orthospec::hypgeom {

namespace {

// Past this distance beyond the top the tail integrand is below e^{-120}.
constexpr double kTailCutoff = 60.0;

// log(cosh^{n-1}(t) h(n, t)). The product stays bounded as t grows even
// though each factor over- or underflows separately.
double log_weight(int n, double t) {
  const int k = n - 2;
  const double theta = std::atan2(1.0, std::sinh(t));
  double log_h = 0.0;
  if (theta < detail::kSeriesRadius) {
    log_h = std::log(sphere_area<double>(k) / sphere_area<double>(n - 1)) +
            (k + 1) * std::log(theta) +
            std::log(detail::power_integral_series(k, theta, -1));
  } else {
    log_h = std::log(harmonic_h(n, t));
  }
  return (n - 1) * detail::log_cosh(t) + log_h;
}

}  // namespace

double bridgeman_summand(int n, double l, double tol) {
  require_dimension(n);
  require_length(l);
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");

  // Each of the two pieces gets a quarter of the budget; the result is
  // doubled at the end.
  quadrature::Options opts;
  opts.abs_tol = tol / 4.0;

  const double base = hyp_ball_volume(n - 1, iota(l));
  double core = 0.0;
  if (base > 0.0) {
    quadrature::Options core_opts = opts;
    core_opts.abs_tol = opts.abs_tol / base;
    core = base * quadrature::integrate(
                      [n](double t) { return std::exp(log_weight(n, t)); }, 0.0, l,
                      core_opts)
                      .value;
  }

  // t = l - log(u) maps [l, inf) onto (0, 1]; dt = -du / u.
  const auto tail_integrand = [n, l](double u) {
    const double t = l - std::log(u);
    if (t - l > kTailCutoff) return 0.0;
    const double annulus = detail::annulus_volume(n, l, t);
    if (annulus == 0.0) return 0.0;
    return std::exp(log_weight(n, t)) * annulus / u;
  };
  const double tail = quadrature::integrate(tail_integrand, 0.0, 1.0, opts).value;

  return 2.0 * (core + tail);
}

double chi_summand_numeric(int n, double l) {
  if (n < 3 || n % 2 == 0) throw ParityError("chi summand requires odd n >= 3");
  const int m = n - 1;
  const double r_m = symbolics::to_double(symbolics::gb_constant_exact(m));
  const double scale = std::pow(2.0 * std::numbers::pi, m / 2) * r_m;
  return basmajian_summand(n, l) / scale;
}

}  // namespace orthospec::hypgeom
