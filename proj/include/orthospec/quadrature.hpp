#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "orthospec/errors.hpp"

namespace orthospec::quadrature {

struct Options {
  double abs_tol = 1e-10;
  std::size_t max_panels = 100000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

namespace detail {

// Kronrod 15-point abscissae on [-1, 1] (nonnegative half) and weights; the
// odd-indexed abscissae are the embedded 7-point Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive bisection with a 7/15 Gauss-Kronrod pair per panel.
/// The panel with the largest error estimate is split until the summed
/// estimate drops below `opts.abs_tol`. Throws QuadratureError carrying the
/// best estimate once `opts.max_panels` is exhausted.
template <typename F>
Result integrate(F&& f, double a, double b, const Options& opts = {}) {
  if (!(opts.abs_tol > 0.0)) throw ArgumentError("quadrature tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0};
  if (b < a) {
    Result r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::kronrod15(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;

  while (error > opts.abs_tol) {
    if (panels.size() >= opts.max_panels) {
      throw QuadratureError("adaptive quadrature exceeded its panel budget", value, error);
    }
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw QuadratureError("adaptive quadrature reached machine resolution", value, error);
    }
    const detail::Panel left = detail::kronrod15(f, worst.a, mid);
    const detail::Panel right = detail::kronrod15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Resum from the partition to shed the drift of the running updates.
  Result result;
  result.panels = panels.size();
  while (!panels.empty()) {
    result.value += panels.top().value;
    result.error += panels.top().error;
    panels.pop();
  }
  return result;
}

}  // namespace orthospec::quadrature
