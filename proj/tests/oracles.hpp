#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library: integrals go through Boost.Math quadrature and all geometry is
// written out from the defining formulas.

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

inline double integrate(const auto& f, double a, double b) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 10, 1e-13, &error);
}

inline double sinh_power_integral(int k, double r) {
  if (r == 0.0) return 0.0;
  return integrate([k](double t) { return std::pow(std::sinh(t), k); }, 0.0, r);
}

inline double sin_power_integral(int k, double r) {
  if (r == 0.0) return 0.0;
  return integrate([k](double t) { return std::pow(std::sin(t), k); }, 0.0, r);
}

inline double sphere_area(int k) {
  return 2.0 * std::pow(std::numbers::pi, (k + 1) / 2.0) / std::tgamma((k + 1) / 2.0);
}

inline double iota(double l) { return std::asinh(1.0 / std::sinh(l)); }

// v_2(l) by direct quadrature of the two-piece formula on [0, l] and
// [l, upper], with every factor written from its definition.
inline double bridgeman_n2(double l, double upper) {
  const double base = iota(l);
  const auto h = [](double t) { return std::asin(1.0 / std::cosh(t)) / std::numbers::pi; };
  const auto core = [&](double t) { return std::cosh(t) * 2.0 * base * h(t); };
  const auto tail = [&](double t) {
    const double ratio = std::cosh(l) / std::cosh(t);
    const double cos_phi = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    const double inner = std::asinh(cos_phi / std::sinh(l));
    return std::cosh(t) * 2.0 * (base - inner) * h(t);
  };
  double error = 0.0;
  const double a = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(core, 0.0, l, 10, 1e-13, &error);
  const double b = boost::math::quadrature::tanh_sinh<double>().integrate(tail, l, upper, 1e-14);
  return 2.0 * (a + b);
}

// General n, nested quadrature for the ball volumes.
inline double bridgeman(int n, double l, double upper) {
  const double omega = sphere_area(n - 1);
  const auto hyp_ball = [n](double r) { return sphere_area(n - 2) * sinh_power_integral(n - 2, r); };
  const auto h = [n, omega](double t) {
    const double theta = std::asin(1.0 / std::cosh(t));
    return sphere_area(n - 2) * sin_power_integral(n - 2, theta) / omega;
  };
  const double base = hyp_ball(iota(l));
  const auto core = [&](double t) { return std::pow(std::cosh(t), n - 1) * base * h(t); };
  const auto tail = [&](double t) {
    const double ratio = std::cosh(l) / std::cosh(t);
    const double cos_phi = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    const double inner = std::asinh(cos_phi / std::sinh(l));
    return std::pow(std::cosh(t), n - 1) * (base - hyp_ball(inner)) * h(t);
  };
  return 2.0 * (integrate(core, 0.0, l) + boost::math::quadrature::tanh_sinh<double>().integrate(tail, l, upper, 1e-12));
}

inline double seam(double la, double lb, double lc) {
  const double a = la / 2, b = lb / 2, c = lc / 2;
  return std::acosh((std::cosh(a) * std::cosh(b) + std::cosh(c)) / (std::sinh(a) * std::sinh(b)));
}

// Free-group words as strings over "AaBb"; exhaustive double-coset search.
inline char invert(char x) { return x == 'A' ? 'a' : x == 'a' ? 'A' : x == 'B' ? 'b' : 'B'; }

inline std::string reduce(const std::string& w) {
  std::string out;
  for (char x : w) {
    if (!out.empty() && out.back() == invert(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

inline std::string inverse(const std::string& w) {
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(invert(*it));
  return out;
}

inline std::string power(const std::string& h, int m) {
  std::string out;
  const std::string base = m >= 0 ? h : inverse(h);
  for (int k = 0; k < std::abs(m); ++k) out += base;
  return out;
}

inline int rank(char x) { return x == 'A' ? 0 : x == 'a' ? 1 : x == 'B' ? 2 : 3; }

inline bool shortlex_less(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](char p, char q) { return rank(p) < rank(q); });
}

inline std::string canonical(const std::string& h, const std::string& w, const std::string& g, int window) {
  std::string best;
  bool have = false;
  for (int m = -window; m <= window; ++m) {
    const std::string left = reduce(power(h, m) + w);
    for (int k = -window; k <= window; ++k) {
      std::string u = reduce(left + power(g, k));
      if (!have || shortlex_less(u, best)) {
        best = u;
        have = true;
      }
    }
  }
  return best;
}

inline std::vector<std::string> reduced_words(int max_length) {
  std::vector<std::string> all = {""};
  std::vector<std::string> level = {""};
  for (int d = 0; d < max_length; ++d) {
    std::vector<std::string> next;
    for (const auto& w : level) {
      for (char x : std::string("AaBb")) {
        if (!w.empty() && w.back() == invert(x)) continue;
        next.push_back(w + x);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

}  // namespace oracle
