#include "orthospec/symbolics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orthospec/errors.hpp"

namespace orthospec::symbolics {

namespace mp = boost::multiprecision;

double to_double(const BigRational& q) { return q.convert_to<double>(); }

std::string to_string(const BigRational& q) {
  std::ostringstream out;
  out << mp::numerator(q);
  if (mp::denominator(q) != 1) out << '/' << mp::denominator(q);
  return out.str();
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const BigRational& c, int degree) {
  if (degree < 0) throw ArgumentError("monomial degree must be nonnegative");
  std::vector<BigRational> coefficients(static_cast<std::size_t>(degree) + 1);
  coefficients.back() = c;
  return Polynomial(std::move(coefficients));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigRational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return BigRational(0);
  return coefficients_[static_cast<std::size_t>(k)];
}

const BigRational& Polynomial::leading() const {
  if (is_zero()) throw ArgumentError("zero polynomial has no leading coefficient");
  return coefficients_.back();
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigRational> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < a.coefficients_.size()) c[k] += a.coefficients_[k];
    if (k < b.coefficients_.size()) c[k] += b.coefficients_[k];
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + BigRational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const BigRational& s, const Polynomial& p) {
  std::vector<BigRational> c = p.coefficients_;
  for (auto& coefficient : c) coefficient *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const BigRational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const BigRational factor = rem[static_cast<std::size_t>(k)] / lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? Polynomial() : (BigRational(1) / r.leading()) * r;
  }
  if (x.is_zero()) return x;
  return (BigRational(1) / x.leading()) * x;
}

// --------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ArgumentError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  Polynomial n = divmod(num, g).first;
  Polynomial d = divmod(den, g).first;

  // Clear denominators, then strip the joint integer content.
  BigInt lcm_den(1);
  for (const auto* p : {&n, &d}) {
    for (const auto& c : p->coefficients()) lcm_den = mp::lcm(lcm_den, mp::denominator(c));
  }
  BigInt content(0);
  for (const auto* p : {&n, &d}) {
    for (const auto& c : p->coefficients()) {
      content = mp::gcd(content, BigInt(mp::numerator(c) * (lcm_den / mp::denominator(c))));
    }
  }
  BigRational scale = BigRational(lcm_den) / BigRational(content);
  if (d.leading() < 0) scale = -scale;
  num_ = scale * n;
  den_ = scale * d;
}

int RationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

BigRational RationalFunction::operator()(const BigRational& x) const {
  const BigRational d = den_(x);
  if (d == 0) throw ArgumentError("rational function evaluated at a pole");
  return num_(x) / d;
}

double RationalFunction::operator()(double x) const { return to_double((*this)(BigRational(x))); }

RationalFunction compose(const Polynomial& p, const RationalFunction& c) {
  if (p.is_zero()) return {Polynomial(), Polynomial::constant(1)};
  Polynomial num = Polynomial::constant(p.leading());
  Polynomial den = Polynomial::constant(1);
  for (int k = p.degree() - 1; k >= 0; --k) {
    num = num * c.num() + p.coefficient(k) * (den * c.den());
    den = den * c.den();
  }
  return {num, den};
}

// --------------------------------------------------------- PiScaledRational

PiScaledRational::PiScaledRational(BigRational q, int twice_pi_exponent)
    : q_(std::move(q)), twice_exponent_(twice_pi_exponent) {
  canonicalize();
}

void PiScaledRational::canonicalize() {
  if (q_ == 0) twice_exponent_ = 0;
}

int PiScaledRational::pi_exponent() const {
  if (twice_exponent_ % 2 != 0) throw ConstructionError("half-integer power of pi survived");
  return twice_exponent_ / 2;
}

BigRational PiScaledRational::rational_value() const {
  if (twice_exponent_ != 0) throw ConstructionError("power of pi did not cancel");
  return q_;
}

double PiScaledRational::to_double() const {
  return symbolics::to_double(q_) * std::pow(3.14159265358979323846, 0.5 * twice_exponent_);
}

PiScaledRational operator*(const PiScaledRational& a, const PiScaledRational& b) {
  return {a.q_ * b.q_, a.twice_exponent_ + b.twice_exponent_};
}

PiScaledRational operator/(const PiScaledRational& a, const PiScaledRational& b) {
  if (b.q_ == 0) throw ArgumentError("division by zero");
  return {a.q_ / b.q_, a.twice_exponent_ - b.twice_exponent_};
}

namespace {

BigInt factorial(int k) {
  BigInt f(1);
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

BigInt binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

PiScaledRational gamma_half(int twice_arg) {
  if (twice_arg <= 0) throw ArgumentError("gamma_half requires a positive argument");
  if (twice_arg % 2 == 0) return {BigRational(factorial(twice_arg / 2 - 1)), 0};
  // Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
  const int m = (twice_arg - 1) / 2;
  const BigInt four_m = BigInt(1) << (2 * m);
  return {BigRational(factorial(2 * m)) / BigRational(four_m * factorial(m)), 1};
}

PiScaledRational sphere_area_exact(int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  return PiScaledRational(BigRational(2), k + 1) / gamma_half(k + 1);
}

Polynomial sinh_power_integral_poly(int k) {
  if (k < 1 || k % 2 == 0) throw ParityError("sinh power polynomial requires odd k >= 1");
  const int j = (k - 1) / 2;
  std::vector<BigRational> coefficients(static_cast<std::size_t>(k) + 1);
  BigRational at_one(0);
  for (int i = 0; i <= j; ++i) {
    const int sign = ((j - i) % 2 == 0) ? 1 : -1;
    const BigRational c = BigRational(sign * binomial(j, i)) / (2 * i + 1);
    coefficients[static_cast<std::size_t>(2 * i + 1)] = c;
    at_one += c;
  }
  coefficients[0] = -at_one;
  return Polynomial(std::move(coefficients));
}

BigRational gb_constant_exact(int m) {
  if (m < 2 || m % 2 != 0) throw ParityError("Gauss-Bonnet constant requires even m >= 2");
  const int half = m / 2;
  const BigRational sign = (half % 2 == 0) ? 1 : -1;
  const PiScaledRational two_pi_power(BigRational(BigInt(1) << half), m);
  const PiScaledRational r =
      PiScaledRational(sign, 0) * sphere_area_exact(m) / (PiScaledRational(2, 0) * two_pi_power);
  return r.rational_value();
}

namespace {

// (x^2 + 1) / (x^2 - 1) = coth(l) = cosh(iota(l)) at x = e^l.
RationalFunction cosh_iota_of_x() {
  return {Polynomial({1, 0, 1}), Polynomial({-1, 0, 1})};
}

}  // namespace

RationalFunction q_rational(int n) {
  if (n < 3 || n % 2 == 0) throw ParityError("q_n requires odd n >= 3");
  const BigRational sign = (((n - 1) / 2) % 2 == 0) ? 1 : -1;
  const BigRational scale =
      (PiScaledRational(4 * sign, 0) * sphere_area_exact(n - 2) / sphere_area_exact(n - 1))
          .rational_value();
  const RationalFunction p = compose(sinh_power_integral_poly(n - 2), cosh_iota_of_x());
  return {scale * p.num(), p.den()};
}

ScaledRationalFunction base_volume_rational(int n) {
  if (n % 2 != 0) throw ParityError("base volume is rational in e^l only for even n");
  if (n < 4) throw ArgumentError("base volume rationality requires n >= 4");
  return {sphere_area_exact(n - 1), compose(sinh_power_integral_poly(n - 1), cosh_iota_of_x())};
}

// --------------------------------------------------------------------- emit

namespace {

std::string emit_polynomial(const Polynomial& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigRational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigRational magnitude = negative ? BigRational(-c) : c;
    if (magnitude != 1 || k == 0) out += to_string(magnitude);
    if (k == 1) {
      out += 'x';
    } else if (k > 1) {
      out += style == Style::kLatex ? "x^{" + std::to_string(k) + "}" : "x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

std::string emit(const RationalFunction& rf, Style style) {
  const std::string num = emit_polynomial(rf.num(), style);
  if (rf.den().degree() == 0 && rf.den().leading() == 1) return num;
  const std::string den = emit_polynomial(rf.den(), style);
  if (style == Style::kLatex) return "\\frac{" + num + "}{" + den + "}";
  return "(" + num + ")/(" + den + ")";
}

}  // namespace orthospec::symbolics
