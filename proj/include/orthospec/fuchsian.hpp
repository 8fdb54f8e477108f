#pragma once

// Isometries of the upper half plane, pair-of-pants Fuchsian groups and
// their orthospectra. Ideal points are homogeneous vectors (x : y), with
// infinity = (1 : 0), so that Mobius maps act linearly and no endpoint needs
// special-casing.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orthospec/errors.hpp"

namespace orthospec::fuchsian {

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar>
using IdealPoint = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
IdealPoint<Scalar> ideal_point(Scalar x) {
  return IdealPoint<Scalar>(x, Scalar(1));
}

template <typename Scalar>
IdealPoint<Scalar> ideal_infinity() {
  return IdealPoint<Scalar>(Scalar(1), Scalar(0));
}

/// det[x y]; equals x - y for finite points in the (x : 1) chart.
template <typename Scalar>
Scalar bracket(const IdealPoint<Scalar>& x, const IdealPoint<Scalar>& y) {
  return x(0) * y(1) - x(1) * y(0);
}

/// An element of PSL(2, R): a unit-determinant matrix up to sign. Stored
/// with its first nonzero entry positive so equal isometries compare equal.
template <typename Scalar = double>
class Isometry {
 public:
  Isometry() : m_(Matrix2<Scalar>::Identity()) {}

  explicit Isometry(const Matrix2<Scalar>& m) : m_(m) { normalize(); }

  Isometry(Scalar a, Scalar b, Scalar c, Scalar d) {
    m_ << a, b, c, d;
    normalize();
  }

  /// z -> e^t z: translation by t along the geodesic (0, inf).
  static Isometry dilation(Scalar t) {
    using std::exp;
    return Isometry(exp(t / Scalar(2)), Scalar(0), Scalar(0), exp(-t / Scalar(2)));
  }

  const Matrix2<Scalar>& matrix() const { return m_; }
  Scalar trace() const { return m_.trace(); }

  Isometry inverse() const {
    return Isometry(m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0));
  }

  IdealPoint<Scalar> operator()(const IdealPoint<Scalar>& z) const { return m_ * z; }

  friend Isometry operator*(const Isometry& x, const Isometry& y) {
    return Isometry(Matrix2<Scalar>(x.m_ * y.m_));
  }

 private:
  void normalize() {
    using std::abs;
    using std::sqrt;
    const Scalar det = m_.determinant();
    if (!(det > Scalar(0))) throw ArgumentError("isometry matrix must have positive determinant");
    m_ /= sqrt(det);
    const Scalar first = m_(0, 0) != Scalar(0) ? m_(0, 0) : m_(0, 1);
    if (first < Scalar(0)) m_ = -m_;
  }

  Matrix2<Scalar> m_;
};

/// Unordered pair of distinct ideal points.
template <typename Scalar = double>
class Geodesic {
 public:
  /// The imaginary axis (0, inf).
  Geodesic() : p_(ideal_point(Scalar(0))), q_(ideal_infinity<Scalar>()) {}

  Geodesic(const IdealPoint<Scalar>& p, const IdealPoint<Scalar>& q) : p_(p), q_(q) {
    if (bracket(p, q) == Scalar(0)) throw ArgumentError("geodesic endpoints must be distinct");
  }

  Geodesic(Scalar p, Scalar q) : Geodesic(ideal_point(p), ideal_point(q)) {}

  const IdealPoint<Scalar>& p() const { return p_; }
  const IdealPoint<Scalar>& q() const { return q_; }

 private:
  IdealPoint<Scalar> p_;
  IdealPoint<Scalar> q_;
};

template <typename Scalar>
Geodesic<Scalar> operator*(const Isometry<Scalar>& g, const Geodesic<Scalar>& gamma) {
  return {g(gamma.p()), g(gamma.q())};
}

template <typename Scalar>
void require_hyperbolic(const Isometry<Scalar>& g) {
  using std::abs;
  if (!(abs(g.trace()) > Scalar(2) + Scalar(1e-12))) {
    throw GeometryError(GeometryError::Kind::kNonHyperbolic, "isometry is not hyperbolic");
  }
}

/// Invariant geodesic of a hyperbolic isometry: its two fixed points, which
/// are the eigenvectors of the matrix. p repels, q attracts.
template <typename Scalar>
Geodesic<Scalar> axis(const Isometry<Scalar>& g) {
  using std::abs;
  using std::sqrt;
  require_hyperbolic(g);
  const auto& m = g.matrix();
  const Scalar tr = m.trace();
  const Scalar root = sqrt((tr - Scalar(2)) * (tr + Scalar(2)));
  // Larger root without cancellation; the product of the eigenvalues is 1.
  const Scalar big = (tr > Scalar(0) ? tr + root : tr - root) / Scalar(2);
  const Scalar small = Scalar(1) / big;
  const auto eigenvector = [&m](Scalar lambda) {
    const IdealPoint<Scalar> u(m(0, 1), lambda - m(0, 0));
    const IdealPoint<Scalar> v(lambda - m(1, 1), m(1, 0));
    return u.squaredNorm() >= v.squaredNorm() ? u : v;
  };
  return {eigenvector(small), eigenvector(big)};
}

/// 2 arccosh(|tr g| / 2).
template <typename Scalar>
Scalar translation_length(const Isometry<Scalar>& g) {
  using std::abs;
  using std::acosh;
  require_hyperbolic(g);
  return Scalar(2) * acosh(abs(g.trace()) / Scalar(2));
}

/// Hyperbolic distance between disjoint geodesics. With X the cross ratio
/// that sends the first geodesic to (0, inf) and the second to (a, b),
/// X = b / a, and d = log((sqrt X + 1)^2 / |X - 1|); X - 1 comes from the
/// Plucker relation so nearly-close endpoints do not cancel.
template <typename Scalar>
Scalar geodesic_distance(const Geodesic<Scalar>& g1, const Geodesic<Scalar>& g2) {
  using std::abs;
  using std::log;
  using std::sqrt;
  const auto& p1 = g1.p();
  const auto& q1 = g1.q();
  const auto& p2 = g2.p();
  const auto& q2 = g2.q();
  const auto separated = [](const IdealPoint<Scalar>& x, const IdealPoint<Scalar>& y) {
    return abs(bracket(x, y)) > Scalar(1e-12) * x.norm() * y.norm();
  };
  if (!separated(p1, p2) || !separated(p1, q2) || !separated(q1, p2) || !separated(q1, q2)) {
    throw GeometryError(GeometryError::Kind::kTangency, "geodesics share an endpoint");
  }
  const Scalar denom = bracket(q2, q1) * bracket(p2, p1);
  const Scalar x = bracket(q2, p1) * bracket(p2, q1) / denom;
  if (!(x > Scalar(0))) throw GeometryError(GeometryError::Kind::kCrossing, "geodesics cross");
  const Scalar x_minus_one = bracket(q2, p2) * bracket(p1, q1) / denom;
  const Scalar root = sqrt(x) + Scalar(1);
  return log(root * root / abs(x_minus_one));
}

// ------------------------------------------------------------------ words

/// Generators of the free group F(A, B); lowercase is the inverse. The
/// enumerator order A < a < B < b is the lexicographic order used for
/// canonical representatives.
enum class Letter : std::uint8_t { A = 0, a = 1, B = 2, b = 3 };

inline Letter inverse(Letter x) { return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1U); }

char to_char(Letter x);

/// Freely reduced word over {A, a, B, b}, ordered shortlex.
class Word {
 public:
  Word() = default;
  /// Freely reduces its input.
  explicit Word(const std::vector<Letter>& letters);

  /// Parses letters from "AaBb"; an empty string is the identity.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t k) const { return letters_[k]; }

  Word inverse() const;
  Word power(int m) const;
  std::string to_string() const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word& x, const Word& y) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  std::vector<Letter> letters_;
};

/// Lexicographically least minimal-length element of <h> w <g>, for
/// cyclically reduced nontrivial h and g.
Word canonical_double_coset(const Word& h, const Word& w, const Word& g);

/// Reference implementation: exhaustive search over h^m w g^k with
/// |m|, |k| <= window.
Word canonical_double_coset_bruteforce(const Word& h, const Word& w, const Word& g, int window);

bool is_canonical(const Word& h, const Word& w, const Word& g);

// ------------------------------------------------------------ pants group

/// Boundary geodesic lengths of a hyperbolic pair of pants.
struct PantsSpec {
  std::array<double, 3> lengths{};

  /// Throws ArgumentError unless every length is finite, positive and <= 350.
  void validate() const;
};

struct PantsGroup {
  Isometry<double> A;
  Isometry<double> B;
  /// h1 = A, h2 = B, h3 = (AB)^{-1}; h1 h2 h3 = 1.
  std::array<Isometry<double>, 3> peripherals;
  std::array<Word, 3> peripheral_words;
  std::array<Geodesic<double>, 3> boundary_axes;
};

/// Distance between boundary components i and j (1-based) across the
/// right-angled hexagon.
double seam_length(const PantsSpec& spec, int i, int j);

/// A = dilation by L1 with axis (0, inf); B translates by L2 along the
/// geodesic (e^{-s}, e^{s}), s = iota(seam_length(1, 2)), oriented so that
/// |tr AB| = 2 cosh(L3 / 2).
PantsGroup pants_group(const PantsSpec& spec);

Isometry<double> evaluate(const PantsGroup& group, const Word& w);

// --------------------------------------------------------- orthospectrum

/// One unoriented orthogeodesic from boundary i to boundary j (1-based,
/// i <= j), indexed by the canonical representative of <h_i> word <h_j>.
struct OrthoEntry {
  int i = 0;
  int j = 0;
  Word word;
  double length = 0.0;

  friend bool operator==(const OrthoEntry&, const OrthoEntry&) = default;
};

struct DepthPolicy {
  /// Auto: deepen until two consecutive word lengths add nothing below the
  /// cutoff, giving up at max_depth. Fixed: enumerate words up to `depth`.
  bool automatic = true;
  int depth = 24;

  static DepthPolicy auto_policy(int max_depth = 24) { return {true, max_depth}; }
  static DepthPolicy fixed(int depth) { return {false, depth}; }
};

struct Spectrum {
  std::vector<OrthoEntry> entries;  // ascending by (length, i, j, word)
  int word_depth_used = 0;
  bool stabilized = false;  // auto policy reached two empty depths
};

/// The orthospectrum of the pants up to `cutoff`, one row per unoriented
/// orthogeodesic. Deduplication is by canonical word, never by length.
/// The result does not depend on `threads`.
Spectrum enumerate_orthospectrum(const PantsSpec& spec, double cutoff,
                                 const DepthPolicy& policy = DepthPolicy::auto_policy(),
                                 int threads = 1);

struct LengthGroup {
  double length = 0.0;
  std::size_t multiplicity = 0;
  int i = 0;  // boundary pair when grouping by pair, else 0
  int j = 0;
};

/// Merges consecutive lengths within `tol` of a group's first length.
std::vector<LengthGroup> group_lengths(const std::vector<OrthoEntry>& entries, double tol = 1e-9,
                                       bool by_pair = false);

}  // namespace orthospec::fuchsian
