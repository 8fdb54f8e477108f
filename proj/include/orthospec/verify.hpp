#pragma once

// Convergence reports for the area (Basmajian) and volume (Bridgeman)
// identities on a pair of pants, plus the cross-check of the exact q_n
// against the numeric chi summand.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthospec/fuchsian.hpp"

namespace orthospec::verify {

enum class Identity { kBasmajian, kBridgeman };

std::string_view to_string(Identity identity);
/// "basmajian" or "bridgeman"; ArgumentError otherwise.
Identity parse_identity(std::string_view text);

struct Term {
  double length = 0.0;
  int i = 0;
  int j = 0;
  double summand = 0.0;
  fuchsian::Word word;
};

struct ConvergenceReport {
  fuchsian::PantsSpec surface;
  Identity identity = Identity::kBasmajian;
  double cutoff = 0.0;
  double target = 0.0;
  std::vector<Term> terms;          // ascending by length
  std::vector<double> partial_sums; // compensated prefix sums of the summands
  double residual = 0.0;            // target - final partial sum
  int word_depth_used = 0;
  bool stabilized = false;

  double partial_sum() const { return partial_sums.empty() ? 0.0 : partial_sums.back(); }
};

/// Relative overshoot beyond which a report is an identity violation.
inline constexpr double kOvershootTolerance = 1e-6;

/// L1 + L2 + L3 for the area identity; 2 pi |chi| = 2 pi for the volume one.
double identity_target(Identity identity, const fuchsian::PantsSpec& spec);

/// Report over an already enumerated spectrum, so both identities can
/// consume the same orthogeodesics. Throws IdentityViolation on overshoot.
ConvergenceReport build_report(const fuchsian::PantsSpec& spec, Identity identity, double cutoff,
                               const fuchsian::Spectrum& spectrum, int threads = 1,
                               double tol = 1e-10);

ConvergenceReport basmajian_report(const fuchsian::PantsSpec& spec, double cutoff,
                                   const fuchsian::DepthPolicy& policy = fuchsian::DepthPolicy::auto_policy(),
                                   int threads = 1);

ConvergenceReport bridgeman_report(const fuchsian::PantsSpec& spec, double cutoff,
                                   const fuchsian::DepthPolicy& policy = fuchsian::DepthPolicy::auto_policy(),
                                   int threads = 1);

/// max over samples of |q_n(e^l) - chi_summand_numeric(n, l)|.
double qn_consistency(int n, std::span<const double> samples);

/// Passing threshold for qn_consistency.
inline constexpr double kConsistencyTolerance = 1e-8;

}  // namespace orthospec::verify
