#include "orthospec/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "orthospec/hypgeom.hpp"
#include "orthospec/symbolics.hpp"

namespace orthospec::verify {

std::string_view to_string(Identity identity) {
  return identity == Identity::kBasmajian ? "basmajian" : "bridgeman";
}

Identity parse_identity(std::string_view text) {
  if (text == "basmajian") return Identity::kBasmajian;
  if (text == "bridgeman") return Identity::kBridgeman;
  throw ArgumentError("identity must be basmajian or bridgeman");
}

double identity_target(Identity identity, const fuchsian::PantsSpec& spec) {
  spec.validate();
  constexpr int kEulerCharacteristic = -1;
  if (identity == Identity::kBasmajian) {
    return spec.lengths[0] + spec.lengths[1] + spec.lengths[2];
  }
  // area = (2 pi) chi r_2 by Gauss-Bonnet
  const double r2 = symbolics::to_double(symbolics::gb_constant_exact(2));
  return 2.0 * std::numbers::pi * kEulerCharacteristic * r2;
}

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

std::vector<double> summands(Identity identity, const std::vector<fuchsian::OrthoEntry>& entries,
                             int threads, double tol) {
  std::vector<double> out(entries.size());
  const auto evaluate = [&](std::size_t k) {
    const double l = entries[k].length;
    out[k] = identity == Identity::kBasmajian ? hypgeom::basmajian_summand(2, l)
                                              : hypgeom::bridgeman_summand(2, l, tol);
  };
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || entries.size() < 2) {
    for (std::size_t k = 0; k < entries.size(); ++k) evaluate(k);
    return out;
  }
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < entries.size(); k += workers) evaluate(k);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return out;
}

}  // namespace

ConvergenceReport build_report(const fuchsian::PantsSpec& spec, Identity identity, double cutoff,
                               const fuchsian::Spectrum& spectrum, int threads, double tol) {
  ConvergenceReport report;
  report.surface = spec;
  report.identity = identity;
  report.cutoff = cutoff;
  report.target = identity_target(identity, spec);
  report.word_depth_used = spectrum.word_depth_used;
  report.stabilized = spectrum.stabilized;

  const std::vector<double> values = summands(identity, spectrum.entries, threads, tol);
  CompensatedSum sum;
  report.terms.reserve(values.size());
  report.partial_sums.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& e = spectrum.entries[k];
    report.terms.push_back({e.length, e.i, e.j, values[k], e.word});
    sum.add(values[k]);
    report.partial_sums.push_back(sum.value());
  }
  report.residual = report.target - report.partial_sum();

  if (report.residual < -kOvershootTolerance * report.target) {
    std::ostringstream msg;
    msg.precision(17);
    msg << to_string(identity) << " partial sum " << report.partial_sum() << " exceeds target "
        << report.target;
    throw IdentityViolation(msg.str());
  }
  return report;
}

ConvergenceReport basmajian_report(const fuchsian::PantsSpec& spec, double cutoff,
                                   const fuchsian::DepthPolicy& policy, int threads) {
  const auto spectrum = fuchsian::enumerate_orthospectrum(spec, cutoff, policy, threads);
  return build_report(spec, Identity::kBasmajian, cutoff, spectrum, threads);
}

ConvergenceReport bridgeman_report(const fuchsian::PantsSpec& spec, double cutoff,
                                   const fuchsian::DepthPolicy& policy, int threads) {
  const auto spectrum = fuchsian::enumerate_orthospectrum(spec, cutoff, policy, threads);
  return build_report(spec, Identity::kBridgeman, cutoff, spectrum, threads);
}

double qn_consistency(int n, std::span<const double> samples) {
  if (samples.empty()) throw ArgumentError("consistency check needs at least one sample");
  const symbolics::RationalFunction q = symbolics::q_rational(n);
  double worst = 0.0;
  for (double l : samples) {
    const double exact = q(std::exp(l));
    const double numeric = hypgeom::chi_summand_numeric(n, l);
    worst = std::max(worst, std::abs(exact - numeric));
  }
  return worst;
}

}  // namespace orthospec::verify
