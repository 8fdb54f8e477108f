#include "orthospec/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "orthospec/errors.hpp"
#include "orthospec/fuchsian.hpp"
#include "orthospec/hypgeom.hpp"
#include "orthospec/symbolics.hpp"
#include "orthospec/verify.hpp"

namespace orthospec::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Options {
  // shared
  std::string format;
  std::string out_path;
  int threads = 0;
  bool no_meta = false;

  // qn / rn / summand / consistency
  int n = 0;
  int m = 0;
  double l = 0.0;
  double tol = 1e-10;
  std::string style = "plain";
  std::string identity;
  std::vector<double> samples = {0.3, 0.7, 1.5, 3.0};

  // spectrum / verify
  std::string surface;
  std::vector<double> lengths;
  double cutoff = 0.0;
  std::optional<int> depth;
  int max_depth = 24;
  bool grouped = false;
  std::string convergence_path;
};

int resolve_threads(const Options& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("ORTHOSPEC_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

fuchsian::PantsSpec pants_from(const Options& opts) {
  if (opts.lengths.size() != 3) throw ArgumentError("--lengths takes three comma-separated values");
  fuchsian::PantsSpec spec{{opts.lengths[0], opts.lengths[1], opts.lengths[2]}};
  spec.validate();
  return spec;
}

fuchsian::DepthPolicy depth_from(const Options& opts) {
  if (opts.depth) {
    if (*opts.depth < 0) throw ArgumentError("--depth must be nonnegative");
    return fuchsian::DepthPolicy::fixed(*opts.depth);
  }
  if (opts.max_depth < 0) throw ArgumentError("--max-depth must be nonnegative");
  return fuchsian::DepthPolicy::auto_policy(opts.max_depth);
}

void require_cutoff(const Options& opts) {
  if (!(opts.cutoff > 0.0) || !std::isfinite(opts.cutoff)) throw ArgumentError("cutoff must be positive");
}

ordered_json meta_json() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return {{"version", kVersion}, {"timestamp", stamp}};
}

ordered_json surface_json(const fuchsian::PantsSpec& spec) {
  return {{"type", "pants"}, {"lengths", spec.lengths}};
}

ordered_json polynomial_coefficients(const symbolics::Polynomial& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coefficients()) out.push_back(symbolics::to_string(c));
  return out;
}

// ------------------------------------------------------------ subcommands

std::string run_qn(const Options& opts) {
  const auto style = opts.style == "latex" ? symbolics::Style::kLatex : symbolics::Style::kPlain;
  const auto q = symbolics::q_rational(opts.n);
  const std::string text = symbolics::emit(q, style);
  if (opts.format != "json") return text + "\n";
  ordered_json j;
  j["n"] = opts.n;
  j["q"] = text;
  j["degree"] = q.degree();
  j["numerator"] = polynomial_coefficients(q.num());
  j["denominator"] = polynomial_coefficients(q.den());
  return j.dump(2) + "\n";
}

std::string run_rn(const Options& opts) {
  const std::string r = symbolics::to_string(symbolics::gb_constant_exact(opts.m));
  if (opts.format != "json") return r + "\n";
  ordered_json j;
  j["m"] = opts.m;
  j["r"] = r;
  return j.dump(2) + "\n";
}

std::string run_summand(const Options& opts) {
  hypgeom::require_dimension(opts.n);
  hypgeom::require_length(opts.l);
  double value = 0.0;
  if (opts.identity == "basmajian") {
    value = hypgeom::basmajian_summand(opts.n, opts.l);
  } else if (opts.identity == "bridgeman") {
    if (!(opts.tol > 0.0)) throw ArgumentError("tolerance must be positive");
    value = hypgeom::bridgeman_summand(opts.n, opts.l, opts.tol);
  } else {
    value = hypgeom::chi_summand_numeric(opts.n, opts.l);
  }
  if (opts.format != "json") return number(value) + "\n";
  ordered_json j;
  j["identity"] = opts.identity;
  j["n"] = opts.n;
  j["l"] = opts.l;
  j["value"] = value;
  return j.dump(2) + "\n";
}

std::string run_spectrum(const Options& opts) {
  const auto spec = pants_from(opts);
  require_cutoff(opts);
  const auto spectrum =
      fuchsian::enumerate_orthospectrum(spec, opts.cutoff, depth_from(opts), resolve_threads(opts));
  std::ostringstream out;
  if (opts.format == "json") {
    ordered_json j;
    j["surface"] = surface_json(spec);
    j["cutoff"] = opts.cutoff;
    j["word_depth"] = spectrum.word_depth_used;
    j["stabilized"] = spectrum.stabilized;
    if (opts.grouped) {
      ordered_json groups = ordered_json::array();
      std::size_t index = 0;
      for (const auto& g : fuchsian::group_lengths(spectrum.entries, 1e-9, true)) {
        groups.push_back({{"index", index++}, {"i", g.i}, {"j", g.j}, {"length", g.length},
                          {"multiplicity", g.multiplicity}});
      }
      j["groups"] = groups;
    } else {
      ordered_json entries = ordered_json::array();
      std::size_t index = 0;
      for (const auto& e : spectrum.entries) {
        entries.push_back({{"index", index++}, {"i", e.i}, {"j", e.j}, {"word", e.word.to_string()},
                           {"length", e.length}});
      }
      j["entries"] = entries;
    }
    if (!opts.no_meta) j["meta"] = meta_json();
    out << j.dump(2) << "\n";
  } else if (opts.grouped) {
    out << "index,i,j,length,multiplicity\n";
    std::size_t index = 0;
    for (const auto& g : fuchsian::group_lengths(spectrum.entries, 1e-9, true)) {
      out << index++ << ',' << g.i << ',' << g.j << ',' << number(g.length) << ',' << g.multiplicity
          << '\n';
    }
  } else {
    out << "index,i,j,word,length\n";
    std::size_t index = 0;
    for (const auto& e : spectrum.entries) {
      out << index++ << ',' << e.i << ',' << e.j << ',' << e.word.to_string() << ','
          << number(e.length) << '\n';
    }
  }
  return out.str();
}

std::string convergence_csv(const verify::ConvergenceReport& report) {
  std::ostringstream out;
  out << "index,length,summand,partial_sum,residual\n";
  for (std::size_t k = 0; k < report.terms.size(); ++k) {
    out << k << ',' << number(report.terms[k].length) << ',' << number(report.terms[k].summand)
        << ',' << number(report.partial_sums[k]) << ','
        << number(report.target - report.partial_sums[k]) << '\n';
  }
  return out.str();
}

std::string run_verify(const Options& opts) {
  if (opts.surface != "pants") throw ArgumentError("only the pants surface is supported");
  const auto spec = pants_from(opts);
  require_cutoff(opts);
  const auto identity = verify::parse_identity(opts.identity);
  const auto policy = depth_from(opts);
  const int threads = resolve_threads(opts);
  const auto report = identity == verify::Identity::kBasmajian
                          ? verify::basmajian_report(spec, opts.cutoff, policy, threads)
                          : verify::bridgeman_report(spec, opts.cutoff, policy, threads);

  if (!opts.convergence_path.empty()) {
    std::ofstream file(opts.convergence_path);
    if (!file) throw ArgumentError("cannot open " + opts.convergence_path);
    file << convergence_csv(report);
  }

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "index,i,j,word,length,summand,partial_sum\n";
    for (std::size_t k = 0; k < report.terms.size(); ++k) {
      const auto& t = report.terms[k];
      out << k << ',' << t.i << ',' << t.j << ',' << t.word.to_string() << ',' << number(t.length)
          << ',' << number(t.summand) << ',' << number(report.partial_sums[k]) << '\n';
    }
    return out.str();
  }
  if (opts.format == "plain") {
    std::ostringstream out;
    out << "identity " << verify::to_string(identity) << "\n"
        << "target " << number(report.target) << "\n"
        << "partial_sum " << number(report.partial_sum()) << "\n"
        << "residual " << number(report.residual) << "\n"
        << "terms " << report.terms.size() << "\n"
        << "word_depth " << report.word_depth_used << "\n";
    return out.str();
  }
  ordered_json j;
  j["surface"] = surface_json(spec);
  j["identity"] = verify::to_string(identity);
  j["cutoff"] = report.cutoff;
  j["word_depth"] = report.word_depth_used;
  j["stabilized"] = report.stabilized;
  j["target"] = report.target;
  j["partial_sum"] = report.partial_sum();
  j["residual"] = report.residual;
  ordered_json terms = ordered_json::array();
  for (const auto& t : report.terms) {
    terms.push_back({{"length", t.length}, {"i", t.i}, {"j", t.j}, {"summand", t.summand},
                     {"word", t.word.to_string()}});
  }
  j["terms"] = terms;
  if (!opts.no_meta) j["meta"] = meta_json();
  return j.dump(2) + "\n";
}

std::string run_consistency(const Options& opts, bool& passed) {
  for (double l : opts.samples) hypgeom::require_length(l);
  const double deviation = verify::qn_consistency(opts.n, opts.samples);
  passed = deviation < verify::kConsistencyTolerance;
  if (opts.format != "json") return number(deviation) + (passed ? " pass\n" : " fail\n");
  ordered_json j;
  j["n"] = opts.n;
  j["samples"] = opts.samples;
  j["max_deviation"] = deviation;
  j["tolerance"] = verify::kConsistencyTolerance;
  j["pass"] = passed;
  return j.dump(2) + "\n";
}

void emit(const std::string& text, const Options& opts, std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw ArgumentError("cannot open " + opts.out_path);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthospectrum identities: summands, exact q_n, and pants verification", "orthospec"};
  app.require_subcommand(1);
  Options opts;

  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", opts.threads, "Worker threads (default: ORTHOSPEC_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", opts.out_path, "Write the result to this file instead of stdout");
  };
  const auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--lengths", opts.lengths, "Boundary lengths L1,L2,L3")
        ->delimiter(',')
        ->expected(3)
        ->required();
    cmd->add_option("--cutoff", opts.cutoff, "Largest orthogeodesic length")->required();
    cmd->add_option("--depth", opts.depth, "Fixed maximal word length (default: auto)");
    cmd->add_option("--max-depth", opts.max_depth, "Word length cap for the auto policy");
    cmd->add_flag("--no-meta", opts.no_meta, "Omit version and timestamp");
  };

  auto* qn = app.add_subcommand("qn", "Exact rational function q_n for odd n");
  qn->add_option("--n", opts.n, "Odd dimension n >= 3")->required();
  qn->add_option("--style", opts.style)->check(CLI::IsMember({"plain", "latex"}));
  qn->add_option("--format", opts.format)->check(CLI::IsMember({"plain", "json"}));
  add_out(qn);

  auto* rn = app.add_subcommand("rn", "Gauss-Bonnet constant r_m for even m");
  rn->add_option("--m", opts.m, "Even dimension m >= 2")->required();
  rn->add_option("--format", opts.format)->check(CLI::IsMember({"plain", "json"}));
  add_out(rn);

  auto* summand = app.add_subcommand("summand", "Evaluate one identity summand");
  summand->add_option("--identity", opts.identity)
      ->check(CLI::IsMember({"basmajian", "bridgeman", "chi"}))
      ->required();
  summand->add_option("--n", opts.n, "Dimension n >= 2")->required();
  summand->add_option("--l", opts.l, "Orthogeodesic length")->required();
  summand->add_option("--tol", opts.tol, "Absolute quadrature tolerance");
  summand->add_option("--format", opts.format)->check(CLI::IsMember({"plain", "json"}));
  add_out(summand);

  auto* spectrum = app.add_subcommand("spectrum", "Enumerate the orthospectrum of a pair of pants");
  add_surface(spectrum);
  spectrum->add_flag("--grouped", opts.grouped, "Merge equal lengths and report multiplicities");
  opts.format = "";
  spectrum->add_option("--format", opts.format)->check(CLI::IsMember({"csv", "json", "plain"}));
  add_threads(spectrum);
  add_out(spectrum);

  auto* verify_cmd = app.add_subcommand("verify", "Convergence report for an identity");
  verify_cmd->add_option("surface", opts.surface, "Surface type (pants)")->required();
  add_surface(verify_cmd);
  verify_cmd->add_option("--identity", opts.identity)
      ->check(CLI::IsMember({"basmajian", "bridgeman"}))
      ->required();
  verify_cmd->add_option("--format", opts.format)->check(CLI::IsMember({"json", "csv", "plain"}));
  verify_cmd->add_option("--emit-convergence", opts.convergence_path,
                         "Also write a CSV convergence table to this path");
  add_threads(verify_cmd);
  add_out(verify_cmd);

  auto* consistency = app.add_subcommand("consistency", "Compare exact q_n with the numeric chi summand");
  consistency->add_option("--n", opts.n, "Odd dimension n >= 3")->required();
  consistency->add_option("--samples", opts.samples, "Lengths l to sample")->delimiter(',');
  consistency->add_option("--format", opts.format)->check(CLI::IsMember({"plain", "json"}));
  add_out(consistency);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "orthospec: error: " << e.what() << "\n";
    return kInvalidArguments;
  }

  try {
    std::string text;
    int code = kSuccess;
    if (*qn) {
      text = run_qn(opts);
    } else if (*rn) {
      text = run_rn(opts);
    } else if (*summand) {
      text = run_summand(opts);
    } else if (*spectrum) {
      text = run_spectrum(opts);
    } else if (*verify_cmd) {
      if (opts.format.empty()) opts.format = "json";
      text = run_verify(opts);
    } else if (*consistency) {
      bool passed = false;
      text = run_consistency(opts, passed);
      if (!passed) code = kValidationFailure;
    }
    emit(text, opts, out);
    return code;
  } catch (const IdentityViolation& e) {
    err << "orthospec: identity violation: " << e.what() << "\n";
    return kIdentityViolation;
  } catch (const ArgumentError& e) {
    err << "orthospec: error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const std::exception& e) {
    err << "orthospec: failure: " << e.what() << "\n";
    return kValidationFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace orthospec::cli
