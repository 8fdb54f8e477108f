#include "orthospec/fuchsian.hpp"

#include <algorithm>
#include <thread>

#include "orthospec/hypgeom.hpp"

namespace orthospec::fuchsian {

// ------------------------------------------------------------------ words

char to_char(Letter x) {
  switch (x) {
    case Letter::A: return 'A';
    case Letter::a: return 'a';
    case Letter::B: return 'B';
    case Letter::b: return 'b';
  }
  return '?';
}

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (!letters_.empty() && letters_.back() == fuchsian::inverse(x)) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'A': letters.push_back(Letter::A); break;
      case 'a': letters.push_back(Letter::a); break;
      case 'B': letters.push_back(Letter::B); break;
      case 'b': letters.push_back(Letter::b); break;
      default: throw ArgumentError(std::string("invalid letter in word: ") + ch);
    }
  }
  return Word(letters);
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(fuchsian::inverse(*it));
  }
  return out;
}

Word Word::power(int m) const {
  const Word base = m >= 0 ? *this : inverse();
  std::vector<Letter> letters;
  for (int k = 0; k < std::abs(m); ++k) {
    letters.insert(letters.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(letters);
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(to_char(x));
  return out;
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Letter> letters = x.letters_;
  letters.insert(letters.end(), y.letters_.begin(), y.letters_.end());
  return Word(letters);
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] != y[k]) return x[k] <=> y[k];
  }
  return std::strong_ordering::equal;
}

namespace {

// Length of the common prefix of w and the periodic word period^inf.
std::size_t periodic_match(const std::vector<Letter>& w, const std::vector<Letter>& period) {
  std::size_t c = 0;
  while (c < w.size() && w[c] == period[c % period.size()]) ++c;
  return c;
}

// Exponents m minimizing |h^m w| when only a prefix of w cancels.
std::vector<int> left_exponents(const Word& h, const Word& w) {
  std::vector<int> exponents = {0};
  const int period = static_cast<int>(h.size());
  const Word h_inv = h.inverse();
  // h^m (m > 0) cancels a prefix of w that follows (h^{-1})^inf, and h^{-m}
  // one that follows h^inf.
  for (const auto& [base, sign] : {std::pair{h_inv, 1}, std::pair{h, -1}}) {
    const int c = static_cast<int>(periodic_match(w.letters(), base.letters()));
    if (c == 0) continue;
    exponents.push_back(sign * (c / period));
    exponents.push_back(sign * ((c + period - 1) / period));
  }
  return exponents;
}

std::size_t cancellable_prefix(const Word& h, const Word& w) {
  return std::max(periodic_match(w.letters(), h.letters()),
                  periodic_match(w.letters(), h.inverse().letters()));
}

}  // namespace

Word canonical_double_coset_bruteforce(const Word& h, const Word& w, const Word& g, int window) {
  Word best;
  bool have = false;
  for (int m = -window; m <= window; ++m) {
    const Word left = h.power(m) * w;
    for (int k = -window; k <= window; ++k) {
      Word candidate = left * g.power(k);
      if (!have || candidate < best) {
        best = std::move(candidate);
        have = true;
      }
    }
  }
  return best;
}

Word canonical_double_coset(const Word& h, const Word& w, const Word& g) {
  if (h.empty() || g.empty()) throw ArgumentError("double coset generators must be nontrivial");
  const Word w_inv = w.inverse();
  const std::size_t left = cancellable_prefix(h, w);
  const std::size_t right = cancellable_prefix(g, w_inv);
  if (left + right >= w.size()) {
    // The two cancellations can meet; every minimizer lies in this window.
    return canonical_double_coset_bruteforce(h, w, g, static_cast<int>(w.size()) + 3);
  }
  // Otherwise the two ends reduce independently. w g^k = (g^{-k} w^{-1})^{-1}.
  Word best;
  bool have = false;
  for (int m : left_exponents(h, w)) {
    const Word lw = h.power(m) * w;
    for (int k : left_exponents(g, w_inv)) {
      Word candidate = lw * g.power(-k);
      if (!have || candidate < best) {
        best = std::move(candidate);
        have = true;
      }
    }
  }
  return best;
}

bool is_canonical(const Word& h, const Word& w, const Word& g) {
  if (!w.empty() && cancellable_prefix(h, w) == 0 && cancellable_prefix(g, w.inverse()) == 0) {
    return true;
  }
  return canonical_double_coset(h, w, g) == w;
}

// ------------------------------------------------------------ pants group

void PantsSpec::validate() const {
  for (double l : lengths) {
    if (!std::isfinite(l)) throw ArgumentError("boundary lengths must be finite");
    if (!(l > 0.0)) throw ArgumentError("boundary lengths must be positive");
    if (l > hypgeom::kMaxLength) throw ArgumentError("boundary lengths must not exceed 350");
  }
}

double seam_length(const PantsSpec& spec, int i, int j) {
  spec.validate();
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    throw ArgumentError("seam indices must be distinct elements of {1, 2, 3}");
  }
  const int k = 6 - i - j;
  const double a = spec.lengths[i - 1] / 2.0;
  const double b = spec.lengths[j - 1] / 2.0;
  const double c = spec.lengths[k - 1] / 2.0;
  return std::acosh((std::cosh(a) * std::cosh(b) + std::cosh(c)) / (std::sinh(a) * std::sinh(b)));
}

PantsGroup pants_group(const PantsSpec& spec) {
  spec.validate();
  const auto& L = spec.lengths;
  const Isometry<double> A = Isometry<double>::dilation(L[0]);

  // T sends (0, inf) to (e^{-s}, e^{s}), which meets the unit semicircle
  // orthogonally at distance iota(s) = seam from (0, inf).
  const double s = hypgeom::iota(seam_length(spec, 1, 2));
  const Isometry<double> T(std::exp(s), std::exp(-s), 1.0, 1.0);
  const double target = 2.0 * std::cosh(L[2] / 2.0);

  for (double orientation : {1.0, -1.0}) {
    const Isometry<double> B = T * Isometry<double>::dilation(orientation * L[1]) * T.inverse();
    const double trace = std::abs((A * B).trace());
    if (std::abs(trace - target) <= 1e-9 * std::max(1.0, target)) {
      PantsGroup group{A, B, {A, B, (A * B).inverse()}, {Word::parse("A"), Word::parse("B"), Word::parse("ba")}, {}};
      for (int k = 0; k < 3; ++k) group.boundary_axes[k] = axis(group.peripherals[k]);
      return group;
    }
  }
  throw ConstructionError("no orientation of B realizes the third boundary length");
}

Isometry<double> evaluate(const PantsGroup& group, const Word& w) {
  const std::array<Isometry<double>, 4> generators = {group.A, group.A.inverse(), group.B,
                                                      group.B.inverse()};
  Isometry<double> product;
  for (Letter x : w.letters()) product = product * generators[static_cast<std::size_t>(x)];
  return product;
}

// --------------------------------------------------------- orthospectrum

namespace {

struct LevelContext {
  const PantsGroup* group;
  std::array<Isometry<double>, 4> generators;
  double cutoff;
};

void examine(const LevelContext& ctx, const Word& w, const Isometry<double>& m,
             std::vector<OrthoEntry>& out) {
  const auto& h = ctx.group->peripheral_words;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      if (i == j && w.empty()) continue;
      if (!is_canonical(h[i], w, h[j])) continue;
      // An arc from i back to i is seen from both ends; keep the end whose
      // canonical word is smaller.
      if (i == j && canonical_double_coset(h[i], w.inverse(), h[i]) < w) continue;
      const double d = geodesic_distance(ctx.group->boundary_axes[i], m * ctx.group->boundary_axes[j]);
      if (d <= ctx.cutoff) out.push_back({i + 1, j + 1, w, d});
    }
  }
}

// All reduced words of length exactly `remaining` more letters below prefix.
void descend(const LevelContext& ctx, std::vector<Letter>& letters, const Isometry<double>& m,
             int remaining, std::vector<OrthoEntry>& out) {
  if (remaining == 0) {
    examine(ctx, Word(letters), m, out);
    return;
  }
  for (std::uint8_t x = 0; x < 4; ++x) {
    const auto letter = static_cast<Letter>(x);
    if (!letters.empty() && letters.back() == inverse(letter)) continue;
    letters.push_back(letter);
    descend(ctx, letters, m * ctx.generators[x], remaining - 1, out);
    letters.pop_back();
  }
}

std::vector<OrthoEntry> enumerate_level(const LevelContext& ctx, int length, int threads) {
  // Split the word tree at depth <= 2 into independent subtrees.
  const int split = std::min(length, 2);
  std::vector<std::vector<Letter>> prefixes = {{}};
  for (int d = 0; d < split; ++d) {
    std::vector<std::vector<Letter>> next;
    for (const auto& p : prefixes) {
      for (std::uint8_t x = 0; x < 4; ++x) {
        const auto letter = static_cast<Letter>(x);
        if (!p.empty() && p.back() == inverse(letter)) continue;
        auto q = p;
        q.push_back(letter);
        next.push_back(std::move(q));
      }
    }
    prefixes = std::move(next);
  }

  std::vector<std::vector<OrthoEntry>> results(prefixes.size());
  const auto work = [&](std::size_t task) {
    std::vector<Letter> letters = prefixes[task];
    Isometry<double> m;
    for (Letter x : letters) m = m * ctx.generators[static_cast<std::size_t>(x)];
    descend(ctx, letters, m, length - split, results[task]);
  };

  const auto worker_count = static_cast<std::size_t>(std::max(1, threads));
  if (worker_count == 1 || prefixes.size() == 1) {
    for (std::size_t t = 0; t < prefixes.size(); ++t) work(t);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < worker_count; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < prefixes.size(); t += worker_count) work(t);
      });
    }
    for (auto& thread : pool) thread.join();
  }

  std::vector<OrthoEntry> merged;
  for (auto& r : results) merged.insert(merged.end(), r.begin(), r.end());
  return merged;
}

bool entry_less(const OrthoEntry& x, const OrthoEntry& y) {
  if (x.length != y.length) return x.length < y.length;
  if (x.i != y.i) return x.i < y.i;
  if (x.j != y.j) return x.j < y.j;
  return x.word < y.word;
}

}  // namespace

Spectrum enumerate_orthospectrum(const PantsSpec& spec, double cutoff, const DepthPolicy& policy,
                                 int threads) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw ArgumentError("cutoff must be positive");
  if (policy.depth < 0) throw ArgumentError("word depth must be nonnegative");
  const PantsGroup group = pants_group(spec);
  const LevelContext ctx{&group,
                         {group.A, group.A.inverse(), group.B, group.B.inverse()},
                         cutoff};

  Spectrum spectrum;
  int empty_levels = 0;
  for (int length = 0; length <= policy.depth; ++length) {
    std::vector<OrthoEntry> level = enumerate_level(ctx, length, threads);
    spectrum.word_depth_used = length;
    empty_levels = level.empty() ? empty_levels + 1 : 0;
    spectrum.entries.insert(spectrum.entries.end(), level.begin(), level.end());
    if (policy.automatic && empty_levels >= 2) {
      spectrum.stabilized = true;
      break;
    }
  }
  std::sort(spectrum.entries.begin(), spectrum.entries.end(), entry_less);
  return spectrum;
}

std::vector<LengthGroup> group_lengths(const std::vector<OrthoEntry>& entries, double tol,
                                       bool by_pair) {
  std::vector<OrthoEntry> sorted = entries;
  if (by_pair) {
    std::stable_sort(sorted.begin(), sorted.end(), [](const OrthoEntry& x, const OrthoEntry& y) {
      return std::pair{x.i, x.j} < std::pair{y.i, y.j};
    });
  }
  std::vector<LengthGroup> groups;
  for (const auto& e : sorted) {
    const bool same_pair = !by_pair || (groups.size() > 0 && groups.back().i == e.i && groups.back().j == e.j);
    if (!groups.empty() && same_pair && std::abs(e.length - groups.back().length) <= tol) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({e.length, 1, by_pair ? e.i : 0, by_pair ? e.j : 0});
    }
  }
  if (by_pair) {
    std::stable_sort(groups.begin(), groups.end(),
                     [](const LengthGroup& x, const LengthGroup& y) { return x.length < y.length; });
  }
  return groups;
}

}  // namespace orthospec::fuchsian
