#pragma once

// Randomised property checks shared by the unit suite and the acceptance
// runner. Every generator draws from a fixed-seed mt19937_64 and keeps notes
// at or below 1000.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jh/invariants.hpp"
#include "jh/projections.hpp"
#include "jh/scales.hpp"

namespace jh::testing {

struct PropertyOutcome {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && instances > 0; }
};

inline constexpr std::uint64_t kPropertySeed = 0x5eed'c0de'2016ULL;
inline constexpr std::size_t kPropertyInstances = 1000;
inline constexpr Natural kMaxNote = 1000;
inline constexpr double kIdentityTol = 1e-9;

class ChordGen {
 public:
  explicit ChordGen(std::uint64_t seed = kPropertySeed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

  // n distinct notes in [1, max_note], ascending.
  Chord chord(std::size_t n, std::uint64_t max_note = kMaxNote) {
    std::set<std::uint64_t> notes;
    while (notes.size() < n) notes.insert(uniform(1, max_note));
    return Chord(std::vector<Natural>(notes.begin(), notes.end()));
  }

  Chord chord_between(std::size_t lo_n, std::size_t hi_n, std::uint64_t max_note = kMaxNote) {
    return chord(static_cast<std::size_t>(uniform(lo_n, hi_n)), max_note);
  }

  // Three to five pairwise coprime notes.
  Chord coprime_chord() {
    const auto n = static_cast<std::size_t>(uniform(3, 5));
    for (;;) {
      std::vector<Natural> notes;
      for (int attempt = 0; attempt < 200 && notes.size() < n; ++attempt) {
        const Natural v = uniform(1, kMaxNote);
        bool coprime = true;
        for (Natural w : notes) coprime = coprime && gcd(v, w) == 1;
        if (coprime) notes.push_back(v);
      }
      if (notes.size() < n) continue;
      std::sort(notes.begin(), notes.end());
      return Chord(std::move(notes));
    }
  }

  // Octave scale (k1, ..., kN, 2 k1) with every note <= 1000.
  Scale scale() {
    const std::uint64_t k1 = uniform(3, kMaxNote / 2);
    const auto inner = static_cast<std::size_t>(uniform(1, std::min<std::uint64_t>(6, k1 - 1)));
    std::set<std::uint64_t> notes;
    while (notes.size() < inner) notes.insert(uniform(k1 + 1, 2 * k1 - 1));
    std::vector<Natural> all{k1};
    all.insert(all.end(), notes.begin(), notes.end());
    all.push_back(2 * k1);
    return Scale(std::move(all));
  }

 private:
  std::mt19937_64 rng_;
};

inline bool near(double a, double b, double tol = kIdentityTol) { return std::fabs(a - b) <= tol; }

inline bool near(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || near(*a, *b);
}

// Skewness is a cube root, which magnifies rounding residue near zero, so
// skewness identities are checked on the third moment.
inline bool near_cubed(double a, double b) { return near(a * a * a, b * b * b); }

inline bool near_cubed(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || near_cubed(*a, *b);
}

// Scaling every note by m leaves every invariant unchanged.
inline PropertyOutcome check_transposition_invariance(std::size_t count = kPropertyInstances) {
  PropertyOutcome out{"transposition invariance"};
  ChordGen gen(kPropertySeed + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const Chord c = gen.chord_between(1, 7);
    const Natural m = gen.uniform(2, 20);
    const auto a = analyze(c);
    const auto b = analyze(c.scaled(m));
    ++out.instances;
    const bool same = a.cy == b.cy && a.esf == b.esf && b.gcd == a.gcd * m && b.lcm == a.lcm * m &&
                      near(a.lcy, b.lcy) && near(a.lm, b.lm) && near(a.otc, b.otc) && near(a.utc, b.utc) &&
                      near(a.spc, b.spc) && near_cubed(a.sk, b.sk) && near(a.coeffs.min_ratio_coeff, b.coeffs.min_ratio_coeff) &&
                      near(a.coeffs.max_ratio_coeff, b.coeffs.max_ratio_coeff) &&
                      near(a.coeffs.total_ratio_coeff, b.coeffs.total_ratio_coeff) &&
                      a.ratios.has_value() == b.ratios.has_value() &&
                      (!a.ratios || (a.ratios->ratios == b.ratios->ratios && a.ratios->total_ratio == b.ratios->total_ratio)) &&
                      odd_complexity(c) == odd_complexity(c.scaled(m));
    if (!same) out.fail(render(c) + " x" + to_string(m));
  }
  return out;
}

// f -> CY / f maps a reduced chord to its dual: same CY, negated OTC and SK.
inline PropertyOutcome check_duality(std::size_t count = kPropertyInstances) {
  PropertyOutcome out{"otonal/utonal duality"};
  ChordGen gen(kPropertySeed + 2);
  for (std::size_t i = 0; i < count; ++i) {
    const Chord c = normalize(gen.chord_between(2, 6));
    const Natural q = complexity(c);
    if (q == 1) continue;
    std::vector<Natural> dual;
    for (auto it = c.notes().rbegin(); it != c.notes().rend(); ++it) dual.push_back(q / *it);
    const Chord d(std::move(dual));
    ++out.instances;
    const bool ok = complexity(d) == q && near(otonality(d), -otonality(c)) && near_cubed(skewness(d), -skewness(c)) &&
                    near(spread_coeff(d), spread_coeff(c));
    if (!ok) out.fail(render(c));
  }
  return out;
}

inline PropertyOutcome check_coprime_otonal(std::size_t count = kPropertyInstances) {
  PropertyOutcome out{"pairwise coprime implies OTC = 1"};
  ChordGen gen(kPropertySeed + 3);
  for (std::size_t i = 0; i < count; ++i) {
    const Chord c = gen.coprime_chord();
    ++out.instances;
    if (!near(otonality(c), 1.0)) out.fail(render(c));
  }
  return out;
}

// CY equals the product of its per-prime parts, and the 2 / odd / 3 / BP split
// is exact.
inline PropertyOutcome check_prime_decomposition(std::size_t count = kPropertyInstances) {
  PropertyOutcome out{"CY = product of CY_p"};
  ChordGen gen(kPropertySeed + 4);
  for (std::size_t i = 0; i < count; ++i) {
    const Chord c = gen.chord_between(1, 7);
    const Natural cy = complexity(c);
    Natural product = 1;
    std::set<Natural> primes;
    for (Natural note : c.notes()) {
      const PrimeFactorization pf = factorize(note);
      for (const auto& f : pf.factors()) primes.insert(f.prime);
    }
    for (Natural p : primes) product *= cy_at_prime(c, p);
    const Natural ocy = odd_complexity(c);
    const Natural bpcy = bp_complexity(c);
    ++out.instances;
    const bool ok = product == cy && cy == cy_at_prime(c, 2) * ocy && ocy == cy_at_prime(c, 3) * bpcy &&
                    complexity_p(c, PrimeSet::all()) == cy;
    if (!ok) out.fail(render(c));
  }
  return out;
}

inline PropertyOutcome check_esf_monotone(std::size_t count = kPropertyInstances) {
  PropertyOutcome out{"ESF non-decreasing under note insertion"};
  ChordGen gen(kPropertySeed + 5);
  for (std::size_t i = 0; i < count; ++i) {
    const Chord c = gen.chord_between(1, 6);
    std::vector<Natural> more(c.notes().begin(), c.notes().end());
    Natural extra;
    do {
      extra = gen.uniform(1, kMaxNote);
    } while (std::find(more.begin(), more.end(), extra) != more.end());
    more.insert(std::upper_bound(more.begin(), more.end(), extra), extra);
    ++out.instances;
    if (euler_sweetness(Chord(more)) < euler_sweetness(c)) out.fail(render(c) + " + " + to_string(extra));
  }
  return out;
}

inline PropertyOutcome check_reordering_ocy(std::size_t count = kPropertyInstances) {
  PropertyOutcome out{"OCY constant across reorderings"};
  ChordGen gen(kPropertySeed + 6);
  for (std::size_t i = 0; i < count; ++i) {
    const Scale s = gen.scale();
    const Natural ocy = odd_complexity(s.chord());
    ++out.instances;
    bool ok = true;
    for (const auto& r : all_reorderings(s)) ok = ok && odd_complexity(r.chord()) == ocy;
    if (!ok) out.fail(render(s.notes()));
  }
  return out;
}

inline std::vector<PropertyOutcome> run_core_properties() {
  return {check_transposition_invariance(), check_duality(), check_coprime_otonal(),
          check_prime_decomposition(), check_esf_monotone(), check_reordering_ocy()};
}

}  // namespace jh::testing
