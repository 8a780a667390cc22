#include "jh/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "jh/error.hpp"

namespace jh {

Natural benedetti_height(const Rational& r) { return checked_mul(r.numerator(), r.denominator()); }

double tenney_height(const Rational& r) { return log2_of(r.numerator()) + log2_of(r.denominator()); }

Natural kees_height(const Rational& r) {
  return std::max(odd_part(r.numerator()), odd_part(r.denominator()));
}

Natural euler_sweetness(const Chord& c) {
  // Exponents of lcm(c/g) are the per-prime maxima over the reduced notes, so
  // factoring the notes avoids factoring a possibly huge LCM.
  const Natural g = gcd_set(c.notes());
  std::map<Natural, unsigned> max_exponent;
  for (Natural note : c.notes()) {
    const PrimeFactorization pf = factorize(note / g);
    for (const auto& f : pf.factors()) {
      auto& e = max_exponent[f.prime];
      e = std::max(e, f.exponent);
    }
  }
  Natural esf = 1;
  for (const auto& [p, e] : max_exponent) esf = checked_add(esf, checked_mul(p - 1, e));
  return esf;
}

Natural complexity(const Chord& c) { return lcm_set(c.notes()) / gcd_set(c.notes()); }

namespace {

double mean_log(const Chord& c) {
  double sum = 0.0;
  for (Natural n : c.notes()) sum += log2_of(n);
  return sum / static_cast<double>(c.size());
}

// (LCH(k) - LM - LGCD) / LCY for every note.
std::vector<double> normalized_deviations(const Chord& c) {
  if (c.size() < 2) throw UndefinedMeasure("needs at least two notes");
  const Natural cy = complexity(c);
  if (cy == 1) throw UndefinedMeasure("needs complexity above 1");
  const double lcy = log2_of(cy);
  const double mean = mean_log(c);
  std::vector<double> dev;
  dev.reserve(c.size());
  for (Natural n : c.notes()) dev.push_back((log2_of(n) - mean) / lcy);
  return dev;
}

}  // namespace

double log_midpoint(const Chord& c) { return mean_log(c) - log2_of(gcd_set(c.notes())); }

double otonality(const Chord& c) {
  const std::size_t n = c.size();
  if (n <= 2) return 0.0;
  const double lcy = log2_of(complexity(c));
  const double nn = static_cast<double>(n);
  return nn / (nn - 2.0) * (lcy - 2.0 * log_midpoint(c)) / lcy;
}

double utonality(const Chord& c) { return -otonality(c); }

double spread_coeff(const Chord& c) {
  const auto dev = normalized_deviations(c);
  double sum = 0.0;
  for (double d : dev) sum += d * d;
  return std::sqrt(4.0 / static_cast<double>(dev.size()) * sum);
}

double skewness(const Chord& c) {
  const auto dev = normalized_deviations(c);
  double sum = 0.0;
  for (double d : dev) sum += d * d * d;
  return std::cbrt(sum / static_cast<double>(dev.size()));
}

std::optional<RatioStats> ratio_stats(const Chord& c) {
  if (c.size() < 2) return std::nullopt;
  std::vector<Rational> ratios;
  ratios.reserve(c.size() - 1);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) ratios.emplace_back(c[k + 1], c[k]);
  const Rational mn = *std::min_element(ratios.begin(), ratios.end());
  const Rational mx = *std::max_element(ratios.begin(), ratios.end());
  const Rational total(c.back(), c.front());
  return RatioStats{std::move(ratios), mn, mx, total, mn.log2(), mx.log2(), total.log2()};
}

RatioCoeffs ratio_coeffs(const Chord& c) {
  RatioCoeffs out;
  const auto stats = ratio_stats(c);
  if (!stats) return out;
  const double n = static_cast<double>(c.size());
  if (c.size() >= 3) {
    out.min_ratio_coeff = (n - 1.0) * stats->log_min_ratio / stats->log_total_ratio;
    out.max_ratio_coeff =
        (n - 1.0) / (n - 2.0) * (stats->log_max_ratio / stats->log_total_ratio - 1.0 / (n - 1.0));
  }
  const Natural cy = complexity(c);
  if (cy > 1) out.total_ratio_coeff = stats->log_total_ratio / log2_of(cy);
  return out;
}

InvariantReport analyze(const Chord& c) {
  InvariantReport r{};
  r.n = c.size();
  r.gcd = gcd_set(c.notes());
  r.lcm = lcm_set(c.notes());
  r.cy = r.lcm / r.gcd;
  r.esf = euler_sweetness(c);
  r.lgcd = log2_of(r.gcd);
  r.llcm = log2_of(r.lcm);
  r.lcy = log2_of(r.cy);
  r.lm = log_midpoint(c);
  r.otc = otonality(c);
  r.utc = -r.otc;
  if (r.n >= 2 && r.cy > 1) {
    r.spc = spread_coeff(c);
    r.sk = skewness(c);
  }
  r.ratios = ratio_stats(c);
  r.coeffs = ratio_coeffs(c);
  return r;
}

}  // namespace jh
