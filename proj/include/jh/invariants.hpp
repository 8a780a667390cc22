#pragma once

// Transposition-invariant scalar functions of an unweighted chord.
//
// Log-domain quantities are base 2. Measures that are undefined for a given
// chord size are reported as std::nullopt by analyze(), and the standalone
// functions throw UndefinedMeasure.

#include <optional>
#include <vector>

#include "jh/chord.hpp"

namespace jh {

Natural benedetti_height(const Rational& r);
double tenney_height(const Rational& r);
Natural kees_height(const Rational& r);

// 1 + sum(p - 1) over the prime factors (with multiplicity) of lcm(c / gcd(c)).
Natural euler_sweetness(const Chord& c);

// lcm / gcd.
Natural complexity(const Chord& c);

double log_midpoint(const Chord& c);

// Zero for chords of one or two notes.
double otonality(const Chord& c);
double utonality(const Chord& c);

// Both need N >= 2 and CY > 1.
double spread_coeff(const Chord& c);
double skewness(const Chord& c);

struct RatioStats {
  std::vector<Rational> ratios;  // CH(k+1)/CH(k)
  Rational min_ratio;
  Rational max_ratio;
  Rational total_ratio;
  double log_min_ratio;
  double log_max_ratio;
  double log_total_ratio;
};

// nullopt for a single note.
std::optional<RatioStats> ratio_stats(const Chord& c);

struct RatioCoeffs {
  std::optional<double> min_ratio_coeff;    // N >= 3
  std::optional<double> max_ratio_coeff;    // N >= 3
  std::optional<double> total_ratio_coeff;  // N >= 2, CY > 1
};

RatioCoeffs ratio_coeffs(const Chord& c);

struct InvariantReport {
  std::size_t n;
  Natural gcd;
  Natural lcm;
  Natural cy;
  Natural esf;
  double lgcd;
  double llcm;
  double lcy;
  double lm;
  double otc;
  double utc;
  std::optional<double> spc;
  std::optional<double> sk;
  std::optional<RatioStats> ratios;
  RatioCoeffs coeffs;
};

InvariantReport analyze(const Chord& c);

}  // namespace jh
