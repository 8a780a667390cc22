#pragma once

// Prime projections: keep only the prime factors in a chosen set P.

#include <string>
#include <string_view>
#include <vector>

#include "jh/chord.hpp"

namespace jh {

// Either an explicit list of primes, all primes, or all primes except a list.
// Complements are kept symbolic so cofinite sets stay exact.
class PrimeSet {
 public:
  enum class Mode { kExplicit, kAll, kAllExcept };

  static PrimeSet only(std::vector<Natural> primes);
  static PrimeSet all();
  static PrimeSet all_except(std::vector<Natural> primes);
  static PrimeSet odd() { return all_except({2}); }
  static PrimeSet bohlen_pierce() { return all_except({2, 3}); }

  // "all", "odd", "bp", "2,5", "all-except:2,3".
  static PrimeSet parse(std::string_view text);

  Mode mode() const { return mode_; }
  const std::vector<Natural>& listed() const { return listed_; }
  bool contains(Natural prime) const;
  std::string describe() const;

 private:
  PrimeSet(Mode mode, std::vector<Natural> listed);

  Mode mode_;
  std::vector<Natural> listed_;  // ascending, deduplicated, all prime
};

// Positionwise projection; values may repeat or lose their order, so this is
// deliberately not a Chord.
struct ProjectedChord {
  std::vector<Natural> values;
};

ProjectedChord project(const Chord& c, const PrimeSet& p);

struct ProjectionSummary {
  ProjectedChord projected;
  Natural gcd;
  Natural lcm;
  Natural cy;
};

ProjectionSummary project_summary(const Chord& c, const PrimeSet& p);

Natural complexity_p(const Chord& c, const PrimeSet& p);
Natural odd_complexity(const Chord& c);
Natural bp_complexity(const Chord& c);

// The exact power of `prime` dividing CY. Throws DomainError for a non-prime.
Natural cy_at_prime(const Chord& c, Natural prime);

}  // namespace jh
