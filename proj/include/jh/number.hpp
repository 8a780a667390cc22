#pragma once

// Exact integer number theory on 128-bit unsigned values.
//
// Every operation that could leave the representable range is checked and
// throws RangeError instead of wrapping.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jh {

using Natural = unsigned __int128;

inline constexpr Natural kNaturalMax = ~static_cast<Natural>(0);

// --- checked arithmetic -----------------------------------------------------

Natural checked_add(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);
Natural checked_pow(Natural base, unsigned exponent);

Natural gcd(Natural a, Natural b);
// Throws RangeError when the result does not fit.
Natural lcm(Natural a, Natural b);

// Throws DomainError on an empty list or a zero entry.
Natural gcd_set(std::span<const Natural> values);
Natural lcm_set(std::span<const Natural> values);

// n with every factor of 2 removed; n must be >= 1.
Natural odd_part(Natural n);

// Largest k such that p^k divides n (n >= 1, p >= 2).
unsigned valuation(Natural n, Natural p);

// --- text / floating conversions -------------------------------------------

std::string to_string(Natural n);
// Decimal ASCII digits only; throws ParseError on junk and RangeError on overflow.
Natural parse_natural(std::string_view text);
long double to_long_double(Natural n);
double log2_of(Natural n);

// --- primes and factorization ----------------------------------------------

// Immutable table of the primes up to a bound, used for trial division.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint32_t bound);

  std::uint32_t bound() const { return bound_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  // Largest value this sieve can factorize completely (bound squared).
  Natural factor_limit() const;

 private:
  std::uint32_t bound_;
  std::vector<std::uint32_t> primes_;
};

// Shared sieve with bound 10^6, built once on first use.
const PrimeSieve& default_sieve();

struct PrimeFactor {
  Natural prime;
  unsigned exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

class PrimeFactorization {
 public:
  PrimeFactorization() = default;
  explicit PrimeFactorization(std::vector<PrimeFactor> factors);

  const std::vector<PrimeFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  unsigned exponent_of(Natural prime) const;
  // Product of prime^exponent; checked.
  Natural value() const;
  // d(n) = prod(exponent + 1).
  Natural divisor_count() const;

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

 private:
  std::vector<PrimeFactor> factors_;
};

// Deterministic trial division. Inputs above sieve.factor_limit() throw DomainError.
PrimeFactorization factorize(Natural n, const PrimeSieve& sieve = default_sieve());

bool is_prime(Natural n, const PrimeSieve& sieve = default_sieve());

// All divisors of n in ascending order.
std::vector<Natural> divisors(Natural n, const PrimeSieve& sieve = default_sieve());
std::vector<Natural> divisors(const PrimeFactorization& factorization);

Natural divisor_count(Natural n, const PrimeSieve& sieve = default_sieve());

}  // namespace jh
