#include "jh/number.hpp"

#include <algorithm>
#include <cmath>

#include "jh/error.hpp"

namespace jh {

Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw RangeError("sum " + to_string(a) + " + " + to_string(b) + " exceeds 128 bits");
  }
  return r;
}

Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw RangeError("product " + to_string(a) + " * " + to_string(b) + " exceeds 128 bits");
  }
  return r;
}

Natural checked_pow(Natural base, unsigned exponent) {
  Natural result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

Natural gcd(Natural a, Natural b) {
  while (b != 0) {
    Natural t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Natural lcm(Natural a, Natural b) {
  if (a == 0 || b == 0) return 0;
  Natural r;
  if (__builtin_mul_overflow(a / gcd(a, b), b, &r)) {
    throw RangeError("lcm of " + to_string(a) + " and " + to_string(b) +
                     " exceeds 128 bits (partial product " + to_string(a / gcd(a, b)) +
                     " * " + to_string(b) + ")");
  }
  return r;
}

namespace {

void require_positive_set(std::span<const Natural> values, const char* what) {
  if (values.empty()) throw DomainError(std::string(what) + " of an empty list");
  for (Natural v : values) {
    if (v == 0) throw DomainError(std::string(what) + " requires positive values");
  }
}

}  // namespace

Natural gcd_set(std::span<const Natural> values) {
  require_positive_set(values, "gcd");
  Natural g = 0;
  for (Natural v : values) g = gcd(g, v);
  return g;
}

Natural lcm_set(std::span<const Natural> values) {
  require_positive_set(values, "lcm");
  Natural l = 1;
  for (Natural v : values) l = lcm(l, v);
  return l;
}

Natural odd_part(Natural n) {
  if (n == 0) throw DomainError("odd_part of zero");
  while ((n & 1) == 0) n >>= 1;
  return n;
}

unsigned valuation(Natural n, Natural p) {
  if (n == 0 || p < 2) throw DomainError("valuation needs n >= 1 and p >= 2");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::string to_string(Natural n) {
  if (n == 0) return "0";
  std::string digits;
  while (n != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  Natural value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ParseError("invalid digit in '" + std::string(text) + "'");
    Natural next;
    if (__builtin_mul_overflow(value, 10, &next) ||
        __builtin_add_overflow(next, static_cast<Natural>(ch - '0'), &next)) {
      throw RangeError("number '" + std::string(text) + "' exceeds 128 bits");
    }
    value = next;
  }
  return value;
}

long double to_long_double(Natural n) {
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  const auto lo = static_cast<std::uint64_t>(n);
  return std::ldexp(static_cast<long double>(hi), 64) + static_cast<long double>(lo);
}

double log2_of(Natural n) {
  if (n == 0) throw DomainError("log2 of zero");
  if (n >> 64 == 0) return std::log2(static_cast<double>(static_cast<std::uint64_t>(n)));
  return static_cast<double>(std::log2(to_long_double(n)));
}

// --- sieve -------------------------------------------------------------------

PrimeSieve::PrimeSieve(std::uint32_t bound) : bound_(bound) {
  if (bound < 2) throw DomainError("sieve bound must be at least 2");
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
}

Natural PrimeSieve::factor_limit() const {
  const Natural b = bound_;
  return b * b;
}

const PrimeSieve& default_sieve() {
  static const PrimeSieve sieve(1'000'000);
  return sieve;
}

// --- factorization -----------------------------------------------------------

PrimeFactorization::PrimeFactorization(std::vector<PrimeFactor> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw DomainError("prime exponent must be positive");
    if (i > 0 && factors_[i - 1].prime >= factors_[i].prime) {
      throw DomainError("primes must be strictly ascending");
    }
  }
}

unsigned PrimeFactorization::exponent_of(Natural prime) const {
  for (const auto& f : factors_) {
    if (f.prime == prime) return f.exponent;
  }
  return 0;
}

Natural PrimeFactorization::value() const {
  Natural v = 1;
  for (const auto& f : factors_) v = checked_mul(v, checked_pow(f.prime, f.exponent));
  return v;
}

Natural PrimeFactorization::divisor_count() const {
  Natural d = 1;
  for (const auto& f : factors_) d = checked_mul(d, f.exponent + 1);
  return d;
}

PrimeFactorization factorize(Natural n, const PrimeSieve& sieve) {
  if (n == 0) throw DomainError("cannot factorize zero");
  if (n > sieve.factor_limit()) {
    throw DomainError("cannot factorize " + to_string(n) + ": above the sieve limit " +
                      to_string(sieve.factor_limit()));
  }
  std::vector<PrimeFactor> factors;
  for (std::uint32_t p : sieve.primes()) {
    const Natural pp = p;
    if (pp * pp > n) break;
    if (n % pp != 0) continue;
    unsigned e = 0;
    while (n % pp == 0) {
      n /= pp;
      ++e;
    }
    factors.push_back({pp, e});
  }
  // Whatever is left has no prime factor below min(bound, sqrt(n)), and n <= bound^2.
  if (n > 1) factors.push_back({n, 1});
  return PrimeFactorization(std::move(factors));
}

bool is_prime(Natural n, const PrimeSieve& sieve) {
  if (n < 2) return false;
  const auto f = factorize(n, sieve);
  return f.factors().size() == 1 && f.factors().front().exponent == 1;
}

std::vector<Natural> divisors(const PrimeFactorization& factorization) {
  constexpr Natural kMaxDivisors = 50'000'000;
  if (factorization.divisor_count() > kMaxDivisors) {
    throw RangeError("divisor enumeration of " + to_string(factorization.value()) +
                     " exceeds the bound of " + to_string(kMaxDivisors) + " divisors");
  }
  std::vector<Natural> result{1};
  for (const auto& f : factorization.factors()) {
    const std::size_t base = result.size();
    Natural power = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Natural> divisors(Natural n, const PrimeSieve& sieve) {
  return divisors(factorize(n, sieve));
}

Natural divisor_count(Natural n, const PrimeSieve& sieve) {
  return factorize(n, sieve).divisor_count();
}

}  // namespace jh
