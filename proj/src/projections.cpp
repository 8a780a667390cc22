#include "jh/projections.hpp"

#include <algorithm>

#include "jh/error.hpp"

namespace jh {

namespace {

std::vector<Natural> checked_primes(std::vector<Natural> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (Natural p : primes) {
    if (!is_prime(p)) throw DomainError(to_string(p) + " is not prime");
  }
  return primes;
}

std::vector<Natural> parse_prime_list(std::string_view text) {
  std::vector<Natural> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      auto term = text.substr(start, i - start);
      while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
      while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
      if (term.empty()) throw ParseError("empty entry in prime list '" + std::string(text) + "'");
      out.push_back(parse_natural(term));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

PrimeSet::PrimeSet(Mode mode, std::vector<Natural> listed)
    : mode_(mode), listed_(checked_primes(std::move(listed))) {}

PrimeSet PrimeSet::only(std::vector<Natural> primes) { return PrimeSet(Mode::kExplicit, std::move(primes)); }
PrimeSet PrimeSet::all() { return PrimeSet(Mode::kAll, {}); }
PrimeSet PrimeSet::all_except(std::vector<Natural> primes) {
  return PrimeSet(Mode::kAllExcept, std::move(primes));
}

PrimeSet PrimeSet::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "odd") return odd();
  if (text == "bp") return bohlen_pierce();
  constexpr std::string_view kExcept = "all-except:";
  if (text.substr(0, kExcept.size()) == kExcept) {
    return all_except(parse_prime_list(text.substr(kExcept.size())));
  }
  return only(parse_prime_list(text));
}

bool PrimeSet::contains(Natural prime) const {
  const bool listed = std::binary_search(listed_.begin(), listed_.end(), prime);
  switch (mode_) {
    case Mode::kExplicit: return listed;
    case Mode::kAll: return true;
    case Mode::kAllExcept: return !listed;
  }
  return false;
}

std::string PrimeSet::describe() const {
  std::string list;
  for (std::size_t i = 0; i < listed_.size(); ++i) {
    if (i > 0) list += ',';
    list += to_string(listed_[i]);
  }
  switch (mode_) {
    case Mode::kExplicit: return "{" + list + "}";
    case Mode::kAll: return "all primes";
    case Mode::kAllExcept: return "all primes except {" + list + "}";
  }
  return {};
}

ProjectedChord project(const Chord& c, const PrimeSet& p) {
  ProjectedChord out;
  out.values.reserve(c.size());
  for (Natural note : c.notes()) {
    Natural kept = 1;
    const PrimeFactorization pf = factorize(note);
    for (const auto& f : pf.factors()) {
      if (p.contains(f.prime)) kept *= checked_pow(f.prime, f.exponent);
    }
    out.values.push_back(kept);
  }
  return out;
}

ProjectionSummary project_summary(const Chord& c, const PrimeSet& p) {
  ProjectionSummary s{project(c, p), 0, 0, 0};
  s.gcd = gcd_set(s.projected.values);
  s.lcm = lcm_set(s.projected.values);
  s.cy = s.lcm / s.gcd;
  return s;
}

Natural complexity_p(const Chord& c, const PrimeSet& p) { return project_summary(c, p).cy; }

Natural odd_complexity(const Chord& c) { return complexity_p(c, PrimeSet::odd()); }

Natural bp_complexity(const Chord& c) { return complexity_p(c, PrimeSet::bohlen_pierce()); }

Natural cy_at_prime(const Chord& c, Natural prime) {
  if (!is_prime(prime)) throw DomainError(to_string(prime) + " is not prime");
  unsigned lo = ~0u;
  unsigned hi = 0;
  for (Natural note : c.notes()) {
    const unsigned v = valuation(note, prime);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return checked_pow(prime, hi - lo);
}

}  // namespace jh
