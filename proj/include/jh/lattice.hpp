#pragma once

// Divisor lattices of a complexity value, with prime-labelled edges, and the
// odd divisor-count enumerations built on them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jh/chord.hpp"

namespace jh {

struct LatticeEdge {
  Natural from;
  Natural to;  // from * prime
  Natural prime;

  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

struct DivisorLattice {
  Natural modulus;
  std::vector<Natural> nodes;      // ascending
  std::vector<LatticeEdge> edges;  // ordered by (from, prime)
  std::size_t dimensions;          // distinct primes of modulus
};

DivisorLattice complexity_space(Natural cy);

// Nodes occupied by the GCD-reduced chord. Throws DomainError when a reduced
// note does not divide the modulus.
std::vector<Natural> embed_chord(const DivisorLattice& l, const Chord& c);

// The reduced chord is exactly the divisor set of its complexity.
bool is_complete_chord(const Chord& c);

struct OddDivisorRecord {
  Natural n;
  Natural divisor_count;

  friend bool operator==(const OddDivisorRecord&, const OddDivisorRecord&) = default;
};

// Odd n <= limit with more divisors than every smaller odd number.
std::vector<OddDivisorRecord> ohcn_up_to(std::uint64_t limit);

struct LatticeShape {
  std::vector<unsigned> exponents;  // non-increasing, on primes 3, 5, 7, ...
  Natural first_occurrence;

  friend bool operator==(const LatticeShape&, const LatticeShape&) = default;
};

// Every shape whose smallest odd realisation is <= limit, ascending.
std::vector<LatticeShape> lattice_shapes_up_to(Natural limit);

enum class LatticeFormat { kDot, kJson };

LatticeFormat parse_lattice_format(std::string_view name);

std::string export_lattice(const DivisorLattice& l, const std::vector<Natural>& highlight,
                           LatticeFormat format);

}  // namespace jh
