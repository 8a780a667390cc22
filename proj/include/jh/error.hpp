#pragma once

#include <stdexcept>
#include <string>

namespace jh {

// Invalid input: empty sets, non-prime where a prime is required, malformed scales.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed textual input (chord strings, plan files, prime lists).
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

// A checked integer operation left the 128-bit range.
class RangeError : public std::overflow_error {
 public:
  explicit RangeError(const std::string& what) : std::overflow_error(what) {}
};

// A measure that is not defined for this input (e.g. SpreadCoeff of a unison).
class UndefinedMeasure : public std::domain_error {
 public:
  explicit UndefinedMeasure(const std::string& what) : std::domain_error(what) {}
};

}  // namespace jh
