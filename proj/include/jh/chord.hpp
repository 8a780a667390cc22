#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jh/number.hpp"

namespace jh {

// Positive rational in lowest terms.
class Rational {
 public:
  Rational(Natural numerator, Natural denominator = 1);

  Natural numerator() const { return num_; }
  Natural denominator() const { return den_; }
  double log2() const;
  long double value() const;
  std::string to_string() const;  // "a/b", always with the slash

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  friend Rational operator*(const Rational& a, const Rational& b);

 private:
  Natural num_;
  Natural den_;
};

// 1200 * log2(r).
double cents(const Rational& r);

// Ascending distinct positive integer frequencies.
class Chord {
 public:
  explicit Chord(std::vector<Natural> notes);

  std::span<const Natural> notes() const { return notes_; }
  std::size_t size() const { return notes_.size(); }
  Natural operator[](std::size_t i) const { return notes_[i]; }
  Natural front() const { return notes_.front(); }
  Natural back() const { return notes_.back(); }

  // Every note multiplied by factor (checked).
  Chord scaled(Natural factor) const;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord& a, const Chord& b) { return a.notes_ <=> b.notes_; }

 private:
  std::vector<Natural> notes_;
};

// A base-frequency label (inert) plus ascending ratios.
struct RationalChord {
  std::optional<std::string> base_label;
  std::vector<Rational> ratios;

  RationalChord(std::vector<Rational> ratios, std::optional<std::string> label = std::nullopt);
};

// Distinct notes with nonnegative real amplitudes; at least one is positive.
class WeightedChord {
 public:
  WeightedChord(Chord chord, std::vector<double> weights);

  const Chord& chord() const { return chord_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return chord_.size(); }

 private:
  Chord chord_;
  std::vector<double> weights_;
};

using ParsedChord = std::variant<Chord, RationalChord>;

// chord := term (("," | ":") term)* ; term := int | int "/" int
ParsedChord parse_chord(std::string_view text);

// Parses and, when fractions are present, converts to the reduced integer chord.
Chord parse_integer_chord(std::string_view text);

// Comma- or colon-separated nonnegative reals, e.g. weights "10,1,1".
std::vector<double> parse_real_list(std::string_view text);

Chord to_integer_chord(const RationalChord& rc);
Chord normalize(const Chord& c);

// Canonical text form: "4:5:6".
std::string render(const Chord& c);
std::string render(std::span<const Natural> values);

}  // namespace jh
