#include "jh/chord.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "jh/error.hpp"

namespace jh {

// --- Rational ----------------------------------------------------------------

Rational::Rational(Natural numerator, Natural denominator) {
  if (numerator == 0 || denominator == 0) {
    throw DomainError("rational needs a positive numerator and denominator");
  }
  const Natural g = gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

double Rational::log2() const { return log2_of(num_) - log2_of(den_); }

long double Rational::value() const { return to_long_double(num_) / to_long_double(den_); }

std::string Rational::to_string() const {
  return jh::to_string(num_) + "/" + jh::to_string(den_);
}

bool operator<(const Rational& a, const Rational& b) {
  // a/b < c/d  <=>  a*d < c*b; fall back to long double only if the products overflow.
  Natural lhs, rhs;
  if (!__builtin_mul_overflow(a.num_, b.den_, &lhs) &&
      !__builtin_mul_overflow(b.num_, a.den_, &rhs)) {
    return lhs < rhs;
  }
  return a.value() < b.value();
}

Rational operator*(const Rational& a, const Rational& b) {
  const Natural g1 = gcd(a.num_, b.den_);
  const Natural g2 = gcd(b.num_, a.den_);
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

double cents(const Rational& r) { return 1200.0 * r.log2(); }

// --- Chord -------------------------------------------------------------------

Chord::Chord(std::vector<Natural> notes) : notes_(std::move(notes)) {
  if (notes_.empty()) throw DomainError("chord needs at least one note");
  for (std::size_t i = 0; i < notes_.size(); ++i) {
    if (notes_[i] == 0) throw DomainError("chord notes must be positive");
    if (i > 0 && notes_[i - 1] == notes_[i]) {
      throw DomainError("duplicate note " + to_string(notes_[i]));
    }
    if (i > 0 && notes_[i - 1] > notes_[i]) {
      throw DomainError("chord notes must be ascending (" + to_string(notes_[i - 1]) + " before " +
                        to_string(notes_[i]) + ")");
    }
  }
}

Chord Chord::scaled(Natural factor) const {
  std::vector<Natural> out;
  out.reserve(notes_.size());
  for (Natural n : notes_) out.push_back(checked_mul(n, factor));
  return Chord(std::move(out));
}

RationalChord::RationalChord(std::vector<Rational> r, std::optional<std::string> label)
    : base_label(std::move(label)), ratios(std::move(r)) {
  if (ratios.empty()) throw DomainError("rational chord needs at least one ratio");
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (ratios[i - 1] == ratios[i]) throw DomainError("duplicate ratio " + ratios[i].to_string());
    if (ratios[i] < ratios[i - 1]) throw DomainError("ratios must be ascending");
  }
}

WeightedChord::WeightedChord(Chord chord, std::vector<double> weights)
    : chord_(std::move(chord)), weights_(std::move(weights)) {
  if (weights_.size() != chord_.size()) {
    throw DomainError("weight count " + std::to_string(weights_.size()) +
                      " does not match note count " + std::to_string(chord_.size()));
  }
  bool any_positive = false;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("weights must be finite and nonnegative");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw DomainError("at least one weight must be positive");
}

// --- parsing -----------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> terms;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ':') {
      terms.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return terms;
}

Natural parse_term_int(std::string_view digits, std::string_view term) {
  if (digits.empty()) throw ParseError("malformed term '" + std::string(term) + "'");
  const Natural v = parse_natural(digits);
  if (v == 0) throw ParseError("zero is not a valid frequency in '" + std::string(term) + "'");
  return v;
}

}  // namespace

ParsedChord parse_chord(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty chord");
  std::vector<Rational> ratios;
  bool any_fraction = false;
  for (std::string_view term : split_terms(text)) {
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    const auto slash = term.find('/');
    if (slash == std::string_view::npos) {
      ratios.emplace_back(parse_term_int(term, term));
    } else {
      any_fraction = true;
      ratios.emplace_back(parse_term_int(term.substr(0, slash), term),
                          parse_term_int(term.substr(slash + 1), term));
    }
  }
  try {
    if (!any_fraction) {
      std::vector<Natural> notes;
      notes.reserve(ratios.size());
      for (const auto& r : ratios) notes.push_back(r.numerator());
      return Chord(std::move(notes));
    }
    return RationalChord(std::move(ratios));
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Chord parse_integer_chord(std::string_view text) {
  auto parsed = parse_chord(text);
  if (auto* c = std::get_if<Chord>(&parsed)) return *c;
  return to_integer_chord(std::get<RationalChord>(parsed));
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view term : split_terms(text)) {
    const std::string s(term);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw ParseError("malformed number '" + s + "'");
    if (!std::isfinite(v) || v < 0) throw ParseError("expected a nonnegative finite number, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

Chord to_integer_chord(const RationalChord& rc) {
  Natural den_lcm = 1;
  for (const auto& r : rc.ratios) den_lcm = lcm(den_lcm, r.denominator());
  std::vector<Natural> notes;
  notes.reserve(rc.ratios.size());
  for (const auto& r : rc.ratios) notes.push_back(checked_mul(r.numerator(), den_lcm / r.denominator()));
  return normalize(Chord(std::move(notes)));
}

Chord normalize(const Chord& c) {
  const Natural g = gcd_set(c.notes());
  std::vector<Natural> notes(c.notes().begin(), c.notes().end());
  for (auto& n : notes) n /= g;
  return Chord(std::move(notes));
}

std::string render(std::span<const Natural> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ':';
    out += to_string(values[i]);
  }
  return out;
}

std::string render(const Chord& c) { return render(c.notes()); }

}  // namespace jh
