#include "jh/weighted.hpp"

#include <numeric>
#include <string>

#include "jh/error.hpp"
#include "jh/invariants.hpp"

namespace jh {

WaveformKind parse_waveform(std::string_view name) {
  if (name == "sine") return WaveformKind::kSine;
  if (name == "triangle") return WaveformKind::kTriangle;
  if (name == "square") return WaveformKind::kSquare;
  if (name == "sawtooth") return WaveformKind::kSawtooth;
  throw ParseError("unknown waveform '" + std::string(name) + "'");
}

std::string_view waveform_name(WaveformKind kind) {
  switch (kind) {
    case WaveformKind::kSine: return "sine";
    case WaveformKind::kTriangle: return "triangle";
    case WaveformKind::kSquare: return "square";
    case WaveformKind::kSawtooth: return "sawtooth";
  }
  return "unknown";
}

double sum_weight(const WeightedChord& wc) {
  return std::accumulate(wc.weights().begin(), wc.weights().end(), 0.0);
}

double weighted_log_midpoint(const WeightedChord& wc) {
  const auto notes = wc.chord().notes();
  const auto weights = wc.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < notes.size(); ++i) acc += weights[i] * log2_of(notes[i]);
  return acc / sum_weight(wc) - log2_of(gcd_set(notes));
}

double weighted_otonality(const WeightedChord& wc) {
  const Natural cy = complexity(wc.chord());
  if (cy == 1) throw UndefinedMeasure("weighted otonality needs complexity above 1");
  const double lcy = log2_of(cy);
  return (lcy - 2.0 * weighted_log_midpoint(wc)) / lcy;
}

double weighted_utonality(const WeightedChord& wc) { return -weighted_otonality(wc); }

WeightedChord harmonic_weights(WaveformKind kind, std::size_t count) {
  if (count == 0) throw DomainError("need at least one harmonic");
  std::vector<Natural> notes(count);
  std::vector<double> weights(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = i + 1;
    notes[i] = n;
    const double dn = static_cast<double>(n);
    const bool odd = n % 2 == 1;
    switch (kind) {
      case WaveformKind::kSine: weights[i] = n == 1 ? 1.0 : 0.0; break;
      case WaveformKind::kTriangle: weights[i] = odd ? 1.0 / (dn * dn) : 0.0; break;
      case WaveformKind::kSquare: weights[i] = odd ? 1.0 / dn : 0.0; break;
      case WaveformKind::kSawtooth: weights[i] = 1.0 / dn; break;
    }
  }
  return WeightedChord(Chord(std::move(notes)), std::move(weights));
}

WeightedChord drop_zero_weights(const WeightedChord& wc) {
  std::vector<Natural> notes;
  std::vector<double> weights;
  for (std::size_t i = 0; i < wc.size(); ++i) {
    if (wc.weights()[i] > 0.0) {
      notes.push_back(wc.chord()[i]);
      weights.push_back(wc.weights()[i]);
    }
  }
  return WeightedChord(Chord(std::move(notes)), std::move(weights));
}

}  // namespace jh
