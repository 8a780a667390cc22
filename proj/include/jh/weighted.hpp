#pragma once

#include <string_view>

#include "jh/chord.hpp"

namespace jh {

enum class WaveformKind { kSine, kTriangle, kSquare, kSawtooth };

WaveformKind parse_waveform(std::string_view name);
std::string_view waveform_name(WaveformKind kind);

double sum_weight(const WeightedChord& wc);

// Weighted mean of log2(note) minus log2(gcd). Zero-weight notes still count
// towards the GCD.
double weighted_log_midpoint(const WeightedChord& wc);

// (LCY - 2 WLM) / LCY. Throws UndefinedMeasure when CY = 1.
double weighted_otonality(const WeightedChord& wc);
double weighted_utonality(const WeightedChord& wc);

// Harmonics 1..count weighted by the magnitude of the waveform's Fourier
// coefficients: sine (1, 0, ...), triangle 1/n^2 on odd n, square 1/n on odd n,
// sawtooth 1/n.
WeightedChord harmonic_weights(WaveformKind kind, std::size_t count);

// Removes notes whose weight is zero, giving the reduced-chord reading where
// silent notes no longer contribute to CY.
WeightedChord drop_zero_weights(const WeightedChord& wc);

}  // namespace jh
