#pragma once

// Exhaustive scale and chord searches.
//
// Every search has a serial reference path and an OpenMP path. Both evaluate
// the same per-candidate kernel and merge into a totally ordered result, so
// their output is identical for any thread count.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "jh/scales.hpp"

namespace jh {

struct Execution {
  bool parallel = true;
  int threads = 0;  // 0 = OpenMP default

  static Execution serial() { return {false, 1}; }
  static Execution with_threads(int t) { return {true, t}; }
};

struct SearchQuery {
  std::size_t n = 5;  // pitch classes
  Natural ocy_limit = 1;
  Natural mcy_limit = 1;
  std::optional<double> min_ratio_floor_cents;
  std::optional<double> max_ratio_ceiling_cents;
  std::optional<std::size_t> result_cap;
  std::optional<std::chrono::milliseconds> time_budget;
  bool prune = true;

  // Throws DomainError for n < 2, zero limits or floor > ceiling.
  void validate() const;
};

struct SearchResult {
  std::vector<ScaleRecord> records;  // ascending (mcy, ocy, scale)
  std::vector<std::string> diagnostics;
  bool budget_exhausted = false;
  bool truncated = false;  // result_cap removed records
  std::uint64_t subsets_examined = 0;
};

SearchResult search_scales(const SearchQuery& q, Execution exec = {});

struct CentsWindow {
  double low;
  double high;
};

struct TriadRow {
  Chord chord;  // (2k, m, 3k)
  Natural cy;
  double otc;
  Rational ratio1;
  Rational ratio2;
  double ratio1_cents;
};

// All (2k, m, 3k) with 4 <= 2k <= two_k_max, 2k < m < 3k and no common factor,
// sorted by CY, then descending OTC, then notes.
std::vector<TriadRow> search_triads_on_fifth(Natural two_k_max, std::optional<CentsWindow> ratio1_window = {},
                                             Execution exec = {});

struct QuadRow {
  Chord chord;  // (k, m, n, 2k)
  Natural cy;
  Natural ocy;
  Natural bpcy;
  Rational min_ratio;
  double min_ratio_cents;
};

// All (k, m, n, 2k) with 3 <= k <= k_max, no common factor and the smallest
// step at least min_ratio_floor_cents, sorted by (CY, k, m, n).
std::vector<QuadRow> search_quads_on_octave(Natural k_max, double min_ratio_floor_cents, Execution exec = {});

struct PentatonicRow {
  Scale scale;
  Natural cy;
  Natural ocy;
  Rational min_ratio;
  double min_ratio_cents;
  Scale canonical;
};

// Every (k1, ..., kN, 2 k1) with k1 in [k1_low, k1_high] and no common factor,
// sorted by (CY, notes), keeping the first row for each (CY, rotation class).
std::vector<PentatonicRow> search_pentatonic_bruteforce(Natural k1_low, Natural k1_high,
                                                        std::size_t pitch_classes = 5, Execution exec = {});

// The first row of each of the first `count` distinct CY values.
std::vector<PentatonicRow> first_row_per_cy(const std::vector<PentatonicRow>& rows, std::size_t count);

// How far CY varies across the rotations of each scale; spreads other than 1
// or 2 are listed as counterexamples.
struct ReorderingSpreadReport {
  std::size_t scales_checked = 0;
  std::vector<std::pair<Scale, std::vector<Natural>>> counterexamples;
};

ReorderingSpreadReport check_reordering_spread(const std::vector<PentatonicRow>& rows);

}  // namespace jh
