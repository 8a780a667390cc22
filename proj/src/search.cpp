#include "jh/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>

#include "jh/error.hpp"
#include "jh/invariants.hpp"
#include "jh/projections.hpp"

namespace jh {

namespace {

// Runs fn(i) for i in [0, count) and concatenates the per-index outputs in
// index order. The parallel path writes each index to its own slot, so the
// merge below is the only serialization point.
template <class Row, class Fn>
std::vector<Row> gather(std::size_t count, const Execution& exec, Fn fn) {
  std::vector<std::vector<Row>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  auto run_one = [&](std::size_t i) {
    try {
      slots[i] = fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec.parallel) {
    const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Row> out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

std::size_t as_count(Natural n, const char* what) {
  if (n > static_cast<Natural>(std::size_t{1} << 40)) {
    throw RangeError(std::string(what) + " is too large to enumerate");
  }
  return static_cast<std::size_t>(n);
}

// ---- scale search --------------------------------------------------------

struct OddOutcome {
  std::vector<ScaleRecord> records;
  std::vector<std::string> diagnostics;
  std::uint64_t examined = 0;
  bool out_of_time = false;
};

// True when some reordering of a scale containing odd divisors a < b of n
// could still reach mCY <= mcy_limit. The power of two in CY is at least
// b / (2a) in every rotation, and mCY = n times that power.
bool pair_can_fit(Natural a, Natural b, Natural n, Natural mcy_limit) {
  Natural lhs;
  Natural rhs;
  if (__builtin_mul_overflow(b, n, &lhs)) return true;
  if (__builtin_mul_overflow(mcy_limit, a, &rhs) || __builtin_mul_overflow(rhs, Natural{2}, &rhs)) return true;
  return lhs <= rhs;
}

void consider_subset(const std::vector<Natural>& odds, Natural n, const SearchQuery& q, OddOutcome& out) {
  ++out.examined;
  if (lcm_set(odds) != n || gcd_set(odds) != 1) return;  // found at a smaller odd number
  try {
    const Scale scale = scale_from_odds(odds);
    const auto stats = ratio_stats(scale.chord());
    if (q.min_ratio_floor_cents && cents(stats->min_ratio) < *q.min_ratio_floor_cents) return;
    if (q.max_ratio_ceiling_cents && cents(stats->max_ratio) > *q.max_ratio_ceiling_cents) return;
    ScaleRecord rec = scale_record(scale);
    if (rec.mcy <= q.mcy_limit) out.records.push_back(std::move(rec));
  } catch (const RangeError& e) {
    out.diagnostics.push_back("odds " + render(odds) + " skipped: " + e.what());
  }
}

void choose_divisors(const std::vector<Natural>& divs, std::size_t from, Natural n, const SearchQuery& q,
                     std::vector<Natural>& chosen, OddOutcome& out) {
  if (chosen.size() == q.n) {
    consider_subset(chosen, n, q, out);
    return;
  }
  const std::size_t needed = q.n - chosen.size();
  for (std::size_t j = from; j + needed <= divs.size(); ++j) {
    // Divisors ascend, so once the widest pair fails every later one does.
    if (q.prune && !chosen.empty() && !pair_can_fit(chosen.front(), divs[j], n, q.mcy_limit)) break;
    chosen.push_back(divs[j]);
    choose_divisors(divs, j + 1, n, q, chosen, out);
    chosen.pop_back();
  }
}

OddOutcome search_odd(Natural n, const SearchQuery& q) {
  OddOutcome out;
  if (divisor_count(n) < q.n) return out;
  const auto divs = divisors(n);
  std::vector<Natural> chosen;
  chosen.reserve(q.n);
  choose_divisors(divs, 0, n, q, chosen, out);
  return out;
}

bool record_less(const ScaleRecord& a, const ScaleRecord& b) {
  if (a.mcy != b.mcy) return a.mcy < b.mcy;
  if (a.ocy != b.ocy) return a.ocy < b.ocy;
  return a.scale < b.scale;
}

}  // namespace

void SearchQuery::validate() const {
  if (n < 2) throw DomainError("a scale search needs at least two pitch classes");
  if (ocy_limit < 1 || mcy_limit < 1) throw DomainError("search limits must be positive");
  if (min_ratio_floor_cents && max_ratio_ceiling_cents && *min_ratio_floor_cents > *max_ratio_ceiling_cents) {
    throw DomainError("minimum ratio floor exceeds maximum ratio ceiling");
  }
}

SearchResult search_scales(const SearchQuery& q, Execution exec) {
  q.validate();
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> out_of_time{false};
  const std::size_t odd_count = as_count((q.ocy_limit + 1) / 2, "odd complexity limit");

  const auto outcomes = gather<OddOutcome>(odd_count, exec, [&](std::size_t i) {
    std::vector<OddOutcome> one(1);
    if (q.time_budget && std::chrono::steady_clock::now() - start > *q.time_budget) {
      out_of_time = true;
      one[0].out_of_time = true;
      return one;
    }
    one[0] = search_odd(2 * static_cast<Natural>(i) + 1, q);
    return one;
  });

  SearchResult result;
  for (const auto& o : outcomes) {
    result.records.insert(result.records.end(), o.records.begin(), o.records.end());
    result.diagnostics.insert(result.diagnostics.end(), o.diagnostics.begin(), o.diagnostics.end());
    result.subsets_examined += o.examined;
  }
  result.budget_exhausted = out_of_time;
  std::sort(result.records.begin(), result.records.end(), record_less);
  if (q.result_cap && result.records.size() > *q.result_cap) {
    result.records.erase(result.records.begin() + static_cast<std::ptrdiff_t>(*q.result_cap), result.records.end());
    result.truncated = true;
  }
  return result;
}

std::vector<TriadRow> search_triads_on_fifth(Natural two_k_max, std::optional<CentsWindow> ratio1_window,
                                             Execution exec) {
  if (two_k_max < 4 || two_k_max % 2 != 0) throw DomainError("largest 2k must be even and at least 4");
  if (ratio1_window && ratio1_window->low > ratio1_window->high) {
    throw DomainError("cents window is empty");
  }
  const std::size_t k_count = as_count(two_k_max / 2 - 1, "largest 2k");
  auto rows = gather<TriadRow>(k_count, exec, [&](std::size_t i) {
    const Natural k = static_cast<Natural>(i) + 2;
    std::vector<TriadRow> out;
    for (Natural m = 2 * k + 1; m < 3 * k; ++m) {
      if (gcd(k, m) != 1) continue;
      const Chord c({2 * k, m, 3 * k});
      const Rational r1(m, 2 * k);
      const double r1_cents = cents(r1);
      if (ratio1_window && (r1_cents < ratio1_window->low || r1_cents > ratio1_window->high)) continue;
      out.push_back({c, complexity(c), otonality(c), r1, Rational(3 * k, m), r1_cents});
    }
    return out;
  });
  std::sort(rows.begin(), rows.end(), [](const TriadRow& a, const TriadRow& b) {
    if (a.cy != b.cy) return a.cy < b.cy;
    if (a.otc != b.otc) return a.otc > b.otc;
    return a.chord < b.chord;
  });
  return rows;
}

std::vector<QuadRow> search_quads_on_octave(Natural k_max, double min_ratio_floor_cents, Execution exec) {
  if (k_max < 3) throw DomainError("largest k must be at least 3");
  const std::size_t k_count = as_count(k_max - 2, "largest k");
  auto rows = gather<QuadRow>(k_count, exec, [&](std::size_t i) {
    const Natural k = static_cast<Natural>(i) + 3;
    std::vector<QuadRow> out;
    for (Natural m = k + 1; m < 2 * k; ++m) {
      for (Natural n = m + 1; n < 2 * k; ++n) {
        if (gcd(gcd(k, m), n) != 1) continue;
        const Rational min_ratio = std::min({Rational(m, k), Rational(n, m), Rational(2 * k, n)});
        const double c_min = cents(min_ratio);
        if (c_min < min_ratio_floor_cents) continue;
        const Chord c({k, m, n, 2 * k});
        out.push_back({c, complexity(c), odd_complexity(c), bp_complexity(c), min_ratio, c_min});
      }
    }
    return out;
  });
  std::sort(rows.begin(), rows.end(), [](const QuadRow& a, const QuadRow& b) {
    if (a.cy != b.cy) return a.cy < b.cy;
    return a.chord < b.chord;
  });
  return rows;
}

namespace {

void choose_inner(Natural k1, Natural next, std::size_t remaining, std::vector<Natural>& notes,
                  std::vector<PentatonicRow>& out) {
  if (remaining == 0) {
    std::vector<Natural> full = notes;
    full.push_back(2 * k1);
    if (gcd_set(full) != 1) return;
    const Scale s(std::move(full));
    const Chord c = s.chord();
    const auto stats = ratio_stats(c);
    out.push_back({s, complexity(c), odd_complexity(c), stats->min_ratio, cents(stats->min_ratio), canonical(s)});
    return;
  }
  for (Natural v = next; v + remaining <= 2 * k1; ++v) {
    notes.push_back(v);
    choose_inner(k1, v + 1, remaining - 1, notes, out);
    notes.pop_back();
  }
}

}  // namespace

std::vector<PentatonicRow> search_pentatonic_bruteforce(Natural k1_low, Natural k1_high, std::size_t pitch_classes,
                                                        Execution exec) {
  if (k1_low < 1 || k1_low > k1_high) throw DomainError("k1 range must be nonempty and positive");
  if (pitch_classes < 2) throw DomainError("need at least two pitch classes");
  const std::size_t count = as_count(k1_high - k1_low + 1, "k1 range");
  auto rows = gather<PentatonicRow>(count, exec, [&](std::size_t i) {
    const Natural k1 = k1_low + static_cast<Natural>(i);
    std::vector<PentatonicRow> out;
    std::vector<Natural> notes{k1};
    choose_inner(k1, k1 + 1, pitch_classes - 1, notes, out);
    return out;
  });
  std::sort(rows.begin(), rows.end(), [](const PentatonicRow& a, const PentatonicRow& b) {
    if (a.cy != b.cy) return a.cy < b.cy;
    return a.scale < b.scale;
  });
  std::set<std::pair<Natural, Scale>> seen;
  std::vector<PentatonicRow> kept;
  for (auto& r : rows) {
    if (seen.emplace(r.cy, r.canonical).second) kept.push_back(std::move(r));
  }
  return kept;
}

std::vector<PentatonicRow> first_row_per_cy(const std::vector<PentatonicRow>& rows, std::size_t count) {
  std::vector<PentatonicRow> out;
  for (const auto& r : rows) {
    if (out.size() == count && (out.empty() || r.cy != out.back().cy)) break;
    if (out.empty() || r.cy != out.back().cy) out.push_back(r);
  }
  return out;
}

ReorderingSpreadReport check_reordering_spread(const std::vector<PentatonicRow>& rows) {
  ReorderingSpreadReport report;
  for (const auto& r : rows) {
    const auto rec = scale_record(r.scale);
    const auto [lo, hi] = std::minmax_element(rec.cy_per_reordering.begin(), rec.cy_per_reordering.end());
    ++report.scales_checked;
    if (*hi != *lo && *hi != 2 * *lo) report.counterexamples.emplace_back(r.scale, rec.cy_per_reordering);
  }
  return report;
}

}  // namespace jh
