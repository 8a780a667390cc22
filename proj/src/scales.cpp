#include "jh/scales.hpp"

#include <algorithm>
#include <sstream>

#include "jh/error.hpp"
#include "jh/invariants.hpp"
#include "jh/projections.hpp"

namespace jh {

namespace {

std::vector<Natural> divided(std::vector<Natural> v) {
  const Natural g = gcd_set(v);
  for (auto& x : v) x /= g;
  return v;
}

}  // namespace

Scale::Scale(std::vector<Natural> notes) : notes_(std::move(notes)) {
  if (notes_.size() < 2) throw DomainError("a scale needs at least two notes");
  for (std::size_t i = 0; i < notes_.size(); ++i) {
    if (notes_[i] == 0) throw DomainError("scale notes must be positive");
    if (i > 0 && notes_[i] <= notes_[i - 1]) throw DomainError("scale notes must be strictly ascending");
  }
  if (notes_.back() != checked_mul(notes_.front(), 2)) {
    throw DomainError("scale " + render(notes_) + " does not end an octave above its start");
  }
}

Scale Scale::reduced() const { return Scale(divided(notes_)); }

Scale scale_from_odds(std::vector<Natural> odds) {
  std::sort(odds.begin(), odds.end());
  if (std::adjacent_find(odds.begin(), odds.end()) != odds.end()) {
    throw DomainError("odd numbers must be distinct");
  }
  if (odds.size() < 2) throw DomainError("need at least two odd numbers");
  for (Natural o : odds) {
    if (o % 2 == 0) throw DomainError(to_string(o) + " is not odd");
  }
  const Natural top = odds.back();
  std::vector<Natural> notes;
  notes.reserve(odds.size() + 1);
  for (Natural o : odds) {
    Natural v = o;
    while (checked_mul(v, 2) <= top) v *= 2;
    notes.push_back(v);
  }
  std::sort(notes.begin(), notes.end());
  notes.push_back(checked_mul(notes.front(), 2));
  return Scale(std::move(notes));
}

Scale reorder_up(const Scale& s) {
  auto n = s.notes();
  std::vector<Natural> next(n.begin() + 1, n.end());
  next.push_back(checked_mul(next.front(), 2));
  return Scale(divided(std::move(next)));
}

Scale reorder_down(const Scale& s) {
  auto n = s.notes();
  // Double everything so the new bottom (half the old second-highest note) stays integral.
  std::vector<Natural> next;
  next.reserve(n.size());
  next.push_back(n[n.size() - 2]);
  for (std::size_t i = 0; i + 1 < n.size(); ++i) next.push_back(checked_mul(n[i], 2));
  return Scale(divided(std::move(next)));
}

std::vector<Scale> all_reorderings(const Scale& s) {
  std::vector<Scale> out{s.reduced()};
  for (std::size_t i = 1; i < s.pitch_classes(); ++i) out.push_back(reorder_up(out.back()));
  return out;
}

std::vector<Scale> reordering_cycle(const Scale& s) {
  auto out = all_reorderings(s);
  out.push_back(out.front());
  return out;
}

Scale canonical(const Scale& s) {
  const auto all = all_reorderings(s);
  return *std::min_element(all.begin(), all.end());
}

ScaleRecord scale_record(const Scale& s) {
  const auto cycle = reordering_cycle(s);
  std::vector<Natural> cys;
  cys.reserve(cycle.size());
  for (const auto& r : cycle) cys.push_back(complexity(r.chord()));
  const auto stats = ratio_stats(s.chord());
  return ScaleRecord{canonical(s),
                     odd_complexity(s.chord()),
                     cys,
                     *std::min_element(cys.begin(), cys.end()),
                     stats->min_ratio,
                     stats->max_ratio};
}

std::vector<Natural> split_interval(Natural a, Natural b, unsigned parts) {
  if (a == 0 || a >= b) throw DomainError("split needs 0 < a < b");
  if (parts < 2) throw DomainError("split needs at least two parts");
  std::vector<Natural> out;
  out.reserve(parts + 1);
  const Natural start = checked_mul(parts, a);
  for (unsigned i = 0; i <= parts; ++i) out.push_back(checked_add(start, checked_mul(i, b - a)));
  return out;
}

namespace {

std::vector<Natural> parse_ratio_terms(const std::string& token, std::size_t line) {
  std::vector<Natural> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= token.size(); ++i) {
    if (i == token.size() || token[i] == ':') {
      if (i == start) throw ParseError("plan line " + std::to_string(line) + ": malformed ratio '" + token + "'");
      out.push_back(parse_natural(std::string_view(token).substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

SplitPlan parse_split_plan(std::string_view text) {
  SplitPlan plan;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::vector<std::string> words;
    for (std::string w; line >> w;) words.push_back(w);
    if (words.empty()) continue;
    const auto where = "plan line " + std::to_string(line_no) + ": ";
    SplitDirective d{};
    try {
      if (words[0] == "interval" && words.size() == 4 && words[2] == "parts") {
        const auto ends = parse_ratio_terms(words[1], line_no);
        if (ends.size() != 2) throw ParseError(where + "interval needs exactly a:b");
        d.kind = SplitDirective::Kind::kInterval;
        d.lower = ends[0];
        d.upper = ends[1];
        const Natural parts = parse_natural(words[3]);
        if (parts < 2 || parts > 1000) throw ParseError(where + "parts must be between 2 and 1000");
        d.parts = static_cast<unsigned>(parts);
        if (d.lower == 0 || d.lower >= d.upper) throw ParseError(where + "interval needs 0 < a < b");
      } else if (words[0] == "sequence" && words.size() == 2) {
        if (!plan.steps.empty()) throw ParseError(where + "sequence is only allowed as the first step");
        d.kind = SplitDirective::Kind::kSequence;
        d.sequence = parse_ratio_terms(words[1], line_no);
        (void)Chord(d.sequence);  // validates positive and ascending
      } else {
        throw ParseError(where + "expected 'interval a:b parts m' or 'sequence x:y:...'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(where + e.what());
    }
    plan.steps.push_back(std::move(d));
  }
  if (plan.steps.empty()) throw ParseError("plan has no steps");
  return plan;
}

Chord stitch_splits(const SplitPlan& plan) {
  if (plan.steps.empty()) throw DomainError("plan has no steps");
  const auto& root = plan.steps.front();
  std::vector<Natural> seq = root.kind == SplitDirective::Kind::kSequence
                                 ? root.sequence
                                 : split_interval(root.lower, root.upper, root.parts);
  std::size_t cursor = 0;
  for (std::size_t s = 1; s < plan.steps.size(); ++s) {
    const auto& step = plan.steps[s];
    if (step.kind != SplitDirective::Kind::kInterval) throw DomainError("only the first step may be a sequence");
    const Natural a = step.lower;
    const Natural b = step.upper;
    std::size_t at = cursor;
    while (at + 1 < seq.size() && checked_mul(seq[at], b) != checked_mul(seq[at + 1], a)) ++at;
    if (at + 1 >= seq.size()) {
      throw DomainError("step " + std::to_string(s + 1) + " (" + to_string(a) + ":" + to_string(b) +
                        ") does not chain onto " + render(seq));
    }
    auto segment = split_interval(a, b, step.parts);
    const Natural g = gcd(seq[at], segment.front());
    const Natural seq_scale = segment.front() / g;
    const Natural seg_scale = seq[at] / g;
    for (auto& x : seq) x = checked_mul(x, seq_scale);
    for (auto& x : segment) x = checked_mul(x, seg_scale);
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(at), seq.begin() + static_cast<std::ptrdiff_t>(at) + 2);
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at), segment.begin(), segment.end());
    cursor = at;
  }
  return Chord(divided(std::move(seq)));
}

}  // namespace jh
