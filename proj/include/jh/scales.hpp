#pragma once

// Octave scales: construction from odd numbers, cyclic reorderings, and
// interval splitting.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jh/chord.hpp"

namespace jh {

// (k1, ..., kN, 2 k1): strictly ascending and closed at the octave.
class Scale {
 public:
  explicit Scale(std::vector<Natural> notes);

  std::span<const Natural> notes() const { return notes_; }
  // Pitch classes; the closing octave is not counted.
  std::size_t pitch_classes() const { return notes_.size() - 1; }
  Chord chord() const { return Chord(notes_); }
  Scale reduced() const;

  friend bool operator==(const Scale&, const Scale&) = default;
  friend auto operator<=>(const Scale& a, const Scale& b) { return a.notes_ <=> b.notes_; }

 private:
  std::vector<Natural> notes_;
};

// Keeps the largest odd number, moves every other one by a power of two into
// (max/2, max], sorts, and closes the octave. Needs at least two distinct odds.
Scale scale_from_odds(std::vector<Natural> odds);

// Drop the bottom note, add the octave of the new bottom, reduce.
Scale reorder_up(const Scale& s);
// The inverse: drop the top note, add the octave below the new top, reduce.
Scale reorder_down(const Scale& s);

// The N distinct rotations, each reduced, starting from s.
std::vector<Scale> all_reorderings(const Scale& s);
// The same rotations plus the first one again at the end (N + 1 entries).
std::vector<Scale> reordering_cycle(const Scale& s);

struct ScaleRecord {
  Scale scale;  // lexicographically smallest reduced rotation
  Natural ocy;
  std::vector<Natural> cy_per_reordering;  // closed cycle, N + 1 entries
  Natural mcy;
  Rational min_ratio;
  Rational max_ratio;
};

ScaleRecord scale_record(const Scale& s);

// Canonical representative of the rotation class of s.
Scale canonical(const Scale& s);

// (parts a, parts a + (b - a), ..., parts b), not reduced.
std::vector<Natural> split_interval(Natural a, Natural b, unsigned parts);

struct SplitDirective {
  enum class Kind { kInterval, kSequence };
  Kind kind;
  Natural lower = 0;  // interval only
  Natural upper = 0;
  unsigned parts = 0;
  std::vector<Natural> sequence;  // sequence only
};

struct SplitPlan {
  std::vector<SplitDirective> steps;
};

// Line oriented:
//   interval a:b parts m
//   sequence x:y:z
// with '#' comments and blank lines ignored. Only the first step may be a
// sequence.
SplitPlan parse_split_plan(std::string_view text);

// The first step gives the starting sequence. Every later interval a:b is
// matched against the first adjacent pair in that ratio, searching from the
// position of the previous replacement, and that pair is replaced by the split
// after rescaling both sides to agree on the shared endpoints. The result is
// reduced by its GCD. Throws DomainError when a step does not chain.
Chord stitch_splits(const SplitPlan& plan);

}  // namespace jh
