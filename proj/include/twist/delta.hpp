// Delta-reduction: minimizing word length over conjugation by powers of a
// fixed word delta, deciding when a word is already minimal, and
// enumerating the finite set of minimal conjugates.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twist/word.hpp"

namespace twist {

// A minimal-length conjugate reduce(delta^-power v delta^power) of v.
struct DeltaReduction {
  Word word;
  long power;
};

// Safety window 2(|v| + |delta|) + 2 used by the scanning paths.
long default_window(const Word& v, const Word& delta);

// reduce(delta^-k v delta^k)
Word conjugate_by_power(const Word& v, const Word& delta, long k);

// A power k with ||delta^-k v delta^k|| < |v|, if one exists. Single-step
// conjugations are tested first; they are conclusive for cyclically reduced
// delta. Otherwise the conjugator-shell patterns that allow a shortening
// jump past longer intermediate conjugates are matched, scanning |k| up to
// the window (default_window when `window` is 0).
std::optional<long> delta_shortening_power(const Word& v, const Word& delta, long window = 0);

// |v| <= ||delta^-k v delta^k|| for every integer k.
bool is_delta_reduced(const Word& v, const Word& delta);

// Delta-reduced conjugate of v by a power of delta. Ties among
// equal-minimal-length conjugates are broken by smallest |power|, then
// positive power.
DeltaReduction delta_reduce(const Word& v, const Word& delta, std::vector<std::string>* trace = nullptr);

// Like delta_reduce but without the tie-break scan: returns whichever
// minimal conjugate the descent reaches. Used on hot paths where any valid
// (word, power) pair is acceptable; deterministic.
DeltaReduction delta_reduce_quick(const Word& v, const Word& delta);

// All delta-reduced words reduce(delta^-k v delta^k) together with their
// powers, for delta-reduced v. Scans the safety window with cycle
// detection; a new minimal word at the window boundary aborts loudly.
// Each word is reported once, with the smallest |k| (positive preferred).
// Sorted by word_less; always contains (v, 0).
std::vector<DeltaReduction> enumerate_delta_class(const Word& v, const Word& delta, long window = 0);

// Brute-force minimum of ||delta^-k v delta^k|| over |k| <= window, same
// tie-breaking as delta_reduce. Independent ground truth for the fast path.
DeltaReduction delta_reduce_oracle(const Word& v, const Word& delta, long window);

// Witness decomposition for |v| = ||delta^-d v delta^d||, d = direction:
//   delta == p1 p2 p3 p2 p4 graphically, with |p1| = |p4|, and
//   direction +1:
//     variant 0: v == p1 core p3^-1 p2^-1 p1^-1
//     variant 1: v == p1 p2 p3 core p1^-1
//   direction -1:
//     variant 0: v == p4^-1 core p3 p2 p4
//     variant 1: v == p4^-1 p2^-1 p3^-1 core p4
// with p2 empty whenever core is nonempty.
struct EqualLengthSplit {
  int direction;
  int variant;
  Word p1, p2, p3, p4;
  Word core;
};

// First decomposition in deterministic split order (|p1| ascending, then
// |p2| ascending, then variant). Preconditions: v delta-reduced and
// |v| = ||delta^-direction v delta^direction||; violations throw.
std::optional<EqualLengthSplit> equal_length_split(const Word& v, const Word& delta, int direction);

}  // namespace twist
