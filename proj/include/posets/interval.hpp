#pragma once

#include <span>
#include <string>
#include <vector>

#include "posets/gpterm.hpp"
#include "posets/iposet.hpp"
#include "posets/poset.hpp"

namespace posets {

/// One begin/end event of an interval sequence.
struct IntervalEvent {
  bool is_end = false;
  int point = 0;
  friend auto operator<=>(const IntervalEvent&, const IntervalEvent&) = default;
};

using IntervalSeq = std::vector<IntervalEvent>;

inline IntervalEvent ev_begin(int x) { return {false, x}; }
inline IntervalEvent ev_end(int x) { return {true, x}; }

/// Endpoint positions in a linear order of size 2|P|; positions are indices
/// into the canonical trace.
struct IntervalRep {
  std::vector<int> begin_pos, end_pos;
};

/// The quantifier condition (w<y and x<z imply w<z or x<y); agrees with
/// 2+2-freeness, which is asserted in debug builds.
bool is_interval_order(const Poset& p);

/// All maximal antichains, sorted by the antichain order when it is linear;
/// throws NotLinear (with an incomparable pair) otherwise.
std::vector<std::vector<int>> max_antichains(const Poset& p);

/// Closed interval sequence from the antichain walk; at each step points
/// leaving end first, points entering begin next, each ascending by index.
/// Throws NotIntervalOrder.
IntervalSeq canonical_trace(const Poset& p);

/// Endpoint positions read off the canonical trace.
IntervalRep interval_rep(const Poset& p);

/// Order induced by a closed sequence: x < y iff End(x) precedes Begin(y).
/// Points must be exactly 0..k-1. Throws NotClosed.
Poset order_of_sequence(const IntervalSeq& s);

/// All single swaps of adjacent begins or adjacent ends, deduplicated.
std::vector<IntervalSeq> approx_neighbors(const IntervalSeq& s);

/// Equivalence modulo commuting adjacent begins and adjacent ends, decided
/// by sorting each maximal run of like events.
bool same_trace(const IntervalSeq& a, const IntervalSeq& b);

/// The set of all interval sequences of p, by brute force over event
/// interleavings; enforced |p| <= 5 (TooLarge). Sorted.
std::vector<IntervalSeq> all_sequences(const Poset& p);

/// Concatenation of two closed sequences with interface events removed and
/// glued points merged; points are renumbered as in glue(). Sizes of
/// left_targets and right_sources must agree (ArityError).
IntervalSeq glue_sequences(const IntervalSeq& sp, const IntervalSeq& sq,
                           std::span<const int> left_targets,
                           std::span<const int> right_sources);

/// Gluing chain of discrete iposets over the sorted maximal antichains,
/// with consecutive overlaps as interfaces; evaluates to p up to iso.
/// Throws NotIntervalOrder, or IncompatibleInterfaces when the interface
/// sequences cannot be realized by such a chain.
GpTerm c2_decompose(const Iposet& p);

/// Whitespace-separated `b<i>` / `e<i>` tokens.
std::string trace_to_string(const IntervalSeq& s);
IntervalSeq trace_from_string(const std::string& text);

}  // namespace posets
