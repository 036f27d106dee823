#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posets/gp.hpp"
#include "posets/gpterm.hpp"
#include "posets/iposet.hpp"
#include "posets/poset.hpp"

namespace posets {

inline constexpr int kEnumBound = 8;

/// One representative per isomorphism class of posets on exactly n points,
/// sorted by canonical form. Built by extending (n-1)-point posets with a
/// new maximal point over every down-closed subset, deduplicated
/// canonically. Throws BoundExceeded past the bound.
const std::vector<Poset>& all_posets_list(int n, int bound = kEnumBound);
std::vector<CanonForm> all_posets(int n, int bound = kEnumBound);

/// Iposet classes on n points: every (source, target) decoration of every
/// poset class, deduplicated canonically; targets_allowed=false keeps the
/// target interface empty.
std::vector<Iposet> all_iposets_list(int n, bool targets_allowed, int bound = kEnumBound);
std::vector<CanonForm> all_iposets(int n, bool targets_allowed, int bound = kEnumBound);

/// Least fixpoint of the singletons plus the empty iposet under gluing and
/// parallel composition, capped at n points.
struct GpClosure {
  std::vector<Iposet> members;    // sorted by canonical form
  std::vector<CanonForm> forms;   // aligned with members
  std::vector<std::size_t> count_by_size;

  bool contains(const CanonForm& c) const;
  std::size_t count_at(int size) const {
    return size < static_cast<int>(count_by_size.size()) ? count_by_size[size] : 0;
  }
};
GpClosure gp_closure(int n, int jobs = 1, int bound = kEnumBound);

/// One table row; a missing value means the cell was not computed (past the
/// paper tier without stretch mode, or over budget).
struct CountsRow {
  int n = 0;
  std::optional<std::uint64_t> p, sp, gp, gpc, sip, ip, gpi;
};

/// The seven count columns for n = 0..max_n. The cells the paper leaves
/// open (IP past 4, SIP past 5) are only computed in stretch mode. Budget
/// overrides: POSETS_CELL_BUDGET_MS, POSETS_MAX_SET.
std::vector<CountsRow> counts_table(int max_n, bool stretch = false, int jobs = 1);

struct DecompRow {
  CanonForm form;
  std::optional<GpTerm> term;
};

/// Decomposition search over every (connected) poset class on n points,
/// sorted by canonical form.
std::vector<DecompRow> decomposition_table(int n, bool connected_only, int bound = 6);

}  // namespace posets
