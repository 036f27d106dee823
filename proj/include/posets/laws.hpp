#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "posets/iposet.hpp"

namespace posets {

struct LawResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

struct LawReport {
  std::vector<LawResult> results;
  bool ok() const;
  std::uint64_t total_checked() const;
};

/// Exhaustive law suite over every iposet class with at most max_points
/// points: category laws for gluing, monoid laws for parallel, the
/// singleton interchange equation, lax interchange, the interpolation
/// property, the decomposition disjunct, and the strict-interchange
/// counterexample. Progress lines go to `out` when given.
LawReport run_law_suite(int max_points, std::ostream* out = nullptr);

}  // namespace posets
