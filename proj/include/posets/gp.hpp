#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "posets/gpterm.hpp"
#include "posets/iposet.hpp"

namespace posets {

/// Decomposition results keyed by canonical form; negative answers are
/// cached too. Safe for concurrent use; the search itself is deterministic
/// (fixed split order), so entries are reproducible whichever thread
/// computes them.
class DecompCache {
 public:
  std::optional<std::optional<GpTerm>> lookup(const CanonForm& c) const;
  void store(const CanonForm& c, std::optional<GpTerm> term);

  // Per-level membership bits for the alternation hierarchy.
  std::optional<bool> lookup_level(const CanonForm& c, int key) const;
  void store_level(const CanonForm& c, int key, bool value);

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::optional<GpTerm>> decomp_;
  std::unordered_map<std::string, std::uint64_t> levels_;  // 2 bits per key
};

DecompCache& global_decomp_cache();

/// Gluing/parallel term with eval(term) iso to p, when p is
/// gluing-parallel; searches parallel splits first, then gluing splits,
/// memoized on canonical form.
std::optional<GpTerm> gp_decompose(const Iposet& p);
std::optional<GpTerm> gp_decompose(const Iposet& p, DecompCache& cache);

bool is_gp_poset(const Poset& p);

enum class Side { C, D };

/// Membership in the alternation hierarchy: level 0 holds the four
/// singletons; C alternates parallel first, D gluing first.
bool level_membership(const Iposet& p, int level, Side side);
bool level_membership(const Iposet& p, int level, Side side, DecompCache& cache);

/// The series-parallel witness family separating consecutive C levels.
Poset witness_pn(int n);

enum class ForbiddenPattern { NN, NPLUS, NMINUS, TC, LN };
const char* forbidden_pattern_name(ForbiddenPattern f);

/// First of the five six-point posets occurring induced in p, if any.
std::optional<ForbiddenPattern> forbidden_filter(const Poset& p);

}  // namespace posets
