#include "posets/gp.hpp"

#include <cassert>

namespace posets {

std::optional<std::optional<GpTerm>> DecompCache::lookup(const CanonForm& c) const {
  std::scoped_lock lock(mu_);
  auto it = decomp_.find(c.bytes);
  if (it == decomp_.end()) return std::nullopt;
  return it->second;
}

void DecompCache::store(const CanonForm& c, std::optional<GpTerm> term) {
  std::scoped_lock lock(mu_);
  decomp_.emplace(c.bytes, std::move(term));
}

std::optional<bool> DecompCache::lookup_level(const CanonForm& c, int key) const {
  std::scoped_lock lock(mu_);
  auto it = levels_.find(c.bytes);
  if (it == levels_.end()) return std::nullopt;
  std::uint64_t bits = it->second >> (2 * key);
  if (!(bits & 1u)) return std::nullopt;
  return (bits >> 1) & 1u;
}

void DecompCache::store_level(const CanonForm& c, int key, bool value) {
  std::scoped_lock lock(mu_);
  levels_[c.bytes] |= (value ? 3ull : 1ull) << (2 * key);
}

DecompCache& global_decomp_cache() {
  static DecompCache cache;
  return cache;
}

namespace {

std::optional<GpTerm> decompose_rec(const Iposet& p, DecompCache& cache) {
  const int n = p.size();
  if (n == 0) return GpTerm::empty();
  if (n == 1) return GpTerm::singleton(p.src_arity() == 1, p.tgt_arity() == 1);

  CanonForm key = canonical_form(p);
  if (auto hit = cache.lookup(key)) return *hit;

  std::optional<GpTerm> found;
  // Fail fast: a forbidden induced subposet rules out any decomposition.
  if (n >= 6 && forbidden_filter(p.poset)) {
    cache.store(key, std::nullopt);
    return std::nullopt;
  }

  for_each_parallel_split(p, [&](const Iposet& a, const Iposet& b) {
    auto ta = decompose_rec(a, cache);
    if (!ta) return false;
    auto tb = decompose_rec(b, cache);
    if (!tb) return false;
    found = GpTerm::par_of({std::move(*ta), std::move(*tb)});
    return true;
  });
  if (!found) {
    for_each_glue_split(p, [&](const Iposet& a, const Iposet& b) {
      auto ta = decompose_rec(a, cache);
      if (!ta) return false;
      auto tb = decompose_rec(b, cache);
      if (!tb) return false;
      found = GpTerm::glue_of({std::move(*ta), std::move(*tb)});
      return true;
    });
  }
  cache.store(key, found);
  return found;
}

}  // namespace

std::optional<GpTerm> gp_decompose(const Iposet& p, DecompCache& cache) {
  return decompose_rec(p, cache);
}

std::optional<GpTerm> gp_decompose(const Iposet& p) {
  return gp_decompose(p, global_decomp_cache());
}

bool is_gp_poset(const Poset& p) { return gp_decompose(embed(p)).has_value(); }

namespace {

constexpr int kMaxLevel = 15;

bool in_level(const Iposet& p, int level, Side side, DecompCache& cache);

bool level_search(const Iposet& p, int level, Side side, DecompCache& cache) {
  if (level == 0) return p.size() == 1;  // the four singletons
  const bool par_level = (level % 2 == 1) == (side == Side::C);
  if (par_level) {
    if (p.size() == 0) return true;  // empty parallel product
    if (in_level(p, level - 1, side, cache)) return true;
    bool found = for_each_parallel_split(p, [&](const Iposet& a, const Iposet& b) {
      return in_level(a, level, side, cache) && in_level(b, level, side, cache);
    });
    return found;
  }
  if (in_level(p, level - 1, side, cache)) return true;
  return for_each_glue_split(p, [&](const Iposet& a, const Iposet& b) {
    return in_level(a, level, side, cache) && in_level(b, level, side, cache);
  });
}

bool in_level(const Iposet& p, int level, Side side, DecompCache& cache) {
  if (level < 0) return false;
  const int key = 2 * level + (side == Side::D ? 1 : 0);
  CanonForm c = canonical_form(p);
  if (auto hit = cache.lookup_level(c, key)) return *hit;
  bool value = level_search(p, level, side, cache);
  cache.store_level(c, key, value);
  return value;
}

}  // namespace

bool level_membership(const Iposet& p, int level, Side side, DecompCache& cache) {
  if (level < 0 || level > kMaxLevel) throw BoundExceeded("hierarchy level out of range");
  return in_level(p, level, side, cache);
}

bool level_membership(const Iposet& p, int level, Side side) {
  return level_membership(p, level, side, global_decomp_cache());
}

Poset witness_pn(int n) {
  if (n < 1) throw ValidationError("witness index must be positive");
  Poset w = serial(discrete(1), discrete(1));
  for (int i = 1; i < n; ++i) w = serial(discrete(1), parallel(w, w));
  return w;
}

const char* forbidden_pattern_name(ForbiddenPattern f) {
  switch (f) {
    case ForbiddenPattern::NN:
      return "NN";
    case ForbiddenPattern::NPLUS:
      return "NPLUS";
    case ForbiddenPattern::NMINUS:
      return "NMINUS";
    case ForbiddenPattern::TC:
      return "TC";
    case ForbiddenPattern::LN:
      return "LN";
  }
  return "?";
}

std::optional<ForbiddenPattern> forbidden_filter(const Poset& p) {
  const auto& ps = patterns();
  const std::pair<const Poset*, ForbiddenPattern> table[] = {
      {&ps.NN, ForbiddenPattern::NN},
      {&ps.NPLUS, ForbiddenPattern::NPLUS},
      {&ps.NMINUS, ForbiddenPattern::NMINUS},
      {&ps.TC, ForbiddenPattern::TC},
      {&ps.LN, ForbiddenPattern::LN},
  };
  for (const auto& [pat, name] : table)
    if (find_induced(p, *pat)) return name;
  return std::nullopt;
}

}  // namespace posets
