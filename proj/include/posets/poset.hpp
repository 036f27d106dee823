#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posets/errors.hpp"

namespace posets {

/// Finite strict partial order on points 0..size-1.
///
/// The relation is stored as one successor bitset per point and is kept
/// transitively closed at all times, so irreflexivity plus transitivity can
/// be asserted on every value. Instances are immutable after construction.
class Poset {
 public:
  static constexpr int kMaxPoints = 64;

  Poset() = default;

  /// Rows must already be a transitively closed irreflexive relation
  /// (asserted in debug builds).
  static Poset from_closed_rows(std::vector<std::uint64_t> succ);

  int size() const { return static_cast<int>(succ_.size()); }
  bool lt(int x, int y) const { return (succ_[x] >> y) & 1u; }
  bool leq(int x, int y) const { return x == y || lt(x, y); }
  bool unrelated(int x, int y) const { return !lt(x, y) && !lt(y, x); }

  std::uint64_t succ_mask(int x) const { return succ_[x]; }
  std::uint64_t pred_mask(int x) const { return pred_[x]; }
  std::uint64_t all_mask() const {
    int n = size();
    return n == 64 ? ~0ull : (1ull << n) - 1;
  }
  int arrow_count() const;

  /// Induced subposet; point i of the result is points[i].
  Poset induced(std::span<const int> points) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::uint64_t> succ_;
  std::vector<std::uint64_t> pred_;
};

/// Relabeling-invariant byte encoding of an isomorphism class. Two values
/// compare equal iff the encoded posets (or iposets) are isomorphic.
struct CanonForm {
  std::string bytes;
  friend auto operator<=>(const CanonForm&, const CanonForm&) = default;
  std::string hex() const;
};

struct CanonFormHash {
  std::size_t operator()(const CanonForm& c) const {
    return std::hash<std::string>{}(c.bytes);
  }
};

/// Injective order-reflecting map from pattern points into a host.
struct Embedding {
  std::vector<int> map;  // pattern point i -> host point map[i]
};

/// Serial/parallel expression tree over singleton posets.
struct SpTerm {
  enum class Kind { Empty, Leaf, Serial, Parallel };
  Kind kind = Kind::Leaf;
  std::vector<SpTerm> children;

  static SpTerm empty() { return {Kind::Empty, {}}; }
  static SpTerm leaf() { return {Kind::Leaf, {}}; }
  static SpTerm serial_of(std::vector<SpTerm> cs);
  static SpTerm parallel_of(std::vector<SpTerm> cs);

  friend bool operator==(const SpTerm&, const SpTerm&) = default;
};

/// Transitive closure of the given pairs as a strict order.
/// Throws CycleError if the closure relates a point to itself,
/// ValidationError on out-of-range indices.
Poset make_poset(int size, std::span<const std::pair<int, int>> pairs);
Poset make_poset(int size, std::initializer_list<std::pair<int, int>> pairs);

/// Disjoint union with every point of p below every point of q.
Poset serial(const Poset& p, const Poset& q);

/// Disjoint union, no cross arrows.
Poset parallel(const Poset& p, const Poset& q);

/// Discrete poset on n points.
Poset discrete(int n);

std::vector<int> minima(const Poset& p);
std::vector<int> maxima(const Poset& p);

/// Lexicographically least induced embedding of pattern into host, if any.
std::optional<Embedding> find_induced(const Poset& host, const Poset& pattern);

/// N-freeness.
bool is_sp(const Poset& p);

/// Serial/parallel term evaluating to p up to isomorphism, when one exists.
std::optional<SpTerm> sp_decompose(const Poset& p);

Poset sp_eval(const SpTerm& t);
std::string sp_to_string(const SpTerm& t);

CanonForm canonical_form(const Poset& p);
bool isomorphic(const Poset& p, const Poset& q);

/// The full automorphism group, each entry a permutation point -> image.
std::vector<std::vector<int>> automorphisms(const Poset& p);

/// Partition of the points under the symmetric closure of lt, sorted by
/// least member; every class is ascending.
std::vector<std::vector<int>> connected_components(const Poset& p);

bool is_connected(const Poset& p);  // at most one component

/// Pairs of the transitive reduction, sorted.
std::vector<std::pair<int, int>> covering_pairs(const Poset& p);

/// Fixture posets used throughout: N and 2+2 on four points, the five
/// six-point posets excluded from gluing-parallel generation.
struct Patterns {
  Poset N, TWO_TWO, NN, NPLUS, NMINUS, TC, LN;
};
const Patterns& patterns();

/// Producer-consumer poset on 2n points: p_0..p_{n-1} then c_0..c_{n-1},
/// with p_i < p_{i+1}, c_i < c_{i+1} and p_i < c_i, transitively closed.
Poset prodcon(int n);

/// Decode a canonical form produced for a plain poset.
Poset poset_from_canon(const CanonForm& c);

namespace detail {

/// Canonical byte encoding of a poset decorated with interface sequences;
/// minimisation respects the pointwise interface maps, so it realises
/// iposet isomorphism when sequences are present and plain poset
/// isomorphism when they are empty.
std::string canonical_bytes(const Poset& p, std::span<const int> source,
                            std::span<const int> target);

/// Encoding of the value as labelled (no relabeling search).
std::string raw_bytes(const Poset& p, std::span<const int> source,
                      std::span<const int> target);

void decode_bytes(const std::string& bytes, Poset& p, std::vector<int>& source,
                  std::vector<int>& target);

}  // namespace detail

}  // namespace posets
