#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// Poset with interfaces: an ordered source sequence of distinct minimal
/// points and an ordered target sequence of distinct maximal points.
struct Iposet {
  Poset poset;
  std::vector<int> source;
  std::vector<int> target;

  int size() const { return poset.size(); }
  int src_arity() const { return static_cast<int>(source.size()); }
  int tgt_arity() const { return static_cast<int>(target.size()); }

  friend bool operator==(const Iposet&, const Iposet&) = default;
};

/// Validates the interface invariants; throws ValidationError naming the
/// violated one.
Iposet make_iposet(Poset p, std::vector<int> source, std::vector<int> target);

/// Quotient of the disjoint union identifying the i-th target of p with the
/// i-th source of q, plus all arrows from p's non-target points to q's
/// non-source points. Glued points keep the p-side index; remaining q
/// points are renumbered after all of p's.
Iposet glue(const Iposet& p, const Iposet& q);

/// Disjoint union with concatenated interface sequences.
Iposet par(const Iposet& p, const Iposet& q);

Iposet identity(int n);

/// Discrete [n] with the first k points as sources and the first l as
/// targets. Throws ArityError if k > n or l > n.
Iposet idpos(int k, int l, int n);

/// The four one-point iposets.
const std::vector<Iposet>& singletons();

/// Discrete [n] with identity source order and perm as target order.
Iposet symmetry(std::span<const int> perm);

Iposet embed(const Poset& p);
Poset forget(const Iposet& p);

bool iso(const Iposet& p, const Iposet& q);
CanonForm canonical_form(const Iposet& p);
Iposet iposet_from_canon(const CanonForm& c);

/// p subsumes q: some point bijection preserving both interface sequences
/// maps every arrow of q to an arrow of p.
bool subsumes(const Iposet& p, const Iposet& q);

/// Witness for a morphism between iposets: strictly monotone index maps on
/// the interfaces and an order-preserving point map making both interface
/// squares commute.
struct IposetMorphismWitness {
  std::vector<int> nu;  // source index map
  std::vector<int> f;   // point map
  std::vector<int> mu;  // target index map
};

bool valid_morphism(const IposetMorphismWitness& w, const Iposet& from, const Iposet& to);

enum class CompOp { Glue, Par };

Iposet compose(CompOp op, const Iposet& a, const Iposet& b);

struct LeviResult {
  Iposet interpolant;
  // left: p = u @ R and R @ q = v; right: u = p @ R and R @ v = q.
  bool left_side;
};

/// Interpolant for p @ q = u @ v (up to isomorphism). Throws NotComposable
/// when the given factorisations do not compose to isomorphic iposets, and
/// Error if no interpolant is found within the candidate space.
LeviResult levi_factor(const Iposet& p, const Iposet& q, const Iposet& u, const Iposet& v,
                       CompOp op);

// Law checkers; equality always means isomorphism. Arity errors from glue
// propagate.
bool check_category(const Iposet& p, const Iposet& q, const Iposet& r);
bool check_monoid(const Iposet& p, const Iposet& q, const Iposet& r);
bool check_lax_interchange(const Iposet& p, const Iposet& p2, const Iposet& q,
                           const Iposet& q2);
bool check_interchange_eq(const Iposet& p, const Iposet& q, int k, int l);
bool check_decomposition(const Iposet& p1, const Iposet& p2, const Iposet& q1,
                         const Iposet& q2);

/// All binary parallel factorisations p = left ⊗ right with nonempty
/// factors; the callback returns true to stop early. Factor point sets are
/// unions of weak components, with the interface sequences split
/// prefix/suffix.
bool for_each_parallel_split(const Iposet& p,
                             const std::function<bool(const Iposet&, const Iposet&)>& fn);

/// All binary gluing factorisations with both factors strictly smaller:
/// an antichain M (with all orderings as the middle interface), a lower
/// part L and an upper part R, such that glue(left, right) reproduces p.
bool for_each_glue_split(const Iposet& p,
                         const std::function<bool(const Iposet&, const Iposet&)>& fn);

namespace detail {

/// All injective sequences (every length, including empty) over the pool.
std::vector<std::vector<int>> injective_sequences(const std::vector<int>& pool);

}  // namespace detail

}  // namespace posets
