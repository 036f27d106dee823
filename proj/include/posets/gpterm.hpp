#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posets/iposet.hpp"

namespace posets {

/// Expression tree over the four singleton iposets (plus the empty iposet)
/// with gluing and parallel nodes. Trees are kept normalized: composite
/// nodes have at least two children, never a direct child of the same kind,
/// and parallel nodes carry no empty leaves.
struct GpTerm {
  enum class Kind { Empty, Singleton, Glue, Par };
  Kind kind = Kind::Empty;
  bool has_source = false, has_target = false;  // Singleton only
  std::vector<GpTerm> children;

  static GpTerm empty() { return {}; }
  static GpTerm singleton(bool src, bool tgt) {
    return {Kind::Singleton, src, tgt, {}};
  }
  static GpTerm glue_of(std::vector<GpTerm> cs);
  static GpTerm par_of(std::vector<GpTerm> cs);

  friend bool operator==(const GpTerm&, const GpTerm&) = default;
};

/// Composes the tree; throws InterfaceMismatch on arity-mismatched gluings.
Iposet eval(const GpTerm& t);

/// Maximum number of glue/par alternations along a root-to-leaf path.
int alternation_depth(const GpTerm& t);

/// Leaves `.`, `>.`, `.>`, `>.>` and `0`; `*` glues, `||` in parallel,
/// `*` binding tighter. print-then-parse is the identity on normalized
/// trees, parse-then-print on printed strings.
std::string term_to_string(const GpTerm& t);
GpTerm term_from_string(std::string_view text);

}  // namespace posets
