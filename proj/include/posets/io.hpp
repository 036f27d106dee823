#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posets/iposet.hpp"

namespace posets {

/// On-disk shape of a poset or iposet. Relation pairs mean i < j and need
/// not be transitively closed; the loader closes them.
struct PosetDocument {
  int size = 0;
  std::vector<std::pair<int, int>> relation;
  std::vector<int> source, target;

  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};

/// Throws ParseError with the offending field named.
PosetDocument document_from_json(const std::string& text);

/// Deterministic printing; newline-terminated.
std::string document_to_json(const PosetDocument& doc);

/// Throws CycleError / ValidationError naming the violated invariant.
Iposet document_to_iposet(const PosetDocument& doc);

/// Normalized document: the transitive reduction, pairs sorted.
PosetDocument document_of(const Iposet& p);

/// Hasse diagram with interface points marked by node shape (invtriangle
/// for sources, triangle for targets, diamond for both) and interface
/// positions in the labels.
std::string dot_export(const Iposet& p);

}  // namespace posets
