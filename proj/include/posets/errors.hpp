#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posets {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// make_poset: the pair closure would relate a point to itself.
struct CycleError : Error {
  using Error::Error;
};

// glue: target arity of the left operand differs from the source arity of
// the right operand.
struct InterfaceMismatch : Error {
  using Error::Error;
};

// idpos / glue_sequences: interface longer than the carrier allows.
struct ArityError : Error {
  using Error::Error;
};

// max_antichains: the antichain relation is not linear; carries one
// incomparable pair as witness.
struct NotLinear : Error {
  NotLinear(std::vector<int> a, std::vector<int> b)
      : Error("maximal antichains are not linearly ordered"),
        antichain_a(std::move(a)),
        antichain_b(std::move(b)) {}
  std::vector<int> antichain_a, antichain_b;
};

struct NotIntervalOrder : Error {
  using Error::Error;
};

// c2_decompose: the poset is an interval order but the interface sequences
// cannot be threaded through the antichain chain.
struct IncompatibleInterfaces : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct BoundExceeded : Error {
  using Error::Error;
};

struct NotComposable : Error {
  using Error::Error;
};

// Document loading / term parsing.
struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

// Internal: a table cell ran over its configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace posets
