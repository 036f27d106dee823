#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "posets/enumerate.hpp"
#include "posets/interval.hpp"

using namespace posets;

namespace {

IntervalSeq seq(const std::string& text) { return trace_from_string(text); }

// closure of a sequence set under single approx swaps
std::set<IntervalSeq> approx_class(const IntervalSeq& start) {
  std::set<IntervalSeq> seen{start};
  std::vector<IntervalSeq> todo{start};
  while (!todo.empty()) {
    IntervalSeq s = todo.back();
    todo.pop_back();
    for (const IntervalSeq& t : approx_neighbors(s))
      if (seen.insert(t).second) todo.push_back(t);
  }
  return seen;
}

}  // namespace

TEST_CASE("interval order recognition") {
  const auto& ps = patterns();
  CHECK(is_interval_order(ps.N));
  CHECK_FALSE(is_interval_order(ps.TWO_TWO));
  CHECK(is_interval_order(Poset()));

  // three-way agreement on every poset with at most 6 points:
  // quantifier check, linearity of the antichain order, 2+2-freeness
  for (int n = 0; n <= 6; ++n)
    for (const Poset& p : all_posets_list(n)) {
      bool fishburn = is_interval_order(p);
      bool no22 = !find_induced(p, ps.TWO_TWO).has_value();
      bool linear = true;
      try {
        max_antichains(p);
      } catch (const NotLinear&) {
        linear = false;
      }
      CHECK(fishburn == no22);
      CHECK(fishburn == linear);
    }
}

TEST_CASE("maximal antichains") {
  const auto& ps = patterns();
  // N = a<b, c<b, c<d on points 0..3
  auto chains = max_antichains(ps.N);
  REQUIRE(chains.size() == 3);
  CHECK(chains[0] == std::vector<int>{0, 2});
  CHECK(chains[1] == std::vector<int>{0, 3});
  CHECK(chains[2] == std::vector<int>{1, 3});

  CHECK(max_antichains(make_poset(2, {{0, 1}})) ==
        std::vector<std::vector<int>>{{0}, {1}});

  CHECK_THROWS_AS(max_antichains(ps.TWO_TWO), NotLinear);
  try {
    max_antichains(ps.TWO_TWO);
  } catch (const NotLinear& e) {
    // the witness pair really is incomparable both ways
    CHECK_FALSE(e.antichain_a.empty());
    CHECK_FALSE(e.antichain_b.empty());
  }
}

TEST_CASE("canonical traces") {
  const auto& ps = patterns();
  CHECK(trace_to_string(canonical_trace(ps.N)) == "b0 b2 e2 b3 e0 b1 e1 e3");
  CHECK(trace_to_string(canonical_trace(discrete(1))) == "b0 e0");
  CHECK(trace_to_string(canonical_trace(discrete(2))) == "b0 b1 e0 e1");
  CHECK_THROWS_AS(canonical_trace(ps.TWO_TWO), NotIntervalOrder);

  // round trip on every interval order with at most 6 points
  for (int n = 0; n <= 6; ++n)
    for (const Poset& p : all_posets_list(n)) {
      if (!is_interval_order(p)) continue;
      Poset back = order_of_sequence(canonical_trace(p));
      CHECK(back == p);  // the walk preserves point identities
    }
}

TEST_CASE("interval representations satisfy the defining conditions") {
  for (int n = 0; n <= 5; ++n)
    for (const Poset& p : all_posets_list(n)) {
      if (!is_interval_order(p)) continue;
      IntervalRep rep = interval_rep(p);
      std::set<int> endpoints;
      for (int x = 0; x < n; ++x) {
        CHECK(rep.begin_pos[x] < rep.end_pos[x]);
        endpoints.insert(rep.begin_pos[x]);
        endpoints.insert(rep.end_pos[x]);
      }
      CHECK(static_cast<int>(endpoints.size()) == 2 * n);  // all distinct
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y) CHECK(p.lt(x, y) == (rep.end_pos[x] < rep.begin_pos[y]));
    }
}

TEST_CASE("order_of_sequence") {
  CHECK(order_of_sequence(seq("b0 e0 b1 e1")) == make_poset(2, {{0, 1}}));
  CHECK(order_of_sequence(seq("b0 b1 e0 e1")) == discrete(2));
  CHECK(order_of_sequence(IntervalSeq{}) == Poset());
  CHECK_THROWS_AS(order_of_sequence(seq("b0 b1 e0")), NotClosed);
  CHECK_THROWS_AS(order_of_sequence(seq("e0 b0 e0")), NotClosed);
  CHECK_THROWS_AS(order_of_sequence(seq("b0 b0 e0 e0")), NotClosed);
  // induced orders of closed sequences are always interval orders
  std::mt19937 rng(5);
  for (int rep = 0; rep < 300; ++rep) {
    int n = 1 + rng() % 4;
    std::vector<int> evs(2 * n);
    std::iota(evs.begin(), evs.end(), 0);
    std::shuffle(evs.begin(), evs.end(), rng);
    // repair: make each begin precede its end by swapping when needed
    std::vector<int> first(n, -1);
    IntervalSeq s;
    for (int e : evs) {
      int pt = e / 2;
      if (first[pt] < 0) {
        first[pt] = 1;
        s.push_back(ev_begin(pt));
      } else {
        s.push_back(ev_end(pt));
      }
    }
    CHECK(is_interval_order(order_of_sequence(s)));
  }
}

TEST_CASE("trace equivalence") {
  CHECK(same_trace(seq("b0 b1 e0 e1"), seq("b1 b0 e0 e1")));
  CHECK_FALSE(same_trace(seq("b0 e0 b1 e1"), seq("b1 b0 e0 e1")));
  IntervalSeq s = seq("b0 b1 e1 e0");
  CHECK(same_trace(s, s));

  // neighbors are exactly the adjacent swaps of same-kind events
  auto nb = approx_neighbors(seq("b0 b1 e0 e1"));
  CHECK(nb.size() == 2);  // swap the begins, or swap the ends
  // swapping a begin with an end is not allowed
  CHECK(approx_neighbors(seq("b0 e0 b1 e1")).empty());
}

TEST_CASE("all interval sequences of a poset") {
  CHECK(all_sequences(discrete(1)) == std::vector<IntervalSeq>{seq("b0 e0")});
  CHECK_THROWS_AS(all_sequences(discrete(6)), TooLarge);

  // discrete [2]: of the six begin-before-end interleavings of four events,
  // the two serial ones induce chains; the four with overlapping intervals
  // form one approx class
  auto sigma = all_sequences(discrete(2));
  CHECK(sigma.size() == 4);
  std::set<IntervalSeq> cls = approx_class(seq("b0 b1 e0 e1"));
  CHECK(std::set<IntervalSeq>(sigma.begin(), sigma.end()) == cls);

  // the trace bijection on every interval order with at most 4 points:
  // the sequence set is one approx class, namely that of the canonical
  // trace, and every member induces the poset itself
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : all_posets_list(n)) {
      if (!is_interval_order(p)) continue;
      auto sig = all_sequences(p);
      std::set<IntervalSeq> have(sig.begin(), sig.end());
      CHECK(have == approx_class(canonical_trace(p)));
      for (const IntervalSeq& s : sig) CHECK(order_of_sequence(s) == p);
      for (const IntervalSeq& s : sig) CHECK(same_trace(s, canonical_trace(p)));
    }

  // approx rewrites stay inside the sequence set (closure property)
  for (const Poset& p : all_posets_list(4)) {
    if (!is_interval_order(p)) continue;
    auto sig = all_sequences(p);
    std::set<IntervalSeq> have(sig.begin(), sig.end());
    for (const IntervalSeq& s : sig)
      for (const IntervalSeq& t : approx_neighbors(s)) CHECK(have.contains(t));
  }
}

TEST_CASE("gluing interval sequences") {
  // concatenation with no interface is serial composition
  Poset a = make_poset(2, {{0, 1}});
  IntervalSeq sa = canonical_trace(a);
  IntervalSeq glued = glue_sequences(sa, sa, {}, {});
  CHECK(order_of_sequence(glued) == serial(a, a));

  CHECK_THROWS_AS(glue_sequences(sa, sa, std::vector<int>{1}, std::vector<int>{}),
                  ArityError);

  // the worked 5-point/4-point example: two interval iposets glue to the
  // depicted 7-point interval order with the interface intervals merged
  Iposet left = make_iposet(make_poset(5, {{0, 1}, {2, 1}, {2, 3}, {2, 4}}), {}, {1, 4});
  Iposet right = make_iposet(make_poset(4, {{0, 1}, {2, 1}, {2, 3}}), {0, 2}, {});
  Iposet g = glue(left, right);
  CHECK(g.size() == 7);
  IntervalSeq merged = glue_sequences(canonical_trace(left.poset),
                                      canonical_trace(right.poset), left.target,
                                      right.source);
  CHECK(order_of_sequence(merged) == forget(g));

  // cross-check against glue() on all composable interval iposets with at
  // most 3 points
  for (int np = 0; np <= 3; ++np)
    for (const Iposet& p : all_iposets_list(np, true)) {
      if (!is_interval_order(p.poset)) continue;
      for (int nq = 0; nq <= 3; ++nq)
        for (const Iposet& q : all_iposets_list(nq, true)) {
          if (p.tgt_arity() != q.src_arity()) continue;
          if (!is_interval_order(q.poset)) continue;
          Iposet fast = glue(p, q);
          CHECK(is_interval_order(fast.poset));  // gluing preserves interval orders
          IntervalSeq s = glue_sequences(canonical_trace(p.poset),
                                         canonical_trace(q.poset), p.target, q.source);
          CHECK(order_of_sequence(s) == forget(fast));
        }
    }
}

TEST_CASE("gluing is closed on interval iposets with up to 4 points") {
  std::vector<Iposet> interval4;
  for (int n = 0; n <= 4; ++n)
    for (const Iposet& p : all_iposets_list(n, true))
      if (is_interval_order(p.poset)) interval4.push_back(p);
  for (const Iposet& p : interval4)
    for (const Iposet& q : interval4) {
      if (p.tgt_arity() != q.src_arity()) continue;
      CHECK(is_interval_order(forget(glue(p, q))));
    }
}

TEST_CASE("chain decomposition of interval iposets") {
  const auto& ps = patterns();

  // N: three factors over the antichain chain, overlaps {0} then {3}
  GpTerm t = c2_decompose(embed(ps.N));
  REQUIRE(t.kind == GpTerm::Kind::Glue);
  CHECK(t.children.size() == 3);
  CHECK(iso(eval(t), embed(ps.N)));

  CHECK(c2_decompose(embed(discrete(1))) == GpTerm::singleton(false, false));
  CHECK(c2_decompose(identity(0)) == GpTerm::empty());
  CHECK_THROWS_AS(c2_decompose(embed(ps.TWO_TWO)), NotIntervalOrder);

  // the crossing symmetry is an interval order whose interfaces cannot be
  // threaded through the chain
  CHECK_THROWS_AS(c2_decompose(symmetry(std::vector<int>{1, 0})),
                  IncompatibleInterfaces);

  // every embedded interval order with at most 6 points round-trips
  for (int n = 0; n <= 6; ++n)
    for (const Poset& p : all_posets_list(n)) {
      if (!is_interval_order(p)) continue;
      GpTerm term = c2_decompose(embed(p));
      CHECK(iso(eval(term), embed(p)));
    }

  // interval iposets with compatible interfaces decompose too
  for (int n = 0; n <= 3; ++n)
    for (const Iposet& p : all_iposets_list(n, true)) {
      if (!is_interval_order(p.poset)) continue;
      try {
        GpTerm term = c2_decompose(p);
        CHECK(iso(eval(term), p));
      } catch (const IncompatibleInterfaces&) {
        // fine: such iposets are not chain-decomposable
      }
    }
}

TEST_CASE("event text round trip") {
  IntervalSeq s = seq("b0 b2 e2 b1 e0 e1");
  CHECK(trace_from_string(trace_to_string(s)) == s);
  CHECK_THROWS_AS(seq("x0"), ParseError);
  CHECK_THROWS_AS(seq("b"), ParseError);
  CHECK_THROWS_AS(seq("b1x"), ParseError);
}
