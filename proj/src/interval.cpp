#include "posets/interval.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace posets {

bool is_interval_order(const Poset& p) {
  const int n = p.size();
  bool fishburn = true;
  for (int w = 0; w < n && fishburn; ++w)
    for (int y = 0; y < n && fishburn; ++y) {
      if (!p.lt(w, y)) continue;
      for (int x = 0; x < n && fishburn; ++x)
        for (int z = 0; z < n && fishburn; ++z)
          if (p.lt(x, z) && !p.lt(w, z) && !p.lt(x, y)) fishburn = false;
    }
  assert(fishburn == !find_induced(p, patterns().TWO_TWO).has_value());
  return fishburn;
}

namespace {

std::vector<std::uint64_t> maximal_antichain_masks(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (1ull << n); ++m) {
    bool anti = true;
    for (int x = 0; x < n && anti; ++x)
      if ((m >> x) & 1u) anti = (p.succ_mask(x) & m) == 0;
    if (!anti) continue;
    // maximal: every outside point is comparable to some member
    bool maximal = true;
    for (int y = 0; y < n && maximal; ++y) {
      if ((m >> y) & 1u) continue;
      if (((p.succ_mask(y) | p.pred_mask(y)) & m) == 0) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

// A before B: no point of B\A lies below a point of A\B. (The blunt
// pointwise condition "all of A\B below all of B\A" is too strong already
// for N, whose outer antichains share no arrows; dominance matches the
// clique-point order of an interval representation.)
bool antichain_before(const Poset& p, std::uint64_t a, std::uint64_t b) {
  std::uint64_t onlya = a & ~b, onlyb = b & ~a;
  for (int y = 0; y < p.size(); ++y)
    if ((onlyb >> y) & 1u)
      if ((p.succ_mask(y) & onlya) != 0) return false;
  return true;
}

std::vector<int> mask_to_points(std::uint64_t m) {
  std::vector<int> pts;
  for (int i = 0; i < 64; ++i)
    if ((m >> i) & 1u) pts.push_back(i);
  return pts;
}

std::vector<std::uint64_t> sorted_antichain_masks(const Poset& p) {
  auto masks = maximal_antichain_masks(p);
  const int k = static_cast<int>(masks.size());
  // Full pairwise tournament: for maximal antichains exactly one direction
  // holds per pair iff the order is linear.
  std::vector<int> wins(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool ij = antichain_before(p, masks[i], masks[j]);
      bool ji = antichain_before(p, masks[j], masks[i]);
      if (ij == ji) throw NotLinear(mask_to_points(masks[i]), mask_to_points(masks[j]));
      ++(ij ? wins[i] : wins[j]);
    }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::ranges::sort(order, [&](int a, int b) { return wins[a] > wins[b]; });
  std::vector<std::uint64_t> sorted;
  for (int i : order) sorted.push_back(masks[i]);
  for (int i = 0; i + 1 < k; ++i)  // win counts distinct iff a strict chain
    if (wins[order[i]] == wins[order[i + 1]])
      throw NotLinear(mask_to_points(sorted[i]), mask_to_points(sorted[i + 1]));
  return sorted;
}

}  // namespace

std::vector<std::vector<int>> max_antichains(const Poset& p) {
  std::vector<std::vector<int>> out;
  for (auto m : sorted_antichain_masks(p)) out.push_back(mask_to_points(m));
  return out;
}

IntervalSeq canonical_trace(const Poset& p) {
  if (!is_interval_order(p)) throw NotIntervalOrder("poset contains an induced 2+2");
  if (p.size() == 0) return {};
  auto chain = sorted_antichain_masks(p);
  IntervalSeq out;
  std::uint64_t active = 0;
  for (auto a : chain) {
    for (int x : mask_to_points(active & ~a)) out.push_back(ev_end(x));
    for (int x : mask_to_points(a & ~active)) out.push_back(ev_begin(x));
    active = a;
  }
  for (int x : mask_to_points(active)) out.push_back(ev_end(x));
  return out;
}

IntervalRep interval_rep(const Poset& p) {
  IntervalSeq s = canonical_trace(p);
  IntervalRep rep;
  rep.begin_pos.assign(p.size(), -1);
  rep.end_pos.assign(p.size(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    (s[i].is_end ? rep.end_pos : rep.begin_pos)[s[i].point] = i;
  return rep;
}

namespace {

// Points of a closed sequence must be exactly 0..k-1, each begun once and
// ended once, end after begin.
int check_closed(const IntervalSeq& s) {
  int maxpt = -1;
  for (const auto& e : s) {
    if (e.point < 0) throw NotClosed("negative point in sequence");
    maxpt = std::max(maxpt, e.point);
  }
  const int n = maxpt + 1;
  std::vector<int> begun(n, 0), ended(n, 0);
  for (const auto& e : s) {
    if (!e.is_end) {
      if (begun[e.point]++) throw NotClosed("point begun twice");
    } else {
      if (!begun[e.point]) throw NotClosed("end before begin");
      if (ended[e.point]++) throw NotClosed("point ended twice");
    }
  }
  for (int x = 0; x < n; ++x)
    if (!begun[x] || !ended[x]) throw NotClosed("point not begun or not ended");
  return n;
}

}  // namespace

Poset order_of_sequence(const IntervalSeq& s) {
  const int n = check_closed(s);
  std::vector<int> bpos(n), epos(n);
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    (s[i].is_end ? epos : bpos)[s[i].point] = i;
  std::vector<std::uint64_t> rows(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && epos[x] < bpos[y]) rows[x] |= 1ull << y;
  return Poset::from_closed_rows(std::move(rows));
}

std::vector<IntervalSeq> approx_neighbors(const IntervalSeq& s) {
  std::set<IntervalSeq> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].is_end == s[i + 1].is_end && s[i].point != s[i + 1].point) {
      IntervalSeq t = s;
      std::swap(t[i], t[i + 1]);
      out.insert(std::move(t));
    }
  }
  return {out.begin(), out.end()};
}

namespace {

IntervalSeq trace_normal_form(const IntervalSeq& s) {
  IntervalSeq out = s;
  std::size_t i = 0;
  while (i < out.size()) {
    std::size_t j = i;
    while (j < out.size() && out[j].is_end == out[i].is_end) ++j;
    std::sort(out.begin() + i, out.begin() + j,
              [](const IntervalEvent& a, const IntervalEvent& b) { return a.point < b.point; });
    i = j;
  }
  return out;
}

}  // namespace

bool same_trace(const IntervalSeq& a, const IntervalSeq& b) {
  return trace_normal_form(a) == trace_normal_form(b);
}

std::vector<IntervalSeq> all_sequences(const Poset& p) {
  const int n = p.size();
  if (n > 5) throw TooLarge("sequence enumeration is limited to 5 points");
  // Events encoded 2x (begin) and 2x+1 (end); every permutation of the 2n
  // slots is tried and kept when it represents p.
  std::vector<int> evs(2 * n);
  std::iota(evs.begin(), evs.end(), 0);
  std::vector<IntervalSeq> out;
  std::vector<int> bpos(n), epos(n);
  do {
    bool ok = true;
    for (int i = 0; i < 2 * n; ++i) {
      int e = evs[i];
      (e & 1 ? epos : bpos)[e >> 1] = i;
    }
    for (int x = 0; x < n && ok; ++x) ok = bpos[x] < epos[x];
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (x != y) ok = p.lt(x, y) == (epos[x] < bpos[y]);
    if (ok) {
      IntervalSeq s(2 * n);
      for (int i = 0; i < 2 * n; ++i) s[i] = {(evs[i] & 1) != 0, evs[i] >> 1};
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(evs.begin(), evs.end()));
  std::sort(out.begin(), out.end());
  return out;
}

IntervalSeq glue_sequences(const IntervalSeq& sp, const IntervalSeq& sq,
                           std::span<const int> left_targets,
                           std::span<const int> right_sources) {
  if (left_targets.size() != right_sources.size())
    throw ArityError("interface sequences of different length");
  const int np = check_closed(sp);
  const int nq = check_closed(sq);
  const int m = static_cast<int>(left_targets.size());
  for (int t : left_targets)
    if (t < 0 || t >= np) throw ArityError("left interface point out of range");
  for (int s : right_sources)
    if (s < 0 || s >= nq) throw ArityError("right interface point out of range");

  // Same renumbering as glue(): glued points keep the left index, the other
  // right points follow after all left points.
  std::vector<int> qmap(nq, -1);
  for (int i = 0; i < m; ++i) qmap[right_sources[i]] = left_targets[i];
  int next = np;
  for (int j = 0; j < nq; ++j)
    if (qmap[j] < 0) qmap[j] = next++;

  std::vector<bool> drop_end(np, false);
  for (int t : left_targets) drop_end[t] = true;
  std::vector<bool> drop_begin(nq, false);
  for (int s : right_sources) drop_begin[s] = true;

  IntervalSeq out;
  for (const auto& e : sp)
    if (!(e.is_end && drop_end[e.point])) out.push_back(e);
  for (const auto& e : sq) {
    if (!e.is_end && drop_begin[e.point]) continue;
    out.push_back({e.is_end, qmap[e.point]});
  }
  return out;
}

GpTerm c2_decompose(const Iposet& p) {
  if (!is_interval_order(p.poset))
    throw NotIntervalOrder("underlying poset contains an induced 2+2");
  const int n = p.size();
  if (n == 0) return GpTerm::empty();

  // One linear order over all points realising both interface sequences;
  // all factor realisations read their point order off it. The merge fails
  // exactly when a pair occurs in both sequences in opposite order.
  std::vector<int> lambda;
  {
    std::vector<bool> in_src(n, false), in_tgt(n, false);
    for (int s : p.source) in_src[s] = true;
    for (int t : p.target) in_tgt[t] = true;
    std::size_t si = 0, ti = 0;
    while (si < p.source.size() || ti < p.target.size()) {
      if (si < p.source.size() && !in_tgt[p.source[si]]) {
        lambda.push_back(p.source[si++]);
      } else if (ti < p.target.size() && !in_src[p.target[ti]]) {
        lambda.push_back(p.target[ti++]);
      } else if (si < p.source.size() && ti < p.target.size() &&
                 p.source[si] == p.target[ti]) {
        lambda.push_back(p.source[si++]);
        ++ti;
      } else {
        throw IncompatibleInterfaces(
            "source and target sequences disagree on a shared pair");
      }
    }
    std::vector<bool> placed(n, false);
    for (int x : lambda) placed[x] = true;
    for (int x = 0; x < n; ++x)
      if (!placed[x]) lambda.push_back(x);
  }
  std::vector<int> rank(n, 0);
  for (int i = 0; i < n; ++i) rank[lambda[i]] = i;

  auto chain = sorted_antichain_masks(p.poset);
  const int k = static_cast<int>(chain.size());
#ifndef NDEBUG
  for (int s : p.source) assert((chain.front() >> s) & 1u);
  for (int t : p.target) assert((chain.back() >> t) & 1u);
#endif

  auto by_rank = [&](std::uint64_t mask) {
    std::vector<int> pts = mask_to_points(mask);
    std::ranges::sort(pts, [&](int a, int b) { return rank[a] < rank[b]; });
    return pts;
  };

  std::vector<GpTerm> factors;
  for (int i = 0; i < k; ++i) {
    std::uint64_t here = chain[i];
    std::uint64_t from_prev = i > 0 ? (chain[i - 1] & here) : 0;
    std::uint64_t to_next = i + 1 < k ? (here & chain[i + 1]) : 0;
    std::vector<bool> is_src(n, false), is_tgt(n, false);
    if (i == 0)
      for (int s : p.source) is_src[s] = true;
    else
      for (int x : mask_to_points(from_prev)) is_src[x] = true;
    if (i + 1 == k)
      for (int t : p.target) is_tgt[t] = true;
    else
      for (int x : mask_to_points(to_next)) is_tgt[x] = true;
    std::vector<GpTerm> leaves;
    for (int x : by_rank(here)) leaves.push_back(GpTerm::singleton(is_src[x], is_tgt[x]));
    factors.push_back(GpTerm::par_of(std::move(leaves)));
  }
  return GpTerm::glue_of(std::move(factors));
}

std::string trace_to_string(const IntervalSeq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i].is_end ? 'e' : 'b';
    out += std::to_string(s[i].point);
  }
  return out;
}

IntervalSeq trace_from_string(const std::string& text) {
  IntervalSeq out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 'e'))
      throw ParseError("event token must be b<i> or e<i>: " + tok);
    int pt = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw ParseError("bad event token: " + tok);
      pt = pt * 10 + (tok[i] - '0');
    }
    out.push_back({tok[0] == 'e', pt});
  }
  return out;
}

}  // namespace posets
