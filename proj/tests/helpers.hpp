#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "posets/iposet.hpp"
#include "posets/poset.hpp"

namespace posets::testing {

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// perm maps old point -> new point.
inline Poset relabel(const Poset& p, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.lt(x, y)) pairs.emplace_back(perm[x], perm[y]);
  return make_poset(p.size(), pairs);
}

inline Iposet relabel(const Iposet& p, const std::vector<int>& perm) {
  Iposet out;
  out.poset = relabel(p.poset, perm);
  for (int s : p.source) out.source.push_back(perm[s]);
  for (int t : p.target) out.target.push_back(perm[t]);
  return out;
}

// Reference gluing built with plain sets and a full closure pass, used to
// cross-check the bitset implementation.
inline Iposet naive_glue(const Iposet& p, const Iposet& q) {
  const int np = p.size(), nq = q.size();
  const int m = p.tgt_arity();
  REQUIRE_EQ(m, q.src_arity());
  std::vector<int> qmap(nq, -1);
  for (int i = 0; i < m; ++i) qmap[q.source[i]] = p.target[i];
  int next = np;
  for (int j = 0; j < nq; ++j)
    if (qmap[j] < 0) qmap[j] = next++;
  const int n = np + nq - m;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y)
      if (p.poset.lt(x, y)) rel[x][y] = true;
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      if (q.poset.lt(x, y)) rel[qmap[x]][qmap[y]] = true;
  std::vector<bool> in_tgt(np, false);
  for (int t : p.target) in_tgt[t] = true;
  std::vector<bool> in_src(nq, false);
  for (int s : q.source) in_src[s] = true;
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < nq; ++y)
      if (!in_tgt[x] && !in_src[y]) rel[x][qmap[y]] = true;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (rel[x][k] && rel[k][y]) rel[x][y] = true;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rel[x][y]) pairs.emplace_back(x, y);
  Iposet out;
  out.poset = make_poset(n, pairs);
  out.source = p.source;
  for (int t : q.target) out.target.push_back(qmap[t]);
  return out;
}

}  // namespace posets::testing
