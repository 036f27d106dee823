#include "posets/iposet.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace posets {

namespace {

bool is_discrete(const Iposet& p) { return p.poset.arrow_count() == 0; }

std::vector<int> mask_points(std::uint64_t mask) {
  std::vector<int> pts;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1u) pts.push_back(i);
  return pts;
}

Iposet sub_iposet(const Iposet& p, std::uint64_t mask, std::span<const int> src_old,
                  std::span<const int> tgt_old) {
  auto pts = mask_points(mask);
  std::vector<int> idx(p.size(), -1);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) idx[pts[i]] = i;
  Iposet out;
  out.poset = p.poset.induced(pts);
  for (int s : src_old) out.source.push_back(idx[s]);
  for (int t : tgt_old) out.target.push_back(idx[t]);
  return out;
}

}  // namespace

Iposet make_iposet(Poset p, std::vector<int> source, std::vector<int> target) {
  const int n = p.size();
  std::uint64_t seen = 0;
  for (int s : source) {
    if (s < 0 || s >= n) throw ValidationError("source point out of range");
    if ((seen >> s) & 1u) throw ValidationError("duplicate source point");
    seen |= 1ull << s;
    if (p.pred_mask(s) != 0) throw ValidationError("source point is not minimal");
  }
  seen = 0;
  for (int t : target) {
    if (t < 0 || t >= n) throw ValidationError("target point out of range");
    if ((seen >> t) & 1u) throw ValidationError("duplicate target point");
    seen |= 1ull << t;
    if (p.succ_mask(t) != 0) throw ValidationError("target point is not maximal");
  }
  return Iposet{std::move(p), std::move(source), std::move(target)};
}

Iposet glue(const Iposet& p, const Iposet& q) {
  const int m = p.tgt_arity();
  if (m != q.src_arity())
    throw InterfaceMismatch("gluing requires target arity = source arity");
  const int np = p.size(), nq = q.size();
  const int n = np + nq - m;

  // q-side points: sources land on the matching p targets, the rest are
  // renumbered after all of p's points in q order.
  std::vector<int> qmap(nq, -1);
  for (int i = 0; i < m; ++i) qmap[q.source[i]] = p.target[i];
  int next = np;
  for (int j = 0; j < nq; ++j)
    if (qmap[j] < 0) qmap[j] = next++;

  std::uint64_t p_interior = 0;  // p points outside the target interface
  for (int x = 0; x < np; ++x) p_interior |= 1ull << x;
  for (int t : p.target) p_interior &= ~(1ull << t);

  std::uint64_t q_tail = 0;  // images of q points outside the source interface
  for (int j = 0; j < nq; ++j)
    if (qmap[j] >= np) q_tail |= 1ull << qmap[j];

  std::vector<std::uint64_t> rows(n, 0);
  for (int x = 0; x < np; ++x) rows[x] = p.poset.succ_mask(x);
  for (int x = 0; x < nq; ++x) {
    std::uint64_t row = 0;
    std::uint64_t s = q.poset.succ_mask(x);
    while (s) {
      int y = std::countr_zero(s);
      s &= s - 1;
      row |= 1ull << qmap[y];
    }
    rows[qmap[x]] |= row;
  }
  for (int x = 0; x < np; ++x)
    if ((p_interior >> x) & 1u) rows[x] |= q_tail;

  Iposet out;
  out.poset = Poset::from_closed_rows(std::move(rows));
  out.source = p.source;
  for (int t : q.target) out.target.push_back(qmap[t]);
  return out;
}

Iposet par(const Iposet& p, const Iposet& q) {
  Iposet out;
  out.poset = parallel(p.poset, q.poset);
  out.source = p.source;
  out.target = p.target;
  const int np = p.size();
  for (int s : q.source) out.source.push_back(s + np);
  for (int t : q.target) out.target.push_back(t + np);
  return out;
}

Iposet compose(CompOp op, const Iposet& a, const Iposet& b) {
  return op == CompOp::Glue ? glue(a, b) : par(a, b);
}

Iposet idpos(int k, int l, int n) {
  if (n < 0) throw ValidationError("negative iposet size");
  if (k < 0 || l < 0 || k > n || l > n)
    throw ArityError("interface longer than the point set");
  Iposet out;
  out.poset = discrete(n);
  out.source.resize(k);
  std::iota(out.source.begin(), out.source.end(), 0);
  out.target.resize(l);
  std::iota(out.target.begin(), out.target.end(), 0);
  return out;
}

Iposet identity(int n) { return idpos(n, n, n); }

const std::vector<Iposet>& singletons() {
  static const std::vector<Iposet> s = {idpos(0, 0, 1), idpos(0, 1, 1), idpos(1, 0, 1),
                                        idpos(1, 1, 1)};
  return s;
}

Iposet symmetry(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t seen = 0;
  for (int x : perm) {
    if (x < 0 || x >= n || ((seen >> x) & 1u)) throw ValidationError("not a permutation");
    seen |= 1ull << x;
  }
  Iposet out;
  out.poset = discrete(n);
  out.source.resize(n);
  std::iota(out.source.begin(), out.source.end(), 0);
  out.target.assign(perm.begin(), perm.end());
  return out;
}

Iposet embed(const Poset& p) { return Iposet{p, {}, {}}; }

Poset forget(const Iposet& p) { return p.poset; }

CanonForm canonical_form(const Iposet& p) {
  return CanonForm{detail::canonical_bytes(p.poset, p.source, p.target)};
}

bool iso(const Iposet& p, const Iposet& q) {
  if (p.size() != q.size() || p.src_arity() != q.src_arity() ||
      p.tgt_arity() != q.tgt_arity() || p.poset.arrow_count() != q.poset.arrow_count())
    return false;
  if (p == q) return true;
  return canonical_form(p) == canonical_form(q);
}

Iposet iposet_from_canon(const CanonForm& c) {
  Poset p;
  std::vector<int> s, t;
  detail::decode_bytes(c.bytes, p, s, t);
  return make_iposet(std::move(p), std::move(s), std::move(t));
}

namespace {

bool subsume_rec(const Iposet& p, const Iposet& q, std::vector<int>& f, std::uint64_t used,
                 int x) {
  const int n = q.size();
  while (x < n && f[x] >= 0) ++x;
  if (x == n) return true;
  for (int h = 0; h < n; ++h) {
    if ((used >> h) & 1u) continue;
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) {
      if (f[y] < 0 || y == x) continue;
      if (q.poset.lt(x, y) && !p.poset.lt(h, f[y])) ok = false;
      if (q.poset.lt(y, x) && !p.poset.lt(f[y], h)) ok = false;
    }
    if (!ok) continue;
    f[x] = h;
    if (subsume_rec(p, q, f, used | (1ull << h), x + 1)) return true;
    f[x] = -1;
  }
  return false;
}

}  // namespace

bool subsumes(const Iposet& p, const Iposet& q) {
  const int n = p.size();
  if (q.size() != n || p.src_arity() != q.src_arity() || p.tgt_arity() != q.tgt_arity())
    return false;
  if (p.poset.arrow_count() < q.poset.arrow_count()) return false;
  // Interface points are pinned by the sequences.
  std::vector<int> f(n, -1);
  std::uint64_t used = 0;
  auto pin = [&](int from, int to) {
    if (f[from] >= 0) return f[from] == to;
    if ((used >> to) & 1u) return false;
    f[from] = to;
    used |= 1ull << to;
    return true;
  };
  for (int i = 0; i < p.src_arity(); ++i)
    if (!pin(q.source[i], p.source[i])) return false;
  for (int j = 0; j < p.tgt_arity(); ++j)
    if (!pin(q.target[j], p.target[j])) return false;
  // Arrow preservation among pinned points.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[x] >= 0 && f[y] >= 0 && q.poset.lt(x, y) && !p.poset.lt(f[x], f[y])) return false;
  return subsume_rec(p, q, f, used, 0);
}

bool valid_morphism(const IposetMorphismWitness& w, const Iposet& from, const Iposet& to) {
  const int n = from.size();
  if (static_cast<int>(w.f.size()) != n) return false;
  if (static_cast<int>(w.nu.size()) != from.src_arity()) return false;
  if (static_cast<int>(w.mu.size()) != from.tgt_arity()) return false;
  for (int x : w.f)
    if (x < 0 || x >= to.size()) return false;
  auto strictly_monotone_into = [](const std::vector<int>& m, int bound) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0 || m[i] >= bound) return false;
      if (i > 0 && m[i - 1] >= m[i]) return false;
    }
    return true;
  };
  if (!strictly_monotone_into(w.nu, to.src_arity())) return false;
  if (!strictly_monotone_into(w.mu, to.tgt_arity())) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (from.poset.lt(x, y) && !(w.f[x] == w.f[y] || to.poset.lt(w.f[x], w.f[y])))
        return false;
  for (int i = 0; i < from.src_arity(); ++i)
    if (w.f[from.source[i]] != to.source[w.nu[i]]) return false;
  for (int j = 0; j < from.tgt_arity(); ++j)
    if (w.f[from.target[j]] != to.target[w.mu[j]]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Split enumeration.

bool for_each_parallel_split(const Iposet& p,
                             const std::function<bool(const Iposet&, const Iposet&)>& fn) {
  auto comps = connected_components(p.poset);
  const int k = static_cast<int>(comps.size());
  if (k < 2) return false;
  std::vector<std::uint64_t> cmask(k, 0);
  for (int c = 0; c < k; ++c)
    for (int x : comps[c]) cmask[c] |= 1ull << x;

  for (std::uint64_t pick = 1; pick + 1 < (1ull << k); ++pick) {
    std::uint64_t a = 0;
    for (int c = 0; c < k; ++c)
      if ((pick >> c) & 1u) a |= cmask[c];
    // Interface sequences must split prefix (block A) / suffix (block B).
    std::vector<int> sa, sb, ta, tb;
    bool ok = true;
    for (int s : p.source) {
      if ((a >> s) & 1u) {
        if (!sb.empty()) {
          ok = false;
          break;
        }
        sa.push_back(s);
      } else {
        sb.push_back(s);
      }
    }
    if (!ok) continue;
    for (int t : p.target) {
      if ((a >> t) & 1u) {
        if (!tb.empty()) {
          ok = false;
          break;
        }
        ta.push_back(t);
      } else {
        tb.push_back(t);
      }
    }
    if (!ok) continue;
    Iposet left = sub_iposet(p, a, sa, ta);
    Iposet right = sub_iposet(p, p.poset.all_mask() & ~a, sb, tb);
    if (fn(left, right)) return true;
  }
  return false;
}

bool for_each_glue_split(const Iposet& p,
                         const std::function<bool(const Iposet&, const Iposet&)>& fn) {
  const int n = p.size();
  if (n < 2) return false;
  const std::uint64_t all = p.poset.all_mask();
  std::uint64_t smask = 0, tmask = 0;
  for (int s : p.source) smask |= 1ull << s;
  for (int t : p.target) tmask |= 1ull << t;

  for (std::uint64_t mm = 0; mm < (1ull << n); ++mm) {
    bool anti = true;
    for (int x = 0; x < n && anti; ++x)
      if ((mm >> x) & 1u) anti = (p.poset.succ_mask(x) & mm) == 0;
    if (!anti) continue;
    const std::uint64_t rest = all & ~mm;
    if (std::popcount(rest) < 2) continue;

    // Forced sides: below-M points go left, above-M points go right.
    for (std::uint64_t lm = rest & (rest - 1);; lm = (lm - 1) & rest) {
      if (lm == 0) break;
      const std::uint64_t rm = rest & ~lm;
      if (rm == 0) continue;
      bool ok = (smask & rm) == 0 && (tmask & lm) == 0;
      for (int x = 0; x < n && ok; ++x) {
        if ((mm >> x) & 1u)
          ok = (p.poset.succ_mask(x) & lm) == 0 && (p.poset.pred_mask(x) & rm) == 0;
        else if ((lm >> x) & 1u)
          ok = (p.poset.succ_mask(x) & rm) == rm;
      }
      if (!ok) continue;
      std::vector<int> mid = mask_points(mm);
      do {
        Iposet left = sub_iposet(p, lm | mm, p.source, mid);
        Iposet right = sub_iposet(p, mm | rm, mid, p.target);
        if (fn(left, right)) return true;
      } while (std::ranges::next_permutation(mid).found);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Law checkers.

bool check_category(const Iposet& p, const Iposet& q, const Iposet& r) {
  if (!iso(glue(glue(p, q), r), glue(p, glue(q, r)))) return false;
  if (!iso(glue(identity(p.src_arity()), p), p)) return false;
  if (!iso(glue(p, identity(p.tgt_arity())), p)) return false;
  return true;
}

bool check_monoid(const Iposet& p, const Iposet& q, const Iposet& r) {
  if (!iso(par(par(p, q), r), par(p, par(q, r)))) return false;
  Iposet unit = identity(0);
  return iso(par(p, unit), p) && iso(par(unit, p), p);
}

namespace {

// The bijection from the proof: both sides carry the same points, indexed
// differently by the two composition orders.
bool lax_interchange_witness(const Iposet& p, const Iposet& p2, const Iposet& q,
                             const Iposet& q2, const Iposet& left, const Iposet& right) {
  const int np = p.size(), np2 = p2.size(), nq = q.size(), nq2 = q2.size();
  const int m = p.tgt_arity();
  const int block = np + nq - m;  // size of glue(p, q)

  std::vector<int> q_rank(nq, -1), q2_rank(nq2, -1);
  {
    std::uint64_t srcs = 0;
    for (int s : q.source) srcs |= 1ull << s;
    int r = 0;
    for (int j = 0; j < nq; ++j)
      if (!((srcs >> j) & 1u)) q_rank[j] = r++;
    srcs = 0;
    for (int s : q2.source) srcs |= 1ull << s;
    r = 0;
    for (int j = 0; j < nq2; ++j)
      if (!((srcs >> j) & 1u)) q2_rank[j] = r++;
  }

  const int total = right.size();
  if (left.size() != total) return false;
  std::vector<int> f(total, -1);  // right point -> left point
  for (int x = 0; x < np; ++x) f[x] = x;
  for (int j = 0; j < nq; ++j)
    if (q_rank[j] >= 0) f[np + q_rank[j]] = np + np2 + q_rank[j];
  for (int x = 0; x < np2; ++x) f[block + x] = np + x;
  for (int j = 0; j < nq2; ++j)
    if (q2_rank[j] >= 0) f[block + np2 + q2_rank[j]] = np + np2 + (nq - m) + q2_rank[j];

  for (int i = 0; i < right.src_arity(); ++i)
    if (f[right.source[i]] != left.source[i]) return false;
  for (int j = 0; j < right.tgt_arity(); ++j)
    if (f[right.target[j]] != left.target[j]) return false;
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y)
      if (right.poset.lt(x, y) && !left.poset.lt(f[x], f[y])) return false;
  return true;
}

}  // namespace

bool check_lax_interchange(const Iposet& p, const Iposet& p2, const Iposet& q,
                           const Iposet& q2) {
  Iposet right = par(glue(p, q), glue(p2, q2));
  Iposet left = glue(par(p, p2), par(q, q2));
  if (left.src_arity() != right.src_arity() || left.tgt_arity() != right.tgt_arity())
    return false;
  if (lax_interchange_witness(p, p2, q, q2, left, right)) return true;
  return subsumes(left, right);
}

bool check_interchange_eq(const Iposet& p, const Iposet& q, int k, int l) {
  if ((k != 0 && k != 1) || (l != 0 && l != 1))
    throw ValidationError("interface flags must be 0 or 1");
  Iposet lhs = glue(par(idpos(k, 1, 1), p), par(idpos(1, l, 1), q));
  Iposet rhs = par(idpos(k, l, 1), glue(p, q));
  return iso(lhs, rhs);
}

bool check_decomposition(const Iposet& p1, const Iposet& p2, const Iposet& q1,
                         const Iposet& q2) {
  if (p1.size() == 0 || p2.size() == 0) return true;
  // The excluded gluing factors are the degenerate ones: all points of q1
  // in its target interface, or all points of q2 in its source interface.
  if (is_discrete(q1) && q1.tgt_arity() == q1.size()) return true;
  if (is_discrete(q2) && q2.src_arity() == q2.size()) return true;
  if (!iso(par(p1, p2), glue(q1, q2))) return true;
  return is_discrete(p1) || is_discrete(p2);
}

// ---------------------------------------------------------------------------
// Levi interpolants, by exhaustive search over candidate iposet classes.

namespace detail {

namespace {

void injective_sequences_rec(const std::vector<int>& pool, std::vector<int>& cur,
                             std::uint64_t used, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (cur.size() == pool.size()) return;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((used >> i) & 1u) continue;
    cur.push_back(pool[i]);
    injective_sequences_rec(pool, cur, used | (1ull << i), out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> injective_sequences(const std::vector<int>& pool) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  injective_sequences_rec(pool, cur, 0, out);
  return out;
}

}  // namespace detail

namespace {

using detail::injective_sequences;

// Candidates for R with a @ R iso x and R @ b iso y. Every non-degenerate
// R shows up as the right factor of some split of x (or left factor of a
// split of y); the degenerate ones are discrete with a full interface on
// one side, enumerated directly.
std::optional<Iposet> find_interpolant(CompOp op, const Iposet& a, const Iposet& b,
                                       const Iposet& x, const Iposet& y) {
  std::optional<Iposet> hit;
  auto try_r = [&](const Iposet& r) {
    if (hit) return true;
    try {
      if (iso(compose(op, a, r), x) && iso(compose(op, r, b), y)) {
        hit = r;
        return true;
      }
    } catch (const InterfaceMismatch&) {
    }
    return false;
  };

  if (op == CompOp::Par) {
    try_r(identity(0));
    if (!hit) try_r(x);
    if (!hit) try_r(y);
    if (!hit)
      for_each_parallel_split(x, [&](const Iposet& x1, const Iposet& x2) {
        return iso(x1, a) && try_r(x2);
      });
    if (!hit)
      for_each_parallel_split(y, [&](const Iposet& y1, const Iposet& y2) {
        return iso(y2, b) && try_r(y1);
      });
    return hit;
  }

  // All-source discretes ([m], id, t); covers R glued away entirely on the
  // x side, including the identity interpolant.
  {
    const int m = a.tgt_arity();
    Iposet r = idpos(m, 0, m);
    std::vector<int> pts(m);
    std::iota(pts.begin(), pts.end(), 0);
    for (const auto& t : injective_sequences(pts)) {
      r.target = t;
      if (try_r(r)) break;
    }
  }
  // All-target discretes ([m], s, id), degenerate on the y side.
  if (!hit) {
    const int m = b.src_arity();
    Iposet r = idpos(0, m, m);
    std::vector<int> pts(m);
    std::iota(pts.begin(), pts.end(), 0);
    for (const auto& s : injective_sequences(pts)) {
      r.source = s;
      if (try_r(r)) break;
    }
  }
  // a degenerate (all-target discrete): R is x with another source choice.
  if (!hit && a.poset.arrow_count() == 0 && a.tgt_arity() == a.size()) {
    for (const auto& s : injective_sequences(minima(x.poset))) {
      if (static_cast<int>(s.size()) != a.tgt_arity()) continue;
      if (try_r(Iposet{x.poset, s, x.target})) break;
    }
  }
  // b degenerate (all-source discrete): R is y with another target choice.
  if (!hit && b.poset.arrow_count() == 0 && b.src_arity() == b.size()) {
    for (const auto& t : injective_sequences(maxima(y.poset))) {
      if (static_cast<int>(t.size()) != b.src_arity()) continue;
      if (try_r(Iposet{y.poset, y.source, t})) break;
    }
  }
  if (!hit)
    for_each_glue_split(x, [&](const Iposet& x1, const Iposet& x2) {
      return iso(x1, a) && try_r(x2);
    });
  if (!hit)
    for_each_glue_split(y, [&](const Iposet& y1, const Iposet& y2) {
      return iso(y2, b) && try_r(y1);
    });
  return hit;
}

}  // namespace

LeviResult levi_factor(const Iposet& p, const Iposet& q, const Iposet& u, const Iposet& v,
                       CompOp op) {
  if (!iso(compose(op, p, q), compose(op, u, v)))
    throw NotComposable("the two factorisations compose to different iposets");
  if (auto r = find_interpolant(op, u, q, p, v)) return {std::move(*r), true};
  if (auto r = find_interpolant(op, p, v, u, q)) return {std::move(*r), false};
  throw Error("no interpolant found in candidate space");
}

}  // namespace posets
