#include "posets/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace posets {

namespace {

std::vector<std::uint64_t> predecessors_of(const std::vector<std::uint64_t>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<std::uint64_t> pred(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((succ[x] >> y) & 1u) pred[y] |= 1ull << x;
  return pred;
}

#ifndef NDEBUG
bool rows_closed(const std::vector<std::uint64_t>& succ) {
  const int n = static_cast<int>(succ.size());
  for (int x = 0; x < n; ++x) {
    if ((succ[x] >> x) & 1u) return false;
    for (int y = 0; y < n; ++y)
      if ((succ[x] >> y) & 1u && (succ[y] & ~succ[x]) != 0) return false;
  }
  return true;
}
#endif

}  // namespace

Poset Poset::from_closed_rows(std::vector<std::uint64_t> succ) {
  assert(rows_closed(succ));
  Poset p;
  p.pred_ = predecessors_of(succ);
  p.succ_ = std::move(succ);
  return p;
}

int Poset::arrow_count() const {
  int k = 0;
  for (auto row : succ_) k += std::popcount(row);
  return k;
}

Poset Poset::induced(std::span<const int> points) const {
  const int m = static_cast<int>(points.size());
  std::vector<std::uint64_t> rows(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (lt(points[i], points[j])) rows[i] |= 1ull << j;
  return from_closed_rows(std::move(rows));
}

Poset make_poset(int size, std::span<const std::pair<int, int>> pairs) {
  if (size < 0 || size > Poset::kMaxPoints)
    throw ValidationError("poset size out of range");
  std::vector<std::uint64_t> succ(size, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw ValidationError("relation pair index out of range");
    succ[a] |= 1ull << b;
  }
  // Warshall closure on bitset rows.
  for (int k = 0; k < size; ++k)
    for (int x = 0; x < size; ++x)
      if ((succ[x] >> k) & 1u) succ[x] |= succ[k];
  for (int x = 0; x < size; ++x)
    if ((succ[x] >> x) & 1u) throw CycleError("relation closure is cyclic");
  return Poset::from_closed_rows(std::move(succ));
}

Poset make_poset(int size, std::initializer_list<std::pair<int, int>> pairs) {
  return make_poset(size, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

Poset serial(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  std::vector<std::uint64_t> rows(np + nq, 0);
  const std::uint64_t qall = (nq == 0 ? 0 : ((nq == 64 ? ~0ull : (1ull << nq) - 1) << np));
  for (int x = 0; x < np; ++x) rows[x] = p.succ_mask(x) | qall;
  for (int x = 0; x < nq; ++x) rows[np + x] = q.succ_mask(x) << np;
  return Poset::from_closed_rows(std::move(rows));
}

Poset parallel(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  std::vector<std::uint64_t> rows(np + nq, 0);
  for (int x = 0; x < np; ++x) rows[x] = p.succ_mask(x);
  for (int x = 0; x < nq; ++x) rows[np + x] = q.succ_mask(x) << np;
  return Poset::from_closed_rows(std::move(rows));
}

Poset discrete(int n) { return make_poset(n, {}); }

std::vector<int> minima(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if (p.pred_mask(x) == 0) out.push_back(x);
  return out;
}

std::vector<int> maxima(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if (p.succ_mask(x) == 0) out.push_back(x);
  return out;
}

namespace {

bool extend_embedding(const Poset& host, const Poset& pattern, std::vector<int>& map,
                      std::uint64_t used, int i) {
  const int k = pattern.size();
  if (i == k) return true;
  for (int h = 0; h < host.size(); ++h) {
    if ((used >> h) & 1u) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      ok = pattern.lt(j, i) == host.lt(map[j], h) && pattern.lt(i, j) == host.lt(h, map[j]);
    }
    if (!ok) continue;
    map[i] = h;
    if (extend_embedding(host, pattern, map, used | (1ull << h), i + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<Embedding> find_induced(const Poset& host, const Poset& pattern) {
  if (pattern.size() > host.size()) return std::nullopt;
  std::vector<int> map(pattern.size(), -1);
  if (!extend_embedding(host, pattern, map, 0, 0)) return std::nullopt;
  return Embedding{std::move(map)};
}

bool is_sp(const Poset& p) { return !find_induced(p, patterns().N).has_value(); }

SpTerm SpTerm::serial_of(std::vector<SpTerm> cs) {
  std::vector<SpTerm> flat;
  for (auto& c : cs) {
    if (c.kind == Kind::Serial)
      for (auto& g : c.children) flat.push_back(std::move(g));
    else
      flat.push_back(std::move(c));
  }
  if (flat.size() == 1) return std::move(flat[0]);
  return {Kind::Serial, std::move(flat)};
}

SpTerm SpTerm::parallel_of(std::vector<SpTerm> cs) {
  std::vector<SpTerm> flat;
  for (auto& c : cs) {
    if (c.kind == Kind::Parallel)
      for (auto& g : c.children) flat.push_back(std::move(g));
    else
      flat.push_back(std::move(c));
  }
  if (flat.size() == 1) return std::move(flat[0]);
  return {Kind::Parallel, std::move(flat)};
}

namespace {

std::optional<SpTerm> sp_rec(const Poset& p) {
  const int n = p.size();
  if (n == 0) return SpTerm::empty();
  if (n == 1) return SpTerm::leaf();

  auto comps = connected_components(p);
  if (comps.size() > 1) {
    std::vector<SpTerm> parts;
    for (const auto& c : comps) {
      auto t = sp_rec(p.induced(c));
      if (!t) return std::nullopt;
      parts.push_back(std::move(*t));
    }
    return SpTerm::parallel_of(std::move(parts));
  }

  // A serial cut (A, B) has every A-point below every B-point, so sorting by
  // down-set size makes every cut a prefix of the order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::ranges::stable_sort(order, [&](int a, int b) {
    return std::popcount(p.pred_mask(a)) < std::popcount(p.pred_mask(b));
  });
  std::vector<int> cuts;  // segment boundaries, ascending
  std::uint64_t above = p.all_mask();
  std::uint64_t common_succ = p.all_mask();
  for (int i = 0; i + 1 < n; ++i) {
    above &= ~(1ull << order[i]);
    common_succ &= p.succ_mask(order[i]);
    if ((common_succ & above) == above) cuts.push_back(i + 1);
  }
  if (cuts.empty()) return std::nullopt;
  cuts.push_back(n);
  std::vector<SpTerm> segs;
  int start = 0;
  for (int end : cuts) {
    std::vector<int> pts(order.begin() + start, order.begin() + end);
    std::ranges::sort(pts);
    auto t = sp_rec(p.induced(pts));
    if (!t) return std::nullopt;
    segs.push_back(std::move(*t));
    start = end;
  }
  return SpTerm::serial_of(std::move(segs));
}

}  // namespace

std::optional<SpTerm> sp_decompose(const Poset& p) { return sp_rec(p); }

Poset sp_eval(const SpTerm& t) {
  switch (t.kind) {
    case SpTerm::Kind::Empty:
      return Poset();
    case SpTerm::Kind::Leaf:
      return discrete(1);
    case SpTerm::Kind::Serial: {
      Poset acc;
      for (const auto& c : t.children) acc = serial(acc, sp_eval(c));
      return acc;
    }
    case SpTerm::Kind::Parallel: {
      Poset acc;
      for (const auto& c : t.children) acc = parallel(acc, sp_eval(c));
      return acc;
    }
  }
  return Poset();
}

std::string sp_to_string(const SpTerm& t) {
  switch (t.kind) {
    case SpTerm::Kind::Empty:
      return "0";
    case SpTerm::Kind::Leaf:
      return ".";
    case SpTerm::Kind::Serial:
    case SpTerm::Kind::Parallel: {
      const bool ser = t.kind == SpTerm::Kind::Serial;
      std::string out;
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ser ? " * " : " || ";
        const auto& c = t.children[i];
        bool parens = !ser ? false : c.kind == SpTerm::Kind::Parallel;
        if (parens) out += "(";
        out += sp_to_string(c);
        if (parens) out += ")";
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Canonicalization: iterative refinement by interface position and up/down
// neighbourhood colors, then exhaustive search over cell-respecting
// relabelings, keeping the lexicographically least encoding.

namespace detail {

namespace {

std::vector<int> refined_colors(const Poset& p, std::span<const int> source,
                                std::span<const int> target) {
  const int n = p.size();
  std::vector<int> spos(n, -1), tpos(n, -1);
  for (int i = 0; i < static_cast<int>(source.size()); ++i) spos[source[i]] = i;
  for (int i = 0; i < static_cast<int>(target.size()); ++i) tpos[target[i]] = i;

  std::vector<int> color(n, 0);
  {
    std::vector<std::pair<int, int>> init(n);
    for (int x = 0; x < n; ++x) init[x] = {spos[x], tpos[x]};
    auto sorted = init;
    std::ranges::sort(sorted);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int x = 0; x < n; ++x)
      color[x] = static_cast<int>(std::ranges::lower_bound(sorted, init[x]) - sorted.begin());
  }

  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> pre, suc;
      for (int y = 0; y < n; ++y) {
        if (p.lt(y, x)) pre.push_back(color[y]);
        if (p.lt(x, y)) suc.push_back(color[y]);
      }
      std::ranges::sort(pre);
      std::ranges::sort(suc);
      sig[x].push_back(color[x]);
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), pre.begin(), pre.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), suc.begin(), suc.end());
    }
    auto sorted = sig;
    std::ranges::sort(sorted);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int x = 0; x < n; ++x)
      color[x] = static_cast<int>(std::ranges::lower_bound(sorted, sig[x]) - sorted.begin());
    int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

std::string encode_with(const Poset& p, std::span<const int> source,
                        std::span<const int> target, const std::vector<int>& pos) {
  const int n = p.size();
  std::string out;
  out.push_back(static_cast<char>(n));
  const int nbits = n * n;
  out.append((nbits + 7) / 8, '\0');
  std::vector<int> at(n);
  for (int x = 0; x < n; ++x) at[pos[x]] = x;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.lt(at[i], at[j])) {
        int b = i * n + j;
        out[1 + b / 8] = static_cast<char>(static_cast<unsigned char>(out[1 + b / 8]) |
                                           (0x80u >> (b % 8)));
      }
  out.push_back(static_cast<char>(source.size()));
  for (int s : source) out.push_back(static_cast<char>(pos[s]));
  out.push_back(static_cast<char>(target.size()));
  for (int t : target) out.push_back(static_cast<char>(pos[t]));
  return out;
}

void min_over_cells(const Poset& p, std::span<const int> source, std::span<const int> target,
                    std::vector<std::vector<int>>& cells, std::size_t ci, std::vector<int>& pos,
                    int next, std::string& best) {
  if (ci == cells.size()) {
    std::string enc = encode_with(p, source, target, pos);
    if (best.empty() || enc < best) best = std::move(enc);
    return;
  }
  auto& cell = cells[ci];
  std::ranges::sort(cell);
  do {
    for (std::size_t i = 0; i < cell.size(); ++i) pos[cell[i]] = next + static_cast<int>(i);
    min_over_cells(p, source, target, cells, ci + 1, pos, next + static_cast<int>(cell.size()),
                   best);
  } while (std::ranges::next_permutation(cell).found);
}

}  // namespace

std::string canonical_bytes(const Poset& p, std::span<const int> source,
                            std::span<const int> target) {
  const int n = p.size();
  auto color = refined_colors(p, source, target);
  int classes = n == 0 ? 0 : *std::ranges::max_element(color) + 1;
  std::vector<std::vector<int>> cells(classes);
  for (int x = 0; x < n; ++x) cells[color[x]].push_back(x);
  std::vector<int> pos(n, -1);
  std::string best;
  min_over_cells(p, source, target, cells, 0, pos, 0, best);
  return best;
}

std::string raw_bytes(const Poset& p, std::span<const int> source,
                      std::span<const int> target) {
  std::vector<int> pos(p.size());
  std::iota(pos.begin(), pos.end(), 0);
  return encode_with(p, source, target, pos);
}

void decode_bytes(const std::string& bytes, Poset& p, std::vector<int>& source,
                  std::vector<int>& target) {
  if (bytes.empty()) throw ParseError("empty canonical form");
  const int n = static_cast<unsigned char>(bytes[0]);
  const std::size_t relbytes = (static_cast<std::size_t>(n) * n + 7) / 8;
  std::size_t at = 1 + relbytes;
  if (bytes.size() < at + 1) throw ParseError("truncated canonical form");
  std::vector<std::uint64_t> rows(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int b = i * n + j;
      if (static_cast<unsigned char>(bytes[1 + b / 8]) & (0x80u >> (b % 8)))
        rows[i] |= 1ull << j;
    }
  p = Poset::from_closed_rows(std::move(rows));
  auto read_seq = [&](std::vector<int>& out) {
    if (at >= bytes.size()) throw ParseError("truncated canonical form");
    int len = static_cast<unsigned char>(bytes[at++]);
    if (at + len > bytes.size()) throw ParseError("truncated canonical form");
    out.clear();
    for (int i = 0; i < len; ++i) out.push_back(static_cast<unsigned char>(bytes[at++]));
  };
  read_seq(source);
  read_seq(target);
}

}  // namespace detail

std::string CanonForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonForm canonical_form(const Poset& p) {
  return CanonForm{detail::canonical_bytes(p, {}, {})};
}

bool isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.arrow_count() != q.arrow_count()) return false;
  return canonical_form(p) == canonical_form(q);
}

Poset poset_from_canon(const CanonForm& c) {
  Poset p;
  std::vector<int> s, t;
  detail::decode_bytes(c.bytes, p, s, t);
  if (!s.empty() || !t.empty())
    throw ParseError("canonical form carries interfaces; not a plain poset");
  return p;
}

namespace {

void collect_automorphisms(const Poset& p, const std::vector<int>& color, std::vector<int>& map,
                           std::uint64_t used, int i, std::vector<std::vector<int>>& out) {
  const int n = p.size();
  if (i == n) {
    out.push_back(map);
    return;
  }
  for (int h = 0; h < n; ++h) {
    if ((used >> h) & 1u || color[h] != color[i]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      ok = p.lt(j, i) == p.lt(map[j], h) && p.lt(i, j) == p.lt(h, map[j]);
    if (!ok) continue;
    map[i] = h;
    collect_automorphisms(p, color, map, used | (1ull << h), i + 1, out);
  }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(p.size(), -1);
  auto color = detail::refined_colors(p, {}, {});
  collect_automorphisms(p, color, map, 0, 0, out);
  return out;
}

std::vector<std::vector<int>> connected_components(const Poset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  int k = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = k;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      std::uint64_t nb = p.succ_mask(x) | p.pred_mask(x);
      for (int y = 0; y < n; ++y)
        if (((nb >> y) & 1u) && comp[y] < 0) {
          comp[y] = k;
          stack.push_back(y);
        }
    }
    ++k;
  }
  std::vector<std::vector<int>> out(k);
  for (int x = 0; x < n; ++x) out[comp[x]].push_back(x);
  return out;
}

bool is_connected(const Poset& p) { return connected_components(p).size() <= 1; }

std::vector<std::pair<int, int>> covering_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.lt(x, y)) continue;
      // covering iff nothing strictly between
      if ((p.succ_mask(x) & p.pred_mask(y)) == 0) out.emplace_back(x, y);
    }
  std::ranges::sort(out);
  return out;
}

const Patterns& patterns() {
  static const Patterns ps = [] {
    Patterns r;
    r.N = make_poset(4, {{0, 1}, {2, 1}, {2, 3}});
    r.TWO_TWO = make_poset(4, {{0, 1}, {2, 3}});
    r.NN = make_poset(6, {{0, 1}, {2, 3}, {2, 1}, {4, 5}, {4, 3}});
    r.NPLUS = make_poset(6, {{0, 1}, {2, 3}, {2, 0}, {4, 5}, {4, 3}});
    r.NMINUS = make_poset(6, {{0, 1}, {2, 3}, {2, 1}, {4, 5}, {5, 3}});
    r.TC = make_poset(6, {{0, 1}, {0, 5}, {2, 3}, {2, 1}, {4, 5}, {4, 3}});
    r.LN = make_poset(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 2}});
    return r;
  }();
  return ps;
}

Poset prodcon(int n) {
  if (n < 1) throw ValidationError("prodcon requires n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) {
    pairs.emplace_back(i, i + 1);          // p_i < p_{i+1}
    pairs.emplace_back(n + i, n + i + 1);  // c_i < c_{i+1}
  }
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);  // p_i < c_i
  return make_poset(2 * n, pairs);
}

}  // namespace posets
